#pragma once

#include <istream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "packcol/graph.hpp"

namespace packcol {

/// Connected cubic graphs of order n, one per isomorphism class, each in its
/// canonical labeling and sorted by canonical form. Requires even n in 4..16.
std::vector<Graph> enumerate_cubic(int n);

std::vector<Graph> filter_bipartite(const std::vector<Graph>& graphs);

/// Source of connected cubic graphs by order.
class CubicProvider {
 public:
  virtual ~CubicProvider() = default;
  virtual std::vector<Graph> graphs(int n) = 0;
  virtual std::string name() const = 0;
};

class GeneratedProvider : public CubicProvider {
 public:
  std::vector<Graph> graphs(int n) override;
  std::string name() const override { return "generate"; }

 private:
  std::map<int, std::vector<Graph>> cache_;
};

/// Reads a graph6 catalog once. graphs(n) returns its connected cubic members
/// of order n, canonically labeled, deduplicated and sorted like
/// enumerate_cubic.
class CatalogProvider : public CubicProvider {
 public:
  explicit CatalogProvider(std::istream& in);
  static std::unique_ptr<CatalogProvider> from_file(const std::string& path);

  std::vector<Graph> graphs(int n) override;
  std::string name() const override { return "catalog"; }

 private:
  std::vector<Graph> all_;
};

/// "generate" or "catalog:PATH". Throws std::invalid_argument otherwise.
std::unique_ptr<CubicProvider> make_provider(const std::string& source);

}  // namespace packcol
