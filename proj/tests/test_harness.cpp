#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "packcol/harness.hpp"

using namespace packcol;

namespace {

std::map<int, int> nonzero(std::map<int, int> row) {
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  return row;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(PACKCOL_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parallel_map keeps index order") {
  const auto out = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < 100; ++i) CHECK(out[i] == static_cast<int>(i * i));
  CHECK_THROWS(parallel_map<int>(10, 3, [](std::size_t i) -> int {
    if (i == 5) throw std::runtime_error("boom");
    return 0;
  }));
}

TEST_CASE("tables up to n = 10") {
  GeneratedProvider gen;
  TableOptions opts;
  opts.max_n = 10;
  opts.jobs = 2;

  opts.family = SSequence{1, 2, 2, 2, 2, 2, 2};
  const ChromaticTable t1 = build_table(gen, opts);
  CHECK(nonzero(t1.rows.at(10)) == std::map<int, int>{{4, 11}, {5, 7}, {7, 1}});
  CHECK(t1.total(10) == 19);

  opts.family = SSequence{1, 1, 2, 3, 3};
  CHECK(nonzero(build_table(gen, opts).rows.at(10)) == std::map<int, int>{{2, 2}, {3, 9}, {4, 7}, {5, 1}});

  opts.family = SSequence::packing(8);
  CHECK(nonzero(build_table(gen, opts).rows.at(10)) == std::map<int, int>{{5, 3}, {6, 15}, {7, 1}});
}

TEST_CASE("table output does not depend on job count") {
  GeneratedProvider gen;
  TableOptions opts;
  opts.family = SSequence{1, 1, 2, 3, 3};
  opts.max_n = 10;
  opts.jobs = 1;
  const ChromaticTable a = build_table(gen, opts);
  opts.jobs = 3;
  const ChromaticTable b = build_table(gen, opts);
  CHECK(table_json(a).dump() == table_json(b).dump());
  CHECK(table_csv(a) == table_csv(b));
  CHECK(table_text(a) == table_text(b));
}

TEST_CASE("table errors when the family is too short") {
  GeneratedProvider gen;
  TableOptions opts;
  opts.family = SSequence{1, 1};
  opts.max_n = 6;
  CHECK_THROWS_AS(build_table(gen, opts), TableError);
}

TEST_CASE("screening") {
  GeneratedProvider gen;
  const ScreeningReport q1 = screen(gen, screen_question("q1"), 4, 10, 2);
  CHECK(q1.counterexamples.empty());
  CHECK(q1.complete);
  CHECK(q1.checked == 1 + 2 + 5 + 18);
  const ScreeningReport q2 = screen(gen, screen_question("q2"), 4, 10, 2);
  CHECK(q2.counterexamples.empty());
  CHECK(screen_questions().size() == 6);
  CHECK_THROWS(screen_question("q9"));
}

TEST_CASE("cli exit codes") {
  CHECK(cli("decide --graph @petersen --sequence 1,2,2,2,2,2") == 1);
  CHECK(cli("decide --graph @k4 --sequence 1,2,2,2") == 0);
  CHECK(cli("decide --graph garbage --sequence 1,2") == 3);
  CHECK(cli("decide --graph @petersen --sequence 1,2,2,2,2,2 --max-nodes 2") == 2);
  CHECK(cli("decide --graph @k4 --sequence 2,1") == 3);
  CHECK(cli("construct --method 11223 --graph @petersen") == 0);
  CHECK(cli("construct --method 1222 --graph @k4") == 3);
  CHECK(cli("construct --method s1333 --graph @k4") == 0);
  CHECK(cli("construct --method 12x6 --graph @fbip14 --strict") == 1);
  CHECK(cli("construct --method 12x6 --graph @fbip14") == 0);
  CHECK(cli("packing --graph @k4") == 0);
  CHECK(cli("table --family 1,2,2,2,2,2,2 --max-n 8 --format json") == 0);
  CHECK(cli("screen --question q1 --max-n 8") == 0);
  CHECK(cli("enumerate --n 7") == 3);
  CHECK(cli("convert --to edges --graph @petersen") == 0);
  CHECK(cli("nosuchcommand") == 3);
}
