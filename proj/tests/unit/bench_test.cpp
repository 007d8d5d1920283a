#include "concise/bench.hpp"
#include "concise/error.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace concise;

TEST_CASE("metric and structure names") {
  CHECK(to_string(metric::words) == "wordsPerElement");
  CHECK(to_string(metric::remove) == "removeNanos");
  CHECK(parse_metric("union") == metric::union_);
  CHECK_FALSE(parse_metric("unionNanos"));
  CHECK(parse_structure("wah") == structure::wah);
  CHECK_FALSE(parse_structure("roaring"));
}

TEST_CASE("words per element") {
  generator_spec g;
  g.cardinality = 10000;
  g.density = 1e-4;
  g.seed = 1;
  auto rows = run_benchmark(g, all_structures,
                            std::initializer_list<metric>{metric::words}, 1);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].subject == structure::concise);
  CHECK(rows[0].value >= 0.95);
  CHECK(rows[0].value <= 1.1);
  CHECK(rows[1].value >= 1.9);
  CHECK(rows[1].value <= 2.1);
  CHECK(rows[2].value > 100);
  CHECK(rows[3].value == 1.0);
  for (auto& row : rows)
    CHECK(row.repetitions == 1);

  g.density = 1.0;
  rows = run_benchmark(g, all_structures,
                       std::initializer_list<metric>{metric::words}, 1);
  CHECK(rows[0].value <= rows[2].value);
}

TEST_CASE("timings produce one row per structure and metric") {
  generator_spec g;
  g.cardinality = 500;
  g.density = 0.01;
  g.seed = 2;
  auto rows = run_benchmark(g, all_structures, all_metrics, 5);
  CHECK(rows.size() == 4 * 7);
  for (auto& row : rows) {
    CHECK(row.value >= 0);
    if (row.measured != metric::words)
      CHECK(row.repetitions == 5);
  }
}

TEST_CASE("csv rows") {
  std::ostringstream out;
  write_csv_header(out);
  generator_spec g;
  g.cardinality = 10000;
  g.density = 1e-4;
  g.seed = 7;
  write_csv_row(out, {structure::wah, metric::words, g, 2.0, 1});
  g.dist = distribution::zipf;
  g.max_ratio = 1000;
  write_csv_row(out, {structure::concise, metric::intersect, g, 123.5, 100});
  CHECK(out.str()
        == "structure,distribution,cardinality,density_or_maxratio,skew,seed,"
           "metric,value,repetitions\n"
           "wah,uniform,10000,1e-04,1,7,wordsPerElement,2,1\n"
           "concise,zipf,10000,1000,1,7,intersectNanos,123.5,100\n");
}

TEST_CASE("empty spec is rejected") {
  generator_spec g;
  CHECK_THROWS_AS(run_benchmark(g, all_structures, all_metrics, 1), error);
}
