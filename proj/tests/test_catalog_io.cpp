#include "latsq/catalog_io.hpp"

#include <sstream>

#include "doctest.h"
#include "latsq/fixtures.hpp"
#include "latsq/generate.hpp"

using namespace latsq;
namespace fx = latsq::fixtures;

TEST_CASE("square text format round trip") {
  LatinSquare sq = fx::sade_counterexample();
  std::string text = format_square(sq);
  CHECK(parse_square_text(text) == sq);

  // comments are skipped
  CHECK(parse_square_text("# comment\n2\n# another\n1 2\n2 1\n") ==
        LatinSquare::from_rows({{1, 2}, {2, 1}}));
}

TEST_CASE("square parser diagnostics name the violated line") {
  CHECK_THROWS_WITH(parse_square_text("2\n1 2\n1 2\n"), doctest::Contains("column"));
  CHECK_THROWS_WITH(parse_square_text("2\n1 1\n2 2\n"), doctest::Contains("row"));
  CHECK_THROWS_WITH(parse_square_text("2\n1 2\n"), doctest::Contains("end of input"));
  CHECK_THROWS_WITH(parse_square_text("2\n1 2 3\n2 1 3\n"), doctest::Contains("length"));
  CHECK_THROWS(parse_square_text("0\n"));
}

TEST_CASE("catalog file round trip is exact") {
  Catalog cat = gen_classes(6, PropertyFilter::make(Symmetry::kSemisymmetric));
  std::ostringstream out;
  write_catalog(out, cat, "semisymmetric", "unit-test");
  std::string first = out.str();

  std::istringstream in(first);
  CatalogFile file = read_catalog(in);
  CHECK(file.header.order == 6);
  CHECK(file.header.filter == "semisymmetric");
  CHECK(file.header.class_count == cat.class_count());
  CHECK(file.header.square_count == cat.total_squares());
  REQUIRE(file.catalog.entries.size() == cat.entries.size());
  for (size_t i = 0; i < cat.entries.size(); ++i) {
    CHECK(file.catalog.entries[i].representative == cat.entries[i].representative);
    CHECK(file.catalog.entries[i].stabilizer_order == cat.entries[i].stabilizer_order);
  }

  std::ostringstream out2;
  write_catalog(out2, file.catalog, file.header.filter, file.header.generator);
  CHECK(out2.str() == first);  // byte-identical after a round trip
}

TEST_CASE("catalog reader rejects tampered files") {
  Catalog cat = gen_classes(4, PropertyFilter::make(Symmetry::kTotallySymmetric));
  std::ostringstream out;
  write_catalog(out, cat, "totally-symmetric", "t");
  std::string text = out.str();

  std::string bad = text;
  bad.replace(bad.find("squares "), 9, "squares 9");
  std::istringstream in(bad);
  CHECK_THROWS(read_catalog(in));

  std::string bad2 = text;
  bad2.replace(0, 1, "x");
  std::istringstream in2(bad2);
  CHECK_THROWS(read_catalog(in2));
}

TEST_CASE("fixture files on disk match the embedded squares") {
  struct Row {
    const char* path;
    LatinSquare sq;
  };
  const Row rows[] = {
      {"order8_left.txt", fx::order8_left()},
      {"order8_right.txt", fx::order8_right()},
      {"order12_unipotent.txt", fx::a12()},
      {"order12_unipotent_flipped.txt", fx::b12()},
      {"order9_idempotent_left.txt", fx::order9_idem_left()},
      {"order9_idempotent_right.txt", fx::order9_idem_right()},
      {"order9_left_autotopism.txt", fx::sade_counterexample()},
      {"order7_diagonal_a.txt", fx::a1()},
      {"order7_diagonal_b.txt", fx::a2()},
  };
  for (const Row& row : rows) {
    std::string path = std::string(LATSQ_SOURCE_DIR) + "/data/fixtures/" + row.path;
    CHECK(read_square_file(path) == row.sq);
  }
}
