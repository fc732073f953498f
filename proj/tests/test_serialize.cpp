#include <doctest.h>

#include <fstream>

#include "cisforge/serialize.hpp"
#include "schema_check.hpp"

using namespace cisforge;

namespace {

RingPtr cyclic_ring(const FieldPtr& f, std::size_t n) {
  std::vector<std::uint32_t> c(n + 1, 0);
  c[0] = f->neg_idx(1);
  c[n] = 1;
  return QuotientRing::make(f, Poly(f, std::move(c)));
}

}  // namespace

TEST_SUITE_BEGIN("serialize");

TEST_CASE("field json round trip") {
  FieldPtr f4 = FiniteField::get(2, 2);
  Json j = field_to_json(*f4);
  CHECK(j.at("p") == 2);
  CHECK(j.at("m") == 2);
  CHECK(field_from_json(j).get() == f4.get());

  CHECK(field_from_q(8)->m() == 3);
  CHECK(field_from_q(9)->p() == 3);
  CHECK_THROWS_AS(field_from_q(6), std::invalid_argument);
  CHECK_THROWS_AS(field_from_q(1), std::invalid_argument);

  Json bad = j;
  bad["modulus"] = std::vector<std::uint32_t>{1, 0, 1};
  CHECK_THROWS_AS(field_from_json(bad), std::invalid_argument);
}

TEST_CASE("poly json round trip") {
  FieldPtr f4 = FiniteField::get(2, 2);
  Poly p(f4, {2, 0, 3, 1});
  CHECK(poly_from_json(f4, poly_to_json(p)) == p);
  CHECK_THROWS_AS(poly_from_json(f4, Json::array({9})), std::invalid_argument);
}

TEST_CASE("spec-built code json round trip") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr ring = cyclic_ring(f2, 5);
  GeneratorSpec spec(ring, 2, {Poly(f2, {1, 1, 1})});
  LinearCode code = build_code(spec);
  code.d = 4;

  Json j = code_to_json(code);
  CHECK(j.at("family") == "QC");
  auto schema = schema_check::load_schema("code.schema.json");
  CHECK(!schema_check::validate(j, schema).has_value());

  LinearCode back = code_from_json(j);
  CHECK(back.gen_matrix == code.gen_matrix);
  CHECK(back.family == Family::QC);
  CHECK(back.d == 4);
}

TEST_CASE("matrix code json round trip") {
  FieldPtr f4 = FiniteField::get(2, 2);
  Matrix g(f4.get(), 1, 2);
  g.at(0, 0) = 1;
  g.at(0, 1) = 2;
  LinearCode code = make_code(f4, std::move(g), Family::Generic, 2);
  Json j = code_to_json(code);
  CHECK(j.contains("gen_matrix"));
  auto schema = schema_check::load_schema("code.schema.json");
  CHECK(!schema_check::validate(j, schema).has_value());
  LinearCode back = code_from_json(j);
  CHECK(back.gen_matrix == code.gen_matrix);
}

TEST_CASE("reports validate against the shipped schemas") {
  FieldPtr f2 = FiniteField::get(2, 1);
  RingPtr ring = cyclic_ring(f2, 5);

  SearchReport rep = exhaustive_best(ring, 2);
  Json sj = search_report_to_json(rep);
  CHECK(!schema_check::validate(sj, schema_check::load_schema("search_report.schema.json"))
             .has_value());

  CountReport cr = count_report(2, ring->h(), true);
  Json cj = count_report_to_json(cr);
  CHECK(!schema_check::validate(cj, schema_check::load_schema("count_report.schema.json"))
             .has_value());

  TableOptions options;
  options.random_budget = 50;
  auto rows = reproduce_table(TableId::QcT2, 1, options);
  Json tj = table_rows_to_json(TableId::QcT2, 1, rows);
  auto row_schema = schema_check::load_schema("table_row.schema.json");
  for (const auto& row : tj.at("rows")) {
    CHECK(!schema_check::validate(row, row_schema).has_value());
  }

  z4::Z4Code zc = z4::build_z4_code({3, 2, {z4::Z4Poly({0, 1})}});
  zc.min_lee = z4::min_lee_distance(zc);
  Json zj = z4_code_to_json(zc);
  CHECK(!schema_check::validate(zj, schema_check::load_schema("z4_code.schema.json")).has_value());

  Json manifest{{"tool", "cisforge"},   {"version", "1.0.0"}, {"subcommand", "count"},
                {"params", Json::object()}, {"seed", 0},      {"wall_ms", 1.5},
                {"digest", digest_hex(cj)}};
  CHECK(!schema_check::validate(manifest, schema_check::load_schema("manifest.schema.json"))
             .has_value());
}

TEST_CASE("z4 digit strings") {
  z4::Z4Poly p({1, 0, 2});
  CHECK(z4_digits(p, 4) == "1020");
  CHECK(z4_from_digits("1020") == p);
  CHECK_THROWS_AS(z4_from_digits("14"), std::invalid_argument);
}

TEST_CASE("matrix text export") {
  FieldPtr f2 = FiniteField::get(2, 1);
  Matrix m = Matrix::identity(f2.get(), 2);
  CHECK(matrix_text(m) == "10\n01\n");
}

TEST_CASE("digest is stable and content sensitive") {
  Json a{{"x", 1}, {"y", "z"}};
  Json b{{"x", 2}, {"y", "z"}};
  CHECK(digest_hex(a) == digest_hex(a));
  CHECK(digest_hex(a) != digest_hex(b));
  CHECK(digest_hex(a).size() == 16);
}

TEST_SUITE_END();
