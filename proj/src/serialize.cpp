#include "cisforge/serialize.hpp"

#include <sstream>

namespace cisforge {

namespace {

std::string big_str(const BigInt& v) { return v.get_str(); }

}  // namespace

Json field_to_json(const FiniteField& field) {
  return Json{{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_q(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field size must be >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t m = 0;
  std::uint64_t v = q;
  while (v > 1) {
    if (v % p != 0) throw std::invalid_argument("field size must be a prime power");
    v /= p;
    ++m;
  }
  return FiniteField::get(static_cast<std::uint32_t>(p), m);
}

FieldPtr field_from_json(const Json& j) {
  if (j.contains("p")) {
    FieldPtr field = FiniteField::get(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
    if (j.contains("modulus")) {
      const auto mod = j.at("modulus").get<std::vector<std::uint32_t>>();
      if (mod != field->modulus()) {
        throw std::invalid_argument("unsupported modulus: fields use the canonical modulus");
      }
    }
    return field;
  }
  return field_from_q(j.at("q").get<std::uint64_t>());
}

Json poly_to_json(const Poly& p) { return Json(p.coeffs()); }

Poly poly_from_json(const FieldPtr& field, const Json& j) {
  auto coeffs = j.get<std::vector<std::uint32_t>>();
  for (auto c : coeffs) {
    if (c >= field->q()) throw std::invalid_argument("coefficient index out of range");
  }
  return Poly(field, std::move(coeffs));
}

Json spec_to_json(const GeneratorSpec& spec) {
  Json gens = Json::array();
  for (const auto& g : spec.gens) gens.push_back(poly_to_json(g));
  return Json{{"q", spec.ring->q()},
              {"field", field_to_json(*spec.ring->field())},
              {"n", spec.ring->n()},
              {"t", spec.t},
              {"h", poly_to_json(spec.ring->h())},
              {"h_str", to_string(spec.ring->h())},
              {"generators", gens}};
}

Json code_to_json(const LinearCode& code) {
  Json j{{"q", code.field->q()},
         {"field", field_to_json(*code.field)},
         {"n", code.dimension},
         {"length", code.length},
         {"t", code.t},
         {"family", family_name(code.family)}};
  if (code.h) {
    j["h"] = poly_to_json(*code.h);
    Json gens = Json::array();
    for (const auto& g : code.generators) gens.push_back(poly_to_json(g));
    j["generators"] = gens;
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < code.gen_matrix.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t c = 0; c < code.gen_matrix.cols(); ++c) row.push_back(code.gen_matrix.at(i, c));
      rows.push_back(std::move(row));
    }
    j["gen_matrix"] = rows;
  }
  if (code.d) j["d"] = *code.d;
  return j;
}

LinearCode code_from_json(const Json& j) {
  FieldPtr field = j.contains("field") ? field_from_json(j.at("field")) : field_from_q(j.at("q"));
  if (j.contains("h")) {
    Poly h = poly_from_json(field, j.at("h"));
    RingPtr ring = QuotientRing::make(field, h);
    std::vector<Poly> gens;
    for (const auto& g : j.at("generators")) gens.push_back(poly_from_json(field, g));
    const int t = static_cast<int>(gens.size()) + 1;
    GeneratorSpec spec(ring, t, std::move(gens));
    LinearCode code = build_code(spec);
    if (j.contains("d")) code.d = j.at("d").get<int>();
    return code;
  }
  const auto rows = j.at("gen_matrix");
  const std::size_t r = rows.size();
  if (r == 0) throw std::invalid_argument("empty generator matrix");
  const std::size_t c = rows.at(0).size();
  Matrix m(field.get(), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = rows.at(i);
    if (row.size() != c) throw std::invalid_argument("ragged generator matrix");
    for (std::size_t k = 0; k < c; ++k) {
      const auto v = row.at(k).get<std::uint32_t>();
      if (v >= field->q()) throw std::invalid_argument("matrix entry out of range");
      m.at(i, k) = v;
    }
  }
  Family family = Family::Generic;
  if (j.contains("family")) {
    const std::string name = j.at("family").get<std::string>();
    if (name == "QC") family = Family::QC;
    else if (name == "QT") family = Family::QT;
    else if (name == "QPC") family = Family::QPC;
  }
  std::size_t t = j.value("t", std::size_t{0});
  LinearCode code = make_code(field, std::move(m), family, t);
  if (j.contains("d")) code.d = j.at("d").get<int>();
  return code;
}

Json search_report_to_json(const SearchReport& report) {
  Json j{{"found", report.found},
         {"best_d", report.best_d},
         {"n", report.n},
         {"candidates_tried", report.candidates_tried},
         {"candidate_space", report.candidate_space},
         {"elapsed_sec", report.elapsed_sec}};
  if (report.found) j["best_spec"] = spec_to_json(report.best_spec);
  return j;
}

Json count_report_to_json(const CountReport& report) {
  Json j{{"q", report.q},
         {"t", report.t},
         {"h", poly_to_json(report.h)},
         {"h_str", to_string(report.h)},
         {"family", family_name(report.family)},
         {"formula_count", big_str(report.formula_count)}};
  if (report.oracle_count) {
    j["oracle_count"] = big_str(*report.oracle_count);
    j["verdict"] = report.mismatch() ? "MISMATCH" : "MATCH";
  } else {
    j["verdict"] = "UNCHECKED";
  }
  return j;
}

Json table_rows_to_json(TableId id, std::uint64_t seed, const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    arr.push_back(Json{{"table", table_name(id)},
                       {"n", row.n},
                       {"found", row.found},
                       {"d_found", row.d_found},
                       {"d_published", row.d_published},
                       {"mode", row.exhaustive ? "exhaustive" : "random"},
                       {"match", row.match},
                       {"candidates", row.candidates},
                       {"elapsed_sec", row.elapsed_sec}});
  }
  return Json{{"table", table_name(id)}, {"seed", seed}, {"rows", arr}};
}

std::string z4_digits(const z4::Z4Poly& p, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<char>('0' + p.coeff(i));
  return out;
}

z4::Z4Poly z4_from_digits(std::string_view digits) {
  std::vector<std::uint8_t> c(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '3') throw std::invalid_argument("base-4 digit expected");
    c[i] = static_cast<std::uint8_t>(digits[i] - '0');
  }
  return z4::Z4Poly(std::move(c));
}

Json z4_code_to_json(const z4::Z4Code& code) {
  Json gens = Json::array();
  for (const auto& g : code.gens) gens.push_back(z4_digits(g, code.n));
  Json j{{"ring", "Z4"}, {"n", code.n}, {"t", code.t}, {"generators", gens}};
  if (code.min_lee) j["min_lee"] = *code.min_lee;
  return j;
}

Json z4_search_report_to_json(const z4::Z4SearchReport& report, std::size_t n, int t) {
  Json j{{"found", report.found},
         {"best_lee", report.best_lee},
         {"n", n},
         {"t", t},
         {"candidates_tried", report.candidates_tried},
         {"elapsed_sec", report.elapsed_sec}};
  if (report.found) {
    Json gens = Json::array();
    for (const auto& g : report.best_spec.gens) gens.push_back(z4_digits(g, n));
    j["generators"] = gens;
  }
  return j;
}

Json z4_count_to_json(const z4::Z4CountReport& report) {
  return Json{{"n", report.n},
              {"t", report.t},
              {"paper_count", big_str(report.paper_count)},
              {"crt_count", big_str(report.crt_count)},
              {"oracle_count", big_str(report.oracle_count)},
              {"crt_matches_oracle", report.crt_matches_oracle},
              {"paper_matches_oracle", report.paper_matches_oracle}};
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  const bool spaced = m.field()->q() > 10;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (spaced && j > 0) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

// wall-clock fields vary run to run; the digest covers everything else
void scrub_timing(Json& j) {
  if (j.is_object()) {
    j.erase("elapsed_sec");
    j.erase("wall_ms");
    for (auto& [key, value] : j.items()) scrub_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) scrub_timing(value);
  }
}

}  // namespace

std::string digest_hex(const Json& result) {
  Json scrubbed = result;
  scrub_timing(scrubbed);
  const std::uint64_t h = fnv1a64(scrubbed.dump());
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace cisforge
