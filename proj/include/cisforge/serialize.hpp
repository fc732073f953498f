#ifndef CISFORGE_SERIALIZE_HPP
#define CISFORGE_SERIALIZE_HPP

#include <json.hpp>
#include <string>
#include <string_view>

#include "cisforge/codes.hpp"
#include "cisforge/enumeration.hpp"
#include "cisforge/search.hpp"
#include "cisforge/z4.hpp"

namespace cisforge {

using Json = nlohmann::json;

Json field_to_json(const FiniteField& field);
/// Accepts {"p","m","modulus"} or {"q"}; the modulus, when present, must be
/// the canonical one for (p, m).
FieldPtr field_from_json(const Json& j);
/// Factors a prime power into the canonical field.
FieldPtr field_from_q(std::uint64_t q);

Json poly_to_json(const Poly& p);  // coefficient index array, ascending
Poly poly_from_json(const FieldPtr& field, const Json& j);

Json spec_to_json(const GeneratorSpec& spec);
Json code_to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

Json search_report_to_json(const SearchReport& report);
Json count_report_to_json(const CountReport& report);
Json table_rows_to_json(TableId id, std::uint64_t seed, const std::vector<TableRow>& rows);

/// Base-4 digit string, coefficient of x^i at position i ("102" = 1 + 2x^2).
std::string z4_digits(const z4::Z4Poly& p, std::size_t n);
z4::Z4Poly z4_from_digits(std::string_view digits);
Json z4_code_to_json(const z4::Z4Code& code);
Json z4_search_report_to_json(const z4::Z4SearchReport& report, std::size_t n, int t);
Json z4_count_to_json(const z4::Z4CountReport& report);

/// Generator matrix as plain text rows; digits are concatenated for q <= 10
/// and space-separated otherwise.
std::string matrix_text(const Matrix& m);

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(const Json& result);

}  // namespace cisforge

#endif
