#ifndef CISFORGE_CODES_HPP
#define CISFORGE_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cisforge/errors.hpp"
#include "cisforge/matrix.hpp"
#include "cisforge/quotient_ring.hpp"

namespace cisforge {

enum class Family { QC, QT, QPC, Generic };

std::string family_name(Family f);
/// Derived from h, never user-asserted: x^n-1 -> QC, x^n-alpha (alpha not in
/// {0,1}) -> QT, other separable -> QPC, otherwise Generic.
Family classify_family(const Poly& h);

/// One-generator spec (1, a_1, ..., a_{t-1}) in R^t.
struct GeneratorSpec {
  RingPtr ring;
  int t = 0;
  std::vector<Poly> gens;  // t-1 residues, reduced mod h

  GeneratorSpec() = default;
  GeneratorSpec(RingPtr ring, int t, std::vector<Poly> gens);

  Residue gen(std::size_t i) const { return {ring, gens[i]}; }
};

struct LinearCode {
  FieldPtr field;
  Matrix gen_matrix;  // dimension x length, full rank
  Family family = Family::Generic;
  std::size_t dimension = 0;
  std::size_t length = 0;
  std::size_t t = 0;  // number of natural blocks when known, else 0

  // provenance, present when built from a GeneratorSpec
  std::optional<Poly> h;
  std::vector<Poly> generators;
  std::optional<int> d;
};

/// Wraps an explicit generator matrix; verifies full rank.
LinearCode make_code(const FieldPtr& field, Matrix gen_matrix, Family family = Family::Generic,
                     std::size_t t = 0);

/// G = (I_n : A_1 : ... : A_{t-1}) with A_i = expansion_matrix(a_i).
LinearCode build_code(const GeneratorSpec& spec);

/// gcd criterion: every a_i a unit of R.
bool is_cis(const GeneratorSpec& spec);
/// Independent oracle: every block A_i of the built matrix has rank n.
bool is_cis_by_rank(const GeneratorSpec& spec);

/// Column indices of natural block j, [jn, (j+1)n).
std::vector<std::size_t> natural_block(const LinearCode& code, std::size_t j);
bool is_information_set(const LinearCode& code, const std::vector<std::size_t>& cols);

std::vector<std::uint32_t> encode(const LinearCode& code, const std::vector<std::uint32_t>& message);
std::size_t weight_of_word(const std::vector<std::uint32_t>& word);

inline constexpr std::uint64_t kDefaultDistanceBudget = 1ULL << 26;

/// Exhaustive minimum Hamming weight over all q^dimension - 1 nonzero
/// codewords. Throws BudgetExceeded when the message space is larger than
/// `budget`. The sweep may be sharded across workers; the result is
/// identical to the sequential sweep.
int min_distance(const LinearCode& code, std::uint64_t budget = kDefaultDistanceBudget,
                 int workers = 1);

/// Early-exit variant for search loops: exact whenever the true distance is
/// > floor; otherwise returns some codeword weight <= floor.
int min_distance_floor(const LinearCode& code, int floor,
                       std::uint64_t budget = kDefaultDistanceBudget, int workers = 1);

/// Cursor over all q^dimension codewords in message-index order, zero first.
class CodewordIter {
 public:
  explicit CodewordIter(const LinearCode& code);
  /// Fills `word` with the next codeword; false when exhausted.
  bool next(std::vector<std::uint32_t>& word);
  std::uint64_t message_index() const { return cursor_; }

 private:
  const LinearCode& code_;
  std::uint64_t cursor_ = 0;
  std::uint64_t total_;
};

}  // namespace cisforge

#endif
