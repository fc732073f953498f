#ifndef CISFORGE_SEARCH_HPP
#define CISFORGE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cisforge/codes.hpp"

namespace cisforge {

enum class SearchMode { Exhaustive, Random };

struct SearchJob {
  RingPtr ring;
  int t = 2;
  SearchMode mode = SearchMode::Random;
  std::uint64_t seed = 0;  // ignored in exhaustive mode
  std::uint64_t budget = 100000;
  std::optional<int> target_d;
  int workers = 1;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
};

struct SearchReport {
  bool found = false;  // false only for random searches that never hit a CIS tuple
  int best_d = 0;
  GeneratorSpec best_spec;
  std::uint64_t candidates_tried = 0;
  std::uint64_t candidate_space = 0;  // (#units)^{t-1} in exhaustive mode
  double elapsed_sec = 0.0;
  std::size_t n = 0;
};

std::vector<Residue> list_units(const RingPtr& ring);
std::uint64_t count_units(const RingPtr& ring);

/// Best minimum distance over all (t-1)-tuples of units of R. Deterministic
/// tie-break: the first maximal candidate in tuple enumeration order (units
/// listed by residue index, tuples odometer-ordered with slot 0 fastest).
SearchReport exhaustive_best(const RingPtr& ring, int t, std::uint64_t budget = 1ULL << 24,
                             int workers = 1, std::uint64_t distance_budget = kDefaultDistanceBudget);

/// Seeded random search over uniform residue tuples; non-unit tuples are
/// rejected and count against the budget. Fully reproducible from the seed,
/// independent of the worker count.
SearchReport random_search(const SearchJob& job);

/// §-style QPC search: each candidate draws a random monic separable h of
/// degree n, then a random unit tuple for it.
SearchReport qpc_search(const FieldPtr& field, int t, std::size_t n, std::uint64_t seed,
                        std::uint64_t budget, std::optional<int> target_d = std::nullopt,
                        int workers = 1, std::uint64_t distance_budget = kDefaultDistanceBudget);

enum class TableId { QcT2, QcT3, QtT2, QtT3, QpcT2, QpcT3 };

std::optional<TableId> parse_table_id(const std::string& name);
std::string table_name(TableId id);
/// (first n, published best-d row) for each of the six distance tables.
std::pair<std::size_t, std::vector<int>> paper_table(TableId id);

struct TableOptions {
  std::uint64_t random_budget = 100000;
  std::uint64_t exhaustive_candidate_cap = 1ULL << 24;
  // exhaustive only when candidates * q^n stays under this many codeword sweeps
  std::uint64_t exhaustive_work_cap = 1ULL << 23;
  bool stop_at_published = true;  // random rows stop once the published d is met
  int workers = 1;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
};

struct TableRow {
  std::size_t n = 0;
  bool found = false;
  int d_found = 0;
  int d_published = 0;
  bool exhaustive = false;
  bool match = false;  // equality for exhaustive rows, >= for randomized rows
  std::uint64_t candidates = 0;
  double elapsed_sec = 0.0;
};

std::vector<TableRow> reproduce_table(TableId id, std::uint64_t seed,
                                      const TableOptions& options = {});

}  // namespace cisforge

#endif
