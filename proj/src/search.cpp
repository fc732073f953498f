#include "cisforge/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "cisforge/rng.hpp"
#include "cisforge/slot_runner.hpp"

namespace cisforge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

// One candidate evaluation per slot: empty result = slot rejected (not a CIS
// tuple / no usable h). When a candidate is produced, `d` is exact whenever
// it exceeds the floor passed in.
using SlotEval = std::function<std::optional<std::pair<int, GeneratorSpec>>(std::uint64_t slot,
                                                                            int floor)>;

SearchReport run_search(const SlotEval& eval, std::uint64_t budget, std::optional<int> target,
                        int workers) {
  const auto start = Clock::now();
  auto run = detail::run_slots<GeneratorSpec>(eval, budget, target, workers);
  SearchReport report;
  report.found = run.found;
  report.best_d = run.d;
  report.best_spec = std::move(run.cand);
  report.candidates_tried = run.tried;
  report.elapsed_sec = seconds_since(start);
  return report;
}

}  // namespace

std::vector<Residue> list_units(const RingPtr& ring) {
  const std::uint64_t size = ring->size();
  if (size > (1ULL << 26)) throw BudgetExceeded("residue scan too large for unit enumeration");
  std::vector<Residue> units;
  for (std::uint64_t i = 0; i < size; ++i) {
    Residue r = ring->from_index(i);
    if (is_unit(r)) units.push_back(std::move(r));
  }
  return units;
}

std::uint64_t count_units(const RingPtr& ring) { return list_units(ring).size(); }

SearchReport exhaustive_best(const RingPtr& ring, int t, std::uint64_t budget, int workers,
                             std::uint64_t distance_budget) {
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  const auto start = Clock::now();
  const std::vector<Residue> units = list_units(ring);
  const std::uint64_t space =
      checked_pow(units.size(), static_cast<unsigned>(t - 1), 1ULL << 62);
  if (space > budget) throw BudgetExceeded("unit tuple space exceeds the search budget");

  const auto slots = static_cast<std::size_t>(t - 1);
  SlotEval eval = [&](std::uint64_t slot, int floor) -> std::optional<std::pair<int, GeneratorSpec>> {
    std::vector<Poly> gens(slots);
    std::uint64_t v = slot;
    for (std::size_t i = 0; i < slots; ++i) {
      gens[i] = units[v % units.size()].value;
      v /= units.size();
    }
    GeneratorSpec spec(ring, t, std::move(gens));
    const int d = min_distance_floor(build_code(spec), floor, distance_budget);
    return std::make_pair(d, std::move(spec));
  };

  SearchReport report = run_search(eval, space, std::nullopt, workers);
  report.candidate_space = space;
  report.n = ring->n();
  report.elapsed_sec = seconds_since(start);
  return report;
}

namespace {

std::optional<std::pair<int, GeneratorSpec>> random_cis_slot(const RingPtr& ring, int t,
                                                             std::uint64_t seed, std::uint64_t slot,
                                                             int floor,
                                                             std::uint64_t distance_budget) {
  SplitMix64 rng(stream_seed(seed, slot));
  const std::uint64_t size = ring->size();
  std::vector<Poly> gens;
  gens.reserve(static_cast<std::size_t>(t - 1));
  for (int i = 0; i + 1 < t; ++i) {
    Residue r = ring->from_index(rng.below(size));
    if (!is_unit(r)) return std::nullopt;
    gens.push_back(std::move(r.value));
  }
  GeneratorSpec spec(ring, t, std::move(gens));
  const int d = min_distance_floor(build_code(spec), floor, distance_budget);
  return std::make_pair(d, std::move(spec));
}

}  // namespace

SearchReport random_search(const SearchJob& job) {
  if (job.mode != SearchMode::Random) {
    throw std::invalid_argument("random_search requires a random-mode job");
  }
  if (job.t < 2) throw std::invalid_argument("index t must be >= 2");
  const auto start = Clock::now();
  SlotEval eval = [&](std::uint64_t slot, int floor) {
    return random_cis_slot(job.ring, job.t, job.seed, slot, floor, job.distance_budget);
  };
  SearchReport report = run_search(eval, job.budget, job.target_d, job.workers);
  report.n = job.ring->n();
  report.elapsed_sec = seconds_since(start);
  return report;
}

SearchReport qpc_search(const FieldPtr& field, int t, std::size_t n, std::uint64_t seed,
                        std::uint64_t budget, std::optional<int> target_d, int workers,
                        std::uint64_t distance_budget) {
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  if (n < 2) throw std::invalid_argument("co-index n must be >= 2");
  const auto start = Clock::now();
  const std::uint32_t q = field->q();

  SlotEval eval = [&](std::uint64_t slot, int floor) -> std::optional<std::pair<int, GeneratorSpec>> {
    SplitMix64 rng(stream_seed(seed, slot));
    // monic separable h, rejection-sampled
    Poly h(field.get());
    bool ok = false;
    for (int tries = 0; tries < 256 && !ok; ++tries) {
      std::vector<std::uint32_t> c(n + 1, 0);
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>(rng.below(q));
      c[n] = 1;
      h = Poly(field.get(), std::move(c));
      ok = is_separable(h);
    }
    if (!ok) return std::nullopt;
    RingPtr ring = QuotientRing::make(field, h);
    const std::uint64_t size = ring->size();
    std::vector<Poly> gens;
    gens.reserve(static_cast<std::size_t>(t - 1));
    for (int i = 0; i + 1 < t; ++i) {
      Residue r = ring->from_index(rng.below(size));
      if (!is_unit(r)) return std::nullopt;
      gens.push_back(std::move(r.value));
    }
    GeneratorSpec spec(ring, t, std::move(gens));
    const int d = min_distance_floor(build_code(spec), floor, distance_budget);
    return std::make_pair(d, std::move(spec));
  };

  SearchReport report = run_search(eval, budget, target_d, workers);
  report.n = n;
  report.elapsed_sec = seconds_since(start);
  return report;
}

std::optional<TableId> parse_table_id(const std::string& name) {
  if (name == "qc-t2") return TableId::QcT2;
  if (name == "qc-t3") return TableId::QcT3;
  if (name == "qt-t2") return TableId::QtT2;
  if (name == "qt-t3") return TableId::QtT3;
  if (name == "qpc-t2") return TableId::QpcT2;
  if (name == "qpc-t3") return TableId::QpcT3;
  return std::nullopt;
}

std::string table_name(TableId id) {
  switch (id) {
    case TableId::QcT2: return "qc-t2";
    case TableId::QcT3: return "qc-t3";
    case TableId::QtT2: return "qt-t2";
    case TableId::QtT3: return "qt-t3";
    case TableId::QpcT2: return "qpc-t2";
    default: return "qpc-t3";
  }
}

std::pair<std::size_t, std::vector<int>> paper_table(TableId id) {
  switch (id) {
    case TableId::QcT2: return {2, {2, 3, 4, 4, 4, 4, 5, 6}};
    case TableId::QcT3: return {2, {4, 4, 6, 7, 8, 8, 8}};
    case TableId::QtT2: return {2, {3, 3, 4, 5, 5, 6, 6}};
    case TableId::QtT3: return {2, {4, 6, 7, 8, 9, 10, 11}};
    case TableId::QpcT2: return {2, {2, 2, 3, 3, 4, 4}};
    default: return {2, {4, 4, 5, 5, 6, 6}};
  }
}

std::vector<TableRow> reproduce_table(TableId id, std::uint64_t seed, const TableOptions& options) {
  const auto [n0, published] = paper_table(id);
  const bool qpc = (id == TableId::QpcT2 || id == TableId::QpcT3);
  const bool qt = (id == TableId::QtT2 || id == TableId::QtT3);
  const int t = (id == TableId::QcT2 || id == TableId::QtT2 || id == TableId::QpcT2) ? 2 : 3;
  const FieldPtr field = qt ? FiniteField::get(2, 2) : FiniteField::get(2, 1);

  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < published.size(); ++i) {
    const std::size_t n = n0 + i;
    TableRow row;
    row.n = n;
    row.d_published = published[i];
    const auto row_start = Clock::now();

    if (qpc) {
      auto rep = qpc_search(field, t, n, seed,
                            options.random_budget,
                            options.stop_at_published ? std::optional<int>(published[i])
                                                      : std::nullopt,
                            options.workers, options.distance_budget);
      row.found = rep.found;
      row.d_found = rep.best_d;
      row.candidates = rep.candidates_tried;
      row.match = rep.found && rep.best_d >= row.d_published;
    } else {
      std::vector<std::int64_t> coeffs(n + 1, 0);
      coeffs[n] = 1;
      Poly h(field.get());
      if (qt) {
        // x^n - alpha with alpha the first non-{0,1} element of F4
        std::vector<std::uint32_t> c(n + 1, 0);
        c[0] = field->neg_idx(2);
        c[n] = 1;
        h = Poly(field.get(), std::move(c));
      } else {
        coeffs[0] = -1;
        h = Poly::from_ints(field, coeffs);
      }
      RingPtr ring = QuotientRing::make(field, h);
      const std::uint64_t unit_count = count_units(ring);
      const std::uint64_t space =
          checked_pow(unit_count, static_cast<unsigned>(t - 1), 1ULL << 62);
      const std::uint64_t sweep = checked_pow(field->q(), static_cast<unsigned>(n), 1ULL << 62);
      const bool exhaustive = space <= options.exhaustive_candidate_cap &&
                              space <= options.exhaustive_work_cap / std::max<std::uint64_t>(sweep, 1);

      if (exhaustive) {
        auto rep = exhaustive_best(ring, t, options.exhaustive_candidate_cap, options.workers,
                                   options.distance_budget);
        row.found = rep.found;
        row.d_found = rep.best_d;
        row.candidates = rep.candidates_tried;
        row.exhaustive = true;
        row.match = rep.best_d == row.d_published;
      } else {
        SearchJob job;
        job.ring = ring;
        job.t = t;
        job.mode = SearchMode::Random;
        job.seed = seed;
        job.budget = options.random_budget;
        if (options.stop_at_published) job.target_d = published[i];
        job.workers = options.workers;
        job.distance_budget = options.distance_budget;
        auto rep = random_search(job);
        row.found = rep.found;
        row.d_found = rep.best_d;
        row.candidates = rep.candidates_tried;
        row.match = rep.found && rep.best_d >= row.d_published;
      }
    }
    row.elapsed_sec = seconds_since(row_start);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cisforge
