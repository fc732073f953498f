#ifndef CISFORGE_SLOT_RUNNER_HPP
#define CISFORGE_SLOT_RUNNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace cisforge::detail {

// Deterministic candidate-slot executor shared by the F_q and Z4 searches.
//
// An evaluator maps (slot, floor) to an empty optional (slot rejected) or a
// (d, candidate) pair where d is exact whenever it exceeds `floor`. Slots are
// scanned in index order, sharded contiguously across workers, and merged so
// that the outcome is identical to a sequential scan for every worker count:
// with a target, the winner is the lowest slot reaching it; otherwise the
// highest d with the lowest slot as tie-break.

template <typename Cand>
struct SlotScan {
  bool found = false;
  int d = -1;
  std::uint64_t slot = 0;
  Cand cand{};
  std::optional<std::uint64_t> target_slot;
  int target_d = 0;
  Cand target_cand{};
};

template <typename Cand>
struct SlotRun {
  bool found = false;
  int d = 0;
  Cand cand{};
  std::uint64_t tried = 0;
};

template <typename Cand, typename Eval>
SlotScan<Cand> scan_slot_range(const Eval& eval, std::uint64_t from, std::uint64_t to,
                               std::optional<int> target) {
  SlotScan<Cand> best;
  for (std::uint64_t slot = from; slot < to; ++slot) {
    auto r = eval(slot, best.d);
    if (!r) continue;
    if (r->first > best.d) {
      best.found = true;
      best.d = r->first;
      best.slot = slot;
      best.cand = std::move(r->second);
      if (target && best.d >= *target) {
        best.target_slot = slot;
        best.target_d = best.d;
        best.target_cand = best.cand;
        break;
      }
    }
  }
  return best;
}

template <typename Cand, typename Eval>
SlotRun<Cand> run_slots(const Eval& eval, std::uint64_t budget, std::optional<int> target,
                        int workers) {
  std::vector<SlotScan<Cand>> results;
  if (workers <= 1 || budget < 64) {
    results.push_back(scan_slot_range<Cand>(eval, 0, budget, target));
  } else {
    const auto w = static_cast<std::uint64_t>(workers);
    const std::uint64_t span = (budget + w - 1) / w;
    results.resize(static_cast<std::size_t>((budget + span - 1) / span));
    std::vector<std::thread> threads;
    for (std::size_t s = 0; s < results.size(); ++s) {
      const std::uint64_t from = s * span;
      const std::uint64_t to = std::min(budget, from + span);
      threads.emplace_back(
          [&, s, from, to] { results[s] = scan_slot_range<Cand>(eval, from, to, target); });
    }
    for (auto& t : threads) t.join();
  }

  SlotRun<Cand> out;
  if (target) {
    const SlotScan<Cand>* winner = nullptr;
    for (const auto& r : results) {
      if (r.target_slot && (!winner || *r.target_slot < *winner->target_slot)) winner = &r;
    }
    if (winner) {
      out.found = true;
      out.d = winner->target_d;
      out.cand = winner->target_cand;
      out.tried = *winner->target_slot + 1;
      return out;
    }
  }
  const SlotScan<Cand>* best = nullptr;
  for (const auto& r : results) {
    if (!r.found) continue;
    if (!best || r.d > best->d || (r.d == best->d && r.slot < best->slot)) best = &r;
  }
  if (best) {
    out.found = true;
    out.d = best->d;
    out.cand = best->cand;
  }
  out.tried = budget;
  return out;
}

}  // namespace cisforge::detail

#endif
