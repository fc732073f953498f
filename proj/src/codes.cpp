#include "cisforge/codes.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace cisforge {

std::string family_name(Family f) {
  switch (f) {
    case Family::QC: return "QC";
    case Family::QT: return "QT";
    case Family::QPC: return "QPC";
    default: return "generic";
  }
}

Family classify_family(const Poly& h) {
  const FiniteField* f = h.field();
  const int n = h.degree();
  if (n < 1 || !h.is_monic()) return Family::Generic;
  bool binomial = true;
  for (int i = 1; i < n; ++i) {
    if (h.coeff_index(static_cast<std::size_t>(i)) != 0) {
      binomial = false;
      break;
    }
  }
  if (binomial) {
    const std::uint32_t alpha = f->neg_idx(h.coeff_index(0));  // h = x^n - alpha
    if (alpha == 1) return Family::QC;
    if (alpha != 0) return Family::QT;
  }
  return is_separable(h) ? Family::QPC : Family::Generic;
}

GeneratorSpec::GeneratorSpec(RingPtr ring_in, int t_in, std::vector<Poly> gens_in)
    : ring(std::move(ring_in)), t(t_in), gens(std::move(gens_in)) {
  if (t < 2) throw std::invalid_argument("index t must be >= 2");
  if (gens.size() != static_cast<std::size_t>(t - 1)) {
    throw std::invalid_argument("spec needs exactly t-1 generator residues");
  }
  for (auto& g : gens) g = g % ring->h();
}

LinearCode make_code(const FieldPtr& field, Matrix gen_matrix, Family family, std::size_t t) {
  if (gen_matrix.field() != field.get()) throw std::invalid_argument("matrix over a different field");
  LinearCode code;
  code.field = field;
  code.dimension = gen_matrix.rows();
  code.length = gen_matrix.cols();
  code.family = family;
  code.t = t;
  if (gen_matrix.rank() != code.dimension) {
    throw std::invalid_argument("generator matrix must have full row rank");
  }
  code.gen_matrix = std::move(gen_matrix);
  return code;
}

LinearCode build_code(const GeneratorSpec& spec) {
  const QuotientRing& ring = *spec.ring;
  const std::size_t n = ring.n();
  const auto t = static_cast<std::size_t>(spec.t);
  Matrix g(ring.field().get(), n, n * t);
  for (std::size_t i = 0; i < n; ++i) g.at(i, i) = 1;
  for (std::size_t b = 1; b < t; ++b) {
    Matrix block = expansion_matrix(spec.gen(b - 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g.at(i, b * n + j) = block.at(i, j);
    }
  }
  LinearCode code;
  code.field = ring.field();
  code.gen_matrix = std::move(g);
  code.dimension = n;
  code.length = n * t;
  code.t = t;
  code.family = classify_family(ring.h());
  code.h = ring.h();
  code.generators = spec.gens;
  return code;
}

bool is_cis(const GeneratorSpec& spec) {
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(spec.t); ++i) {
    if (!is_unit(spec.gen(i))) return false;
  }
  return true;
}

bool is_cis_by_rank(const GeneratorSpec& spec) {
  const std::size_t n = spec.ring->n();
  for (const auto& g : spec.gens) {
    Matrix block = expansion_matrix({spec.ring, g});
    if (block.rank() != n) return false;
  }
  return true;
}

std::vector<std::size_t> natural_block(const LinearCode& code, std::size_t j) {
  std::vector<std::size_t> cols(code.dimension);
  for (std::size_t i = 0; i < code.dimension; ++i) cols[i] = j * code.dimension + i;
  return cols;
}

bool is_information_set(const LinearCode& code, const std::vector<std::size_t>& cols) {
  if (cols.size() != code.dimension) {
    throw std::invalid_argument("information set must have size = dimension");
  }
  return code.gen_matrix.submatrix_cols(cols).is_invertible();
}

std::vector<std::uint32_t> encode(const LinearCode& code, const std::vector<std::uint32_t>& message) {
  if (message.size() != code.dimension) throw std::invalid_argument("wrong message length");
  const FiniteField* f = code.field.get();
  std::vector<std::uint32_t> word(code.length, 0);
  for (std::size_t i = 0; i < code.dimension; ++i) {
    const std::uint32_t m = message[i];
    if (m == 0) continue;
    for (std::size_t j = 0; j < code.length; ++j) {
      word[j] = f->add_idx(word[j], f->mul_idx(m, code.gen_matrix.at(i, j)));
    }
  }
  return word;
}

std::size_t weight_of_word(const std::vector<std::uint32_t>& word) {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [](std::uint32_t v) { return v != 0; }));
}

namespace {

// Checked q^k; returns false when the value exceeds `limit`.
bool message_space_size(std::uint32_t q, std::size_t k, std::uint64_t limit, std::uint64_t& out) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (s > limit / q) return false;
    s *= q;
  }
  out = s;
  return true;
}

// ---- packed sweep for characteristic-2 fields -----------------------------
//
// Symbols live in fixed-width bit lanes (1, 2, 4, 8 or 16 bits, whichever is
// the smallest power of two >= m). Codeword accumulation is plain XOR because
// addition in F_{2^m} is coefficientwise mod 2; Hamming weight is an OR-fold
// of each lane followed by a popcount.
struct PackedSweep {
  std::uint32_t q;
  std::size_t k;  // message digits
  int lane;
  std::size_t words;
  std::uint64_t lane_mask;
  std::vector<std::uint64_t> mults;  // [row][lambda][word]

  const std::uint64_t* mult(std::size_t row, std::uint32_t lambda) const {
    return mults.data() + (row * q + lambda) * words;
  }

  explicit PackedSweep(const LinearCode& code) {
    const FiniteField* f = code.field.get();
    q = f->q();
    k = code.dimension;
    lane = 1;
    while ((1u << lane) < f->q() && lane < 16) lane *= 2;
    if (static_cast<std::uint32_t>(1u) << lane < q) lane = 16;
    const std::size_t L = code.length;
    words = (L * static_cast<std::size_t>(lane) + 63) / 64;
    lane_mask = 0;
    for (std::size_t i = 0; i * lane < 64; ++i) lane_mask |= 1ULL << (i * lane);

    mults.assign(k * q * words, 0);
    for (std::size_t row = 0; row < k; ++row) {
      for (std::uint32_t lambda = 1; lambda < q; ++lambda) {
        std::uint64_t* dst = mults.data() + (row * q + lambda) * words;
        for (std::size_t j = 0; j < L; ++j) {
          const std::uint64_t sym = f->mul_idx(lambda, code.gen_matrix.at(row, j));
          const std::size_t bit = j * static_cast<std::size_t>(lane);
          dst[bit / 64] |= sym << (bit % 64);
        }
      }
    }
  }

  int weight(const std::uint64_t* acc) const {
    int w = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t v = acc[i];
      for (int s = 1; s < lane; s <<= 1) v |= v >> s;
      w += std::popcount(v & lane_mask);
    }
    return w;
  }

  // Minimum codeword weight over message indices in [from, to); exact when
  // the result exceeds floor.
  int run(std::uint64_t from, std::uint64_t to, int floor) const {
    std::vector<std::uint32_t> digit(k, 0);
    std::vector<std::uint64_t> acc(words, 0);
    {
      std::uint64_t v = from;
      for (std::size_t i = 0; i < k; ++i) {
        digit[i] = static_cast<std::uint32_t>(v % q);
        v /= q;
        if (digit[i] != 0) {
          const std::uint64_t* m = mult(i, digit[i]);
          for (std::size_t w = 0; w < words; ++w) acc[w] ^= m[w];
        }
      }
    }
    int best = INT32_MAX;
    for (std::uint64_t idx = from; idx < to; ++idx) {
      const int w = weight(acc.data());
      if (w < best) {
        best = w;
        if (best <= floor) return best;
      }
      // advance the odometer; delta multiples are XORed in because
      // subtraction is addition in characteristic 2
      std::size_t pos = 0;
      while (pos < k && digit[pos] == q - 1) {
        const std::uint64_t* m = mult(pos, q - 1);
        for (std::size_t w2 = 0; w2 < words; ++w2) acc[w2] ^= m[w2];
        digit[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
      const std::uint32_t old = digit[pos];
      const std::uint64_t* m = mult(pos, old ^ (old + 1));
      for (std::size_t w2 = 0; w2 < words; ++w2) acc[w2] ^= m[w2];
      digit[pos] = old + 1;
    }
    return best;
  }
};

// ---- byte sweep for odd characteristic, q <= 256 ---------------------------
struct ByteSweep {
  const FiniteField* f;
  std::uint32_t q;
  std::size_t k, L;
  std::vector<std::uint8_t> add_tab;  // q*q
  std::vector<std::uint8_t> mults;    // [row][lambda][coord]

  const std::uint8_t* mult(std::size_t row, std::uint32_t lambda) const {
    return mults.data() + (row * q + lambda) * L;
  }

  explicit ByteSweep(const LinearCode& code) : f(code.field.get()) {
    q = f->q();
    k = code.dimension;
    L = code.length;
    add_tab.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        add_tab[a * q + b] = static_cast<std::uint8_t>(f->add_idx(a, b));
      }
    }
    mults.assign(k * q * L, 0);
    for (std::size_t row = 0; row < k; ++row) {
      for (std::uint32_t lambda = 0; lambda < q; ++lambda) {
        std::uint8_t* dst = mults.data() + (row * q + lambda) * L;
        for (std::size_t j = 0; j < L; ++j) {
          dst[j] = static_cast<std::uint8_t>(f->mul_idx(lambda, code.gen_matrix.at(row, j)));
        }
      }
    }
  }

  int run(std::uint64_t from, std::uint64_t to, int floor) const {
    std::vector<std::uint32_t> digit(k, 0);
    std::vector<std::uint8_t> acc(L, 0);
    {
      std::uint64_t v = from;
      for (std::size_t i = 0; i < k; ++i) {
        digit[i] = static_cast<std::uint32_t>(v % q);
        v /= q;
        if (digit[i] != 0) {
          const std::uint8_t* m = mult(i, digit[i]);
          for (std::size_t j = 0; j < L; ++j) acc[j] = add_tab[acc[j] * q + m[j]];
        }
      }
    }
    int best = INT32_MAX;
    for (std::uint64_t idx = from; idx < to; ++idx) {
      int w = 0;
      for (std::size_t j = 0; j < L; ++j) w += acc[j] != 0;
      if (w < best) {
        best = w;
        if (best <= floor) return best;
      }
      std::size_t pos = 0;
      while (pos < k && digit[pos] == q - 1) {
        const std::uint32_t delta = f->sub_idx(0, q - 1);
        const std::uint8_t* m = mult(pos, delta);
        for (std::size_t j = 0; j < L; ++j) acc[j] = add_tab[acc[j] * q + m[j]];
        digit[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
      const std::uint32_t old = digit[pos];
      const std::uint32_t delta = f->sub_idx(old + 1, old);
      const std::uint8_t* m = mult(pos, delta);
      for (std::size_t j = 0; j < L; ++j) acc[j] = add_tab[acc[j] * q + m[j]];
      digit[pos] = old + 1;
    }
    return best;
  }
};

// Fallback for q > 256 in odd characteristic: re-encode every message.
int generic_sweep(const LinearCode& code, std::uint64_t from, std::uint64_t to, int floor) {
  const std::uint32_t q = code.field->q();
  const std::size_t k = code.dimension;
  std::vector<std::uint32_t> msg(k, 0);
  int best = INT32_MAX;
  for (std::uint64_t idx = from; idx < to; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    const int w = static_cast<int>(weight_of_word(encode(code, msg)));
    if (w < best) {
      best = w;
      if (best <= floor) return best;
    }
  }
  return best;
}

template <typename Runner>
int sharded_min(const Runner& runner, std::uint64_t total, int floor, int workers) {
  if (workers <= 1 || total < (1ULL << 16)) return runner(1, total, floor);
  const auto w = static_cast<std::uint64_t>(workers);
  std::vector<int> results(w, INT32_MAX);
  std::vector<std::thread> threads;
  const std::uint64_t span = (total - 1 + w - 1) / w;
  for (std::uint64_t s = 0; s < w; ++s) {
    const std::uint64_t from = 1 + s * span;
    const std::uint64_t to = std::min(total, from + span);
    if (from >= to) break;
    threads.emplace_back([&, s, from, to] { results[s] = runner(from, to, floor); });
  }
  for (auto& t : threads) t.join();
  return *std::min_element(results.begin(), results.end());
}

}  // namespace

int min_distance_floor(const LinearCode& code, int floor, std::uint64_t budget, int workers) {
  std::uint64_t total = 0;
  if (!message_space_size(code.field->q(), code.dimension, budget, total)) {
    throw BudgetExceeded("message space q^k exceeds the distance budget");
  }
  if (code.field->p() == 2) {
    PackedSweep sweep(code);
    return sharded_min([&](std::uint64_t a, std::uint64_t b, int fl) { return sweep.run(a, b, fl); },
                       total, floor, workers);
  }
  if (code.field->q() <= 256) {
    ByteSweep sweep(code);
    return sharded_min([&](std::uint64_t a, std::uint64_t b, int fl) { return sweep.run(a, b, fl); },
                       total, floor, workers);
  }
  return sharded_min(
      [&](std::uint64_t a, std::uint64_t b, int fl) { return generic_sweep(code, a, b, fl); }, total,
      floor, workers);
}

int min_distance(const LinearCode& code, std::uint64_t budget, int workers) {
  return min_distance_floor(code, 0, budget, workers);
}

CodewordIter::CodewordIter(const LinearCode& code) : code_(code) {
  std::uint64_t total = 0;
  if (!message_space_size(code.field->q(), code.dimension, UINT64_MAX / 2, total)) {
    throw BudgetExceeded("codeword space does not fit in 64 bits");
  }
  total_ = total;
}

bool CodewordIter::next(std::vector<std::uint32_t>& word) {
  if (cursor_ >= total_) return false;
  const std::uint32_t q = code_.field->q();
  std::vector<std::uint32_t> msg(code_.dimension, 0);
  std::uint64_t v = cursor_;
  for (std::size_t i = 0; i < code_.dimension; ++i) {
    msg[i] = static_cast<std::uint32_t>(v % q);
    v /= q;
  }
  word = encode(code_, msg);
  ++cursor_;
  return true;
}

}  // namespace cisforge
