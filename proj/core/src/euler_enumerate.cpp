// Copyright 2026 The zxverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive ZXZ = XZX enumeration on a rational angle grid.
//
// Both sides are taken at scale 4 with integral entries in Z[zeta_N],
// N = 2q: 2 Z(a) (2 X(b)) Z(c) and (2 X(a)) Z(b) (2 X(c)). Scaled this way
// every product is 4 * phase * unitary, so two products agree up to scalar
// iff they share the pivot p (first nonzero entry) and the key
// K_j = conj(m_p) m_j. Keys are bucketed by their images under two ring
// homomorphisms Z[zeta_N] -> F_P, then confirmed exactly.

#include <algorithm>
#include <numeric>

#include "zxverify/cyclotomic_order.hpp"
#include "zxverify/errors.hpp"
#include "zxverify/euler.hpp"
#include "zxverify/integral_cyclotomic.hpp"
#include "zxverify/parallel.hpp"

namespace zxverify {

namespace {

__extension__ typedef unsigned __int128 U128;

constexpr std::size_t kMaxTriplesPerSide = std::size_t{1} << 27;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<U128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// F_P with P = 1 mod N and a primitive N-th root of unity omega.
struct Embedding {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> powers;  // omega^k, 0 <= k < N

  Embedding(std::uint32_t order, std::uint64_t below) {
    std::uint64_t k = (below - 1) / order;
    while (!is_prime(k * order + 1)) --k;
    p = k * order + 1;
    const auto factors = prime_factors(order);
    std::uint64_t omega = 0;
    for (std::uint64_t g = 2; omega == 0; ++g) {
      const std::uint64_t w = powmod(g, (p - 1) / order, p);
      bool primitive = w != 1 || order == 1;
      for (std::uint64_t f : factors) primitive = primitive && powmod(w, order / f, p) != 1;
      if (primitive) omega = w;
    }
    powers.resize(order);
    std::uint64_t w = 1;
    for (auto& x : powers) {
      x = w;
      w = mulmod(w, omega, p);
    }
  }

  std::uint64_t lift(std::int64_t c) const {
    return c >= 0 ? static_cast<std::uint64_t>(c) % p
                  : p - (static_cast<std::uint64_t>(-c) % p);
  }
};

// Small sparse polynomial in zeta, exponents mod N.
struct Poly {
  std::array<std::pair<std::uint32_t, std::int64_t>, 8> terms{};
  int size = 0;

  void add(std::uint32_t e, std::int64_t c) {
    for (int i = 0; i < size; ++i) {
      if (terms[static_cast<std::size_t>(i)].first == e) {
        terms[static_cast<std::size_t>(i)].second += c;
        return;
      }
    }
    terms[static_cast<std::size_t>(size++)] = {e, c};
  }
};

using Entries = std::array<Poly, 4>;

class Grid {
 public:
  explicit Grid(std::int64_t q)
      : n_(static_cast<std::uint32_t>(2 * q)),
        data_(&CyclotomicOrder::get(n_)),
        ring_(n_),
        first_(n_, 0xfffffffffffffc5ULL),
        second_(n_, 0x3fffffffffffffffULL) {
    // Sparse reduction rows for the zero test.
    const std::uint32_t phi = data_->phi();
    rows_.resize(n_ - phi);
    for (std::uint32_t k = phi; k < n_; ++k) {
      auto row = data_->reduction(k);
      for (std::uint32_t j = 0; j < phi; ++j) {
        if (row[j] != 0) rows_[k - phi].push_back({j, row[j]});
      }
    }
    scratch_.resize(phi);
  }

  std::uint32_t order() const { return n_; }

  std::uint32_t mod(std::uint64_t e) const { return static_cast<std::uint32_t>(e % n_); }

  // 2 Z(a) (2 X(b)) Z(c).
  Entries zxz(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    Entries m;
    m[0].add(0, 2);
    m[0].add(b, 2);
    m[1].add(c, 2);
    m[1].add(mod(b + c), -2);
    m[2].add(a, 2);
    m[2].add(mod(a + b), -2);
    m[3].add(mod(a + c), 2);
    m[3].add(mod(a + b + c), 2);
    return m;
  }

  // (2 X(a)) Z(b) (2 X(c)).
  Entries xzx(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    // 2 X(t) = [[1 + x^t, 1 - x^t], [1 - x^t, 1 + x^t]]; sign s[i][j] of x^t.
    static constexpr int kSign[2][2] = {{1, -1}, {-1, 1}};
    Entries m;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Poly& e = m[static_cast<std::size_t>(2 * i + j)];
        // A_i0 C_0j + x^b A_i1 C_1j.
        for (int k = 0; k < 2; ++k) {
          const std::uint32_t shift = k == 0 ? 0 : b;
          const int sa = kSign[i][k];
          const int sc = kSign[k][j];
          e.add(shift, 1);
          e.add(mod(shift + a), sa);
          e.add(mod(shift + c), sc);
          e.add(mod(shift + a + c), sa * sc);
        }
      }
    }
    return m;
  }

  bool is_zero(const Poly& p) {
    const std::uint32_t phi = data_->phi();
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (int i = 0; i < p.size; ++i) {
      const auto [e, c] = p.terms[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (e < phi) {
        scratch_[e] += c;
      } else {
        for (const auto& [j, v] : rows_[e - phi]) scratch_[j] += c * v;
      }
    }
    return std::all_of(scratch_.begin(), scratch_.end(), [](std::int64_t x) { return x == 0; });
  }

  int pivot(const Entries& m) {
    for (int i = 0; i < 4; ++i) {
      if (!is_zero(m[static_cast<std::size_t>(i)])) return i;
    }
    throw BackendError("Euler product vanished");
  }

  std::uint64_t hash(const Entries& m) {
    const int p = pivot(m);
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(p) + 1);
    for (const Embedding* emb : {&first_, &second_}) {
      const std::uint64_t cp = eval(*emb, m[static_cast<std::size_t>(p)], true);
      for (const auto& e : m) {
        h = splitmix64(h ^ mulmod(cp, eval(*emb, e, false), emb->p));
      }
    }
    return h;
  }

  // Canonical exact key: pivot followed by reduced K_j.
  std::vector<std::int64_t> exact_key(const Entries& m) {
    const int p = pivot(m);
    std::vector<std::int64_t> key{p};
    const auto cp = ring_.conj(element(m[static_cast<std::size_t>(p)]));
    std::vector<std::int64_t> coords;
    for (const auto& e : m) {
      ring_.reduce(ring_.mul(cp, element(e)), coords);
      key.insert(key.end(), coords.begin(), coords.end());
    }
    return key;
  }

 private:
  std::uint64_t eval(const Embedding& emb, const Poly& p, bool conjugate) const {
    std::uint64_t acc = 0;
    for (int i = 0; i < p.size; ++i) {
      const auto [e, c] = p.terms[static_cast<std::size_t>(i)];
      const std::uint32_t k = conjugate ? (n_ - e) % n_ : e;
      acc = (acc + mulmod(emb.lift(c), emb.powers[k], emb.p)) % emb.p;
    }
    return acc;
  }

  IntegralCyclotomicRing::Element element(const Poly& p) const {
    IntegralCyclotomicRing::Element out;
    for (int i = 0; i < p.size; ++i) {
      const auto [e, c] = p.terms[static_cast<std::size_t>(i)];
      if (c != 0) out = ring_.add(out, IntegralCyclotomicRing::Element{{e, c}});
    }
    return out;
  }

  std::uint32_t n_;
  const CyclotomicOrder* data_;
  IntegralCyclotomicRing ring_;
  Embedding first_;
  Embedding second_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows_;
  std::vector<std::int64_t> scratch_;
};

struct Hashed {
  std::uint64_t hash;
  std::uint32_t index;
  friend bool operator<(const Hashed& a, const Hashed& b) {
    return a.hash != b.hash ? a.hash < b.hash : a.index < b.index;
  }
};

std::array<std::uint32_t, 3> unpack(std::uint32_t index, std::uint32_t n) {
  return {index / (n * n), index / n % n, index % n};
}

Triple to_triple(const std::array<std::uint32_t, 3>& k, std::int64_t q) {
  return {Angle::pi_times(k[0], q), Angle::pi_times(k[1], q), Angle::pi_times(k[2], q)};
}

std::vector<Hashed> hash_side(std::int64_t q, bool zxz, unsigned threads) {
  const auto n = static_cast<std::uint32_t>(2 * q);
  const std::size_t per_lead = static_cast<std::size_t>(n) * n;
  std::vector<Hashed> out(per_lead * n);
  // One independent partition per leading angle.
  parallel_for(n, threads, [&](std::size_t a) {
    Grid grid(q);
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        const auto ua = static_cast<std::uint32_t>(a);
        const Entries m = zxz ? grid.zxz(ua, b, c) : grid.xzx(ua, b, c);
        const std::size_t slot = a * per_lead + static_cast<std::size_t>(b) * n + c;
        out[slot] = {grid.hash(m), static_cast<std::uint32_t>(slot)};
      }
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

EulerEnumeration enumerate_euler(int max_denominator, unsigned threads) {
  if (max_denominator < 1 || max_denominator > kMaxEulerDenominator) {
    throw DomainError("max denominator must be in 1.." +
                      std::to_string(kMaxEulerDenominator));
  }
  std::int64_t q = 1;
  for (std::int64_t d = 2; d <= max_denominator; ++d) q = std::lcm(q, d);
  EulerEnumeration out = enumerate_euler_grid(q, threads);
  out.max_denominator = max_denominator;
  return out;
}

EulerEnumeration enumerate_euler_grid(std::int64_t q, unsigned threads) {
  if (q < 1) throw DomainError("grid must be positive");
  if (2 * q > static_cast<std::int64_t>(CyclotomicOrder::kMaxOrder)) {
    throw CapacityError("grid pi/" + std::to_string(q) + " needs cyclotomic order " +
                        std::to_string(2 * q) + " above the cap " +
                        std::to_string(CyclotomicOrder::kMaxOrder));
  }
  const auto n = static_cast<std::uint32_t>(2 * q);
  const std::size_t triples = static_cast<std::size_t>(n) * n * n;
  if (triples > kMaxTriplesPerSide) {
    throw CapacityError(std::to_string(triples) + " triples per side exceed the cap " +
                        std::to_string(kMaxTriplesPerSide));
  }
  EulerEnumeration out;
  out.grid = q;
  out.triples_per_side = triples;

  const std::vector<Hashed> zs = hash_side(q, true, threads);
  const std::vector<Hashed> xs = hash_side(q, false, threads);

  // Join equal hashes, then split each bucket by exact key.
  Grid grid(q);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < zs.size() && j < xs.size()) {
    if (zs[i].hash < xs[j].hash) {
      ++i;
      continue;
    }
    if (xs[j].hash < zs[i].hash) {
      ++j;
      continue;
    }
    const std::uint64_t h = zs[i].hash;
    std::vector<std::pair<std::vector<std::int64_t>, std::uint32_t>> zk;
    std::vector<std::pair<std::vector<std::int64_t>, std::uint32_t>> xk;
    for (; i < zs.size() && zs[i].hash == h; ++i) {
      const auto k = unpack(zs[i].index, n);
      zk.push_back({grid.exact_key(grid.zxz(k[0], k[1], k[2])), zs[i].index});
    }
    for (; j < xs.size() && xs[j].hash == h; ++j) {
      const auto k = unpack(xs[j].index, n);
      xk.push_back({grid.exact_key(grid.xzx(k[0], k[1], k[2])), xs[j].index});
    }
    for (const auto& [zkey, zi] : zk) {
      for (const auto& [xkey, xi] : xk) {
        if (zkey == xkey) pairs.push_back({zi, xi});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());

  out.equalities.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t e) {
    EnumeratedEquality& item = out.equalities[e];
    item.equality.lhs = to_triple(unpack(pairs[e].first, n), q);
    item.equality.rhs = to_triple(unpack(pairs[e].second, n), q);
    item.match = match_euler_family(item.equality);
  });
  for (const auto& item : out.equalities) {
    if (!item.match) {
      ++out.unclassified;
    } else if (item.match->color_swapped) {
      ++out.per_family_swapped[static_cast<std::size_t>(item.match->family - 1)];
    } else {
      ++out.per_family[static_cast<std::size_t>(item.match->family - 1)];
    }
  }
  return out;
}

}  // namespace zxverify
