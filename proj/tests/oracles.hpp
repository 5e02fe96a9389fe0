#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the solver beyond the value types: torus points are int64
// numerators over a common denominator N, conjugacy is decided directly from
// the group's definition, and the Spin(7) stabilizer is rebuilt here.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "biquotient/exact_linalg.hpp"
#include "biquotient/weyl.hpp"

namespace oracle {

using biquotient::GroupKind;
using biquotient::IntMatrix;
using Vec = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::vector<Vec> to_rows(IntMatrix const& m) {
  std::vector<Vec> out(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).get_si();
    }
  }
  return out;
}

inline Vec image(std::vector<Vec> const& rows, Vec const& t, std::int64_t n) {
  Vec out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < t.size(); ++j) s += rows[i][j] * t[j];
    out[i] = mod(s, n);
  }
  return out;
}

struct SignedPerm {
  std::array<int, 4> p;
  std::array<int, 4> s;
};

// Even signed permutations of four letters preserving {t1 - t2 + t3 - t4 = 0}.
inline std::vector<SignedPerm> spin7_weyl() {
  std::vector<SignedPerm> out;
  std::array<int, 4> const l{1, -1, 1, -1};
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    for (int mask = 0; mask < 16; ++mask) {
      std::array<int, 4> s{};
      int neg = 0;
      for (int i = 0; i < 4; ++i) {
        s[i] = (mask >> i) & 1 ? -1 : 1;
        neg += (mask >> i) & 1;
      }
      if (neg % 2) continue;
      std::array<int, 4> pulled{};
      for (int i = 0; i < 4; ++i) pulled[p[i]] = l[i] * s[i];
      std::array<int, 4> negl{};
      for (int i = 0; i < 4; ++i) negl[i] = -l[i];
      if (pulled == l || pulled == negl) out.push_back({p, s});
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Vec folded_sorted(Vec v, std::int64_t n) {
  for (auto& x : v) x = std::min(x, mod(-x, n));
  std::sort(v.begin(), v.end());
  return v;
}

inline bool conjugate(GroupKind g, Vec const& a, Vec const& b, std::int64_t n) {
  switch (g) {
    case GroupKind::SU4: {
      Vec x = a;
      Vec y = b;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      return x == y;
    }
    case GroupKind::SO7:
      return folded_sorted(a, n) == folded_sorted(b, n);
    case GroupKind::SPIN7: {
      if (folded_sorted(a, n) != folded_sorted(b, n)) return false;
      static std::vector<SignedPerm> const weyl = spin7_weyl();
      for (auto const& w : weyl) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) ok = mod(w.s[i] * a[w.p[i]], n) == b[i];
        if (ok) return true;
      }
      return false;
    }
  }
  return false;
}

inline bool central(GroupKind g, Vec const& a, std::int64_t n) {
  bool const all_equal = std::all_of(a.begin(), a.end(), [&](auto x) { return x == a[0]; });
  switch (g) {
    case GroupKind::SU4:
      return all_equal && mod(4 * a[0], n) == 0;
    case GroupKind::SO7:
      return std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; });
    case GroupKind::SPIN7:
      return all_equal && mod(2 * a[0], n) == 0;
  }
  return false;
}

struct FreenessResult {
  bool free = true;
  std::optional<Vec> bad_point;  // numerators over n
  std::int64_t n = 1;
  std::size_t points = 0;
};

// Every t in ((1/n) Z / Z)^r: is some f1(t) conjugate to f2(t) without
// being the same central element?
inline FreenessResult brute_force_freeness(GroupKind g, IntMatrix const& A,
                                           IntMatrix const& B, std::int64_t n) {
  auto const ra = to_rows(A);
  auto const rb = to_rows(B);
  std::size_t const r = A.cols();
  FreenessResult out;
  out.n = n;
  Vec t(r, 0);
  while (true) {
    ++out.points;
    Vec const a = image(ra, t, n);
    Vec const b = image(rb, t, n);
    if (conjugate(g, a, b, n) && !(a == b && central(g, a, n))) {
      out.free = false;
      out.bad_point = t;
      return out;
    }
    std::size_t k = 0;
    while (k < r && ++t[k] == n) t[k++] = 0;
    if (k == r) break;
  }
  return out;
}

// { s in ((1/n) Z / Z)^r : M s in Z^m }, as numerator vectors.
inline std::set<Vec> congruence_points(IntMatrix const& M, std::int64_t n) {
  auto const rows = to_rows(M);
  std::size_t const r = M.cols();
  std::set<Vec> out;
  Vec t(r, 0);
  while (true) {
    Vec const img = image(rows, t, n);
    if (std::all_of(img.begin(), img.end(), [](auto x) { return x == 0; })) out.insert(t);
    std::size_t k = 0;
    while (k < r && ++t[k] == n) t[k++] = 0;
    if (k == r) break;
  }
  return out;
}

// Closure under addition of the given numerator vectors, mod n.
inline std::set<Vec> generated_points(std::vector<Vec> const& gens, std::size_t r,
                                      std::int64_t n) {
  std::set<Vec> seen{Vec(r, 0)};
  std::vector<Vec> frontier{Vec(r, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        Vec y(r);
        for (std::size_t i = 0; i < r; ++i) y[i] = mod(x[i] + g[i], n);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace oracle
