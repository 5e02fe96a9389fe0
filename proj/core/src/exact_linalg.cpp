#include "biquotient/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace biquotient {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> init) {
  std::size_t const rows = init.size();
  std::size_t const cols = rows == 0 ? 0 : init.begin()->size();
  IntMatrix m(rows, cols);
  std::size_t i = 0;
  for (auto const& row : init) {
    if (row.size() != cols) {
      throw std::invalid_argument("int_matrix: ragged initializer list");
    }
    std::size_t j = 0;
    for (long v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

RatMatrix to_rational(IntMatrix const& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(i, j) = Rational(m(i, j));
    }
  }
  return r;
}

Integer determinant(IntMatrix const& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  std::size_t const n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(RatMatrix const& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse: matrix is not square");
  }
  std::size_t const n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) {
      ++p;
    }
    if (p == n) {
      throw std::domain_error("inverse: matrix is singular");
    }
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rational const pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) {
        continue;
      }
      Rational const f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

namespace {

template <typename T>
void print_matrix(std::ostream& os, Matrix<T> const& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j == 0 ? "" : ", ") << m(i, j);
    }
    os << ']';
  }
  os << ']';
}

// Row operation row_dst += f * row_src on A and the left transform U.
void add_row(IntMatrix& A, IntMatrix& U, std::size_t dst, std::size_t src,
             Integer const& f) {
  for (std::size_t j = 0; j < A.cols(); ++j) {
    A(dst, j) += f * A(src, j);
  }
  for (std::size_t j = 0; j < U.cols(); ++j) {
    U(dst, j) += f * U(src, j);
  }
}

void add_col(IntMatrix& A, IntMatrix& V, std::size_t dst, std::size_t src,
             Integer const& f) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    A(i, dst) += f * A(i, src);
  }
  for (std::size_t i = 0; i < V.rows(); ++i) {
    V(i, dst) += f * V(i, src);
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
  print_matrix(os, m);
  return os;
}

std::ostream& operator<<(std::ostream& os, RatMatrix const& m) {
  print_matrix(os, m);
  return os;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  std::size_t const n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) {
    ++r;
  }
  return r;
}

std::vector<Integer> SnfResult::elementary_divisors() const {
  std::vector<Integer> out;
  for (std::size_t k = 0; k < rank(); ++k) {
    out.push_back(D(k, k));
  }
  return out;
}

SnfResult smith_normal_form(IntMatrix const& M) {
  if (M.empty()) {
    throw std::invalid_argument("smith_normal_form: empty matrix");
  }
  std::size_t const m = M.rows();
  std::size_t const n = M.cols();
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    for (;;) {
      // Pivot: least nonzero |a_ij| in the active block, lowest (i, j) wins.
      std::size_t pi = m;
      std::size_t pj = n;
      for (std::size_t i = k; i < m; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (A(i, j) == 0) {
            continue;
          }
          if (pi == m || mpz_cmpabs(A(i, j).get_mpz_t(), A(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) {
        return {std::move(U), std::move(A), std::move(V)};
      }
      if (pi != k) {
        A.swap_rows(k, pi);
        U.swap_rows(k, pi);
      }
      if (pj != k) {
        A.swap_cols(k, pj);
        V.swap_cols(k, pj);
      }

      bool dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (A(i, k) == 0) {
          continue;
        }
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), A(i, k).get_mpz_t(), A(k, k).get_mpz_t());
        add_row(A, U, i, k, -q);
        dirty = dirty || A(i, k) != 0;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (A(k, j) == 0) {
          continue;
        }
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), A(k, j).get_mpz_t(), A(k, k).get_mpz_t());
        add_col(A, V, j, k, -q);
        dirty = dirty || A(k, j) != 0;
      }
      if (dirty) {
        continue;
      }

      // Row and column k are clear; enforce d_k | every remaining entry.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < m && divides_all; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(k, k).get_mpz_t())) {
            add_row(A, U, k, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) {
        break;
      }
    }
    if (A(k, k) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        A(k, j) = -A(k, j);
      }
      for (std::size_t j = 0; j < m; ++j) {
        U(k, j) = -U(k, j);
      }
    }
  }
  return {std::move(U), std::move(A), std::move(V)};
}

Rational mod_one(Rational const& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - fl;
  r.canonicalize();
  return r;
}

Integer lcm(Integer const& a, Integer const& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string to_string(Rational const& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str();
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

TorusPoint::TorusPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) {
    c = mod_one(c);
  }
}

TorusPoint TorusPoint::from_fractions(
    std::initializer_list<std::pair<long, long>> fractions) {
  std::vector<Rational> coords;
  for (auto const& [num, den] : fractions) {
    Rational q(num, den);
    q.canonicalize();
    coords.push_back(q);
  }
  return TorusPoint(std::move(coords));
}

bool TorusPoint::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Rational const& c) { return c == 0; });
}

Integer TorusPoint::order() const {
  Integer n = 1;
  for (auto const& c : coords_) {
    n = lcm(n, c.get_den());
  }
  return n;
}

TorusPoint operator+(TorusPoint const& a, TorusPoint const& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("TorusPoint: dimension mismatch");
  }
  std::vector<Rational> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] + b[i];
  }
  return TorusPoint(std::move(c));
}

TorusPoint operator-(TorusPoint const& a) {
  std::vector<Rational> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = -a[i];
  }
  return TorusPoint(std::move(c));
}

TorusPoint operator-(TorusPoint const& a, TorusPoint const& b) { return a + (-b); }

TorusPoint operator*(Integer const& k, TorusPoint const& a) {
  std::vector<Rational> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = Rational(k) * a[i];
  }
  return TorusPoint(std::move(c));
}

bool operator<(TorusPoint const& a, TorusPoint const& b) {
  return std::lexicographical_compare(
      a.coords().begin(), a.coords().end(), b.coords().begin(),
      b.coords().end(),
      [](Rational const& x, Rational const& y) { return cmp(x, y) < 0; });
}

std::string TorusPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    s += (i == 0 ? "" : ", ") + biquotient::to_string(coords_[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, TorusPoint const& p) {
  return os << p.to_string();
}

TorusPoint apply(IntMatrix const& weights, TorusPoint const& t) {
  if (weights.cols() != t.size()) {
    throw std::invalid_argument("apply: parameter count mismatch");
  }
  std::vector<Rational> out(weights.rows(), Rational(0));
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    for (std::size_t j = 0; j < weights.cols(); ++j) {
      out[i] += Rational(weights(i, j)) * t[j];
    }
  }
  return TorusPoint(std::move(out));
}

std::vector<Integer> apply(IntMatrix const& weights,
                           std::vector<Integer> const& v) {
  if (weights.cols() != v.size()) {
    throw std::invalid_argument("apply: parameter count mismatch");
  }
  std::vector<Integer> out(weights.rows(), Integer(0));
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    for (std::size_t j = 0; j < weights.cols(); ++j) {
      out[i] += weights(i, j) * v[j];
    }
  }
  return out;
}

TorusSubgroup solve_torus_congruence(IntMatrix const& M) {
  std::size_t const r = M.cols();
  TorusSubgroup S;
  S.ambient_rank = r;
  if (M.rows() == 0) {
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<Integer> e(r, Integer(0));
      e[k] = 1;
      S.subtorus_directions.push_back(std::move(e));
    }
    return S;
  }
  // M s in Z^m  <=>  D (V^-1 s) in Z^m, since U is unimodular.
  SnfResult const snf = smith_normal_form(M);
  std::size_t const rank = snf.rank();
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Integer> v = snf.V.col(k);
    if (k >= rank) {
      S.subtorus_directions.push_back(std::move(v));
      continue;
    }
    Integer const& d = snf.D(k, k);
    if (d == 1) {
      continue;
    }
    std::vector<Rational> g;
    g.reserve(r);
    for (auto const& x : v) {
      Rational q(x, d);
      q.canonicalize();
      g.push_back(q);
    }
    S.torsion_generators.emplace_back(std::move(g));
  }
  return S;
}

std::optional<TorusPoint> solve_affine_torus_congruence(IntMatrix const& M,
                                                        TorusPoint const& target) {
  if (M.rows() != target.size()) {
    throw std::invalid_argument(
        "solve_affine_torus_congruence: target dimension mismatch");
  }
  std::size_t const m = M.rows();
  std::size_t const r = M.cols();
  SnfResult const snf = smith_normal_form(M);
  std::size_t const rank = snf.rank();

  std::vector<Rational> ut(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ut[i] += Rational(snf.U(i, j)) * target[j];
    }
    ut[i] = mod_one(ut[i]);
  }
  for (std::size_t k = rank; k < m; ++k) {
    if (ut[k] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Rational> s(r, Rational(0));
  for (std::size_t k = 0; k < rank; ++k) {
    s[k] = ut[k] / Rational(snf.D(k, k));
  }
  std::vector<Rational> t(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      t[i] += Rational(snf.V(i, k)) * s[k];
    }
  }
  return TorusPoint(std::move(t));
}

bool subgroup_contained_in(TorusSubgroup const& S, PointPredicate const& point_in,
                           DirectionPredicate const& direction_in) {
  return std::all_of(S.torsion_generators.begin(), S.torsion_generators.end(),
                     point_in) &&
         std::all_of(S.subtorus_directions.begin(),
                     S.subtorus_directions.end(), direction_in);
}

}  // namespace biquotient
