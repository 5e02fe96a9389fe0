#pragma once

// Exact integer / rational matrices, Smith normal form, and the congruence
// solver for subgroups of tori.
//
// Torus coordinates are turn-fractions: a coordinate c stands for the angle
// 2*pi*c, so every torus element met in this library is a vector of
// rationals taken modulo 1.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace biquotient {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix over any ring-like value type (Integer, Rational,
// and the symbolic / surd entries used by the spin construction).
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, T const& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& row : init) {
      if (row.size() != cols_) {
        throw std::invalid_argument("Matrix: ragged initializer list");
      }
      for (auto const& v : row) {
        data_.push_back(v);
      }
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = T(1);
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  T const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  [[nodiscard]] std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      out.push_back((*this)(i, j));
    }
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("Matrix: shape mismatch in product");
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        T const& aik = a(i, k);
        if (aik == T(0)) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, Matrix const& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      a.data_[i] += b.data_[i];
    }
    return a;
  }

  friend Matrix operator-(Matrix a, Matrix const& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      a.data_[i] -= b.data_[i];
    }
    return a;
  }

  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) {
      v = -v;
    }
    return a;
  }

  friend Matrix operator*(T const& s, Matrix a) {
    for (auto& v : a.data_) {
      v = s * v;
    }
    return a;
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] bool is_zero() const {
    for (auto const& v : data_) {
      if (!(v == T(0))) {
        return false;
      }
    }
    return true;
  }

 private:
  void check_same_shape(Matrix const& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw std::invalid_argument("Matrix: shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

[[nodiscard]] IntMatrix int_matrix(
    std::initializer_list<std::initializer_list<long>> init);

[[nodiscard]] RatMatrix to_rational(IntMatrix const& m);

// Bareiss fraction-free elimination.
[[nodiscard]] Integer determinant(IntMatrix const& m);

// Throws std::domain_error for a singular matrix.
[[nodiscard]] RatMatrix inverse(RatMatrix const& m);

std::ostream& operator<<(std::ostream& os, IntMatrix const& m);
std::ostream& operator<<(std::ostream& os, RatMatrix const& m);

// U * M * V == D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  // Number of nonzero diagonal entries.
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] std::vector<Integer> elementary_divisors() const;
};

// Elementary row/column reduction. The pivot is always the nonzero entry of
// least absolute value in the active block, ties going to the lowest
// (row, col); the output is therefore a deterministic function of M.
[[nodiscard]] SnfResult smith_normal_form(IntMatrix const& M);

// Reduce into [0, 1).
[[nodiscard]] Rational mod_one(Rational const& q);

// An element of (R/Z)^n with rational coordinates kept in [0, 1).
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::size_t n) : coords_(n, Rational(0)) {}
  explicit TorusPoint(std::vector<Rational> coords);

  static TorusPoint from_fractions(
      std::initializer_list<std::pair<long, long>> fractions);

  [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
  [[nodiscard]] Rational const& operator[](std::size_t i) const {
    return coords_[i];
  }
  [[nodiscard]] std::vector<Rational> const& coords() const noexcept {
    return coords_;
  }

  [[nodiscard]] bool is_identity() const;
  // Least n > 0 with n * p == 0.
  [[nodiscard]] Integer order() const;

  friend TorusPoint operator+(TorusPoint const& a, TorusPoint const& b);
  friend TorusPoint operator-(TorusPoint const& a, TorusPoint const& b);
  friend TorusPoint operator-(TorusPoint const& a);
  friend TorusPoint operator*(Integer const& k, TorusPoint const& a);
  friend bool operator==(TorusPoint const& a, TorusPoint const& b) = default;
  friend bool operator<(TorusPoint const& a, TorusPoint const& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, TorusPoint const& p);

// Image of a parameter point under an integer weight matrix, modulo 1.
[[nodiscard]] TorusPoint apply(IntMatrix const& weights, TorusPoint const& t);
// Exact rational image, without reduction (used for direction checks).
[[nodiscard]] std::vector<Integer> apply(IntMatrix const& weights,
                                         std::vector<Integer> const& v);

// Closed subgroup of (R/Z)^r: generated by finitely many points of finite
// order together with the one-parameter subgroups s -> s*v.
struct TorusSubgroup {
  std::size_t ambient_rank = 0;
  std::vector<TorusPoint> torsion_generators;
  std::vector<std::vector<Integer>> subtorus_directions;

  [[nodiscard]] bool is_trivial() const {
    return torsion_generators.empty() && subtorus_directions.empty();
  }
};

// { s in (R/Z)^r : M s in Z^m } for an m x r integer matrix M.
[[nodiscard]] TorusSubgroup solve_torus_congruence(IntMatrix const& M);

// Some s with M s == target (mod 1), or nullopt when the affine system has
// no real solution.
[[nodiscard]] std::optional<TorusPoint> solve_affine_torus_congruence(
    IntMatrix const& M, TorusPoint const& target);

using PointPredicate = std::function<bool(TorusPoint const&)>;
using DirectionPredicate = std::function<bool(std::vector<Integer> const&)>;

// Containment S <= K where K is given by membership predicates. The caller
// guarantees K is a closed subgroup: then S <= K iff every torsion generator
// lies in K and K contains each one-parameter subgroup of S, the latter
// being decided by `direction_in`.
[[nodiscard]] bool subgroup_contained_in(TorusSubgroup const& S,
                                         PointPredicate const& point_in,
                                         DirectionPredicate const& direction_in);

[[nodiscard]] std::string to_string(Rational const& q);
[[nodiscard]] Integer lcm(Integer const& a, Integer const& b);

}  // namespace biquotient
