#pragma once

// Octonions over Q as the Cayley-Dickson double H + H l, and their left
// multiplication / Clifford images used to build Spin(7) inside SO(8).
//
// Basis: e0 = 1, e1 = i, e2 = j, e3 = k, e4 = l, e5 = il, e6 = jl, e7 = kl,
// declared orthonormal.

#include <array>
#include <ostream>

#include "biquotient/exact_linalg.hpp"

namespace biquotient {

class Octonion {
 public:
  Octonion() { coeffs_.fill(Rational(0)); }
  explicit Octonion(std::array<Rational, 8> coeffs) : coeffs_(std::move(coeffs)) {}

  // Signed basis element sign * e_index.
  static Octonion basis(std::size_t index, int sign = 1);

  [[nodiscard]] Rational const& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] Rational& operator[](std::size_t i) { return coeffs_[i]; }
  [[nodiscard]] std::array<Rational, 8> const& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] Octonion conjugate() const;
  [[nodiscard]] Rational norm_squared() const;

  friend Octonion operator*(Octonion const& x, Octonion const& y);
  friend Octonion operator+(Octonion const& x, Octonion const& y);
  friend Octonion operator-(Octonion const& x, Octonion const& y);
  friend Octonion operator-(Octonion const& x);
  friend Octonion operator*(Rational const& s, Octonion const& x);
  friend bool operator==(Octonion const& x, Octonion const& y) = default;

 private:
  std::array<Rational, 8> coeffs_;
};

std::ostream& operator<<(std::ostream& os, Octonion const& x);

[[nodiscard]] Rational inner(Octonion const& x, Octonion const& y);

// (a + b l)(c + d l) = (ac - conj(d) b) + (da + b conj(c)) l.
[[nodiscard]] Octonion oct_mul(Octonion const& x, Octonion const& y);

// L_x: column b holds the coefficients of x * e_b.
[[nodiscard]] RatMatrix left_mult_matrix(Octonion const& x);

// x^ = [[0, -L_conj(x)], [L_x, 0]] in Cl_8 = R^{16x16}.
[[nodiscard]] RatMatrix clifford_hat(Octonion const& x);

}  // namespace biquotient
