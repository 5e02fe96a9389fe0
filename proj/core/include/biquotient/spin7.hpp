#pragma once

// Spin(7) inside SO(8), built from pairs of Clifford images of unit
// imaginary octonions, together with its maximal torus and the double cover
// Spin(7) -> SO(7).
//
// Deciding computations never touch trigonometry: the classifier only uses
// the integer maps spin_to_so8_weights() / so8_to_so7_weights(). The
// matrix-level objects here exist to verify those maps, either symbolically
// (entries are polynomials in cos/sin of alpha, beta, gamma) or exactly at
// turn-fractions whose cosines lie in Q(sqrt2, sqrt3).

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "biquotient/exact_linalg.hpp"
#include "biquotient/octonion.hpp"

namespace biquotient {

enum class SpinAngle { Alpha = 0, Beta = 1, Gamma = 2 };

// Polynomial with rational coefficients in cos/sin of alpha, beta, gamma.
// No reduction modulo cos^2 + sin^2 = 1 is performed; every identity checked
// with it is multilinear in each angle, so none is needed.
class TrigPoly {
 public:
  using Monomial = std::array<unsigned char, 6>;

  TrigPoly() = default;
  TrigPoly(int c);  // NOLINT(google-explicit-constructor)
  TrigPoly(Rational const& c);  // NOLINT(google-explicit-constructor)

  static TrigPoly cos(SpinAngle a);
  static TrigPoly sin(SpinAngle a);

  [[nodiscard]] std::map<Monomial, Rational> const& terms() const noexcept {
    return terms_;
  }

  TrigPoly& operator+=(TrigPoly const& o);
  TrigPoly& operator-=(TrigPoly const& o);
  friend TrigPoly operator+(TrigPoly a, TrigPoly const& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, TrigPoly const& b) { return a -= b; }
  friend TrigPoly operator-(TrigPoly const& a);
  friend TrigPoly operator*(TrigPoly const& a, TrigPoly const& b);
  friend bool operator==(TrigPoly const& a, TrigPoly const& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void prune();
  std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, TrigPoly const& p);

// a + b*sqrt2 + c*sqrt3 + d*sqrt6.
struct Surd {
  Rational a = 0;
  Rational b = 0;
  Rational c = 0;
  Rational d = 0;

  Surd() = default;
  Surd(int v) : a(v) {}  // NOLINT(google-explicit-constructor)
  Surd(Rational const& v) : a(v) {}  // NOLINT(google-explicit-constructor)
  Surd(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  Surd& operator+=(Surd const& o);
  Surd& operator-=(Surd const& o);
  friend Surd operator+(Surd x, Surd const& y) { return x += y; }
  friend Surd operator-(Surd x, Surd const& y) { return x -= y; }
  friend Surd operator-(Surd const& x);
  friend Surd operator*(Surd const& x, Surd const& y);
  friend bool operator==(Surd const& x, Surd const& y) = default;
};

std::ostream& operator<<(std::ostream& os, Surd const& s);

using TrigMatrix = Matrix<TrigPoly>;
using SurdMatrix = Matrix<Surd>;

// Turn-fractions (alpha, beta, gamma), each reduced mod 1.
struct SpinTorusParams {
  Rational alpha;
  Rational beta;
  Rational gamma;

  SpinTorusParams(Rational a, Rational b, Rational g);
  [[nodiscard]] Rational const& operator[](SpinAngle a) const;
};

// Exact cos / sin of 2*pi*q. Only denominators 1, 2, 3, 4, 6, 8, 12 are
// supported; anything else throws std::domain_error naming the denominator.
[[nodiscard]] Surd exact_cos_turn(Rational const& q);
[[nodiscard]] Surd exact_sin_turn(Rational const& q);

// Reference transcription of the 7x7 imaginary multiplication table:
// entry (r-1, c-1) is e_r * e_c as (sign, index), index 0 meaning the unit.
[[nodiscard]] std::array<std::array<std::pair<int, int>, 7>, 7>
octonion_reference_table();

// L_v L_w with v = e_{2n-1}, w = -(cos e_{2n-1} + sin e_{2n}), n = 1, 2, 3
// for alpha, beta, gamma; assembled from left_mult_matrix.
[[nodiscard]] TrigMatrix spin_generator(SpinAngle a);

// Hand transcription of the displayed generator matrices, kept separate from
// spin_generator() so the two can be compared.
[[nodiscard]] TrigMatrix displayed_spin_generator(SpinAngle a);

// The integer conjugator B with B A1 A2 A3 B^-1 block diagonal. B is not
// orthogonal (B B^T = 2 I); conjugation uses the exact inverse.
[[nodiscard]] IntMatrix spin_conjugator();

// diag(R(phi_1), ..., R(phi_k)) where phi_i = sum_a coeffs[i][a] * angle_a,
// expanded with the angle-addition formulas.
[[nodiscard]] TrigMatrix rotation_blocks(
    std::vector<std::array<int, 3>> const& coeffs);

// Substitute exact cos/sin values.
[[nodiscard]] Surd evaluate(TrigPoly const& p, SpinTorusParams const& at);
[[nodiscard]] SurdMatrix evaluate(TrigMatrix const& m, SpinTorusParams const& at);

// A1(alpha) A2(beta) A3(gamma), exactly.
[[nodiscard]] SurdMatrix spin_element(SpinTorusParams const& p);

// theta = (a+b-g, a-b-g, a-b+g, a+b+g): rows of this 4x3 matrix.
[[nodiscard]] IntMatrix spin_to_so8_weights();
// (theta) -> (2a, 2b, 2g) = (t1+t3, t4-t3, t3-t2) on the Spin(7) torus.
[[nodiscard]] IntMatrix so8_to_so7_weights();
// The linear form t1 - t2 + t3 - t4 cutting out the Spin(7) torus.
[[nodiscard]] std::vector<Integer> spin7_torus_relation();

[[nodiscard]] bool in_spin7_torus(TorusPoint const& theta);
[[nodiscard]] TorusPoint spin_to_so8_torus(SpinTorusParams const& p);
// Throws std::invalid_argument("not in Spin(7) torus") off the relation.
[[nodiscard]] TorusPoint so8_to_so7_torus(TorusPoint const& theta);

// Rotation of Im O induced by conjugating with diag(h, h): column b - 1
// holds the coefficients of h e_b^ h^-1 in e_1^ .. e_7^. Requires h
// orthogonal, so h^-1 = h^T.
[[nodiscard]] SurdMatrix spin_projection(SurdMatrix const& h);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Every octonion / Clifford / torus identity the spin model relies on.
[[nodiscard]] std::vector<IdentityCheck> verify_spin7_identities();

}  // namespace biquotient
