#include "biquotient/octonion.hpp"

#include <stdexcept>

namespace biquotient {

namespace {

using Quat = std::array<Rational, 4>;

Quat qmul(Quat const& p, Quat const& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quat qconj(Quat const& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Quat qsub(Quat const& p, Quat const& q) {
  return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]};
}

Quat qadd(Quat const& p, Quat const& q) {
  return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
}

Quat head(Octonion const& x) { return {x[0], x[1], x[2], x[3]}; }
Quat tail(Octonion const& x) { return {x[4], x[5], x[6], x[7]}; }

}  // namespace

Octonion Octonion::basis(std::size_t index, int sign) {
  if (index >= 8) {
    throw std::out_of_range("Octonion::basis: index must be < 8");
  }
  Octonion e;
  e.coeffs_[index] = sign;
  return e;
}

Octonion Octonion::conjugate() const {
  Octonion c = *this;
  for (std::size_t i = 1; i < 8; ++i) {
    c.coeffs_[i] = -c.coeffs_[i];
  }
  return c;
}

Rational Octonion::norm_squared() const { return inner(*this, *this); }

Rational inner(Octonion const& x, Octonion const& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    s += x[i] * y[i];
  }
  return s;
}

Octonion oct_mul(Octonion const& x, Octonion const& y) {
  Quat const a = head(x);
  Quat const b = tail(x);
  Quat const c = head(y);
  Quat const d = tail(y);
  Quat const re = qsub(qmul(a, c), qmul(qconj(d), b));
  Quat const im = qadd(qmul(d, a), qmul(b, qconj(c)));
  return Octonion({re[0], re[1], re[2], re[3], im[0], im[1], im[2], im[3]});
}

Octonion operator*(Octonion const& x, Octonion const& y) { return oct_mul(x, y); }

Octonion operator+(Octonion const& x, Octonion const& y) {
  Octonion z;
  for (std::size_t i = 0; i < 8; ++i) {
    z[i] = x[i] + y[i];
  }
  return z;
}

Octonion operator-(Octonion const& x) {
  Octonion z;
  for (std::size_t i = 0; i < 8; ++i) {
    z[i] = -x[i];
  }
  return z;
}

Octonion operator-(Octonion const& x, Octonion const& y) { return x + (-y); }

Octonion operator*(Rational const& s, Octonion const& x) {
  Octonion z;
  for (std::size_t i = 0; i < 8; ++i) {
    z[i] = s * x[i];
  }
  return z;
}

std::ostream& operator<<(std::ostream& os, Octonion const& x) {
  bool first = true;
  for (std::size_t i = 0; i < 8; ++i) {
    if (x[i] == 0) {
      continue;
    }
    os << (first ? "" : " + ") << to_string(x[i]) << "*e" << i;
    first = false;
  }
  if (first) {
    os << '0';
  }
  return os;
}

RatMatrix left_mult_matrix(Octonion const& x) {
  RatMatrix L(8, 8);
  for (std::size_t b = 0; b < 8; ++b) {
    Octonion const col = x * Octonion::basis(b);
    for (std::size_t a = 0; a < 8; ++a) {
      L(a, b) = col[a];
    }
  }
  return L;
}

RatMatrix clifford_hat(Octonion const& x) {
  RatMatrix const Lx = left_mult_matrix(x);
  RatMatrix const Lbar = left_mult_matrix(x.conjugate());
  RatMatrix H(16, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      H(i, j + 8) = -Lbar(i, j);
      H(i + 8, j) = Lx(i, j);
    }
  }
  return H;
}

}  // namespace biquotient
