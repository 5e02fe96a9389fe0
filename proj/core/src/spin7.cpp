#include "biquotient/spin7.hpp"

#include <sstream>
#include <stdexcept>

namespace biquotient {

// ---------------------------------------------------------------- TrigPoly

TrigPoly::TrigPoly(int c) : TrigPoly(Rational(c)) {}

TrigPoly::TrigPoly(Rational const& c) {
  if (c != 0) {
    terms_[Monomial{}] = c;
  }
}

TrigPoly TrigPoly::cos(SpinAngle a) {
  TrigPoly p;
  Monomial m{};
  m[2 * static_cast<std::size_t>(a)] = 1;
  p.terms_[m] = 1;
  return p;
}

TrigPoly TrigPoly::sin(SpinAngle a) {
  TrigPoly p;
  Monomial m{};
  m[2 * static_cast<std::size_t>(a) + 1] = 1;
  p.terms_[m] = 1;
  return p;
}

void TrigPoly::prune() {
  std::erase_if(terms_, [](auto const& kv) { return kv.second == 0; });
}

TrigPoly& TrigPoly::operator+=(TrigPoly const& o) {
  for (auto const& [m, c] : o.terms_) {
    terms_[m] += c;
  }
  prune();
  return *this;
}

TrigPoly& TrigPoly::operator-=(TrigPoly const& o) {
  for (auto const& [m, c] : o.terms_) {
    terms_[m] -= c;
  }
  prune();
  return *this;
}

TrigPoly operator-(TrigPoly const& a) {
  TrigPoly r = a;
  for (auto& [m, c] : r.terms_) {
    c = -c;
  }
  return r;
}

TrigPoly operator*(TrigPoly const& a, TrigPoly const& b) {
  TrigPoly r;
  for (auto const& [ma, ca] : a.terms_) {
    for (auto const& [mb, cb] : b.terms_) {
      TrigPoly::Monomial m{};
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = static_cast<unsigned char>(ma[i] + mb[i]);
      }
      r.terms_[m] += ca * cb;
    }
  }
  r.prune();
  return r;
}

std::string TrigPoly::to_string() const {
  static constexpr std::array<char const*, 6> names = {"ca", "sa", "cb",
                                                       "sb", "cg", "sg"};
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (auto const& [m, c] : terms_) {
    out += out.empty() ? "" : " + ";
    out += biquotient::to_string(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) {
        out += std::string("*") + names[i];
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, TrigPoly const& p) {
  return os << p.to_string();
}

// -------------------------------------------------------------------- Surd

Surd& Surd::operator+=(Surd const& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

Surd& Surd::operator-=(Surd const& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  d -= o.d;
  return *this;
}

Surd operator-(Surd const& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Surd operator*(Surd const& x, Surd const& y) {
  // Basis 1, r2, r3, r6 with r2 r3 = r6, r2 r6 = 2 r3, r3 r6 = 3 r2.
  Surd z;
  z.a = x.a * y.a + 2 * x.b * y.b + 3 * x.c * y.c + 6 * x.d * y.d;
  z.b = x.a * y.b + x.b * y.a + 3 * x.c * y.d + 3 * x.d * y.c;
  z.c = x.a * y.c + x.c * y.a + 2 * x.b * y.d + 2 * x.d * y.b;
  z.d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
  return z;
}

std::ostream& operator<<(std::ostream& os, Surd const& s) {
  os << to_string(s.a);
  if (s.b != 0) os << " + " << to_string(s.b) << "*r2";
  if (s.c != 0) os << " + " << to_string(s.c) << "*r3";
  if (s.d != 0) os << " + " << to_string(s.d) << "*r6";
  return os;
}

// ------------------------------------------------------------ exact trig

SpinTorusParams::SpinTorusParams(Rational a, Rational b, Rational g)
    : alpha(mod_one(a)), beta(mod_one(b)), gamma(mod_one(g)) {}

Rational const& SpinTorusParams::operator[](SpinAngle a) const {
  switch (a) {
    case SpinAngle::Alpha:
      return alpha;
    case SpinAngle::Beta:
      return beta;
    case SpinAngle::Gamma:
      return gamma;
  }
  throw std::logic_error("unreachable");
}

namespace {

// cos of m * 15 degrees, m a multiple of 2 or 3.
Surd cos_24th(long m) {
  m = ((m % 24) + 24) % 24;
  if (m > 12) {
    m = 24 - m;
  }
  if (m > 6) {
    return -cos_24th(12 - m);
  }
  switch (m) {
    case 0:
      return Surd(1);
    case 2:
      return Surd(0, 0, Rational(1, 2), 0);
    case 3:
      return Surd(0, Rational(1, 2), 0, 0);
    case 4:
      return Surd(Rational(1, 2));
    case 6:
      return Surd(0);
    default:
      throw std::logic_error("cos_24th: unsupported multiple");
  }
}

long turn_in_24ths(Rational const& q) {
  Rational const r = mod_one(q);
  Integer const den = r.get_den();
  static constexpr std::array<long, 7> supported = {1, 2, 3, 4, 6, 8, 12};
  bool ok = false;
  for (long s : supported) {
    ok = ok || den == s;
  }
  if (!ok) {
    throw std::domain_error("exact trigonometry: unsupported denominator " +
                            den.get_str());
  }
  Rational const m = r * 24;
  return m.get_num().get_si();
}

}  // namespace

Surd exact_cos_turn(Rational const& q) { return cos_24th(turn_in_24ths(q)); }

Surd exact_sin_turn(Rational const& q) { return cos_24th(6 - turn_in_24ths(q)); }

// ------------------------------------------------------- reference data

std::array<std::array<std::pair<int, int>, 7>, 7> octonion_reference_table() {
  return {{
      {{{-1, 0}, {1, 3}, {-1, 2}, {1, 5}, {-1, 4}, {-1, 7}, {1, 6}}},
      {{{-1, 3}, {-1, 0}, {1, 1}, {1, 6}, {1, 7}, {-1, 4}, {-1, 5}}},
      {{{1, 2}, {-1, 1}, {-1, 0}, {1, 7}, {-1, 6}, {1, 5}, {-1, 4}}},
      {{{-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 4}, {-1, 7}, {1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {1, 2}}},
      {{{1, 7}, {1, 4}, {-1, 5}, {-1, 2}, {1, 3}, {-1, 0}, {-1, 1}}},
      {{{-1, 6}, {1, 5}, {1, 4}, {-1, 3}, {-1, 2}, {1, 1}, {-1, 0}}},
  }};
}

namespace {

TrigMatrix lift(RatMatrix const& m, TrigPoly const& factor) {
  TrigMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        out(i, j) = TrigPoly(m(i, j)) * factor;
      }
    }
  }
  return out;
}

}  // namespace

TrigMatrix spin_generator(SpinAngle a) {
  auto const n = static_cast<std::size_t>(a) + 1;
  TrigPoly const c = TrigPoly::cos(a);
  TrigPoly const s = TrigPoly::sin(a);
  RatMatrix const Lv = left_mult_matrix(Octonion::basis(2 * n - 1));
  RatMatrix const Lnext = left_mult_matrix(Octonion::basis(2 * n));
  // L_w is linear in (cos, sin): w = -(cos v + sin e_{2n}).
  TrigMatrix const Lw = lift(-Lv, c) + lift(-Lnext, s);
  return lift(Lv, TrigPoly(1)) * Lw;
}

TrigMatrix displayed_spin_generator(SpinAngle a) {
  TrigPoly const c = TrigPoly::cos(a);
  TrigPoly const s = TrigPoly::sin(a);
  TrigPoly const ns = -s;
  TrigMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    m(i, i) = c;
  }
  auto put = [&m](std::size_t i, std::size_t j, TrigPoly const& v) { m(i, j) = v; };
  switch (a) {
    case SpinAngle::Alpha:
      put(0, 3, s);
      put(1, 2, s);
      put(2, 1, ns);
      put(3, 0, ns);
      put(4, 7, ns);
      put(5, 6, s);
      put(6, 5, ns);
      put(7, 4, s);
      break;
    case SpinAngle::Beta:
      put(0, 7, s);
      put(1, 6, s);
      put(2, 5, ns);
      put(3, 4, s);
      put(4, 3, ns);
      put(5, 2, s);
      put(6, 1, ns);
      put(7, 0, ns);
      break;
    case SpinAngle::Gamma:
      put(0, 3, ns);
      put(1, 2, s);
      put(2, 1, ns);
      put(3, 0, s);
      put(4, 7, s);
      put(5, 6, s);
      put(6, 5, ns);
      put(7, 4, ns);
      break;
  }
  return m;
}

IntMatrix spin_conjugator() {
  return int_matrix({{0, 0, 0, 1, 0, 0, 0, 1},
                     {1, 0, 0, 0, -1, 0, 0, 0},
                     {0, 0, 0, 1, 0, 0, 0, -1},
                     {1, 0, 0, 0, 1, 0, 0, 0},
                     {0, 1, 0, 0, 0, -1, 0, 0},
                     {0, 0, -1, 0, 0, 0, 1, 0},
                     {0, 1, 0, 0, 0, 1, 0, 0},
                     {0, 0, -1, 0, 0, 0, -1, 0}});
}

TrigMatrix rotation_blocks(std::vector<std::array<int, 3>> const& coeffs) {
  TrigMatrix m(2 * coeffs.size(), 2 * coeffs.size());
  for (std::size_t blk = 0; blk < coeffs.size(); ++blk) {
    // exp(i phi) as (re, im), one angle factor at a time.
    TrigPoly re = 1;
    TrigPoly im = 0;
    for (std::size_t a = 0; a < 3; ++a) {
      int k = coeffs[blk][a];
      auto const angle = static_cast<SpinAngle>(a);
      TrigPoly const c = TrigPoly::cos(angle);
      TrigPoly const s = k < 0 ? -TrigPoly::sin(angle) : TrigPoly::sin(angle);
      for (int rep = 0; rep < (k < 0 ? -k : k); ++rep) {
        TrigPoly const nre = re * c - im * s;
        TrigPoly const nim = re * s + im * c;
        re = nre;
        im = nim;
      }
    }
    std::size_t const o = 2 * blk;
    m(o, o) = re;
    m(o, o + 1) = -im;
    m(o + 1, o) = im;
    m(o + 1, o + 1) = re;
  }
  return m;
}

Surd evaluate(TrigPoly const& p, SpinTorusParams const& at) {
  std::array<Surd, 6> vals;
  for (std::size_t a = 0; a < 3; ++a) {
    auto const angle = static_cast<SpinAngle>(a);
    vals[2 * a] = exact_cos_turn(at[angle]);
    vals[2 * a + 1] = exact_sin_turn(at[angle]);
  }
  Surd total = 0;
  for (auto const& [mono, coeff] : p.terms()) {
    Surd term = coeff;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      for (unsigned k = 0; k < mono[i]; ++k) {
        term = term * vals[i];
      }
    }
    total += term;
  }
  return total;
}

SurdMatrix evaluate(TrigMatrix const& m, SpinTorusParams const& at) {
  SurdMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = evaluate(m(i, j), at);
    }
  }
  return out;
}

SurdMatrix spin_element(SpinTorusParams const& p) {
  return evaluate(spin_generator(SpinAngle::Alpha), p) *
         evaluate(spin_generator(SpinAngle::Beta), p) *
         evaluate(spin_generator(SpinAngle::Gamma), p);
}

IntMatrix spin_to_so8_weights() {
  return int_matrix({{1, 1, -1}, {1, -1, -1}, {1, -1, 1}, {1, 1, 1}});
}

IntMatrix so8_to_so7_weights() {
  return int_matrix({{1, 0, 1, 0}, {0, 0, -1, 1}, {0, -1, 1, 0}});
}

std::vector<Integer> spin7_torus_relation() { return {1, -1, 1, -1}; }

bool in_spin7_torus(TorusPoint const& theta) {
  if (theta.size() != 4) {
    return false;
  }
  return mod_one(theta[0] - theta[1] + theta[2] - theta[3]) == 0;
}

TorusPoint spin_to_so8_torus(SpinTorusParams const& p) {
  return apply(spin_to_so8_weights(),
               TorusPoint(std::vector<Rational>{p.alpha, p.beta, p.gamma}));
}

TorusPoint so8_to_so7_torus(TorusPoint const& theta) {
  if (!in_spin7_torus(theta)) {
    throw std::invalid_argument("not in Spin(7) torus: " + theta.to_string());
  }
  return apply(so8_to_so7_weights(), theta);
}

namespace {

SurdMatrix to_surd(RatMatrix const& m) {
  SurdMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = Surd(m(i, j));
    }
  }
  return out;
}

std::string describe(bool ok, std::size_t count, char const* what) {
  std::ostringstream os;
  os << (ok ? "all " : "failure among ") << count << ' ' << what;
  return os.str();
}

}  // namespace

SurdMatrix spin_projection(SurdMatrix const& h) {
  SurdMatrix H(16, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      H(i, j) = h(i, j);
      H(i + 8, j + 8) = h(i, j);
    }
  }
  SurdMatrix const Ht = H.transpose();
  SurdMatrix out(7, 7);
  for (std::size_t b = 1; b < 8; ++b) {
    SurdMatrix const img = H * to_surd(clifford_hat(Octonion::basis(b))) * Ht;
    // x^ has L_x in its lower-left block, and L_x e_0 = x.
    for (std::size_t a = 1; a < 8; ++a) {
      out(a - 1, b - 1) = img(a + 8, 0);
    }
  }
  return out;
}

std::vector<IdentityCheck> verify_spin7_identities() {
  std::vector<IdentityCheck> checks;

  {
    auto const table = octonion_reference_table();
    bool ok = true;
    std::string first_bad;
    for (std::size_t r = 1; r < 8; ++r) {
      for (std::size_t c = 1; c < 8; ++c) {
        auto const [sign, idx] = table[r - 1][c - 1];
        Octonion const expect = Octonion::basis(static_cast<std::size_t>(idx), sign);
        if (Octonion::basis(r) * Octonion::basis(c) != expect && ok) {
          ok = false;
          first_bad = "e" + std::to_string(r) + "*e" + std::to_string(c);
        }
      }
    }
    checks.push_back({"octonion multiplication table (49 products)", ok,
                      ok ? "all 49 imaginary products match" : "mismatch at " + first_bad});
  }

  {
    bool ok = true;
    RatMatrix const I16 = RatMatrix::identity(16);
    for (std::size_t x = 0; x < 8; ++x) {
      for (std::size_t y = 0; y < 8; ++y) {
        RatMatrix const hx = clifford_hat(Octonion::basis(x));
        RatMatrix const hy = clifford_hat(Octonion::basis(y));
        Rational const ip = inner(Octonion::basis(x), Octonion::basis(y));
        ok = ok && (hx * hy + hy * hx == Rational(-2 * ip) * I16);
      }
    }
    checks.push_back({"Clifford anticommutation x^y^ + y^x^ = -2<x,y> I16", ok,
                      describe(ok, 64, "basis pairs")});
  }

  {
    bool ok = true;
    RatMatrix const I8 = RatMatrix::identity(8);
    for (std::size_t x = 0; x < 8; ++x) {
      for (std::size_t y = 0; y < 8; ++y) {
        Octonion const ox = Octonion::basis(x);
        Octonion const oy = Octonion::basis(y);
        RatMatrix const lhs = left_mult_matrix(ox.conjugate()) * left_mult_matrix(oy) +
                              left_mult_matrix(oy.conjugate()) * left_mult_matrix(ox);
        ok = ok && lhs == Rational(2 * inner(ox, oy)) * I8;
      }
    }
    checks.push_back({"polarized norm identity L_xbar L_y + L_ybar L_x = 2<x,y> I8",
                      ok, describe(ok, 64, "basis pairs")});
  }

  {
    RatMatrix const v = clifford_hat(Octonion::basis(1));
    RatMatrix const vinv = -v;
    bool ok = v * v == -RatMatrix::identity(16);
    ok = ok && v * v * vinv == v;
    for (std::size_t b = 2; b < 8; ++b) {
      RatMatrix const w = clifford_hat(Octonion::basis(b));
      ok = ok && v * w * vinv == -w;
    }
    checks.push_back({"reflection: conjugation by e1^ fixes e1^, negates its complement",
                      ok, ok ? "e1^ e1^ = -I16 and e2^..e7^ negated" : "failed"});
  }

  {
    bool ok = true;
    for (auto a : {SpinAngle::Alpha, SpinAngle::Beta, SpinAngle::Gamma}) {
      ok = ok && spin_generator(a) == displayed_spin_generator(a);
    }
    checks.push_back({"A1, A2, A3 from left multiplications equal displayed matrices",
                      ok, ok ? "symbolic equality" : "symbolic mismatch"});
  }

  TrigMatrix const A1 = spin_generator(SpinAngle::Alpha);
  TrigMatrix const A2 = spin_generator(SpinAngle::Beta);
  TrigMatrix const A3 = spin_generator(SpinAngle::Gamma);
  {
    bool const ok = A1 * A2 == A2 * A1 && A1 * A3 == A3 * A1 && A2 * A3 == A3 * A2;
    checks.push_back({"A1, A2, A3 pairwise commute", ok,
                      ok ? "symbolic equality" : "commutator nonzero"});
  }

  {
    IntMatrix const B = spin_conjugator();
    RatMatrix const Bq = to_rational(B);
    RatMatrix const Binv = inverse(Bq);
    TrigMatrix Bt(8, 8);
    TrigMatrix Binvt(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        Bt(i, j) = TrigPoly(Bq(i, j));
        Binvt(i, j) = TrigPoly(Binv(i, j));
      }
    }
    TrigMatrix const conj = Bt * (A1 * A2 * A3) * Binvt;
    IntMatrix const W = spin_to_so8_weights();
    std::vector<std::array<int, 3>> coeffs;
    for (std::size_t i = 0; i < 4; ++i) {
      coeffs.push_back({static_cast<int>(W(i, 0).get_si()),
                        static_cast<int>(W(i, 1).get_si()),
                        static_cast<int>(W(i, 2).get_si())});
    }
    bool const ok = conj == rotation_blocks(coeffs);
    checks.push_back({"B A1 A2 A3 B^-1 = R(a+b-g, a-b-g, a-b+g, a+b+g)", ok,
                      ok ? "symbolic equality" : "conjugated product differs"});
  }

  {
    // pi(A1) = R(-2a,0,0), pi(A2) = R(0,-2b,0), pi(A3) = R(0,0,-2g) at exact
    // sample angles. The overall sign is the Weyl element -1 of SO(7).
    bool ok = true;
    std::vector<Rational> const samples = {Rational(1, 8), Rational(1, 12),
                                           Rational(1, 6), Rational(3, 8)};
    for (auto a : {SpinAngle::Alpha, SpinAngle::Beta, SpinAngle::Gamma}) {
      auto const idx = static_cast<std::size_t>(a);
      for (auto const& q : samples) {
        std::array<Rational, 3> p{0, 0, 0};
        p[idx] = q;
        SpinTorusParams const params(p[0], p[1], p[2]);
        SurdMatrix const proj = spin_projection(evaluate(spin_generator(a), params));
        std::vector<std::array<int, 3>> blocks(3, {0, 0, 0});
        blocks[idx][idx] = -2;
        TrigMatrix expect_sym = rotation_blocks(blocks);
        SurdMatrix expect(7, 7);
        for (std::size_t i = 0; i < 6; ++i) {
          for (std::size_t j = 0; j < 6; ++j) {
            expect(i, j) = evaluate(expect_sym(i, j), params);
          }
        }
        expect(6, 6) = 1;
        ok = ok && proj == expect;
      }
    }
    checks.push_back({"projection to SO(7) doubles each angle", ok,
                      ok ? "pi(A_i) = R(-2 angle) at exact sample angles"
                         : "projection mismatch"});
  }

  {
    bool ok = true;
    IntMatrix const composite = so8_to_so7_weights() * spin_to_so8_weights();
    ok = composite == int_matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    for (std::size_t j = 0; j < 3; ++j) {
      Integer rel = 0;
      auto const relation = spin7_torus_relation();
      for (std::size_t i = 0; i < 4; ++i) {
        rel += relation[i] * spin_to_so8_weights()(i, j);
      }
      ok = ok && rel == 0;
    }
    checks.push_back({"torus maps: theta satisfies t1+t3 = t2+t4, projection doubles",
                      ok, ok ? "integer weight identities hold" : "weight identity failed"});
  }

  return checks;
}

}  // namespace biquotient
