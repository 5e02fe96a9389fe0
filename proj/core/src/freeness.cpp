#include "biquotient/freeness.hpp"

#include <algorithm>
#include <stdexcept>

#include "biquotient/spin7.hpp"

namespace biquotient {

std::string_view verdict_name(Verdict v) { return v == Verdict::Free ? "Free" : "NotFree"; }

void validate_action(GroupModel const& model, IntMatrix const& A, IntMatrix const& B) {
  if (A.cols() != B.cols()) {
    throw std::invalid_argument("parameter-count mismatch: left map has " +
                                std::to_string(A.cols()) + " parameters, right map has " +
                                std::to_string(B.cols()));
  }
  for (auto const* m : {&A, &B}) {
    if (m->rows() != model.angle_count) {
      throw std::invalid_argument("weight matrix has " + std::to_string(m->rows()) +
                                  " rows, " + model.name + " needs " +
                                  std::to_string(model.angle_count));
    }
    if (!model.torus_relation) continue;
    for (std::size_t j = 0; j < m->cols(); ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < m->rows(); ++i) {
        s += (*model.torus_relation)[i] * (*m)(i, j);
      }
      if (s != 0) {
        throw std::invalid_argument("weight column " + std::to_string(j) +
                                    " leaves the maximal torus of " + model.name);
      }
    }
  }
}

namespace {

bool in_kernel_set(GroupModel const& model, IntMatrix const& A, IntMatrix const& B,
                   TorusPoint const& t) {
  auto const a = apply(A, t);
  return a == apply(B, t) && model.is_central(a);
}

TorusPoint least_cyclic_generator(TorusPoint const& g) {
  Integer const o = g.order();
  if (o > 100000) {
    return g;
  }
  TorusPoint best = g;
  for (Integer k = 2; k < o; ++k) {
    Integer d;
    mpz_gcd(d.get_mpz_t(), k.get_mpz_t(), o.get_mpz_t());
    if (d != 1) continue;
    auto const p = k * g;
    if (p < best) best = p;
  }
  return best;
}

TorusPoint direction_point(std::vector<Integer> const& v, long n) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (auto const& x : v) {
    c.emplace_back(x, n);
  }
  for (auto& q : c) {
    q.canonicalize();
  }
  return TorusPoint(std::move(c));
}

bool better(TorusPoint const& a, TorusPoint const& b) {
  Integer const oa = a.order();
  Integer const ob = b.order();
  return oa != ob ? oa < ob : a < b;
}

}  // namespace

FreenessVerdict is_effectively_free(GroupModel const& model, IntMatrix const& A,
                                    IntMatrix const& B) {
  validate_action(model, A, B);
  FreenessVerdict out;
  std::optional<TorusPoint> worst;
  auto consider = [&](TorusPoint const& p) {
    if (!worst || better(p, *worst)) worst = p;
  };

  for (auto const& w : model.weyl) {
    IntMatrix const M = w.act(A) - B;
    auto const snf = smith_normal_form(M);
    for (auto const& d : snf.elementary_divisors()) {
      out.torsion_exponent = lcm(out.torsion_exponent, d);
    }
    auto const S = solve_torus_congruence(M);
    for (auto const& g : S.torsion_generators) {
      if (!in_kernel_set(model, A, B, g)) {
        consider(least_cyclic_generator(g));
      }
    }
    for (auto const& v : S.subtorus_directions) {
      std::vector<Integer> const zero(A.rows(), Integer(0));
      bool const annihilated = apply(A, v) == zero && apply(B, v) == zero;
      if (annihilated) continue;
      for (long n = 2;; ++n) {
        auto const t = direction_point(v, n);
        if (!in_kernel_set(model, A, B, t)) {
          consider(t);
          break;
        }
      }
    }
  }

  if (worst) {
    out.status = Verdict::NotFree;
    auto const left = apply(A, *worst);
    auto const right = apply(B, *worst);
    auto const w = torus_conjugate(model, left, right);
    if (!w) {
      throw std::logic_error("is_effectively_free: witness lost its conjugating element");
    }
    out.witness = Witness{*worst, *w, left, right, worst->order()};
  }
  return out;
}

FreenessVerdict is_effectively_free(ActionSpec const& spec) {
  if (spec.left.params != spec.right.params) {
    throw std::invalid_argument("parameter-count mismatch between left and right maps");
  }
  return is_effectively_free(group_model(spec.group), spec.left.weights, spec.right.weights);
}

bool verify_witness(GroupModel const& model, IntMatrix const& A, IntMatrix const& B,
                    Witness const& w) {
  if (w.parameter.size() != A.cols()) {
    return false;
  }
  auto const left = apply(A, w.parameter);
  auto const right = apply(B, w.parameter);
  if (left != w.left_image || right != w.right_image) {
    return false;
  }
  if (std::find(model.weyl.begin(), model.weyl.end(), w.weyl) == model.weyl.end()) {
    return false;
  }
  if (w.weyl.act(left) != right) {
    return false;
  }
  if (w.order != w.parameter.order()) {
    return false;
  }
  return !(left == right && model.is_central(left));
}

std::vector<RestrictedPair> restriction_prune(ActionSpec const& spec) {
  if (spec.left.params != 2 || spec.right.params != 2) {
    throw std::invalid_argument("restriction_prune: expected two-parameter maps");
  }
  std::vector<RestrictedPair> out;
  for (auto which : {Restriction::Left, Restriction::Right, Restriction::Diagonal}) {
    RestrictedPair r;
    r.which = which;
    r.left = restrict_map(spec.left, which);
    r.right = restrict_map(spec.right, which);
    r.left_label = classify_su2_map(r.left);
    r.right_label = classify_su2_map(r.right);
    out.push_back(std::move(r));
  }
  return out;
}

DescentResult descent_analysis(ActionSpec const& spec) {
  if (spec.group != GroupKind::SPIN7) {
    throw std::invalid_argument("descent_analysis: expected a Spin(7) action");
  }
  IntMatrix const& A = spec.left.weights;
  IntMatrix const& B = spec.right.weights;
  validate_action(group_model(GroupKind::SPIN7), A, B);

  IntMatrix stacked(A.rows() + B.rows(), A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
      stacked(i, j) = A(i, j);
      stacked(A.rows() + i, j) = B(i, j);
    }
  }
  DescentResult out;
  for (int side : {1, 2}) {
    std::vector<Rational> target(stacked.rows(), Rational(0));
    std::size_t const base = side == 1 ? 0 : A.rows();
    for (std::size_t i = 0; i < A.rows(); ++i) {
      target[base + i] = Rational(1, 2);
    }
    if (auto t = solve_affine_torus_congruence(stacked, TorusPoint(target))) {
      out.deck_in_image = true;
      out.deck_parameter = *t;
      out.deck_side = side;
      break;
    }
  }
  out.so7_verdict = is_effectively_free(group_model(GroupKind::SO7),
                                        spin7_project(spec.left).weights,
                                        spin7_project(spec.right).weights);
  return out;
}

}  // namespace biquotient
