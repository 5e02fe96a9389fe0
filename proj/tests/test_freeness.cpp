#include <doctest.h>

#include "biquotient/classify.hpp"
#include "biquotient/freeness.hpp"
#include "oracles.hpp"

using namespace biquotient;

namespace {

ActionSpec action(GroupKind g, std::string const& left, std::string const& right,
                  Source source = Source::SU2) {
  int const dim = group_rep_dimension(g);
  return {g, torus_weights(parse_rep_spec(left, source, dim), g),
          torus_weights(parse_rep_spec(right, source, dim), g)};
}

TorusPoint all_halves() {
  return TorusPoint::from_fractions({{1, 2}, {1, 2}, {1, 2}, {1, 2}});
}

}  // namespace

TEST_CASE("SU(2) examples on Spin(7)") {
  auto const de = is_effectively_free(action(GroupKind::SPIN7, "D", "E"));
  CHECK(de.is_free());
  CHECK_FALSE(de.witness.has_value());

  auto const spec = action(GroupKind::SPIN7, "C", "D");
  auto const cd = is_effectively_free(spec);
  REQUIRE(cd.status == Verdict::NotFree);
  REQUIRE(cd.witness.has_value());
  CHECK(cd.witness->order == 3);
  CHECK(cd.witness->parameter == TorusPoint::from_fractions({{1, 3}}));
  CHECK(verify_witness(group_model(GroupKind::SPIN7), spec.left.weights, spec.right.weights,
                       *cd.witness));
}

TEST_CASE("SU(2)^2 example on Spin(7)") {
  auto const spec =
      action(GroupKind::SPIN7, "3phi00+phi11", "phi00+phi20+phi02", Source::SU2xSU2);
  auto const v = is_effectively_free(spec);
  REQUIRE(v.status == Verdict::NotFree);
  CHECK(v.witness->parameter == TorusPoint::from_fractions({{1, 5}, {2, 5}}));
  CHECK(v.witness->order == 5);
  CHECK(verify_witness(group_model(GroupKind::SPIN7), spec.left.weights, spec.right.weights,
                       *v.witness));
}

TEST_CASE("SU(4) example with a fifth root of unity") {
  auto const spec = action(GroupKind::SU4, "phi10+phi01", "phi11", Source::SU2xSU2);
  auto const v = is_effectively_free(spec);
  REQUIRE(v.status == Verdict::NotFree);
  CHECK(v.witness->order == 5);
  auto const& model = group_model(GroupKind::SU4);
  CHECK(verify_witness(model, spec.left.weights, spec.right.weights, *v.witness));

  // z = e^{2 pi i/5}, w = z^3.
  auto const t = TorusPoint::from_fractions({{1, 5}, {3, 5}});
  auto const a = apply(spec.left.weights, t);
  auto const b = apply(spec.right.weights, t);
  auto const w = torus_conjugate(model, a, b);
  REQUIRE(w.has_value());
  CHECK_FALSE((a == b && model.is_central(a)));
  CHECK(verify_witness(model, spec.left.weights, spec.right.weights,
                       Witness{t, *w, a, b, Integer(5)}));
}

TEST_CASE("verify_witness rejects tampered witnesses") {
  auto const spec = action(GroupKind::SPIN7, "C", "D");
  auto const& model = group_model(GroupKind::SPIN7);
  auto w = *is_effectively_free(spec).witness;
  auto bad = w;
  bad.parameter = TorusPoint::from_fractions({{1, 4}});
  CHECK_FALSE(verify_witness(model, spec.left.weights, spec.right.weights, bad));
  bad = w;
  bad.order = 6;
  CHECK_FALSE(verify_witness(model, spec.left.weights, spec.right.weights, bad));
  bad = w;
  bad.weyl = SignedPermutation({0, 1, 2, 3}, {-1, 1, 1, 1});
  CHECK_FALSE(verify_witness(model, spec.left.weights, spec.right.weights, bad));
  // The identity point is never a witness.
  bad = w;
  bad.parameter = TorusPoint(1);
  bad.left_image = TorusPoint(4);
  bad.right_image = TorusPoint(4);
  bad.weyl = SignedPermutation::identity(4);
  bad.order = 1;
  CHECK_FALSE(verify_witness(model, spec.left.weights, spec.right.weights, bad));
}

TEST_CASE("input validation") {
  auto const& spin = group_model(GroupKind::SPIN7);
  auto const one = torus_weights(*rep_for_label('A'), GroupKind::SPIN7).weights;
  auto const two = torus_weights(parse_rep_spec("phi11+phi02", Source::SU2xSU2, 7),
                                 GroupKind::SPIN7)
                       .weights;
  CHECK_THROWS_AS(validate_action(spin, one, two), std::invalid_argument);
  CHECK_THROWS_AS(validate_action(spin, int_matrix({{1}, {0}, {0}}), one), std::invalid_argument);
  CHECK_THROWS_AS(validate_action(spin, int_matrix({{1}, {0}, {0}, {0}}), one),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_action(group_model(GroupKind::SU4), int_matrix({{1}, {0}, {0}, {0}}),
                                  IntMatrix(4, 1)),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_action(spin, one, one));
  CHECK_THROWS_AS((void)is_effectively_free(spin, one, two), std::invalid_argument);
}

TEST_CASE("equal nontrivial maps are never free") {
  for (auto g : {GroupKind::SU4, GroupKind::SO7, GroupKind::SPIN7}) {
    auto const& model = group_model(g);
    for (auto const& rep : su2_candidates(g)) {
      auto const m = torus_weights(rep, g).weights;
      auto const v = is_effectively_free(model, m, m);
      CHECK(v.status == Verdict::NotFree);
      REQUIRE(v.witness.has_value());
      CHECK(verify_witness(model, m, m, *v.witness));
    }
  }
}

TEST_CASE("homogeneous actions are free") {
  for (auto g : {GroupKind::SU4, GroupKind::SO7, GroupKind::SPIN7}) {
    auto const& model = group_model(g);
    IntMatrix const zero(model.angle_count, 1);
    for (auto const& rep : su2_candidates(g)) {
      auto const m = torus_weights(rep, g).weights;
      CHECK(is_effectively_free(model, m, zero).is_free());
      CHECK(is_effectively_free(model, zero, m).is_free());
    }
    // Both sides trivial: every point acts trivially.
    CHECK(is_effectively_free(model, zero, zero).is_free());
  }
}

TEST_CASE("freeness is symmetric with inverse witnesses") {
  for (auto g : {GroupKind::SU4, GroupKind::SO7, GroupKind::SPIN7}) {
    auto const& model = group_model(g);
    auto const reps = su2_candidates(g);
    for (auto const& a : reps) {
      for (auto const& b : reps) {
        auto const A = torus_weights(a, g).weights;
        auto const B = torus_weights(b, g).weights;
        auto const ab = is_effectively_free(model, A, B);
        auto const ba = is_effectively_free(model, B, A);
        CHECK(ab.status == ba.status);
        if (ab.witness) {
          auto const& w = *ab.witness;
          CHECK(verify_witness(model, B, A,
                               Witness{w.parameter, w.weyl.inverse(), w.right_image,
                                       w.left_image, w.order}));
          CHECK(ba.witness->order == w.order);
        }
      }
    }
  }
}

TEST_CASE("verdicts agree with the brute-force oracle at SU(2) level") {
  for (auto g : {GroupKind::SU4, GroupKind::SO7, GroupKind::SPIN7}) {
    auto const& model = group_model(g);
    auto reps = su2_candidates(g);
    for (auto const& a : reps) {
      for (auto const& b : reps) {
        auto const A = torus_weights(a, g).weights;
        auto const B = torus_weights(b, g).weights;
        auto const v = is_effectively_free(model, A, B);
        std::int64_t const n = 2 * v.torsion_exponent.get_si();
        auto const o = oracle::brute_force_freeness(g, A, B, std::max<std::int64_t>(n, 2));
        INFO(a.to_string() << " / " << b.to_string());
        CHECK(o.free == v.is_free());
      }
    }
  }
}

TEST_CASE("restriction pruning") {
  auto const spec = action(GroupKind::SPIN7, "2phi10+phi02", "proj2:D", Source::SU2xSU2);
  auto const r = restriction_prune(spec);
  REQUIRE(r.size() == 3);
  CHECK(r[0].which == Restriction::Left);
  CHECK(r[0].left_label == std::string("B"));
  CHECK(r[0].right_label == std::string("trivial"));
  CHECK(r[1].which == Restriction::Right);
  CHECK(r[1].left_label == std::string("A"));
  CHECK(r[1].right_label == std::string("D"));
  CHECK(r[2].which == Restriction::Diagonal);
  CHECK(r[2].left_label == std::string("E"));
  CHECK(r[2].right_label == std::string("D"));

  ActionSpec trivial{GroupKind::SO7, TorusMap{GroupKind::SO7, 2, IntMatrix(3, 2)},
                     TorusMap{GroupKind::SO7, 2, IntMatrix(3, 2)}};
  for (auto const& p : restriction_prune(trivial)) {
    CHECK(p.left.is_trivial());
    CHECK(p.right.is_trivial());
    CHECK(p.left_label == std::string("trivial"));
  }

  // 3phi00+phi11 against any infinite-kernel map: the diagonal is (A, A).
  for (auto const& rep : su2_candidates(GroupKind::SPIN7)) {
    for (int factor : {1, 2}) {
      auto const s = action(GroupKind::SPIN7, "3phi00+phi11",
                            "proj" + std::to_string(factor) + ":" + display_label(rep, GroupKind::SO7),
                            Source::SU2xSU2);
      auto const diag = restriction_prune(s)[2];
      CHECK(diag.left_label == std::string("A"));
      if (diag.right_label == std::string("A")) {
        CHECK_FALSE(is_effectively_free(s).is_free());
      }
    }
  }
}

TEST_CASE("descent analysis") {
  // Trivial right map: deck point iff all halves lies in the image of A.
  auto const trivial = RepMultiset::trivial(Source::SU2, 7);
  for (auto const& rep : su2_candidates(GroupKind::SPIN7)) {
    ActionSpec const spec{GroupKind::SPIN7, torus_weights(rep, GroupKind::SPIN7),
                          torus_weights(trivial, GroupKind::SPIN7)};
    auto const d = descent_analysis(spec);
    bool const expected =
        solve_affine_torus_congruence(spec.left.weights, all_halves()).has_value();
    CHECK(d.deck_in_image == expected);
    if (d.deck_in_image) {
      CHECK(d.deck_side == 1);
      CHECK(apply(spec.left.weights, *d.deck_parameter) == all_halves());
    }
  }
  auto const a = descent_analysis(action(GroupKind::SPIN7, "A", "trivial"));
  CHECK(a.deck_in_image);
  auto const b = descent_analysis(action(GroupKind::SPIN7, "B", "trivial"));
  CHECK_FALSE(b.deck_in_image);

  auto const de = descent_analysis(action(GroupKind::SPIN7, "D", "E"));
  CHECK(de.so7_verdict.is_free());
}

TEST_CASE("deck points are sound for every free Spin(7) pair") {
  auto const report = classify_su2xsu2(GroupKind::SPIN7);
  for (auto const* rec : report.free_inhomogeneous()) {
    REQUIRE(rec->descent.has_value());
    auto const& d = *rec->descent;
    CHECK(d.so7_verdict.is_free());
    if (!d.deck_in_image) continue;
    auto const& t = *d.deck_parameter;
    auto const l = apply(rec->spec.left.weights, t);
    auto const r = apply(rec->spec.right.weights, t);
    if (d.deck_side == 1) {
      CHECK(l == all_halves());
      CHECK(r.is_identity());
    } else {
      CHECK(d.deck_side == 2);
      CHECK(l.is_identity());
      CHECK(r == all_halves());
    }
  }
}
