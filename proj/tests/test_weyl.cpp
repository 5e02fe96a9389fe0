#include <doctest.h>

#include <set>

#include "biquotient/spin7.hpp"
#include "biquotient/weyl.hpp"
#include "oracles.hpp"

using namespace biquotient;

TEST_CASE("signed permutation basics") {
  SignedPermutation const w({1, 0, 2}, {-1, 1, 1});
  auto const x = TorusPoint::from_fractions({{1, 3}, {1, 4}, {1, 5}});
  CHECK(w.act(x) == TorusPoint::from_fractions({{-1, 4}, {1, 3}, {1, 5}}));
  CHECK(w.inverse() * w == SignedPermutation::identity(3));
  CHECK(w * w.inverse() == SignedPermutation::identity(3));
  CHECK(w.negations() == 1);
  CHECK(w.act(std::vector<Integer>{1, 2, 3}) == std::vector<Integer>{-2, 1, 3});
  // The matrix realises the same action.
  auto const m = w.matrix();
  CHECK(m * int_matrix({{1}, {2}, {3}}) == int_matrix({{-2}, {1}, {3}}));
  CHECK_THROWS((void)SignedPermutation({0, 0}, {1, 1}));
}

TEST_CASE("composition is action composition") {
  auto const all = all_signed_permutations(3);
  auto const x = TorusPoint::from_fractions({{1, 7}, {2, 7}, {4, 7}});
  for (std::size_t i = 0; i < all.size(); i += 5) {
    for (std::size_t j = 0; j < all.size(); j += 7) {
      CHECK((all[i] * all[j]).act(x) == all[i].act(all[j].act(x)));
    }
  }
}

TEST_CASE("group orders") {
  CHECK(all_signed_permutations(3).size() == 48);
  CHECK(all_signed_permutations(4).size() == 384);
  CHECK(even_signed_permutations(4).size() == 192);
  CHECK(permutations(4).size() == 24);
  CHECK(group_model(GroupKind::SU4).weyl.size() == 24);
  CHECK(group_model(GroupKind::SO7).weyl.size() == 48);
  CHECK(group_model(GroupKind::SPIN7).weyl.size() == 48);
}

TEST_CASE("spin7 Weyl group is the relation stabilizer") {
  auto const form = spin7_torus_relation();
  auto stab = relation_stabilizer(form, even_signed_permutations(4));
  std::sort(stab.begin(), stab.end());
  CHECK(stab.size() == 48);
  CHECK(orbit_of_relation(form, even_signed_permutations(4)) == 4);
  CHECK(generate_group(stab) == stab);

  // Independent rebuild in the oracle.
  auto const ref = oracle::spin7_weyl();
  CHECK(ref.size() == 48);
  std::set<std::pair<std::array<int, 4>, std::array<int, 4>>> a;
  for (auto const& w : ref) a.insert({w.p, w.s});
  std::set<std::pair<std::array<int, 4>, std::array<int, 4>>> b;
  for (auto const& w : group_model(GroupKind::SPIN7).weyl) {
    std::array<int, 4> p{};
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) {
      p[i] = static_cast<int>(w.perm()[i]);
      s[i] = w.signs()[i];
    }
    b.insert({p, s});
  }
  CHECK(a == b);
}

TEST_CASE("centers") {
  auto const& su4 = group_model(GroupKind::SU4);
  CHECK(su4.center.size() == 4);
  CHECK(su4.is_central(TorusPoint::from_fractions({{1, 4}, {1, 4}, {1, 4}, {1, 4}})));
  CHECK_FALSE(su4.is_central(TorusPoint::from_fractions({{1, 2}, {1, 2}, {0, 1}, {0, 1}})));
  auto const& so7 = group_model(GroupKind::SO7);
  CHECK(so7.center.size() == 1);
  CHECK_FALSE(so7.is_central(TorusPoint::from_fractions({{1, 2}, {0, 1}, {0, 1}})));
  auto const& spin = group_model(GroupKind::SPIN7);
  CHECK(spin.center.size() == 2);
  CHECK(spin.is_central(TorusPoint::from_fractions({{1, 2}, {1, 2}, {1, 2}, {1, 2}})));
  CHECK_FALSE(spin.is_central(TorusPoint::from_fractions({{1, 4}, {1, 4}, {1, 4}, {1, 4}})));
}

TEST_CASE("torus relations") {
  auto const& su4 = group_model(GroupKind::SU4);
  CHECK(su4.satisfies_relation(TorusPoint::from_fractions({{1, 3}, {2, 3}, {0, 1}, {0, 1}})));
  CHECK_FALSE(su4.satisfies_relation(TorusPoint::from_fractions({{1, 3}, {0, 1}, {0, 1}, {0, 1}})));
  auto const& spin = group_model(GroupKind::SPIN7);
  CHECK(spin.satisfies_relation(TorusPoint::from_fractions({{1, 5}, {1, 5}, {2, 5}, {2, 5}})));
  CHECK_FALSE(spin.satisfies_relation(TorusPoint::from_fractions({{1, 5}, {0, 1}, {0, 1}, {0, 1}})));
  CHECK_FALSE(group_model(GroupKind::SO7).torus_relation.has_value());
}

TEST_CASE("torus conjugacy agrees with the oracle") {
  std::int64_t const n = 6;
  for (auto g : {GroupKind::SU4, GroupKind::SO7, GroupKind::SPIN7}) {
    auto const& model = group_model(g);
    std::size_t const k = model.angle_count;
    std::vector<oracle::Vec> pts;
    oracle::Vec t(k, 0);
    while (true) {
      std::int64_t s = 0;
      if (g == GroupKind::SU4) {
        for (auto x : t) s += x;
      } else if (g == GroupKind::SPIN7) {
        s = t[0] - t[1] + t[2] - t[3];
      }
      if (oracle::mod(s, n) == 0) pts.push_back(t);
      std::size_t i = 0;
      while (i < k && ++t[i] == n) t[i++] = 0;
      if (i == k) break;
    }
    auto to_point = [&](oracle::Vec const& v) {
      std::vector<Rational> c;
      for (auto x : v) c.emplace_back(x, n);
      return TorusPoint(c);
    };
    // Sample pairs.
    for (std::size_t i = 0; i < pts.size(); i += 7) {
      for (std::size_t j = 0; j < pts.size(); j += 11) {
        auto const a = to_point(pts[i]);
        auto const b = to_point(pts[j]);
        auto const w = torus_conjugate(model, a, b);
        CHECK(w.has_value() == oracle::conjugate(g, pts[i], pts[j], n));
        if (w) CHECK(w->act(a) == b);
      }
    }
  }
}

TEST_CASE("torus_conjugate rejects points off the torus") {
  auto const& spin = group_model(GroupKind::SPIN7);
  auto const bad = TorusPoint::from_fractions({{1, 3}, {0, 1}, {0, 1}, {0, 1}});
  CHECK_THROWS_AS((void)torus_conjugate(spin, bad, bad), std::invalid_argument);
}

TEST_CASE("group names") {
  CHECK(parse_group("SPIN7") == GroupKind::SPIN7);
  CHECK(parse_group("so7") == GroupKind::SO7);
  CHECK(parse_group("Su4") == GroupKind::SU4);
  CHECK_THROWS_AS((void)parse_group("g2"), std::invalid_argument);
  CHECK(group_name(GroupKind::SPIN7) == "spin7");
}

TEST_CASE("relation orbits") {
  auto const so8 = even_signed_permutations(4);
  CHECK(orbit_of_relation({0, 0, 0, 0}, so8) == 1);
  // theta1 = 0: brute force over the images of the form, up to sign.
  std::vector<Integer> const form{1, 0, 0, 0};
  std::set<std::vector<Integer>> images;
  for (auto const& w : so8) {
    auto f = w.pullback(form);
    auto neg = f;
    for (auto& x : neg) x = -x;
    images.insert(std::min(f, neg));
  }
  CHECK(orbit_of_relation(form, so8) == images.size());
  CHECK(images.size() == 4);
}

TEST_CASE("three named generators span the spin7 Weyl group") {
  SignedPermutation const swap23({0, 2, 1, 3}, {1, -1, -1, 1});
  SignedPermutation const swap13({2, 1, 0, 3}, {1, 1, 1, 1});
  SignedPermutation const double_swap({1, 0, 3, 2}, {1, 1, 1, 1});
  auto const& model = group_model(GroupKind::SPIN7);
  auto const rel = spin7_torus_relation();
  for (auto const& g : {swap23, swap13, double_swap}) {
    auto const f = g.pullback(rel);
    auto neg = rel;
    for (auto& x : neg) x = -x;
    CHECK((f == rel || f == neg));
  }
  auto stab = model.weyl;
  std::sort(stab.begin(), stab.end());
  CHECK(generate_group({swap23, swap13, double_swap}) == stab);
}
