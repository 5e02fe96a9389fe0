#include <doctest.h>

#include <random>

#include "biquotient/exact_linalg.hpp"
#include "oracles.hpp"

using namespace biquotient;

namespace {

void check_snf(IntMatrix const& M) {
  auto const r = smith_normal_form(M);
  CHECK(r.U * M * r.V == r.D);
  CHECK(abs(determinant(r.U)) == 1);
  CHECK(abs(determinant(r.V)) == 1);
  auto const d = r.elementary_divisors();
  for (std::size_t i = 0; i < r.D.rows(); ++i) {
    for (std::size_t j = 0; j < r.D.cols(); ++j) {
      if (i != j) CHECK(r.D(i, j) == 0);
    }
  }
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    CHECK(d[k] > 0);
    CHECK(mpz_divisible_p(d[k + 1].get_mpz_t(), d[k].get_mpz_t()) != 0);
  }
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix M(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = dist(rng);
  }
  return M;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto r = smith_normal_form(int_matrix({{2}}));
  CHECK(r.D == int_matrix({{2}}));
  CHECK(r.U == int_matrix({{1}}));
  CHECK(r.V == int_matrix({{1}}));

  r = smith_normal_form(int_matrix({{0, 0}, {0, 0}}));
  CHECK(r.D.is_zero());
  CHECK(r.rank() == 0);

  auto const M = int_matrix({{2, 4}, {6, 8}});
  r = smith_normal_form(M);
  CHECK(r.D == int_matrix({{2, 0}, {0, 4}}));
  check_snf(M);
}

TEST_CASE("smith normal form on non-square and negative input") {
  check_snf(int_matrix({{-3, 0, 6}}));
  check_snf(int_matrix({{0}, {-5}, {10}}));
  check_snf(int_matrix({{1, 1, 1, 1}, {1, -1, 0, 0}, {0, 0, 3, -3}}));
  auto const r = smith_normal_form(int_matrix({{-4}}));
  CHECK(r.D == int_matrix({{4}}));
}

TEST_CASE("smith normal form is deterministic") {
  auto const M = int_matrix({{3, -2, 5}, {4, 4, -1}, {0, 6, 2}});
  auto const a = smith_normal_form(M);
  auto const b = smith_normal_form(M);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
  CHECK(a.D == b.D);
}

TEST_CASE("smith normal form property on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    check_snf(random_matrix(rng, dim(rng), dim(rng), -5, 5));
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(determinant(int_matrix({{2, 1}, {7, 4}})) == 1);
  CHECK(determinant(int_matrix({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}})) == -2);
  CHECK(determinant(int_matrix({{1, 2}, {2, 4}})) == 0);
  auto const inv = inverse(to_rational(int_matrix({{2, 1}, {7, 4}})));
  CHECK(inv == to_rational(int_matrix({{4, -1}, {-7, 2}})));
  CHECK_THROWS_AS((void)inverse(to_rational(int_matrix({{1, 2}, {2, 4}}))), std::domain_error);
}

TEST_CASE("torus points are reduced into [0, 1)") {
  auto const p = TorusPoint::from_fractions({{-1, 3}, {5, 4}, {2, 2}});
  CHECK(p[0] == Rational(2, 3));
  CHECK(p[1] == Rational(1, 4));
  CHECK(p[2] == 0);
  CHECK(p.order() == 12);
  CHECK(TorusPoint(3).is_identity());
  CHECK((p + (-p)).is_identity());
  CHECK(Integer(3) * TorusPoint::from_fractions({{1, 3}}) == TorusPoint(1));
  CHECK(p.to_string() == "(2/3, 1/4, 0)");
  CHECK(TorusPoint::from_fractions({{1, 5}, {0, 1}}) < TorusPoint::from_fractions({{1, 5}, {1, 2}}));
}

TEST_CASE("solve_torus_congruence examples") {
  auto S = solve_torus_congruence(int_matrix({{2}}));
  REQUIRE(S.torsion_generators.size() == 1);
  CHECK(S.torsion_generators[0] == TorusPoint::from_fractions({{1, 2}}));
  CHECK(S.subtorus_directions.empty());

  S = solve_torus_congruence(IntMatrix(1, 2));
  CHECK(S.torsion_generators.empty());
  REQUIRE(S.subtorus_directions.size() == 2);

  S = solve_torus_congruence(int_matrix({{1, -1}}));
  CHECK(S.torsion_generators.empty());
  REQUIRE(S.subtorus_directions.size() == 1);
  auto const& v = S.subtorus_directions[0];
  CHECK(abs(v[0]) == 1);
  CHECK(v[0] == v[1]);

  // Membership agrees with M s in Z^m on denominators up to 12.
  auto const M = int_matrix({{1, -1}});
  for (long n = 1; n <= 12; ++n) {
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b) {
        bool const member = (a - b) % n == 0;
        auto const img = apply(M, TorusPoint::from_fractions({{a, n}, {b, n}}));
        CHECK(img.is_identity() == member);
      }
    }
  }
}

TEST_CASE("solve_torus_congruence invariants") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto const M = random_matrix(rng, dim(rng), dim(rng), -5, 5);
    auto const S = solve_torus_congruence(M);
    CHECK(S.ambient_rank == M.cols());
    for (auto const& g : S.torsion_generators) {
      CHECK(apply(M, g).is_identity());
      CHECK(g.order() > 1);
    }
    for (auto const& v : S.subtorus_directions) {
      CHECK(apply(M, v) == std::vector<Integer>(M.rows(), Integer(0)));
      Integer g = 0;
      for (auto const& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("solve_torus_congruence matches point enumeration") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> rows(1, 4);
  std::uniform_int_distribution<int> cols(1, 2);
  for (int trial = 0; trial < 250; ++trial) {
    auto const M = random_matrix(rng, rows(rng), cols(rng), -4, 4);
    auto const snf = smith_normal_form(M);
    Integer N = 1;
    for (auto const& d : snf.elementary_divisors()) N = lcm(N, d);
    std::int64_t const n = 2 * N.get_si();
    auto const S = solve_torus_congruence(M);
    std::vector<oracle::Vec> gens;
    for (auto const& g : S.torsion_generators) {
      oracle::Vec v;
      for (auto const& c : g.coords()) v.push_back(Rational(c * n).get_num().get_si());
      gens.push_back(v);
    }
    for (auto const& d : S.subtorus_directions) {
      oracle::Vec v;
      for (auto const& c : d) v.push_back(oracle::mod(c.get_si(), n));
      gens.push_back(v);
    }
    CHECK(oracle::generated_points(gens, M.cols(), n) == oracle::congruence_points(M, n));
  }
}

TEST_CASE("affine congruences") {
  auto const M = int_matrix({{2, 0}, {0, 2}});
  auto const t = solve_affine_torus_congruence(M, TorusPoint::from_fractions({{1, 2}, {0, 1}}));
  REQUIRE(t.has_value());
  CHECK(apply(M, *t) == TorusPoint::from_fractions({{1, 2}, {0, 1}}));
  // A zero row cannot reach a nonzero target.
  auto const Z = int_matrix({{1, 0}, {0, 0}});
  CHECK_FALSE(solve_affine_torus_congruence(Z, TorusPoint::from_fractions({{0, 1}, {1, 2}})));
  auto const u = solve_affine_torus_congruence(Z, TorusPoint::from_fractions({{1, 3}, {0, 1}}));
  REQUIRE(u.has_value());
  CHECK(apply(Z, *u) == TorusPoint::from_fractions({{1, 3}, {0, 1}}));
}

TEST_CASE("subgroup containment") {
  TorusSubgroup trivial{1, {}, {}};
  auto const only_zero = [](TorusPoint const& p) { return p.is_identity(); };
  auto const no_direction = [](std::vector<Integer> const&) { return false; };
  CHECK(subgroup_contained_in(trivial, only_zero, no_direction));

  auto const half = solve_torus_congruence(int_matrix({{2}}));
  CHECK_FALSE(subgroup_contained_in(half, only_zero, no_direction));
  auto const any = [](TorusPoint const&) { return true; };
  CHECK(subgroup_contained_in(half, any, no_direction));

  auto const line = solve_torus_congruence(int_matrix({{1, -1}}));
  CHECK_FALSE(subgroup_contained_in(line, any, no_direction));
}
