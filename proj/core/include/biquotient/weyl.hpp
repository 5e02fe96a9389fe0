#pragma once

// Maximal tori, centers and Weyl groups of SU(4), SO(7) and Spin(7).
//
// Every Weyl group here is a group of signed permutations acting on the
// torus angle coordinates. For Spin(7) the torus sits in SO(8) as
// { t1 + t3 = t2 + t4 } and its Weyl group is the stabilizer of that
// subtorus inside W(SO(8)) (permutations with an even number of sign
// changes).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biquotient/exact_linalg.hpp"

namespace biquotient {

// (w x)_i = signs[i] * x_{perm[i]}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs);

  static SignedPermutation identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return perm_.size(); }
  [[nodiscard]] std::vector<std::size_t> const& perm() const noexcept { return perm_; }
  [[nodiscard]] std::vector<int> const& signs() const noexcept { return signs_; }
  [[nodiscard]] std::size_t negations() const;

  [[nodiscard]] TorusPoint act(TorusPoint const& x) const;
  // Rows of the weight matrix permuted and signed the same way.
  [[nodiscard]] IntMatrix act(IntMatrix const& weights) const;
  // Integer vector action.
  [[nodiscard]] std::vector<Integer> act(std::vector<Integer> const& x) const;
  // Pull back of a linear form: (l o w)(x) = l(w x).
  [[nodiscard]] std::vector<Integer> pullback(std::vector<Integer> const& form) const;

  [[nodiscard]] SignedPermutation inverse() const;
  [[nodiscard]] IntMatrix matrix() const;

  // (a * b) x = a (b x).
  friend SignedPermutation operator*(SignedPermutation const& a,
                                     SignedPermutation const& b);
  friend bool operator==(SignedPermutation const&, SignedPermutation const&) = default;
  friend auto operator<=>(SignedPermutation const&, SignedPermutation const&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

// All 2^n n! signed permutations, in a fixed order.
[[nodiscard]] std::vector<SignedPermutation> all_signed_permutations(std::size_t n);
// Subset with an even number of sign changes: W(SO(2n)).
[[nodiscard]] std::vector<SignedPermutation> even_signed_permutations(std::size_t n);
// Plain permutations: W(SU(n)).
[[nodiscard]] std::vector<SignedPermutation> permutations(std::size_t n);

// Closure of the generators under composition; sorted.
[[nodiscard]] std::vector<SignedPermutation> generate_group(
    std::vector<SignedPermutation> const& generators);

enum class GroupKind { SU4, SO7, SPIN7 };

[[nodiscard]] std::string_view group_name(GroupKind g);
// Accepts "su4", "so7", "spin7" (any case); throws std::invalid_argument.
[[nodiscard]] GroupKind parse_group(std::string_view name);

struct GroupModel {
  GroupKind kind = GroupKind::SO7;
  std::string name;
  // SU4: four exponents e^{2 pi i t_k} summing to 0; SO7: three rotation
  // angles; SPIN7: four SO(8) rotation angles on the relation subtorus.
  std::size_t angle_count = 0;
  std::vector<SignedPermutation> weyl;
  std::vector<TorusPoint> center;
  // Integer form that must vanish mod 1 on torus points, if any.
  std::optional<std::vector<Integer>> torus_relation;

  [[nodiscard]] bool satisfies_relation(TorusPoint const& p) const;
  [[nodiscard]] bool is_central(TorusPoint const& p) const;
};

[[nodiscard]] GroupModel build_group_model(GroupKind kind);

// Cached immutable instances.
[[nodiscard]] GroupModel const& group_model(GroupKind kind);

// The first Weyl element (in model order) with w a == b, if any. Throws
// std::invalid_argument when a or b violates the torus relation.
[[nodiscard]] std::optional<SignedPermutation> torus_conjugate(
    GroupModel const& model, TorusPoint const& a, TorusPoint const& b);

// Number of distinct subtori { form = 0 } in the orbit of the given linear
// form under `group` (forms compared up to sign).
[[nodiscard]] std::size_t orbit_of_relation(
    std::vector<Integer> const& form, std::vector<SignedPermutation> const& group);

// Elements of `group` sending { form = 0 } to itself.
[[nodiscard]] std::vector<SignedPermutation> relation_stabilizer(
    std::vector<Integer> const& form, std::vector<SignedPermutation> const& group);

}  // namespace biquotient
