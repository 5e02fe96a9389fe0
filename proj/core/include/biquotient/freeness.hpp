#pragma once

// Effective freeness of u * g = f1(u) g f2(u)^-1 on a compact group G.
//
// The action is effectively free iff f1(t) conjugate to f2(t) forces
// f1(t) = f2(t) central, for every t in the maximal torus of U. With A, B the
// weight matrices of f1, f2, conjugacy on the torus of G is the Weyl action,
// so the bad set is the union over w of
//   S_w = { t : w A t == B t (mod 1) },
// each a closed subgroup solved via Smith normal form. The action is free
// iff each S_w lies in K = { t : A t == B t in Z(G) }.
//
// K is a closed subgroup, so S_w <= K reduces to its generators. A
// one-parameter subgroup s -> s v stays in K iff A v == B v == 0: the
// connected family s -> A s v lies in the finite center only if constant.

#include <optional>
#include <string>
#include <vector>

#include "biquotient/exact_linalg.hpp"
#include "biquotient/reps.hpp"
#include "biquotient/weyl.hpp"

namespace biquotient {

struct ActionSpec {
  GroupKind group = GroupKind::SO7;
  TorusMap left;
  TorusMap right;
};

struct Witness {
  TorusPoint parameter;
  SignedPermutation weyl;
  TorusPoint left_image;
  TorusPoint right_image;
  Integer order;
};

enum class Verdict { Free, NotFree };

[[nodiscard]] std::string_view verdict_name(Verdict v);

struct FreenessVerdict {
  Verdict status = Verdict::Free;
  std::optional<Witness> witness;
  // lcm of the elementary divisors of every w A - B.
  Integer torsion_exponent = 1;

  [[nodiscard]] bool is_free() const { return status == Verdict::Free; }
};

// Throws std::invalid_argument if the maps disagree in parameter count,
// have the wrong number of rows, or leave the torus of G.
void validate_action(GroupModel const& model, IntMatrix const& A, IntMatrix const& B);

// Witness rule when not free: the failing point of least order, ties broken
// lexicographically. Candidates are the torsion generators of the S_w not
// in K, each replaced by its lexicographically least generator of the same
// cyclic group, and for a failing direction v the point v / n with the least
// n >= 2 outside K. The reported Weyl element is the first in model order
// conjugating the two images.
[[nodiscard]] FreenessVerdict is_effectively_free(GroupModel const& model,
                                                  IntMatrix const& A, IntMatrix const& B);
[[nodiscard]] FreenessVerdict is_effectively_free(ActionSpec const& spec);

// Direct re-evaluation of a witness, independent of the solver.
[[nodiscard]] bool verify_witness(GroupModel const& model, IntMatrix const& A,
                                  IntMatrix const& B, Witness const& w);

struct RestrictedPair {
  Restriction which = Restriction::Left;
  TorusMap left;
  TorusMap right;
  // Labels as produced by classify_su2_map.
  std::optional<std::string> left_label;
  std::optional<std::string> right_label;
};

// The three SU(2)-level restrictions of an SU(2)^2 pair (phi = 0, theta = 0,
// theta = phi). A free SU(2)^2 action restricts to free SU(2) actions.
[[nodiscard]] std::vector<RestrictedPair> restriction_prune(ActionSpec const& spec);

struct DescentResult {
  // Some t with (f1(t), f2(t)) equal to (-I, I) or (I, -I).
  bool deck_in_image = false;
  std::optional<TorusPoint> deck_parameter;
  // 1 when f1(t) = -I, 2 when f2(t) = -I.
  int deck_side = 0;
  FreenessVerdict so7_verdict;
};

// Spin(7) -> SO(7) descent for a SPIN7 action.
[[nodiscard]] DescentResult descent_analysis(ActionSpec const& spec);

}  // namespace biquotient
