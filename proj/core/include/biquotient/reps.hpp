#pragma once

// Homomorphisms SU(2) -> G and SU(2)^2 -> G up to equivalence, encoded as
// multisets of irreducibles, and the torus weight matrices they induce.
//
// phi_i is the (i+1)-dimensional irreducible of SU(2), with torus weights
// i, i-2, ..., -i; phi_ij = phi_i (x) phi_j on SU(2)^2. phi_i is orthogonal
// for even i and symplectic for odd i; phi_ij is orthogonal iff i + j is
// even. A sum is orthogonal iff every symplectic constituent appears with
// even multiplicity.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "biquotient/exact_linalg.hpp"
#include "biquotient/weyl.hpp"

namespace biquotient {

enum class Source { SU2, SU2xSU2 };

[[nodiscard]] std::string_view source_name(Source s);
[[nodiscard]] Source parse_source(std::string_view name);
[[nodiscard]] std::size_t parameter_count(Source s);

struct Su2Irrep {
  int index = 0;

  [[nodiscard]] int dimension() const { return index + 1; }
  [[nodiscard]] bool is_orthogonal() const { return index % 2 == 0; }
  [[nodiscard]] bool is_symplectic() const { return index % 2 != 0; }
};

struct Su2xSu2Irrep {
  int i = 0;
  int j = 0;

  [[nodiscard]] int dimension() const { return (i + 1) * (j + 1); }
  [[nodiscard]] bool is_orthogonal() const { return (i + j) % 2 == 0; }
  [[nodiscard]] bool is_symplectic() const { return (i + j) % 2 != 0; }
  friend auto operator<=>(Su2xSu2Irrep const&, Su2xSu2Irrep const&) = default;
};

enum class RepFlavor { Complex, Orthogonal };

// Representation of SU(2) (every j == 0) or SU(2)^2 as a multiset of
// irreducibles. Components are kept merged and canonically ordered, so
// equality is structural.
class RepMultiset {
 public:
  struct Component {
    Su2xSu2Irrep irrep;
    int multiplicity = 0;
    friend bool operator==(Component const&, Component const&) = default;
  };

  RepMultiset() = default;
  RepMultiset(Source source, std::vector<Component> components);

  static RepMultiset trivial(Source source, int dimension);
  // phi_i of SU(2) with given multiplicities, e.g. {{0, 4}, {2, 1}}.
  static RepMultiset su2(std::vector<std::pair<int, int>> const& index_mult);
  static RepMultiset su2xsu2(std::vector<std::tuple<int, int, int>> const& ijm);

  [[nodiscard]] Source source() const noexcept { return source_; }
  [[nodiscard]] std::vector<Component> const& components() const noexcept {
    return components_;
  }

  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool is_trivial() const;
  [[nodiscard]] bool is_orthogonal() const;
  [[nodiscard]] bool depends_on_first() const;
  [[nodiscard]] bool depends_on_second() const;
  // The kernel is finite: for SU(2)^2 both factors act nontrivially, for
  // SU(2) the representation is nontrivial.
  [[nodiscard]] bool has_finite_kernel() const;

  // Interchange the two SU(2) factors.
  [[nodiscard]] RepMultiset swapped() const;

  // Torus weights as vectors of length 1 or 2, with multiplicity.
  [[nodiscard]] std::vector<std::vector<int>> weights() const;

  // "4phi0+phi2", "phi00+phi20+phi02", "0" for the zero representation.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(RepMultiset const&, RepMultiset const&) = default;
  friend bool operator<(RepMultiset const& a, RepMultiset const& b);

 private:
  Source source_ = Source::SU2;
  std::vector<Component> components_;
};

// SU(2)^2 representation f o pr_k for an SU(2) representation f.
[[nodiscard]] RepMultiset compose_projection(RepMultiset const& su2_rep, int factor);

enum class Restriction { Left, Right, Diagonal };

[[nodiscard]] std::string_view restriction_name(Restriction r);

// Restriction of an SU(2)^2 representation to an SU(2) subgroup.
//   Left:     the first factor (phi = 0): phi_ij -> (j+1) phi_i
//   Right:    the second factor (theta = 0): phi_ij -> (i+1) phi_j
//   Diagonal: theta = phi, Clebsch-Gordan phi_i (x) phi_j.
[[nodiscard]] RepMultiset restrict_rep(RepMultiset const& rep, Restriction which);

// Partitions of n, each sorted descending, in reverse lexicographic order.
[[nodiscard]] std::vector<std::vector<int>> partitions(int n);

[[nodiscard]] std::vector<RepMultiset> enumerate_su2_complex(int n);
[[nodiscard]] std::vector<RepMultiset> enumerate_su2_orthogonal(int n);
// Output is deduplicated up to swapping the two factors; the representative
// kept is the one whose (j, i) index pairs, sorted descending, compare
// lexicographically greater (so 2phi10+phi02 rather than 2phi01+phi20).
[[nodiscard]] std::vector<RepMultiset> enumerate_su2xsu2(int n, RepFlavor flavor,
                                                         bool finite_kernel_only);
[[nodiscard]] inline std::vector<RepMultiset> enumerate_su2xsu2_orthogonal(
    int n, bool finite_kernel_only) {
  return enumerate_su2xsu2(n, RepFlavor::Orthogonal, finite_kernel_only);
}

// Integer weight matrix: rows are torus angle coordinates of the group,
// columns the torus parameters (theta[, phi]) of the source.
struct TorusMap {
  GroupKind group = GroupKind::SO7;
  std::size_t params = 1;
  IntMatrix weights;

  [[nodiscard]] bool is_trivial() const { return weights.is_zero(); }
  friend bool operator==(TorusMap const&, TorusMap const&) = default;
};

class RepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// SU4: the four weights, sorted descending. SO7: one representative of each
// +-pair of nonzero weights (the lexicographically positive one), sorted
// descending and padded with zero rows to three rotation slots. SPIN7: the
// Spin(7) lift of the SO7 map. Throws RepError on dimension or parity
// violations.
[[nodiscard]] TorusMap torus_weights(RepMultiset const& rep, GroupKind group);

// alpha, beta, gamma = half the SO(7) angles; theta = spin_to_so8_weights()
// applied to them. Throws RepError if the result is not integral.
[[nodiscard]] TorusMap spin7_lift(TorusMap const& so7_map);

// Spin(7) weights pushed down to SO(7) weights.
[[nodiscard]] TorusMap spin7_project(TorusMap const& spin7_map);

[[nodiscard]] TorusMap restrict_map(TorusMap const& map, Restriction which);

// Weyl equivalence of weight matrices: some Weyl element of the group maps
// the rows of a onto the rows of b.
[[nodiscard]] bool weyl_equivalent(GroupKind group, IntMatrix const& a, IntMatrix const& b);

// Named SU(2) -> Spin(7) homomorphisms A..F (and their SO(7) images).
[[nodiscard]] std::vector<std::pair<char, RepMultiset>> const& named_so7_reps();
[[nodiscard]] std::optional<char> so7_label(RepMultiset const& su2_rep);
[[nodiscard]] std::optional<RepMultiset> rep_for_label(char label);

// Label of a one-parameter map by Weyl-equivalence with the SU(2) maps of
// its group: "A".."F" for SO7 / SPIN7, phi notation for SU4, "trivial", or
// nullopt.
[[nodiscard]] std::optional<std::string> classify_su2_map(TorusMap const& map);

// Human-readable label: "A".."F", "proj1:D", "trivial", or phi notation.
[[nodiscard]] std::string display_label(RepMultiset const& rep, GroupKind group);

// Parse a representation spec: "2phi0+phi1", "phi11+phi02", "A".."F",
// "proj1:D", "proj2:2phi0+phi1", "trivial". `dimension` is the target
// representation dimension (used for "trivial"). Throws RepSpecError.
class RepSpecError : public std::invalid_argument {
 public:
  RepSpecError(std::string const& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[nodiscard]] RepMultiset parse_rep_spec(std::string_view spec, Source source,
                                         int dimension);

// Guess the source of a spec: SU2xSU2 if it uses proj / two-digit phi
// indices consistent with `dimension`, else SU2.
[[nodiscard]] Source infer_source(std::string_view spec, int dimension);

[[nodiscard]] int group_rep_dimension(GroupKind group);
[[nodiscard]] RepFlavor group_flavor(GroupKind group);

}  // namespace biquotient
