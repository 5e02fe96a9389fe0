#pragma once

// Enumerate candidate pairs (f1, f2) of homomorphisms U -> G for U = SU(2)
// or SU(2)^2, decide each one, and collect the free inhomogeneous actions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "biquotient/freeness.hpp"
#include "biquotient/reps.hpp"
#include "biquotient/weyl.hpp"

namespace biquotient {

enum class PairCategory {
  // Both maps nontrivial and not both factoring through the same SU(2).
  Inhomogeneous,
  // One side trivial.
  Homogeneous,
  // Both maps have infinite kernel and depend on the same factor: an SU(2)
  // action in disguise. Tested, never counted.
  Rank1Equivalent,
};

[[nodiscard]] std::string_view category_name(PairCategory c);

struct PairRecord {
  RepMultiset left_rep;
  RepMultiset right_rep;
  std::string left;
  std::string right;
  ActionSpec spec;
  PairCategory category = PairCategory::Inhomogeneous;
  FreenessVerdict verdict;
  // Restriction that is not a free SU(2) action, e.g. "theta=phi: (A, A)".
  std::optional<std::string> pruned_by;
  std::optional<DescentResult> descent;
};

struct ClassificationCounts {
  std::size_t free_inhomogeneous = 0;
  std::size_t homogeneous = 0;
  std::size_t not_free = 0;
};

struct ClassificationReport {
  GroupKind group = GroupKind::SO7;
  Source source = Source::SU2;
  std::vector<PairRecord> pairs;

  [[nodiscard]] ClassificationCounts counts() const;
  [[nodiscard]] std::vector<PairRecord const*> free_inhomogeneous() const;
  // Record for the unordered pair of display labels, if tested.
  [[nodiscard]] PairRecord const* find(std::string const& a, std::string const& b) const;
};

// Nontrivial SU(2) -> G maps in display order (A..F, or the SU(4) list).
[[nodiscard]] std::vector<RepMultiset> su2_candidates(GroupKind group);
// Finite-kernel maps in both factor orientations, then proj1, proj2 of each
// nontrivial SU(2) map, then the trivial map.
[[nodiscard]] std::vector<RepMultiset> su2xsu2_candidates(GroupKind group);

[[nodiscard]] ClassificationReport classify_su2(GroupKind group);
[[nodiscard]] ClassificationReport classify_su2xsu2(GroupKind group);
[[nodiscard]] ClassificationReport classify(GroupKind group, Source source);

// Expected free SU(2)^2 actions as weight matrices (columns theta, phi).
// SO(7) rows are rotation angles; SU(4) rows are the four exponents.
struct Table1Row {
  int number = 0;
  std::string description;
  IntMatrix left;
  IntMatrix right;
};

[[nodiscard]] std::vector<Table1Row> const& table1_rows(GroupKind group);

struct Table1Match {
  bool ok = false;
  // (row number, index into report.pairs) for each matched row.
  std::vector<std::pair<int, std::size_t>> matches;
  std::vector<std::string> problems;
};

// Match each free inhomogeneous pair to a fixture row, up to the Weyl action
// on each side, interchanging f1 and f2, and swapping the two factors. A
// SPIN7 report is compared after projecting to SO(7). Every row must match
// exactly one pair and every pair exactly one row.
[[nodiscard]] Table1Match verify_table1(ClassificationReport const& report);

}  // namespace biquotient
