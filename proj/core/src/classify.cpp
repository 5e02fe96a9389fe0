#include "biquotient/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace biquotient {

std::string_view category_name(PairCategory c) {
  switch (c) {
    case PairCategory::Inhomogeneous:
      return "inhomogeneous";
    case PairCategory::Homogeneous:
      return "homogeneous";
    case PairCategory::Rank1Equivalent:
      return "rank1-equivalent";
  }
  return "?";
}

ClassificationCounts ClassificationReport::counts() const {
  ClassificationCounts c;
  for (auto const& p : pairs) {
    if (p.category == PairCategory::Homogeneous) {
      ++c.homogeneous;
    }
    if (!p.verdict.is_free()) {
      ++c.not_free;
    } else if (p.category == PairCategory::Inhomogeneous) {
      ++c.free_inhomogeneous;
    }
  }
  return c;
}

std::vector<PairRecord const*> ClassificationReport::free_inhomogeneous() const {
  std::vector<PairRecord const*> out;
  for (auto const& p : pairs) {
    if (p.category == PairCategory::Inhomogeneous && p.verdict.is_free()) {
      out.push_back(&p);
    }
  }
  return out;
}

PairRecord const* ClassificationReport::find(std::string const& a,
                                             std::string const& b) const {
  for (auto const& p : pairs) {
    if ((p.left == a && p.right == b) || (p.left == b && p.right == a)) {
      return &p;
    }
  }
  return nullptr;
}

std::vector<RepMultiset> su2_candidates(GroupKind group) {
  std::vector<RepMultiset> out;
  if (group == GroupKind::SU4) {
    auto all = enumerate_su2_complex(4);
    std::reverse(all.begin(), all.end());
    for (auto& r : all) {
      if (!r.is_trivial()) out.push_back(std::move(r));
    }
    return out;
  }
  for (auto const& [label, rep] : named_so7_reps()) {
    out.push_back(rep);
  }
  return out;
}

namespace {

int trivial_multiplicity(RepMultiset const& r) {
  for (auto const& c : r.components()) {
    if (c.irrep.i == 0 && c.irrep.j == 0) return c.multiplicity;
  }
  return 0;
}

}  // namespace

std::vector<RepMultiset> su2xsu2_candidates(GroupKind group) {
  int const n = group_rep_dimension(group);
  auto finite = enumerate_su2xsu2(n, group_flavor(group), true);
  std::stable_sort(finite.begin(), finite.end(),
                   [](RepMultiset const& a, RepMultiset const& b) {
                     return trivial_multiplicity(a) > trivial_multiplicity(b);
                   });
  std::vector<RepMultiset> out;
  for (auto const& r : finite) {
    out.push_back(r);
    if (r.swapped() != r) out.push_back(r.swapped());
  }
  for (int factor : {1, 2}) {
    for (auto const& f : su2_candidates(group)) {
      out.push_back(compose_projection(f, factor));
    }
  }
  out.push_back(RepMultiset::trivial(Source::SU2xSU2, n));
  return out;
}

namespace {

PairRecord make_record(GroupKind group, RepMultiset const& a, RepMultiset const& b) {
  PairRecord rec;
  rec.left_rep = a;
  rec.right_rep = b;
  rec.left = display_label(a, group);
  rec.right = display_label(b, group);
  rec.spec = ActionSpec{group, torus_weights(a, group), torus_weights(b, group)};
  rec.verdict = is_effectively_free(rec.spec);
  return rec;
}

std::pair<std::string, std::string> unordered(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

ClassificationReport classify_su2(GroupKind group) {
  ClassificationReport report;
  report.group = group;
  report.source = Source::SU2;
  auto const reps = su2_candidates(group);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      auto rec = make_record(group, reps[i], reps[j]);
      rec.category = PairCategory::Inhomogeneous;
      report.pairs.push_back(std::move(rec));
    }
  }
  auto const trivial = RepMultiset::trivial(Source::SU2, group_rep_dimension(group));
  for (auto const& r : reps) {
    auto rec = make_record(group, r, trivial);
    rec.category = PairCategory::Homogeneous;
    report.pairs.push_back(std::move(rec));
  }
  return report;
}

namespace {

// Whether an SU(2) action with the given labels is free, from the SU(2)
// classification. Unknown labels give nullopt.
std::optional<bool> su2_pair_free(
    std::map<std::pair<std::string, std::string>, bool> const& table,
    std::optional<std::string> const& a, std::optional<std::string> const& b) {
  if (!a || !b) return std::nullopt;
  if (*a == "trivial" && *b == "trivial") return false;
  if (*a == *b) return false;
  auto it = table.find(unordered(*a, *b));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace

ClassificationReport classify_su2xsu2(GroupKind group) {
  ClassificationReport report;
  report.group = group;
  report.source = Source::SU2xSU2;

  std::map<std::pair<std::string, std::string>, bool> su2_free;
  for (auto const& p : classify_su2(group).pairs) {
    su2_free[unordered(p.left, p.right)] = p.verdict.is_free();
  }

  auto const cands = su2xsu2_candidates(group);
  auto index_of = [&](RepMultiset const& r) {
    auto it = std::find(cands.begin(), cands.end(), r);
    if (it == cands.end()) {
      throw std::logic_error("classify_su2xsu2: candidate list not closed under swap");
    }
    return static_cast<std::size_t>(it - cands.begin());
  };

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      std::size_t const si = index_of(cands[i].swapped());
      std::size_t const sj = index_of(cands[j].swapped());
      auto const key = std::min(std::pair(i, j), std::pair(std::min(si, sj), std::max(si, sj)));
      if (!seen.insert(key).second) continue;

      auto const& a = cands[key.first];
      auto const& b = cands[key.second];
      auto rec = make_record(group, a, b);
      if (a.is_trivial() || b.is_trivial()) {
        rec.category = PairCategory::Homogeneous;
      } else if (!a.has_finite_kernel() && !b.has_finite_kernel() &&
                 a.depends_on_first() == b.depends_on_first()) {
        rec.category = PairCategory::Rank1Equivalent;
      } else {
        rec.category = PairCategory::Inhomogeneous;
        for (auto const& r : restriction_prune(rec.spec)) {
          auto const free = su2_pair_free(su2_free, r.left_label, r.right_label);
          if (free && !*free) {
            rec.pruned_by = std::string(restriction_name(r.which)) + ": (" +
                            *r.left_label + ", " + *r.right_label + ")";
            break;
          }
        }
        if (group == GroupKind::SPIN7 && rec.verdict.is_free()) {
          rec.descent = descent_analysis(rec.spec);
        }
      }
      report.pairs.push_back(std::move(rec));
    }
  }
  return report;
}

ClassificationReport classify(GroupKind group, Source source) {
  return source == Source::SU2 ? classify_su2(group) : classify_su2xsu2(group);
}

std::vector<Table1Row> const& table1_rows(GroupKind group) {
  static std::vector<Table1Row> const so7{
      {1, "(proj1:A, 2phi10+phi02)",
       int_matrix({{2, 0}, {0, 0}, {0, 0}}), int_matrix({{0, 2}, {1, 0}, {1, 0}})},
      {2, "(proj1:A, proj2:B)",
       int_matrix({{2, 0}, {0, 0}, {0, 0}}), int_matrix({{0, 1}, {0, 1}, {0, 0}})},
      {3, "(proj1:A, proj2:D)",
       int_matrix({{2, 0}, {0, 0}, {0, 0}}), int_matrix({{0, 2}, {0, 2}, {0, 0}})},
      {4, "(proj1:A, proj2:E)",
       int_matrix({{2, 0}, {0, 0}, {0, 0}}), int_matrix({{0, 2}, {0, 1}, {0, 1}})},
      {5, "(proj1:A, phi11+phi20)",
       int_matrix({{2, 0}, {0, 0}, {0, 0}}), int_matrix({{1, 1}, {1, -1}, {2, 0}})},
      {6, "(proj1:A, phi11+phi02)",
       int_matrix({{2, 0}, {0, 0}, {0, 0}}), int_matrix({{1, 1}, {1, -1}, {0, 2}})},
      {7, "(proj1:A, proj2:F)",
       int_matrix({{2, 0}, {0, 0}, {0, 0}}), int_matrix({{0, 6}, {0, 4}, {0, 2}})},
      {8, "(phi20+2phi01, proj1:D)",
       int_matrix({{2, 0}, {0, 1}, {0, 1}}), int_matrix({{2, 0}, {2, 0}, {0, 0}})},
      {9, "(phi00+phi20+phi02, proj1:E)",
       int_matrix({{2, 0}, {0, 2}, {0, 0}}), int_matrix({{2, 0}, {1, 0}, {1, 0}})},
      {10, "(proj1:C, proj2:E)",
       int_matrix({{4, 0}, {2, 0}, {0, 0}}), int_matrix({{0, 2}, {0, 1}, {0, 1}})},
  };
  static std::vector<Table1Row> const su4{
      {1, "(proj1:2phi1, proj2:2phi0+phi1)",
       int_matrix({{1, 0}, {-1, 0}, {1, 0}, {-1, 0}}),
       int_matrix({{0, 1}, {0, -1}, {0, 0}, {0, 0}})},
      {2, "(proj1:2phi1, proj2:phi0+phi2)",
       int_matrix({{1, 0}, {-1, 0}, {1, 0}, {-1, 0}}),
       int_matrix({{0, 2}, {0, 0}, {0, -2}, {0, 0}})},
  };
  return group == GroupKind::SU4 ? su4 : so7;
}

namespace {

IntMatrix swap_columns(IntMatrix m) {
  if (m.cols() == 2) m.swap_cols(0, 1);
  return m;
}

bool row_matches(GroupKind g, IntMatrix const& A, IntMatrix const& B, Table1Row const& row) {
  for (bool flip : {false, true}) {
    IntMatrix const& X = flip ? B : A;
    IntMatrix const& Y = flip ? A : B;
    for (bool cols : {false, true}) {
      IntMatrix const x = cols ? swap_columns(X) : X;
      IntMatrix const y = cols ? swap_columns(Y) : Y;
      if (weyl_equivalent(g, x, row.left) && weyl_equivalent(g, y, row.right)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Table1Match verify_table1(ClassificationReport const& report) {
  Table1Match out;
  if (report.source != Source::SU2xSU2) {
    out.problems.push_back("report is not an SU(2)^2 classification");
    return out;
  }
  GroupKind const g = report.group == GroupKind::SU4 ? GroupKind::SU4 : GroupKind::SO7;
  auto const& rows = table1_rows(g);
  std::map<int, std::vector<std::size_t>> by_row;
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    auto const& p = report.pairs[k];
    if (p.category != PairCategory::Inhomogeneous || !p.verdict.is_free()) continue;
    IntMatrix A = p.spec.left.weights;
    IntMatrix B = p.spec.right.weights;
    if (report.group == GroupKind::SPIN7) {
      A = spin7_project(p.spec.left).weights;
      B = spin7_project(p.spec.right).weights;
    }
    std::vector<int> hits;
    for (auto const& row : rows) {
      if (row_matches(g, A, B, row)) {
        hits.push_back(row.number);
        by_row[row.number].push_back(k);
      }
    }
    if (hits.empty()) {
      out.problems.push_back("free pair (" + p.left + ", " + p.right +
                             ") matches no expected row");
    } else if (hits.size() > 1) {
      out.problems.push_back("free pair (" + p.left + ", " + p.right +
                             ") matches several rows");
    }
  }
  for (auto const& row : rows) {
    auto const it = by_row.find(row.number);
    if (it == by_row.end()) {
      out.problems.push_back("row " + std::to_string(row.number) + " " + row.description +
                             " has no free pair");
    } else if (it->second.size() > 1) {
      out.problems.push_back("row " + std::to_string(row.number) + " " + row.description +
                             " matched by " + std::to_string(it->second.size()) + " pairs");
    } else {
      out.matches.emplace_back(row.number, it->second.front());
    }
  }
  out.ok = out.problems.empty();
  return out;
}

}  // namespace biquotient
