#include "biquotient/reps.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "biquotient/spin7.hpp"

namespace biquotient {

std::string_view source_name(Source s) {
  return s == Source::SU2 ? "su2" : "su2xsu2";
}

Source parse_source(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "su2") return Source::SU2;
  if (lower == "su2xsu2" || lower == "su2^2") return Source::SU2xSU2;
  throw std::invalid_argument("unknown source '" + std::string(name) +
                              "' (expected su2 or su2xsu2)");
}

std::size_t parameter_count(Source s) { return s == Source::SU2 ? 1 : 2; }

namespace {

auto order_key(Su2xSu2Irrep const& r) { return std::tuple(r.i + r.j, -r.i); }

bool canonical_less(Su2xSu2Irrep const& a, Su2xSu2Irrep const& b) {
  return order_key(a) < order_key(b);
}

}  // namespace

RepMultiset::RepMultiset(Source source, std::vector<Component> components)
    : source_(source) {
  std::map<std::pair<int, int>, int> merged;
  for (auto const& c : components) {
    if (c.irrep.i < 0 || c.irrep.j < 0 || c.multiplicity < 0) {
      throw RepError("RepMultiset: negative index or multiplicity");
    }
    if (source == Source::SU2 && c.irrep.j != 0) {
      throw RepError("RepMultiset: SU(2) representation with a second index");
    }
    if (c.multiplicity > 0) {
      merged[{c.irrep.i, c.irrep.j}] += c.multiplicity;
    }
  }
  for (auto const& [ij, m] : merged) {
    components_.push_back({{ij.first, ij.second}, m});
  }
  std::sort(components_.begin(), components_.end(),
            [](Component const& a, Component const& b) {
              return canonical_less(a.irrep, b.irrep);
            });
}

RepMultiset RepMultiset::trivial(Source source, int dimension) {
  return {source, {{{0, 0}, dimension}}};
}

RepMultiset RepMultiset::su2(std::vector<std::pair<int, int>> const& index_mult) {
  std::vector<Component> comps;
  for (auto [i, m] : index_mult) {
    comps.push_back({{i, 0}, m});
  }
  return {Source::SU2, std::move(comps)};
}

RepMultiset RepMultiset::su2xsu2(std::vector<std::tuple<int, int, int>> const& ijm) {
  std::vector<Component> comps;
  for (auto [i, j, m] : ijm) {
    comps.push_back({{i, j}, m});
  }
  return {Source::SU2xSU2, std::move(comps)};
}

int RepMultiset::dimension() const {
  int d = 0;
  for (auto const& c : components_) {
    d += c.multiplicity * c.irrep.dimension();
  }
  return d;
}

bool RepMultiset::is_trivial() const {
  return std::all_of(components_.begin(), components_.end(), [](Component const& c) {
    return c.irrep.i == 0 && c.irrep.j == 0;
  });
}

bool RepMultiset::is_orthogonal() const {
  return std::all_of(components_.begin(), components_.end(), [](Component const& c) {
    return c.irrep.is_orthogonal() || c.multiplicity % 2 == 0;
  });
}

bool RepMultiset::depends_on_first() const {
  return std::any_of(components_.begin(), components_.end(),
                     [](Component const& c) { return c.irrep.i > 0; });
}

bool RepMultiset::depends_on_second() const {
  return std::any_of(components_.begin(), components_.end(),
                     [](Component const& c) { return c.irrep.j > 0; });
}

bool RepMultiset::has_finite_kernel() const {
  if (source_ == Source::SU2) {
    return depends_on_first();
  }
  return depends_on_first() && depends_on_second();
}

RepMultiset RepMultiset::swapped() const {
  std::vector<Component> comps;
  for (auto const& c : components_) {
    comps.push_back({{c.irrep.j, c.irrep.i}, c.multiplicity});
  }
  return {source_, std::move(comps)};
}

std::vector<std::vector<int>> RepMultiset::weights() const {
  std::vector<std::vector<int>> out;
  for (auto const& c : components_) {
    for (int m = 0; m < c.multiplicity; ++m) {
      for (int a = c.irrep.i; a >= -c.irrep.i; a -= 2) {
        if (source_ == Source::SU2) {
          out.push_back({a});
          continue;
        }
        for (int b = c.irrep.j; b >= -c.irrep.j; b -= 2) {
          out.push_back({a, b});
        }
      }
    }
  }
  return out;
}

std::string RepMultiset::to_string() const {
  if (components_.empty()) {
    return "0";
  }
  std::string out;
  for (auto const& c : components_) {
    if (!out.empty()) {
      out += "+";
    }
    if (c.multiplicity > 1) {
      out += std::to_string(c.multiplicity);
    }
    out += "phi" + std::to_string(c.irrep.i);
    if (source_ == Source::SU2xSU2) {
      out += std::to_string(c.irrep.j);
    }
  }
  return out;
}

bool operator<(RepMultiset const& a, RepMultiset const& b) {
  if (a.source_ != b.source_) {
    return a.source_ < b.source_;
  }
  auto key = [](RepMultiset const& r) {
    std::vector<std::tuple<int, int, int>> k;
    for (auto const& c : r.components_) {
      auto [s, mi] = order_key(c.irrep);
      k.emplace_back(s, mi, c.multiplicity);
    }
    return k;
  };
  return key(a) < key(b);
}

RepMultiset compose_projection(RepMultiset const& su2_rep, int factor) {
  if (su2_rep.source() != Source::SU2) {
    throw RepError("compose_projection: expected an SU(2) representation");
  }
  if (factor != 1 && factor != 2) {
    throw RepError("compose_projection: factor must be 1 or 2");
  }
  std::vector<RepMultiset::Component> comps;
  for (auto const& c : su2_rep.components()) {
    Su2xSu2Irrep ir = factor == 1 ? Su2xSu2Irrep{c.irrep.i, 0} : Su2xSu2Irrep{0, c.irrep.i};
    comps.push_back({ir, c.multiplicity});
  }
  return {Source::SU2xSU2, std::move(comps)};
}

std::string_view restriction_name(Restriction r) {
  switch (r) {
    case Restriction::Left:
      return "phi=0";
    case Restriction::Right:
      return "theta=0";
    case Restriction::Diagonal:
      return "theta=phi";
  }
  return "?";
}

RepMultiset restrict_rep(RepMultiset const& rep, Restriction which) {
  if (rep.source() != Source::SU2xSU2) {
    throw RepError("restrict_rep: expected an SU(2)^2 representation");
  }
  std::vector<RepMultiset::Component> comps;
  for (auto const& c : rep.components()) {
    int const i = c.irrep.i;
    int const j = c.irrep.j;
    switch (which) {
      case Restriction::Left:
        comps.push_back({{i, 0}, c.multiplicity * (j + 1)});
        break;
      case Restriction::Right:
        comps.push_back({{j, 0}, c.multiplicity * (i + 1)});
        break;
      case Restriction::Diagonal:
        for (int k = std::abs(i - j); k <= i + j; k += 2) {
          comps.push_back({{k, 0}, c.multiplicity});
        }
        break;
    }
  }
  return {Source::SU2, std::move(comps)};
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n >= 0) {
    rec(n, n);
  }
  return out;
}

namespace {

RepMultiset partition_rep(std::vector<int> const& parts) {
  std::vector<std::pair<int, int>> im;
  for (int p : parts) {
    im.emplace_back(p - 1, 1);
  }
  return RepMultiset::su2(im);
}

std::vector<std::pair<int, int>> swap_key(RepMultiset const& r) {
  std::vector<std::pair<int, int>> k;
  for (auto const& c : r.components()) {
    for (int m = 0; m < c.multiplicity; ++m) {
      k.emplace_back(c.irrep.j, c.irrep.i);
    }
  }
  std::sort(k.rbegin(), k.rend());
  return k;
}

RepMultiset swap_representative(RepMultiset const& r) {
  auto s = r.swapped();
  return swap_key(s) > swap_key(r) ? s : r;
}

}  // namespace

std::vector<RepMultiset> enumerate_su2_complex(int n) {
  std::vector<RepMultiset> out;
  for (auto const& p : partitions(n)) {
    out.push_back(partition_rep(p));
  }
  return out;
}

std::vector<RepMultiset> enumerate_su2_orthogonal(int n) {
  std::vector<RepMultiset> out;
  for (auto const& p : partitions(n)) {
    auto r = partition_rep(p);
    if (r.is_orthogonal()) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<RepMultiset> enumerate_su2xsu2(int n, RepFlavor flavor,
                                           bool finite_kernel_only) {
  std::vector<Su2xSu2Irrep> irreps;
  for (int i = 0; i + 1 <= n; ++i) {
    for (int j = 0; (i + 1) * (j + 1) <= n; ++j) {
      irreps.push_back({i, j});
    }
  }
  std::sort(irreps.begin(), irreps.end(), canonical_less);

  std::set<RepMultiset> found;
  std::vector<RepMultiset::Component> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
    if (remaining == 0) {
      RepMultiset r(Source::SU2xSU2, current);
      if (flavor == RepFlavor::Orthogonal && !r.is_orthogonal()) return;
      if (finite_kernel_only && !r.has_finite_kernel()) return;
      found.insert(swap_representative(r));
      return;
    }
    if (idx == irreps.size()) {
      return;
    }
    int const d = irreps[idx].dimension();
    for (int m = remaining / d; m >= 0; --m) {
      if (m > 0) {
        current.push_back({irreps[idx], m});
      }
      rec(idx + 1, remaining - m * d);
      if (m > 0) {
        current.pop_back();
      }
    }
  };
  if (n >= 0) {
    rec(0, n);
  }
  return {found.begin(), found.end()};
}

namespace {

IntMatrix rows_to_matrix(std::vector<std::vector<int>> const& rows, std::size_t nrows,
                         std::size_t ncols) {
  IntMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

bool lex_positive(std::vector<int> const& w) {
  for (int x : w) {
    if (x != 0) return x > 0;
  }
  return false;
}

}  // namespace

TorusMap torus_weights(RepMultiset const& rep, GroupKind group) {
  std::size_t const r = parameter_count(rep.source());
  int const dim = rep.dimension();
  int const expected = group_rep_dimension(group);
  if (dim != expected) {
    throw RepError("representation " + rep.to_string() + " has dimension " +
                   std::to_string(dim) + ", expected " + std::to_string(expected));
  }
  auto w = rep.weights();
  if (group == GroupKind::SU4) {
    std::sort(w.rbegin(), w.rend());
    return {group, r, rows_to_matrix(w, 4, r)};
  }
  if (!rep.is_orthogonal()) {
    throw RepError("representation " + rep.to_string() +
                   " is not orthogonal: a symplectic constituent has odd multiplicity");
  }
  std::map<std::vector<int>, int> count;
  for (auto const& v : w) {
    count[v] += 1;
  }
  std::vector<std::vector<int>> slots;
  for (auto const& [v, c] : count) {
    if (!lex_positive(v)) continue;
    std::vector<int> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](int x) { return -x; });
    if (count[neg] != c) {
      throw RepError("weights of " + rep.to_string() + " are not symmetric");
    }
    slots.insert(slots.end(), static_cast<std::size_t>(c), v);
  }
  std::sort(slots.rbegin(), slots.rend());
  TorusMap so7{GroupKind::SO7, r, rows_to_matrix(slots, 3, r)};
  return group == GroupKind::SPIN7 ? spin7_lift(so7) : so7;
}

TorusMap spin7_lift(TorusMap const& so7_map) {
  if (so7_map.group != GroupKind::SO7) {
    throw RepError("spin7_lift: expected an SO(7) map");
  }
  IntMatrix doubled = spin_to_so8_weights() * so7_map.weights;
  IntMatrix out(doubled.rows(), doubled.cols());
  for (std::size_t i = 0; i < doubled.rows(); ++i) {
    for (std::size_t j = 0; j < doubled.cols(); ++j) {
      if (!mpz_even_p(doubled(i, j).get_mpz_t())) {
        throw RepError("spin7_lift: non-integral lift");
      }
      out(i, j) = doubled(i, j) / 2;
    }
  }
  return {GroupKind::SPIN7, so7_map.params, out};
}

TorusMap spin7_project(TorusMap const& spin7_map) {
  if (spin7_map.group != GroupKind::SPIN7) {
    throw RepError("spin7_project: expected a Spin(7) map");
  }
  return {GroupKind::SO7, spin7_map.params, so8_to_so7_weights() * spin7_map.weights};
}

TorusMap restrict_map(TorusMap const& map, Restriction which) {
  if (map.params != 2) {
    throw RepError("restrict_map: expected a two-parameter map");
  }
  IntMatrix out(map.weights.rows(), 1);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    switch (which) {
      case Restriction::Left:
        out(i, 0) = map.weights(i, 0);
        break;
      case Restriction::Right:
        out(i, 0) = map.weights(i, 1);
        break;
      case Restriction::Diagonal:
        out(i, 0) = map.weights(i, 0) + map.weights(i, 1);
        break;
    }
  }
  return {map.group, 1, out};
}

bool weyl_equivalent(GroupKind group, IntMatrix const& a, IntMatrix const& b) {
  auto const& model = group_model(group);
  if (a.rows() != model.angle_count || b.rows() != model.angle_count ||
      a.cols() != b.cols()) {
    return false;
  }
  return std::any_of(model.weyl.begin(), model.weyl.end(),
                     [&](SignedPermutation const& w) { return w.act(a) == b; });
}

std::vector<std::pair<char, RepMultiset>> const& named_so7_reps() {
  static std::vector<std::pair<char, RepMultiset>> const reps{
      {'A', RepMultiset::su2({{0, 4}, {2, 1}})},
      {'B', RepMultiset::su2({{0, 3}, {1, 2}})},
      {'C', RepMultiset::su2({{0, 2}, {4, 1}})},
      {'D', RepMultiset::su2({{0, 1}, {2, 2}})},
      {'E', RepMultiset::su2({{1, 2}, {2, 1}})},
      {'F', RepMultiset::su2({{6, 1}})},
  };
  return reps;
}

std::optional<char> so7_label(RepMultiset const& su2_rep) {
  for (auto const& [label, rep] : named_so7_reps()) {
    if (rep == su2_rep) return label;
  }
  return std::nullopt;
}

std::optional<RepMultiset> rep_for_label(char label) {
  for (auto const& [l, rep] : named_so7_reps()) {
    if (l == label) return rep;
  }
  return std::nullopt;
}

std::optional<std::string> classify_su2_map(TorusMap const& map) {
  if (map.params != 1) {
    return std::nullopt;
  }
  if (map.is_trivial()) {
    return "trivial";
  }
  if (map.group == GroupKind::SU4) {
    for (auto const& rep : enumerate_su2_complex(4)) {
      if (weyl_equivalent(GroupKind::SU4, torus_weights(rep, GroupKind::SU4).weights,
                          map.weights)) {
        return rep.to_string();
      }
    }
    return std::nullopt;
  }
  TorusMap const so7 = map.group == GroupKind::SPIN7 ? spin7_project(map) : map;
  for (auto const& [label, rep] : named_so7_reps()) {
    if (weyl_equivalent(GroupKind::SO7, torus_weights(rep, GroupKind::SO7).weights,
                        so7.weights)) {
      return std::string(1, label);
    }
  }
  return std::nullopt;
}

namespace {

std::string su2_label(RepMultiset const& rep, GroupKind group) {
  if (rep.is_trivial()) {
    return "trivial";
  }
  if (group != GroupKind::SU4) {
    if (auto l = so7_label(rep)) {
      return std::string(1, *l);
    }
  }
  return rep.to_string();
}

}  // namespace

std::string display_label(RepMultiset const& rep, GroupKind group) {
  if (rep.source() == Source::SU2 || rep.is_trivial()) {
    return su2_label(rep, group);
  }
  if (!rep.depends_on_second()) {
    return "proj1:" + su2_label(restrict_rep(rep, Restriction::Left), group);
  }
  if (!rep.depends_on_first()) {
    return "proj2:" + su2_label(restrict_rep(rep, Restriction::Right), group);
  }
  return rep.to_string();
}

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  RepMultiset parse_sum(Source source) {
    std::vector<RepMultiset::Component> comps;
    skip_space();
    if (at_end()) {
      fail("empty representation");
    }
    while (true) {
      comps.push_back(parse_term(source));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != ',') {
        fail(std::string("unexpected '") + peek() + "'");
      }
      ++pos_;
      skip_space();
      if (at_end()) {
        fail("expected a term after separator");
      }
    }
    return {source, std::move(comps)};
  }

  [[noreturn]] void fail(std::string const& message) const {
    throw RepSpecError(message, offset_ + pos_);
  }

 private:
  RepMultiset::Component parse_term(Source source) {
    int mult = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mult = read_number();
      if (mult == 0) {
        fail("multiplicity must be positive");
      }
    }
    if (text_.substr(pos_, 3) != "phi") {
      fail("expected 'phi'");
    }
    pos_ += 3;
    std::size_t const start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.empty()) {
      fail("expected irreducible index after 'phi'");
    }
    if (source == Source::SU2) {
      if (digits.size() > 3) {
        fail("index too large");
      }
      return {{std::stoi(std::string(digits)), 0}, mult};
    }
    if (digits.size() != 2) {
      pos_ = start;
      fail("SU(2)^2 irreducible needs two single-digit indices, e.g. phi11");
    }
    return {{digits[0] - '0', digits[1] - '0'}, mult};
  }

  int read_number() {
    int v = 0;
    std::size_t digits = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (++digits > 3) {
        fail("multiplicity too large");
      }
      v = 10 * v + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  offset = 0;
  while (offset < s.size() && std::isspace(static_cast<unsigned char>(s[offset]))) {
    ++offset;
  }
  std::size_t end = s.size();
  while (end > offset && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(offset, end - offset);
}

// SU(2)-level spec: a label, "trivial", or a phi sum.
RepMultiset parse_su2_part(std::string_view body, std::size_t offset, int dimension) {
  if (body == "trivial") {
    return RepMultiset::trivial(Source::SU2, dimension);
  }
  if (body.size() == 1 && std::isupper(static_cast<unsigned char>(body[0]))) {
    if (auto r = rep_for_label(body[0])) {
      return *r;
    }
    throw RepSpecError("unknown label '" + std::string(body) + "' (expected A..F)", offset);
  }
  return SpecParser(body, offset).parse_sum(Source::SU2);
}

}  // namespace

RepMultiset parse_rep_spec(std::string_view spec, Source source, int dimension) {
  std::size_t offset = 0;
  std::string_view body = trim(spec, offset);
  RepMultiset out;
  if (body.substr(0, 4) == "proj") {
    if (body.size() < 6 || (body[4] != '1' && body[4] != '2') || body[5] != ':') {
      throw RepSpecError("expected 'proj1:' or 'proj2:'", offset + 4);
    }
    if (source != Source::SU2xSU2) {
      throw RepSpecError("projections need source su2xsu2", offset);
    }
    std::size_t inner_offset = 0;
    std::string_view inner = trim(body.substr(6), inner_offset);
    auto su2 = parse_su2_part(inner, offset + 6 + inner_offset, dimension);
    out = compose_projection(su2, body[4] - '0');
  } else if (body == "trivial") {
    out = RepMultiset::trivial(source, dimension);
  } else if (body.size() == 1 && std::isupper(static_cast<unsigned char>(body[0]))) {
    if (source != Source::SU2) {
      throw RepSpecError("label needs a 'proj1:' or 'proj2:' prefix for source su2xsu2",
                         offset);
    }
    out = parse_su2_part(body, offset, dimension);
  } else {
    out = SpecParser(body, offset).parse_sum(source);
  }
  if (out.dimension() != dimension) {
    throw RepSpecError("representation " + out.to_string() + " has dimension " +
                           std::to_string(out.dimension()) + ", expected " +
                           std::to_string(dimension),
                       offset);
  }
  return out;
}

Source infer_source(std::string_view spec, int dimension) {
  if (spec.find("proj") != std::string_view::npos) {
    return Source::SU2xSU2;
  }
  try {
    (void)parse_rep_spec(spec, Source::SU2xSU2, dimension);
    std::size_t offset = 0;
    if (trim(spec, offset) == "trivial") {
      return Source::SU2;
    }
    return Source::SU2xSU2;
  } catch (RepSpecError const&) {
    return Source::SU2;
  }
}

int group_rep_dimension(GroupKind group) { return group == GroupKind::SU4 ? 4 : 7; }

RepFlavor group_flavor(GroupKind group) {
  return group == GroupKind::SU4 ? RepFlavor::Complex : RepFlavor::Orthogonal;
}

}  // namespace biquotient
