#include "biquotient/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace biquotient {

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm,
                                     std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) {
    throw std::invalid_argument("SignedPermutation: size mismatch");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) {
      throw std::invalid_argument("SignedPermutation: not a permutation");
    }
    seen[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("SignedPermutation: signs must be +-1");
    }
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return {std::move(p), std::vector<int>(n, 1)};
}

std::size_t SignedPermutation::negations() const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), -1));
}

TorusPoint SignedPermutation::act(TorusPoint const& x) const {
  if (x.size() != size()) {
    throw std::invalid_argument("SignedPermutation::act: dimension mismatch");
  }
  std::vector<Rational> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = signs_[i] < 0 ? Rational(-x[perm_[i]]) : x[perm_[i]];
  }
  return TorusPoint(std::move(out));
}

IntMatrix SignedPermutation::act(IntMatrix const& weights) const {
  if (weights.rows() != size()) {
    throw std::invalid_argument("SignedPermutation::act: row count mismatch");
  }
  IntMatrix out(weights.rows(), weights.cols());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < weights.cols(); ++j) {
      out(i, j) = signs_[i] * weights(perm_[i], j);
    }
  }
  return out;
}

std::vector<Integer> SignedPermutation::act(std::vector<Integer> const& x) const {
  std::vector<Integer> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = signs_[i] * x[perm_[i]];
  }
  return out;
}

std::vector<Integer> SignedPermutation::pullback(std::vector<Integer> const& form) const {
  std::vector<Integer> out(size(), Integer(0));
  for (std::size_t i = 0; i < size(); ++i) {
    out[perm_[i]] = signs_[i] * form[i];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<std::size_t> q(size());
  std::vector<int> t(size());
  for (std::size_t i = 0; i < size(); ++i) {
    q[perm_[i]] = i;
  }
  for (std::size_t j = 0; j < size(); ++j) {
    t[j] = signs_[q[j]];
  }
  return {std::move(q), std::move(t)};
}

IntMatrix SignedPermutation::matrix() const {
  IntMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    m(i, perm_[i]) = signs_[i];
  }
  return m;
}

SignedPermutation operator*(SignedPermutation const& a, SignedPermutation const& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("SignedPermutation: size mismatch in product");
  }
  std::vector<std::size_t> p(a.size());
  std::vector<int> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    p[i] = b.perm_[a.perm_[i]];
    s[i] = a.signs_[i] * b.signs_[a.perm_[i]];
  }
  return {std::move(p), std::move(s)};
}

std::string SignedPermutation::to_string() const {
  // Image of the coordinate vector, e.g. "(-x2, -x1, -x4, -x3)".
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    out += (i == 0 ? "" : ", ");
    out += (signs_[i] < 0 ? "-x" : "x") + std::to_string(perm_[i] + 1);
  }
  return out + ")";
}

std::vector<SignedPermutation> all_signed_permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> s(n);
      for (std::size_t i = 0; i < n; ++i) {
        s[i] = (mask >> i) & 1U ? -1 : 1;
      }
      out.emplace_back(p, std::move(s));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SignedPermutation> even_signed_permutations(std::size_t n) {
  auto all = all_signed_permutations(n);
  std::erase_if(all, [](SignedPermutation const& w) { return w.negations() % 2 != 0; });
  return all;
}

std::vector<SignedPermutation> permutations(std::size_t n) {
  auto all = all_signed_permutations(n);
  std::erase_if(all, [](SignedPermutation const& w) { return w.negations() != 0; });
  return all;
}

std::vector<SignedPermutation> generate_group(
    std::vector<SignedPermutation> const& generators) {
  if (generators.empty()) {
    return {};
  }
  std::set<SignedPermutation> seen{SignedPermutation::identity(generators.front().size())};
  std::vector<SignedPermutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (auto const& x : frontier) {
      for (auto const& g : generators) {
        auto y = g * x;
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string_view group_name(GroupKind g) {
  switch (g) {
    case GroupKind::SU4:
      return "su4";
    case GroupKind::SO7:
      return "so7";
    case GroupKind::SPIN7:
      return "spin7";
  }
  return "?";
}

GroupKind parse_group(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "su4") return GroupKind::SU4;
  if (lower == "so7") return GroupKind::SO7;
  if (lower == "spin7") return GroupKind::SPIN7;
  throw std::invalid_argument("unknown group '" + std::string(name) +
                              "' (expected su4, so7 or spin7)");
}

namespace {

Rational linear_form(std::vector<Integer> const& form, TorusPoint const& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < form.size(); ++i) {
    s += Rational(form[i]) * p[i];
  }
  return mod_one(s);
}

std::vector<Integer> normalize_sign(std::vector<Integer> form) {
  auto it = std::find_if(form.begin(), form.end(), [](Integer const& x) { return x != 0; });
  if (it != form.end() && *it < 0) {
    for (auto& x : form) {
      x = -x;
    }
  }
  return form;
}

}  // namespace

bool GroupModel::satisfies_relation(TorusPoint const& p) const {
  if (p.size() != angle_count) {
    return false;
  }
  return !torus_relation || linear_form(*torus_relation, p) == 0;
}

bool GroupModel::is_central(TorusPoint const& p) const {
  return std::find(center.begin(), center.end(), p) != center.end();
}

GroupModel build_group_model(GroupKind kind) {
  GroupModel m;
  m.kind = kind;
  switch (kind) {
    case GroupKind::SU4: {
      m.name = "SU(4)";
      m.angle_count = 4;
      m.weyl = permutations(4);
      for (long k = 0; k < 4; ++k) {
        m.center.push_back(TorusPoint::from_fractions({{k, 4}, {k, 4}, {k, 4}, {k, 4}}));
      }
      m.torus_relation = std::vector<Integer>{1, 1, 1, 1};
      break;
    }
    case GroupKind::SO7: {
      m.name = "SO(7)";
      m.angle_count = 3;
      m.weyl = all_signed_permutations(3);
      m.center.emplace_back(3);
      break;
    }
    case GroupKind::SPIN7: {
      m.name = "Spin(7)";
      m.angle_count = 4;
      std::vector<Integer> const relation{1, -1, 1, -1};
      m.weyl = relation_stabilizer(relation, even_signed_permutations(4));
      m.center.emplace_back(4);
      m.center.push_back(TorusPoint::from_fractions({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
      m.torus_relation = relation;
      break;
    }
  }
  return m;
}

GroupModel const& group_model(GroupKind kind) {
  static GroupModel const su4 = build_group_model(GroupKind::SU4);
  static GroupModel const so7 = build_group_model(GroupKind::SO7);
  static GroupModel const spin7 = build_group_model(GroupKind::SPIN7);
  switch (kind) {
    case GroupKind::SU4:
      return su4;
    case GroupKind::SO7:
      return so7;
    case GroupKind::SPIN7:
      return spin7;
  }
  throw std::logic_error("unreachable");
}

std::optional<SignedPermutation> torus_conjugate(GroupModel const& model,
                                                 TorusPoint const& a,
                                                 TorusPoint const& b) {
  if (!model.satisfies_relation(a) || !model.satisfies_relation(b)) {
    throw std::invalid_argument("torus_conjugate: point off the " + model.name +
                                " maximal torus");
  }
  for (auto const& w : model.weyl) {
    if (w.act(a) == b) {
      return w;
    }
  }
  return std::nullopt;
}

std::size_t orbit_of_relation(std::vector<Integer> const& form,
                              std::vector<SignedPermutation> const& group) {
  std::set<std::vector<Integer>> images;
  for (auto const& w : group) {
    images.insert(normalize_sign(w.pullback(form)));
  }
  return images.size();
}

std::vector<SignedPermutation> relation_stabilizer(
    std::vector<Integer> const& form, std::vector<SignedPermutation> const& group) {
  auto const target = normalize_sign(form);
  std::vector<SignedPermutation> out;
  for (auto const& w : group) {
    if (normalize_sign(w.pullback(form)) == target) {
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace biquotient
