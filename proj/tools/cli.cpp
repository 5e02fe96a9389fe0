#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "biquotient/classify.hpp"
#include "biquotient/freeness.hpp"
#include "biquotient/reps.hpp"
#include "biquotient/spin7.hpp"
#include "biquotient/weyl.hpp"

#ifndef BIQUOTIENT_VERSION
#define BIQUOTIENT_VERSION "0.0.0"
#endif

namespace biquotient::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(Integer const& x) {
  if (x.fits_slong_p()) {
    return x.get_si();
  }
  return x.get_str();
}

Json to_json(IntMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(TorusPoint const& p) {
  Json out = Json::array();
  for (auto const& c : p.coords()) {
    out.push_back(to_string(c));
  }
  return out;
}

Json to_json(Witness const& w) {
  return Json{{"parameter", to_json(w.parameter)},
              {"weyl", w.weyl.to_string()},
              {"left_image", to_json(w.left_image)},
              {"right_image", to_json(w.right_image)},
              {"order", to_json(w.order)}};
}

Json to_json(FreenessVerdict const& v) {
  Json out{{"verdict", verdict_name(v.status)}};
  if (v.witness) {
    out["witness"] = to_json(*v.witness);
  }
  return out;
}

Json to_json(DescentResult const& d) {
  Json out{{"deck_in_image", d.deck_in_image}};
  if (d.deck_parameter) {
    out["deck_parameter"] = to_json(*d.deck_parameter);
    out["deck_side"] = d.deck_side;
  }
  out["so7_verdict"] = verdict_name(d.so7_verdict.status);
  if (d.so7_verdict.witness) {
    out["so7_witness"] = to_json(*d.so7_verdict.witness);
  }
  return out;
}

std::string matrix_cell(IntMatrix const& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? "," : "") << m(i, j);
    }
  }
  os << "]";
  return os.str();
}

// Plain left-aligned text table.
std::string render_table(std::vector<std::string> const& header,
                         std::vector<std::vector<std::string>> const& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (auto const& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  auto line = [&](std::vector<std::string> const& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c + 1 < r.size()) {
        os << std::left << std::setw(static_cast<int>(width[c] + 2)) << r[c];
      } else {
        os << r[c];
      }
    }
    os << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (auto const& r : rows) line(r);
  return os.str();
}

GroupKind group_arg(std::string const& s) {
  try {
    return parse_group(s);
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
}

Source source_arg(std::string const& s) {
  try {
    return parse_source(s);
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
}

Json document(std::string const& command, Json inputs, Json results) {
  return Json{{"command", command},
              {"version", BIQUOTIENT_VERSION},
              {"exact", true},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

struct Output {
  std::string text;
  int code = kSuccess;
};

Output enumerate_reps(std::string const& group_s, std::string const& source_s,
                      bool orthogonal, bool finite_kernel, std::string const& format) {
  GroupKind const g = group_arg(group_s);
  Source const src = source_arg(source_s);
  int const n = group_rep_dimension(g);
  RepFlavor const flavor = orthogonal ? RepFlavor::Orthogonal : group_flavor(g);
  std::vector<RepMultiset> reps;
  if (src == Source::SU2) {
    reps = flavor == RepFlavor::Orthogonal ? enumerate_su2_orthogonal(n)
                                           : enumerate_su2_complex(n);
    if (finite_kernel) {
      std::erase_if(reps, [](RepMultiset const& r) { return !r.has_finite_kernel(); });
    }
  } else {
    reps = enumerate_su2xsu2(n, flavor, finite_kernel);
  }

  Json list = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (auto const& r : reps) {
    TorusMap const w = torus_weights(r, g);
    Json item{{"rep", r.to_string()},
              {"label", display_label(r, g)},
              {"dimension", r.dimension()},
              {"orthogonal", r.is_orthogonal()},
              {"finite_kernel", r.has_finite_kernel()},
              {"weights", to_json(w.weights)}};
    std::string so7;
    if (g == GroupKind::SPIN7) {
      so7 = matrix_cell(spin7_project(w).weights);
      item["so7_weights"] = to_json(spin7_project(w).weights);
    }
    list.push_back(std::move(item));
    rows.push_back({r.to_string(), display_label(r, g), matrix_cell(w.weights), so7});
  }
  if (format == "json") {
    Json inputs{{"group", group_name(g)},
                {"source", source_name(src)},
                {"orthogonal", flavor == RepFlavor::Orthogonal},
                {"finite_kernel", finite_kernel}};
    return {document("enumerate-reps", inputs, Json{{"count", reps.size()}, {"reps", list}})
                    .dump(2) +
                "\n"};
  }
  std::vector<std::string> header{"rep", "label", "weights"};
  if (g == GroupKind::SPIN7) {
    header.emplace_back("so7 weights");
  } else {
    for (auto& r : rows) r.pop_back();
  }
  return {render_table(header, rows) + std::to_string(reps.size()) + " representations\n"};
}

RepMultiset rep_arg(std::string const& spec, Source src, int n) {
  try {
    return parse_rep_spec(spec, src, n);
  } catch (RepSpecError const& e) {
    throw UsageError("malformed rep-spec '" + spec + "': " + e.what());
  }
}

Output check_free(std::string const& group_s, std::string const& left_s,
                  std::string const& right_s, std::string const& source_s,
                  std::string const& expect, std::string const& format) {
  GroupKind const g = group_arg(group_s);
  int const n = group_rep_dimension(g);
  Source src = Source::SU2;
  if (source_s == "auto") {
    Source const a = infer_source(left_s, n);
    Source const b = infer_source(right_s, n);
    src = (a == Source::SU2xSU2 || b == Source::SU2xSU2) ? Source::SU2xSU2 : Source::SU2;
  } else {
    src = source_arg(source_s);
  }
  RepMultiset const left = rep_arg(left_s, src, n);
  RepMultiset const right = rep_arg(right_s, src, n);
  ActionSpec spec;
  try {
    spec = ActionSpec{g, torus_weights(left, g), torus_weights(right, g)};
  } catch (RepError const& e) {
    throw UsageError(e.what());
  }
  auto const verdict = is_effectively_free(spec);
  int code = kSuccess;
  if (!expect.empty() && (expect == "free") != verdict.is_free()) {
    code = kMismatch;
  }

  Json results{{"left", display_label(left, g)},
               {"right", display_label(right, g)},
               {"left_weights", to_json(spec.left.weights)},
               {"right_weights", to_json(spec.right.weights)}};
  Json const verdict_json = to_json(verdict);
  for (auto const& [k, v] : verdict_json.items()) results[k] = v;
  std::optional<DescentResult> descent;
  if (g == GroupKind::SPIN7 && verdict.is_free()) {
    descent = descent_analysis(spec);
    results["descent"] = to_json(*descent);
  }
  Json restrictions = Json::array();
  std::ostringstream text;
  if (src == Source::SU2xSU2) {
    for (auto const& r : restriction_prune(spec)) {
      restrictions.push_back(Json{{"restriction", restriction_name(r.which)},
                                  {"left", r.left_label.value_or("?")},
                                  {"right", r.right_label.value_or("?")}});
    }
    results["restrictions"] = restrictions;
  }
  if (format == "json") {
    Json inputs{{"group", group_name(g)},
                {"source", source_name(src)},
                {"left", left_s},
                {"right", right_s}};
    if (!expect.empty()) inputs["expect"] = expect;
    return {document("check-free", inputs, results).dump(2) + "\n", code};
  }
  text << "group:   " << group_model(g).name << "\n"
       << "left:    " << display_label(left, g) << "  " << matrix_cell(spec.left.weights)
       << "\n"
       << "right:   " << display_label(right, g) << "  "
       << matrix_cell(spec.right.weights) << "\n"
       << "verdict: " << verdict_name(verdict.status) << "\n";
  if (verdict.witness) {
    auto const& w = *verdict.witness;
    text << "witness: t = " << w.parameter << " (order " << w.order << ")\n"
         << "         f1(t) = " << w.left_image << ", f2(t) = " << w.right_image << "\n"
         << "         w = " << w.weyl.to_string() << "\n";
  }
  if (descent) {
    text << "descent: deck point " << (descent->deck_in_image ? "in image" : "not in image")
         << ", SO(7) verdict " << verdict_name(descent->so7_verdict.status) << "\n";
  }
  for (auto const& r : restrictions) {
    text << "restrict " << r["restriction"].get<std::string>() << ": ("
         << r["left"].get<std::string>() << ", " << r["right"].get<std::string>() << ")\n";
  }
  if (code == kMismatch) {
    text << "mismatch: expected " << expect << "\n";
  }
  return {text.str(), code};
}

Json pair_json(PairRecord const& p) {
  Json j{{"left", p.left},
         {"right", p.right},
         {"category", category_name(p.category)},
         {"verdict", verdict_name(p.verdict.status)}};
  if (p.verdict.witness) j["witness"] = to_json(*p.verdict.witness);
  if (p.pruned_by) j["pruned_by"] = *p.pruned_by;
  if (p.descent) j["descent"] = to_json(*p.descent);
  return j;
}

Output classify_cmd(std::string const& group_s, std::string const& source_s,
                    std::string const& format, bool audit) {
  GroupKind const g = group_arg(group_s);
  Source const src = source_arg(source_s);
  auto const report = classify(g, src);
  auto const counts = report.counts();
  std::optional<Table1Match> table1;
  if (src == Source::SU2xSU2) {
    table1 = verify_table1(report);
  }
  int const code = table1 && !table1->ok ? kMismatch : kSuccess;

  if (format == "json") {
    Json pairs = Json::array();
    for (auto const& p : report.pairs) {
      if (audit || (p.category == PairCategory::Inhomogeneous && p.verdict.is_free())) {
        pairs.push_back(pair_json(p));
      }
    }
    Json results{{"group", group_name(g)},
                 {"source", source_name(src)},
                 {"pairs", pairs},
                 {"counts",
                  {{"free_inhomogeneous", counts.free_inhomogeneous},
                   {"homogeneous", counts.homogeneous},
                   {"not_free", counts.not_free}}}};
    if (table1) {
      Json matches = Json::array();
      for (auto const& [row, idx] : table1->matches) {
        matches.push_back(Json{{"row", row},
                               {"left", report.pairs[idx].left},
                               {"right", report.pairs[idx].right}});
      }
      results["table1"] = Json{{"ok", table1->ok}, {"matches", matches},
                               {"problems", table1->problems}};
    }
    Json inputs{{"group", group_name(g)}, {"source", source_name(src)}, {"audit", audit}};
    return {document("classify", inputs, results).dump(2) + "\n", code};
  }

  std::vector<std::vector<std::string>> rows;
  for (auto const& p : report.pairs) {
    bool const free_inh = p.category == PairCategory::Inhomogeneous && p.verdict.is_free();
    if (!audit && !free_inh) continue;
    std::string witness;
    if (p.verdict.witness) {
      witness = p.verdict.witness->parameter.to_string() + " " +
                p.verdict.witness->weyl.to_string();
    }
    std::string descent;
    if (p.descent) {
      descent = std::string(p.descent->deck_in_image ? "deck" : "no deck") + ", SO(7) " +
                std::string(verdict_name(p.descent->so7_verdict.status));
    }
    rows.push_back({p.left, p.right, std::string(category_name(p.category)),
                    std::string(verdict_name(p.verdict.status)), witness,
                    p.pruned_by.value_or(""), descent});
  }
  std::ostringstream os;
  os << group_model(g).name << " // " << (src == Source::SU2 ? "SU(2)" : "SU(2)^2") << "\n"
     << render_table({"left", "right", "category", "verdict", "witness", "pruned by",
                      "descent"},
                     rows)
     << "free inhomogeneous: " << counts.free_inhomogeneous
     << "  homogeneous: " << counts.homogeneous << "  not free: " << counts.not_free << "\n";
  if (table1) {
    os << "expected table: " << (table1->ok ? "all rows matched" : "MISMATCH") << "\n";
    for (auto const& prob : table1->problems) os << "  " << prob << "\n";
  }
  return {os.str(), code};
}

Output verify_spin7_cmd(std::string const& format) {
  auto const checks = verify_spin7_identities();
  bool all = true;
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (auto const& c : checks) {
    all = all && c.passed;
    list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    rows.push_back({c.passed ? "PASS" : "FAIL", c.name, c.detail});
  }
  int const code = all ? kSuccess : kMismatch;
  if (format == "json") {
    return {document("verify-spin7", Json::object(),
                     Json{{"all_passed", all}, {"checks", list}})
                    .dump(2) +
                "\n",
            code};
  }
  return {render_table({"status", "identity", "detail"}, rows), code};
}

Output verify_weyl_cmd(std::string const& format) {
  std::vector<Integer> const relation = spin7_torus_relation();
  auto const so8 = even_signed_permutations(4);
  auto stab = relation_stabilizer(relation, so8);
  std::sort(stab.begin(), stab.end());
  auto const generated = generate_group({
      SignedPermutation({0, 2, 1, 3}, {1, -1, -1, 1}),
      SignedPermutation({2, 1, 0, 3}, {1, 1, 1, 1}),
      SignedPermutation({1, 0, 3, 2}, {1, 1, 1, 1}),
  });
  struct Item {
    std::string name;
    std::size_t value;
    std::size_t expected;
  };
  std::vector<Item> const items{
      {"|W(SO(8))|", so8.size(), 192},
      {"|stabilizer of the Spin(7) torus|", stab.size(), 48},
      {"|group generated by the three named elements|", generated.size(), 48},
      {"orbit of the Spin(7) torus relation", orbit_of_relation(relation, so8), 4},
      {"|W(SO(7))|", group_model(GroupKind::SO7).weyl.size(), 48},
      {"|W(Spin(7))|", group_model(GroupKind::SPIN7).weyl.size(), 48},
      {"|W(SU(4))|", group_model(GroupKind::SU4).weyl.size(), 24},
  };
  bool all = generated == stab;
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (auto const& it : items) {
    bool const ok = it.value == it.expected;
    all = all && ok;
    list.push_back(Json{{"name", it.name}, {"value", it.value}, {"expected", it.expected},
                        {"passed", ok}});
    rows.push_back({ok ? "PASS" : "FAIL", it.name, std::to_string(it.value),
                    std::to_string(it.expected)});
  }
  rows.push_back({generated == stab ? "PASS" : "FAIL",
                  "generated group equals the stabilizer", "", ""});
  int const code = all ? kSuccess : kMismatch;
  if (format == "json") {
    return {document("verify-weyl", Json::object(),
                     Json{{"all_passed", all},
                          {"generated_equals_stabilizer", generated == stab},
                          {"checks", list}})
                    .dump(2) +
                "\n",
            code};
  }
  return {render_table({"status", "quantity", "value", "expected"}, rows), code};
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact freeness checks and classification of biquotients G // SU(2)^k"};
  app.name("biquotient");
  app.require_subcommand(1);
  app.set_version_flag("--version", BIQUOTIENT_VERSION);

  std::string out_path;
  std::string format = "table";
  app.add_option("--out", out_path, "Write the document to this file")->type_name("PATH");

  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
  };

  std::string group;
  std::string source = "su2";
  bool orthogonal = false;
  bool finite_kernel = false;
  auto* enumerate = app.add_subcommand("enumerate-reps", "List homomorphisms U -> G");
  enumerate->add_option("--group", group, "su4, so7 or spin7")->required();
  enumerate->add_option("--source", source, "su2 or su2xsu2");
  enumerate->add_flag("--orthogonal", orthogonal, "Only orthogonal representations");
  enumerate->add_flag("--finite-kernel", finite_kernel, "Only maps with finite kernel");
  add_format(enumerate);

  std::string left;
  std::string right;
  std::string check_source = "auto";
  auto* check = app.add_subcommand("check-free", "Decide effective freeness of one action");
  check->add_option("--group", group, "su4, so7 or spin7")->required();
  check->add_option("--left", left, "rep-spec of f1")->required();
  check->add_option("--right", right, "rep-spec of f2")->required();
  check->add_option("--source", check_source, "auto, su2 or su2xsu2");
  std::string expect;
  check->add_option("--expect", expect, "Exit 2 unless the verdict is this")
      ->check(CLI::IsMember({"free", "not-free"}));
  add_format(check);

  bool audit = false;
  auto* cls = app.add_subcommand("classify", "Classify free actions of SU(2) or SU(2)^2");
  cls->add_option("--group", group, "su4, so7 or spin7")->required();
  cls->add_option("--source", source, "su2 or su2xsu2");
  cls->add_flag("--audit", audit, "Include every tested pair");
  add_format(cls);

  auto* spin = app.add_subcommand("verify-spin7", "Check the octonion / Spin(7) identities");
  add_format(spin);
  auto* weyl = app.add_subcommand("verify-weyl", "Check the Weyl group orders");
  add_format(weyl);

  for (auto* sub : {enumerate, check, cls, spin, weyl}) {
    sub->add_option("--out", out_path, "Write the document to this file")->type_name("PATH");
  }

  std::vector<char const*> argv{"biquotient"};
  for (auto const& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Output result;
  try {
    if (*enumerate) {
      result = enumerate_reps(group, source, orthogonal, finite_kernel, format);
    } else if (*check) {
      result = check_free(group, left, right, check_source, expect, format);
    } else if (*cls) {
      result = classify_cmd(group, source, format, audit);
    } else if (*spin) {
      result = verify_spin7_cmd(format);
    } else {
      result = verify_weyl_cmd(format);
    }
  } catch (UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace biquotient::cli
