#include "placid/report.hpp"

namespace placid {

namespace {

nlohmann::json tree_json(const BinaryTree::Node* n) {
  if (!n) return nullptr;
  return {{"label", n->label}, {"left", tree_json(n->left.get())},
          {"right", tree_json(n->right.get())}};
}

nlohmann::json mult_tree_json(const MultiplicityTree::Node* n) {
  if (!n) return nullptr;
  return {{"label", n->label},
          {"multiplicity", n->multiplicity},
          {"left", mult_tree_json(n->left.get())},
          {"right", mult_tree_json(n->right.get())}};
}

}  // namespace

nlohmann::json to_json(const YoungTableau& t) {
  return {{"kind", "young_tableau"}, {"rows", t.rows}};
}

nlohmann::json to_json(const QuasiRibbonTableau& t) {
  return {{"kind", "quasi_ribbon_tableau"}, {"rows", t.rows}, {"offsets", t.offsets()}};
}

nlohmann::json to_json(const BinaryTree& t) {
  return {{"kind", "binary_search_tree"}, {"root", tree_json(t.root())}};
}

nlohmann::json to_json(const MultiplicityTree& t) {
  return {{"kind", "multiplicity_tree"}, {"root", mult_tree_json(t.root())}};
}

nlohmann::json to_json(const TwinPair& p) {
  return {{"kind", "twin_pair"},
          {"left_tree", tree_json(p.left_tree.root())},
          {"right_tree", tree_json(p.right_tree.root())},
          {"canopy_left", canopy(p.left_tree)},
          {"canopy_right", canopy(p.right_tree)}};
}

nlohmann::json to_json(const StalacticTableau& t) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : t.columns) cols.push_back({{"symbol", c.symbol}, {"count", c.count}});
  return {{"kind", "stalactic_tableau"}, {"columns", cols}};
}

nlohmann::json to_json(const PSTableau& t) {
  return {{"kind", "ps_tableau"},
          {"flavor", t.flavor == PSFlavor::left ? "left" : "right"},
          {"columns", t.columns}};
}

nlohmann::json to_json(const CombinatorialObject& o) {
  return std::visit([](const auto& x) { return to_json(x); }, o);
}

nlohmann::json to_json(const SearchBounds& b) {
  return {{"rank", b.rank}, {"max_word_len", b.max_word_len}, {"include_empty", b.include_empty}};
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"bounds", to_json(v.bounds)},
                   {"substitutions_tested", v.substitutions_tested},
                   {"verdict", v.refuted() ? "counterexample" : "no-counterexample"}};
  if (v.counterexample) {
    const Counterexample& ce = *v.counterexample;
    nlohmann::json witness = nlohmann::json::object();
    for (const auto& [name, word] : ce.binding) witness[name] = to_compact_string(word);
    j["witness"] = witness;
    j["witness_lhs"] = to_compact_string(ce.lhs_word);
    j["witness_rhs"] = to_compact_string(ce.rhs_word);
    if (!ce.notes.empty()) {
      nlohmann::json notes = nlohmann::json::object();
      for (const auto& [k, val] : ce.notes) notes[k] = val;
      j["notes"] = notes;
    }
  }
  return j;
}

nlohmann::json psymbol_report(MonoidId m, const Word& w) {
  return {{"kind", "psymbol"},
          {"monoid", name(m)},
          {"word", to_compact_string(w)},
          {"psymbol", to_json(psymbol(m, w))}};
}

nlohmann::json equiv_report(MonoidId m, const Word& u, const Word& v, bool eq) {
  return {{"kind", "equiv"},
          {"monoid", name(m)},
          {"lhs", to_compact_string(u)},
          {"rhs", to_compact_string(v)},
          {"equivalent", eq}};
}

nlohmann::json check_report(MonoidId m, const Identity& id, const Verdict& v) {
  nlohmann::json j = to_json(v);
  j["kind"] = "check";
  j["monoid"] = name(m);
  j["identity"] = to_string(id);
  if (v.counterexample) {
    j["witness_lhs_psymbol"] = to_json(psymbol(m, v.counterexample->lhs_word));
    j["witness_rhs_psymbol"] = to_json(psymbol(m, v.counterexample->rhs_word));
  }
  return j;
}

nlohmann::json search_report(const SearchReport& r) {
  nlohmann::json lengths = nlohmann::json::array();
  for (const auto& lo : r.lengths) {
    nlohmann::json outcomes = nlohmann::json::array();
    nlohmann::json survivors = nlohmann::json::array();
    for (const auto& o : lo.outcomes) {
      nlohmann::json item = to_json(o.verdict);
      item["identity"] = to_string(o.identity);
      outcomes.push_back(item);
      if (!o.verdict.refuted()) survivors.push_back(to_string(o.identity));
    }
    lengths.push_back(
        {{"length", lo.length}, {"survivors", survivors}, {"outcomes", outcomes}});
  }
  return {{"kind", "search"},
          {"monoid", name(r.monoid)},
          {"bounds", to_json(r.bounds)},
          {"max_length", r.max_length},
          {"lengths", lengths}};
}

nlohmann::json properties_report(MonoidId m, std::string_view suite, const Verdict& v) {
  nlohmann::json j = to_json(v);
  j["kind"] = "properties";
  j["monoid"] = name(m);
  j["suite"] = std::string(suite);
  return j;
}

std::string render_verdict_ascii(const Verdict& v) {
  std::string out = "bounds: " + to_string(v.bounds) + "\n";
  if (!v.refuted()) {
    out += "verdict: no counterexample within bounds (" +
           std::to_string(v.substitutions_tested) + " substitutions tested)";
    return out;
  }
  const Counterexample& ce = *v.counterexample;
  out += "verdict: counterexample (" + std::to_string(v.substitutions_tested) +
         " substitutions tested)\n";
  for (const auto& [name, word] : ce.binding)
    out += "  " + name + " = " + to_compact_string(word) + "\n";
  for (const auto& [k, val] : ce.notes) out += "  " + k + ": " + val + "\n";
  out += "  lhs word = " + to_compact_string(ce.lhs_word) + "\n";
  out += "  rhs word = " + to_compact_string(ce.rhs_word);
  return out;
}

std::string render_search_ascii(const SearchReport& r) {
  std::string out = "search " + std::string(name(r.monoid)) + " up to length " +
                    std::to_string(r.max_length) + " (" + to_string(r.bounds) + ")";
  for (const auto& lo : r.lengths) {
    out += "\nlength " + std::to_string(lo.length) + ":";
    auto survivors = lo.survivors();
    if (survivors.empty()) {
      out += " no survivors";
    } else {
      out += " survivors:";
      for (const auto& id : survivors) out += " " + to_string(id);
    }
    for (const auto& o : lo.outcomes) {
      if (!o.verdict.refuted()) continue;
      const Counterexample& ce = *o.verdict.counterexample;
      out += "\n  " + to_string(o.identity) + " refuted by";
      for (const auto& [name, word] : ce.binding)
        out += " " + name + "=" + to_compact_string(word);
    }
  }
  return out;
}

}  // namespace placid
