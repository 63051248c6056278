#include "placid/monoid.hpp"

#include <stdexcept>

namespace placid {

std::string_view name(MonoidId m) {
  switch (m) {
    case MonoidId::plac: return "plac";
    case MonoidId::hypo: return "hypo";
    case MonoidId::sylv: return "sylv";
    case MonoidId::sylvsharp: return "sylvsharp";
    case MonoidId::baxt: return "baxt";
    case MonoidId::stal: return "stal";
    case MonoidId::taig: return "taig";
    case MonoidId::lps: return "lps";
    case MonoidId::rps: return "rps";
  }
  return "?";
}

std::optional<MonoidId> find_monoid(std::string_view s) {
  for (MonoidId m : kAllMonoids)
    if (name(m) == s) return m;
  return std::nullopt;
}

MonoidId parse_monoid(std::string_view s) {
  if (auto m = find_monoid(s)) return *m;
  std::string msg = "unknown monoid '" + std::string(s) + "' (expected one of";
  for (MonoidId m : kAllMonoids) msg += " " + std::string(name(m));
  throw std::invalid_argument(msg + ")");
}

CombinatorialObject psymbol(MonoidId m, const Word& w) {
  switch (m) {
    case MonoidId::plac: return pplac(w);
    case MonoidId::hypo: return phypo(w);
    case MonoidId::sylv: return psylv(w);
    case MonoidId::sylvsharp: return psylvsharp(w);
    case MonoidId::baxt: return pbaxt(w);
    case MonoidId::stal: return pstal(w);
    case MonoidId::taig: return ptaig(w);
    case MonoidId::lps: return plps(w);
    case MonoidId::rps: return prps(w);
  }
  throw std::invalid_argument("unknown monoid id");
}

bool equivalent(MonoidId m, const Word& u, const Word& v) {
  return psymbol(m, u) == psymbol(m, v);
}

bool object_is_valid(MonoidId m, const CombinatorialObject& o) {
  switch (m) {
    case MonoidId::plac: return is_valid(std::get<YoungTableau>(o));
    case MonoidId::hypo: return is_valid(std::get<QuasiRibbonTableau>(o));
    case MonoidId::sylv: return is_right_strict(std::get<BinaryTree>(o));
    case MonoidId::sylvsharp: return is_left_strict(std::get<BinaryTree>(o));
    case MonoidId::baxt: return is_valid(std::get<TwinPair>(o));
    case MonoidId::stal: return is_valid(std::get<StalacticTableau>(o));
    case MonoidId::taig: return is_valid(std::get<MultiplicityTree>(o));
    case MonoidId::lps:
    case MonoidId::rps: return is_valid(std::get<PSTableau>(o));
  }
  return false;
}

Evaluation evaluation_of(const CombinatorialObject& o) {
  return std::visit(
      [](const auto& x) -> Evaluation {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TwinPair>)
          return evaluation_of(x.right_tree);
        else
          return evaluation_of(x);
      },
      o);
}

std::string to_line(const CombinatorialObject& o) {
  return std::visit([](const auto& x) { return to_line(x); }, o);
}

std::string to_ascii(const CombinatorialObject& o) {
  return std::visit([](const auto& x) { return to_ascii(x); }, o);
}

MonoidElement element(MonoidId m, const Word& w) { return {m, w, psymbol(m, w)}; }

MonoidElement multiply(const MonoidElement& a, const MonoidElement& b) {
  if (a.monoid != b.monoid) throw std::invalid_argument("monoid mismatch in multiply");
  return element(a.monoid, a.representative + b.representative);
}

Evaluation element_evaluation(const MonoidElement& e) { return Evaluation::of(e.representative); }

}  // namespace placid
