#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "placid/rowlike.hpp"
#include "placid/tableaux.hpp"
#include "placid/trees.hpp"
#include "placid/word.hpp"

namespace placid {

enum class MonoidId { plac, hypo, sylv, sylvsharp, baxt, stal, taig, lps, rps };

inline constexpr std::array<MonoidId, 9> kAllMonoids = {
    MonoidId::plac, MonoidId::hypo, MonoidId::sylv, MonoidId::sylvsharp, MonoidId::baxt,
    MonoidId::stal, MonoidId::taig, MonoidId::lps,  MonoidId::rps};

std::string_view name(MonoidId m);
std::optional<MonoidId> find_monoid(std::string_view name);
/// Throws std::invalid_argument listing the valid ids.
MonoidId parse_monoid(std::string_view name);

/// Canonical form of a monoid element: one of the eight object kinds.
using CombinatorialObject =
    std::variant<YoungTableau, QuasiRibbonTableau, BinaryTree, TwinPair, StalacticTableau,
                 MultiplicityTree, PSTableau>;

/// Computes the canonical object of `w` in monoid `m` with the insertion
/// direction belonging to that monoid.
CombinatorialObject psymbol(MonoidId m, const Word& w);

/// u and v represent the same element of m iff their canonical objects are
/// structurally equal.
bool equivalent(MonoidId m, const Word& u, const Word& v);

bool object_is_valid(MonoidId m, const CombinatorialObject& o);
Evaluation evaluation_of(const CombinatorialObject& o);
std::string to_line(const CombinatorialObject& o);
std::string to_ascii(const CombinatorialObject& o);

/// Element of a factor monoid: a canonical object plus one representative
/// word. Multiplication concatenates representatives and recomputes the
/// canonical form.
struct MonoidElement {
  MonoidId monoid;
  Word representative;
  CombinatorialObject canonical;

  friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
    return a.monoid == b.monoid && a.canonical == b.canonical;
  }
};

MonoidElement element(MonoidId m, const Word& w);
/// Throws std::invalid_argument on monoid mismatch.
MonoidElement multiply(const MonoidElement& a, const MonoidElement& b);
Evaluation element_evaluation(const MonoidElement& e);

}  // namespace placid
