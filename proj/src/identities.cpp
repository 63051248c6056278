#include "placid/identities.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace placid {

bool is_balanced(const Identity& id) {
  if (id.lhs.size() != id.rhs.size()) return false;
  VarIndex k = id.arity();
  for (VarIndex v = 1; v <= k; ++v) {
    auto count = [v](const Term& t) {
      return std::count(t.letters.begin(), t.letters.end(), v);
    };
    if (count(id.lhs) != count(id.rhs)) return false;
  }
  return true;
}

namespace {

Term rename(const Term& t, const std::vector<VarIndex>& perm) {
  Term out;
  out.letters.reserve(t.size());
  for (VarIndex v : t.letters) out.letters.push_back(perm[v - 1]);
  return out;
}

}  // namespace

Identity canonical_identity(const Identity& id) {
  VarIndex k = id.arity();
  if (k > 8) throw std::invalid_argument("canonical_identity supports at most 8 variables");
  std::vector<VarIndex> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  Identity best = id;
  bool first = true;
  do {
    Identity r{rename(id.lhs, perm), rename(id.rhs, perm)};
    Identity s{r.rhs, r.lhs};
    if (first || r < best) best = r;
    first = false;
    if (s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool equivalent_identities(const Identity& a, const Identity& b) {
  return canonical_identity(a) == canonical_identity(b);
}

std::vector<Identity> enumerate_candidates(std::size_t length) {
  if (length < 1) throw std::invalid_argument("candidate length must be >= 1");
  const std::size_t n = std::size_t{1} << length;
  std::set<Identity> classes;
  auto word_at = [length](std::size_t bits) {
    Term t;
    t.letters.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
      t.letters.push_back(bits >> (length - 1 - i) & 1 ? 2 : 1);
    return t;
  };
  for (std::size_t ub = 0; ub < n; ++ub) {
    Term u = word_at(ub);
    for (std::size_t vb = 0; vb < n; ++vb) {
      if (ub == vb) continue;
      Identity id{u, word_at(vb)};
      if (!is_balanced(id)) continue;
      classes.insert(canonical_identity(id));
    }
  }
  return {classes.begin(), classes.end()};
}

namespace {

Term term_of(std::initializer_list<VarIndex> l) { return Term{std::vector<VarIndex>(l)}; }

Term concat(std::initializer_list<Term> parts) {
  Term out;
  for (const Term& p : parts)
    out.letters.insert(out.letters.end(), p.letters.begin(), p.letters.end());
  return out;
}

}  // namespace

Identity adian_identity() {
  return {term_of({1, 2, 2, 1, 1, 2, 1, 2, 2, 1}), term_of({1, 2, 2, 1, 2, 1, 1, 2, 2, 1})};
}

Identity plac3_pq_identity() {
  Identity a = adian_identity();
  const Term& p = a.lhs;
  const Term& q = a.rhs;
  return {concat({p, q, p, p, q}), concat({p, q, q, p, q})};
}

Identity rps_rank_identity(int n) {
  if (n < 1) throw std::invalid_argument("rps rank identity needs n >= 1");
  Term xy = term_of({1, 2});
  Term lhs, rhs;
  for (int i = 0; i <= n; ++i) lhs = concat({lhs, xy});
  for (int i = 0; i < n; ++i) rhs = concat({rhs, xy});
  rhs = concat({rhs, term_of({2, 1})});
  return {lhs, rhs};
}

}  // namespace placid
