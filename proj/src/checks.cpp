#include "placid/checks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace placid {

namespace {

Word letter(Symbol a) { return Word{{a}}; }

Verdict cancellativity(MonoidId m, const SearchBounds& b, bool left, int jobs) {
  const std::vector<Word> words = enumerate_words(b);
  const std::uint64_t t = words.size();
  const std::uint64_t total = static_cast<std::uint64_t>(b.rank) * t * t;

  auto decode = [&](std::uint64_t i) {
    const Symbol a = static_cast<Symbol>(i / (t * t) + 1);
    const Word& u = words[static_cast<std::size_t>(i / t % t)];
    const Word& v = words[static_cast<std::size_t>(i % t)];
    return std::tuple<Symbol, const Word&, const Word&>(a, u, v);
  };

  auto pred = [&](std::uint64_t i) {
    auto [a, u, v] = decode(i);
    if (u == v) return false;
    Word lu = left ? letter(a) + u : u + letter(a);
    Word lv = left ? letter(a) + v : v + letter(a);
    return equivalent(m, lu, lv) && !equivalent(m, u, v);
  };

  Verdict verdict{b, total, std::nullopt};
  if (auto hit = first_hit(total, pred, jobs)) {
    auto [a, u, v] = decode(*hit);
    Counterexample ce;
    ce.binding.emplace_back("a", letter(a));
    ce.binding.emplace_back("u", u);
    ce.binding.emplace_back("v", v);
    ce.lhs_word = left ? letter(a) + u : u + letter(a);
    ce.rhs_word = left ? letter(a) + v : v + letter(a);
    verdict.substitutions_tested = *hit + 1;
    verdict.counterexample = std::move(ce);
  }
  return verdict;
}

}  // namespace

Verdict check_left_cancellative(MonoidId m, const SearchBounds& b, int jobs) {
  return cancellativity(m, b, true, jobs);
}

Verdict check_right_cancellative(MonoidId m, const SearchBounds& b, int jobs) {
  return cancellativity(m, b, false, jobs);
}

SameEvalSide default_sameeval_side(MonoidId m) {
  switch (m) {
    case MonoidId::sylv: return SameEvalSide::right;
    case MonoidId::sylvsharp: return SameEvalSide::left;
    case MonoidId::baxt: return SameEvalSide::both;
    default: throw std::invalid_argument("sameeval check applies to sylv, sylvsharp, baxt");
  }
}

std::string_view to_string(SameEvalSide s) {
  switch (s) {
    case SameEvalSide::left: return "left";
    case SameEvalSide::right: return "right";
    case SameEvalSide::both: return "both";
  }
  return "?";
}

SameEvalSide parse_sameeval_side(std::string_view s) {
  if (s == "left") return SameEvalSide::left;
  if (s == "right") return SameEvalSide::right;
  if (s == "both") return SameEvalSide::both;
  throw std::invalid_argument("side must be left, right or both");
}

Verdict check_sameeval(MonoidId m, SameEvalSide side, const SearchBounds& b) {
  if (m != MonoidId::sylv && m != MonoidId::sylvsharp && m != MonoidId::baxt)
    throw std::invalid_argument("sameeval check applies to sylv, sylvsharp, baxt");
  const std::vector<Word> words = enumerate_words(b);

  // Bucket the word table by evaluation; tuples are drawn within a bucket.
  std::map<std::string, std::vector<const Word*>> buckets;
  std::vector<std::string> order;
  for (const Word& w : words) {
    std::string key = to_string(Evaluation::of(w));
    auto [it, inserted] = buckets.emplace(key, std::vector<const Word*>{});
    if (inserted) order.push_back(key);
    it->second.push_back(&w);
  }

  const int tuple_size = side == SameEvalSide::both ? 4 : 3;
  Verdict verdict{b, 0, std::nullopt};

  for (const std::string& key : order) {
    const auto& bucket = buckets[key];
    const std::size_t c = bucket.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(tuple_size), 0);
    for (;;) {
      ++verdict.substitutions_tested;
      Word lhs, rhs;
      Counterexample ce;
      if (side == SameEvalSide::right) {
        const Word &p = *bucket[idx[0]], &q = *bucket[idx[1]], &r = *bucket[idx[2]];
        lhs = p + r;
        rhs = q + r;
        ce.binding = {{"p", p}, {"q", q}, {"r", r}};
      } else if (side == SameEvalSide::left) {
        const Word &s = *bucket[idx[0]], &p = *bucket[idx[1]], &q = *bucket[idx[2]];
        lhs = s + p;
        rhs = s + q;
        ce.binding = {{"s", s}, {"p", p}, {"q", q}};
      } else {
        const Word &s = *bucket[idx[0]], &p = *bucket[idx[1]], &q = *bucket[idx[2]],
                   &r = *bucket[idx[3]];
        lhs = s + p + r;
        rhs = s + q + r;
        ce.binding = {{"s", s}, {"p", p}, {"q", q}, {"r", r}};
      }
      if (lhs != rhs && !equivalent(m, lhs, rhs)) {
        ce.lhs_word = lhs;
        ce.rhs_word = rhs;
        verdict.counterexample = std::move(ce);
        return verdict;
      }
      int i = tuple_size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == c) {
        idx[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
    }
  }
  return verdict;
}

Verdict check_uxx_vyx_family(MonoidId m, int max_prefix_len) {
  if (m != MonoidId::sylv && m != MonoidId::sylvsharp)
    throw std::invalid_argument("family check applies to sylv and sylvsharp");
  const bool suffix_form = m == MonoidId::sylv;  // u.xx = v.yx vs xx.u = xy.v
  const std::vector<Word> sub =
      suffix_form ? std::vector<Word>{Word{{2}}, Word{{1}}} : std::vector<Word>{Word{{1}}, Word{{2}}};

  std::vector<Term> prefixes;
  prefixes.push_back(Term{});
  for (int len = 1; len <= max_prefix_len; ++len) {
    std::vector<VarIndex> cur(static_cast<std::size_t>(len), 1);
    for (;;) {
      prefixes.push_back(Term{cur});
      int i = len - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == 2) {
        cur[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
    }
  }

  auto attach = [&](const Term& affix, VarIndex c1, VarIndex c2) {
    Term t;
    if (suffix_form) {
      t = affix;
      t.letters.push_back(c1);
      t.letters.push_back(c2);
    } else {
      t.letters.push_back(c1);
      t.letters.push_back(c2);
      t.letters.insert(t.letters.end(), affix.letters.begin(), affix.letters.end());
    }
    return t;
  };

  Verdict verdict{SearchBounds{2, max_prefix_len, true}, 0, std::nullopt};
  for (const Term& u : prefixes) {
    for (const Term& v : prefixes) {
      Identity id = suffix_form ? Identity{attach(u, 1, 1), attach(v, 2, 1)}
                                : Identity{attach(u, 1, 1), attach(v, 1, 2)};
      if (!is_balanced(id)) continue;
      ++verdict.substitutions_tested;
      auto [lhs, rhs] = substitute(id, sub);
      if (equivalent(m, lhs, rhs)) {
        Counterexample ce;
        ce.binding.emplace_back("x", sub[0]);
        ce.binding.emplace_back("y", sub[1]);
        ce.lhs_word = lhs;
        ce.rhs_word = rhs;
        ce.notes.emplace_back("unrefuted_candidate", to_string(id));
        verdict.counterexample = std::move(ce);
        return verdict;
      }
    }
  }
  return verdict;
}

Verdict check_free_submonoid(MonoidId m, const std::vector<Word>& generators, int max_blocks) {
  if (generators.empty()) throw std::invalid_argument("freeness check needs generators");
  const std::size_t g = generators.size();

  auto blocks_string = [&](const std::vector<std::size_t>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += '|';
      out += to_compact_string(generators[seq[i]]);
    }
    return out.empty() ? "(empty product)" : out;
  };

  Symbol max_symbol = 1;
  for (const Word& gen : generators)
    for (Symbol a : gen) max_symbol = std::max(max_symbol, a);

  std::unordered_map<std::string, std::pair<std::vector<std::size_t>, Word>> seen;
  Verdict verdict{SearchBounds{static_cast<int>(max_symbol), max_blocks, true}, 0, std::nullopt};

  std::vector<std::size_t> seq;
  for (int blocks = 0; blocks <= max_blocks; ++blocks) {
    seq.assign(static_cast<std::size_t>(blocks), 0);
    for (;;) {
      Word w;
      for (std::size_t i : seq) w += generators[i];
      ++verdict.substitutions_tested;
      std::string key = to_line(psymbol(m, w));
      auto [it, inserted] = seen.emplace(key, std::make_pair(seq, w));
      if (!inserted && it->second.first != seq) {
        Counterexample ce;
        ce.lhs_word = it->second.second;
        ce.rhs_word = w;
        ce.notes.emplace_back("blocks_lhs", blocks_string(it->second.first));
        ce.notes.emplace_back("blocks_rhs", blocks_string(seq));
        verdict.counterexample = std::move(ce);
        return verdict;
      }
      if (blocks == 0) break;
      int i = blocks - 1;
      while (i >= 0 && seq[static_cast<std::size_t>(i)] + 1 == g) {
        seq[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++seq[static_cast<std::size_t>(i)];
    }
  }
  return verdict;
}

Verdict check_rps_rank_identity(int n, const SearchBounds& b, int jobs) {
  if (n < 1) throw std::invalid_argument("rps rank identity needs n >= 1");
  if (b.rank != n) throw std::invalid_argument("bounds rank must equal n for the rps rank identity");
  return check_identity(MonoidId::rps, rps_rank_identity(n), b, jobs);
}

Verdict check_plactic_adian(AdianVariant variant, const SearchBounds& b, int jobs) {
  SearchBounds bounds = b;
  bounds.rank = variant == AdianVariant::plac2 ? 2 : 3;
  return check_identity(MonoidId::plac, adian_identity(), bounds, jobs);
}

Verdict check_plac3_pq_identity(const SearchBounds& b, int jobs) {
  return check_identity(MonoidId::plac, plac3_pq_identity(), b, jobs);
}

namespace {

// Common frame: group bounded words by P-symbol, then compare every class
// member against the class representative under `probe`.
Verdict class_check(
    MonoidId m, const SearchBounds& b,
    const std::function<bool(const Word& rep, const Word& w, Counterexample& ce)>& agree) {
  const std::vector<Word> words = enumerate_words(b);
  std::unordered_map<std::string, const Word*> rep_of;
  Verdict verdict{b, 0, std::nullopt};
  for (const Word& w : words) {
    std::string key = to_line(psymbol(m, w));
    auto [it, inserted] = rep_of.emplace(key, &w);
    if (inserted) continue;
    ++verdict.substitutions_tested;
    Counterexample ce;
    if (!agree(*it->second, w, ce)) {
      verdict.counterexample = std::move(ce);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

Verdict check_congruence_compatibility(MonoidId m, const SearchBounds& b) {
  return class_check(m, b, [&](const Word& rep, const Word& w, Counterexample& ce) {
    for (Symbol a = 1; a <= static_cast<Symbol>(b.rank); ++a) {
      Word la = Word{{a}};
      if (!equivalent(m, la + rep, la + w)) {
        ce.binding = {{"a", la}, {"u", rep}, {"v", w}};
        ce.lhs_word = la + rep;
        ce.rhs_word = la + w;
        ce.notes.emplace_back("side", "left");
        return false;
      }
      if (!equivalent(m, rep + la, w + la)) {
        ce.binding = {{"a", la}, {"u", rep}, {"v", w}};
        ce.lhs_word = rep + la;
        ce.rhs_word = w + la;
        ce.notes.emplace_back("side", "right");
        return false;
      }
    }
    return true;
  });
}

Verdict check_evaluation_invariance(MonoidId m, const SearchBounds& b) {
  return class_check(m, b, [&](const Word& rep, const Word& w, Counterexample& ce) {
    if (Evaluation::of(rep) == Evaluation::of(w)) return true;
    ce.binding = {{"u", rep}, {"v", w}};
    ce.lhs_word = rep;
    ce.rhs_word = w;
    ce.notes.emplace_back("reason", "equivalent words with different evaluations");
    return false;
  });
}

Verdict check_refinement(MonoidId fine, MonoidId coarse, const SearchBounds& b) {
  return class_check(fine, b, [&](const Word& rep, const Word& w, Counterexample& ce) {
    if (equivalent(coarse, rep, w)) return true;
    ce.binding = {{"u", rep}, {"v", w}};
    ce.lhs_word = rep;
    ce.rhs_word = w;
    ce.notes.emplace_back("reason", std::string(name(fine)) + "-equivalent words inequivalent in " +
                                        std::string(name(coarse)));
    return false;
  });
}

}  // namespace placid
