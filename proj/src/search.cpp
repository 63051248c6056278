#include "placid/search.hpp"

#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace placid {

std::uint64_t SearchBounds::word_count() const {
  std::uint64_t total = include_empty ? 1 : 0;
  std::uint64_t pow = 1;
  for (int i = 1; i <= max_word_len; ++i) {
    pow *= static_cast<std::uint64_t>(rank);
    total += pow;
  }
  return total;
}

std::string to_string(const SearchBounds& b) {
  return "rank " + std::to_string(b.rank) + ", max word length " +
         std::to_string(b.max_word_len) + (b.include_empty ? ", empty word included" : "");
}

std::vector<Word> enumerate_words(const SearchBounds& b) {
  if (b.rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (b.max_word_len < 0) throw std::invalid_argument("max word length must be >= 0");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(b.word_count()));
  if (b.include_empty) words.emplace_back();
  std::vector<Symbol> cur;
  for (int len = 1; len <= b.max_word_len; ++len) {
    cur.assign(static_cast<std::size_t>(len), 1);
    for (;;) {
      words.push_back(Word{cur});
      int i = len - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == static_cast<Symbol>(b.rank)) {
        cur[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
    }
  }
  return words;
}

std::optional<std::uint64_t> first_hit_serial(std::uint64_t total,
                                              const std::function<bool(std::uint64_t)>& pred) {
  for (std::uint64_t i = 0; i < total; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

std::optional<std::uint64_t> first_hit_parallel(std::uint64_t total,
                                                const std::function<bool(std::uint64_t)>& pred,
                                                int jobs) {
#ifdef _OPENMP
  constexpr std::uint64_t kNoHit = ~std::uint64_t{0};
  std::atomic<std::uint64_t> best{kNoHit};
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const long long n = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    const std::uint64_t u = static_cast<std::uint64_t>(i);
    if (u >= best.load(std::memory_order_relaxed)) continue;
    if (pred(u)) {
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (u < cur && !best.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
      }
    }
  }
  std::uint64_t hit = best.load();
  if (hit == kNoHit) return std::nullopt;
  return hit;
#else
  (void)jobs;
  return first_hit_serial(total, pred);
#endif
}

std::optional<std::uint64_t> first_hit(std::uint64_t total,
                                       const std::function<bool(std::uint64_t)>& pred, int jobs) {
  // Tiny spaces are not worth a thread team.
  if (jobs == 1 || total < 2048) return first_hit_serial(total, pred);
  return first_hit_parallel(total, pred, jobs);
}

Verdict check_identity(MonoidId m, const Identity& id, const SearchBounds& b, int jobs) {
  if (id.trivial()) throw std::invalid_argument("identity is trivial (sides are equal)");
  const std::vector<Word> words = enumerate_words(b);
  const std::uint64_t t = words.size();
  const VarIndex arity = id.arity();
  if (t == 0) return Verdict{b, 0, std::nullopt};

  std::uint64_t total = 1;
  for (VarIndex v = 0; v < arity; ++v) {
    if (total > ~std::uint64_t{0} / t) throw std::invalid_argument("substitution space too large");
    total *= t;
  }

  auto assignment_at = [&](std::uint64_t index) {
    std::vector<Word> assign(arity);
    for (VarIndex v = arity; v-- > 0;) {
      assign[v] = words[static_cast<std::size_t>(index % t)];
      index /= t;
    }
    return assign;
  };

  auto pred = [&](std::uint64_t index) {
    auto assign = assignment_at(index);
    Word lhs = substitute(id.lhs, assign);
    Word rhs = substitute(id.rhs, assign);
    if (lhs == rhs) return false;
    return psymbol(m, lhs) != psymbol(m, rhs);
  };

  Verdict verdict{b, total, std::nullopt};
  if (auto hit = first_hit(total, pred, jobs)) {
    auto assign = assignment_at(*hit);
    Counterexample ce;
    for (VarIndex v = 1; v <= arity; ++v) ce.binding.emplace_back(var_name(v), assign[v - 1]);
    ce.lhs_word = substitute(id.lhs, assign);
    ce.rhs_word = substitute(id.rhs, assign);
    verdict.substitutions_tested = *hit + 1;
    verdict.counterexample = std::move(ce);
  }
  return verdict;
}

std::vector<Identity> LengthOutcomes::survivors() const {
  std::vector<Identity> out;
  for (const auto& o : outcomes)
    if (!o.verdict.refuted()) out.push_back(o.identity);
  return out;
}

std::vector<Identity> SearchReport::survivors(std::size_t length) const {
  for (const auto& l : lengths)
    if (l.length == length) return l.survivors();
  return {};
}

SearchReport shortest_identity_search(MonoidId m, std::size_t max_length, const SearchBounds& b,
                                      int jobs) {
  SearchReport report{m, b, max_length, {}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    LengthOutcomes lo{len, {}};
    for (const Identity& id : enumerate_candidates(len))
      lo.outcomes.push_back({id, check_identity(m, id, b, jobs)});
    report.lengths.push_back(std::move(lo));
  }
  return report;
}

}  // namespace placid
