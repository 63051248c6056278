#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "placid/identities.hpp"
#include "placid/monoid.hpp"
#include "placid/term.hpp"
#include "placid/word.hpp"

namespace placid {

/// Finite box for an exhaustive check: substituted words run over the
/// alphabet {1..rank} with length <= max_word_len, plus the empty word when
/// include_empty is set.
struct SearchBounds {
  int rank = 3;
  int max_word_len = 4;
  bool include_empty = true;

  /// Number of substitutable words: sum of rank^i for i in 1..max_word_len,
  /// plus one for the empty word.
  std::uint64_t word_count() const;
  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

std::string to_string(const SearchBounds& b);

/// All substitutable words, ordered by length then lexicographically; the
/// empty word comes first when included. This order fixes which witness a
/// search reports.
std::vector<Word> enumerate_words(const SearchBounds& b);

struct Counterexample {
  /// Named assignment, e.g. {"x", 1}, {"y", 2}; checks that are not plain
  /// identity checks use their own names (a/u/v, p/q/r, ...).
  std::vector<std::pair<std::string, Word>> binding;
  Word lhs_word, rhs_word;
  /// Extra context, e.g. the candidate identity of a family check.
  std::vector<std::pair<std::string, std::string>> notes;
};

struct Verdict {
  SearchBounds bounds;
  std::uint64_t substitutions_tested = 0;
  std::optional<Counterexample> counterexample;

  bool refuted() const { return counterexample.has_value(); }
};

/// Index of the first hit of `pred` in [0, total), or nothing. The serial
/// form is the reference; the parallel form partitions the index space
/// across OpenMP threads and returns the least hit, so both agree exactly.
std::optional<std::uint64_t> first_hit_serial(std::uint64_t total,
                                              const std::function<bool(std::uint64_t)>& pred);
std::optional<std::uint64_t> first_hit_parallel(std::uint64_t total,
                                                const std::function<bool(std::uint64_t)>& pred,
                                                int jobs);
/// jobs == 1 forces the serial path; jobs == 0 uses the OpenMP default.
std::optional<std::uint64_t> first_hit(std::uint64_t total,
                                       const std::function<bool(std::uint64_t)>& pred, int jobs);

/// Substitutes every assignment of bounded words for the variables of `id`
/// (odometer order, first variable most significant) and reports the first
/// assignment whose two sides get different P-symbols in `m`. Trivial
/// identities are rejected.
Verdict check_identity(MonoidId m, const Identity& id, const SearchBounds& b, int jobs = 0);

struct IdentityOutcome {
  Identity identity;
  Verdict verdict;
};

struct LengthOutcomes {
  std::size_t length = 0;
  std::vector<IdentityOutcome> outcomes;

  std::vector<Identity> survivors() const;
};

struct SearchReport {
  MonoidId monoid = MonoidId::plac;
  SearchBounds bounds;
  std::size_t max_length = 0;
  std::vector<LengthOutcomes> lengths;

  std::vector<Identity> survivors(std::size_t length) const;
};

/// Runs check_identity over every candidate class of each length up to
/// max_length; survivors are the candidates with no counterexample within
/// bounds (which is not a proof of satisfaction).
SearchReport shortest_identity_search(MonoidId m, std::size_t max_length, const SearchBounds& b,
                                      int jobs = 0);

}  // namespace placid
