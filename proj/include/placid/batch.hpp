#pragma once

#include <iosfwd>
#include <string>

#include "placid/checks.hpp"

namespace placid {

enum class OutputFormat { ascii, structured };

OutputFormat parse_format(std::string_view s);

struct BatchOptions {
  OutputFormat format = OutputFormat::structured;
  int jobs = 0;
};

/// Flags accepted by the `properties` surface; which ones matter depends on
/// the suite.
struct SuiteOptions {
  SearchBounds bounds;
  std::string side;        // sameeval: left|right|both ("" = monoid default)
  std::string into;        // refinement target ("" = monoid default)
  std::string variant;     // plactic-adian: plac2|plac3
  std::string generators;  // freeness: comma-separated words
  int max_blocks = 8;      // freeness
  int n = 2;               // rps-rank
};

/// Dispatches one named property suite; the CLI and the batch runner share
/// this so both surfaces behave identically.
Verdict run_properties_suite(MonoidId m, const std::string& suite, const SuiteOptions& options,
                             int jobs);

/// Runs the tasks of a manifest, one per line ('#' starts a comment), and
/// writes one report per task. Structured output is one JSON object per
/// line. Throws std::invalid_argument naming the offending line on parse
/// errors. Supported task forms:
///   psymbol <monoid> <word>
///   equiv <monoid> <word> <word>
///   check <monoid> <identity> [--rank N] [--maxlen L] [--no-empty]
///   search <monoid> [--max-length M] [--rank N] [--maxlen L] [--no-empty]
///   properties <monoid> <suite> [bounds flags] [suite flags]
/// Use "e" for the empty word.
void run_batch(std::istream& in, std::ostream& out, const BatchOptions& options);

}  // namespace placid
