// Command-line surface over the placid library: P-symbols, equivalence
// queries, identity checks, shortest-identity searches, property suites and
// batch manifests. Exit codes: 0 = affirmative / no counterexample,
// 1 = negative / counterexample, 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "placid/batch.hpp"
#include "placid/report.hpp"

namespace {

using namespace placid;

struct GlobalOptions {
  std::string format = "structured";
  int jobs = 0;
};

void print_verdict(const Verdict& v, const nlohmann::json& structured,
                   const std::string& ascii_head, const GlobalOptions& g) {
  if (parse_format(g.format) == OutputFormat::structured)
    std::cout << structured.dump() << '\n';
  else
    std::cout << ascii_head << render_verdict_ascii(v) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plactic-like monoids: canonical objects, congruences and identity search"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: ascii or structured")
      ->check(CLI::IsMember({"ascii", "structured"}));
  app.add_option("--jobs", global.jobs, "Worker threads for searches (0 = default)");

  std::string monoid, word, word2, identity, suite, manifest;
  SuiteOptions suite_options;
  SearchBounds bounds;
  bool no_empty = false;
  int max_length = 4;

  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--rank", bounds.rank, "Alphabet size for substituted words");
    cmd->add_option("--maxlen", bounds.max_word_len, "Maximum substituted word length");
    cmd->add_flag("--no-empty", no_empty, "Exclude the empty word from substitutions");
  };

  CLI::App* cmd_psymbol = app.add_subcommand("psymbol", "Canonical object of a word");
  cmd_psymbol->add_option("monoid", monoid)->required();
  cmd_psymbol->add_option("word", word)->required();

  CLI::App* cmd_equiv = app.add_subcommand("equiv", "Decide the congruence on two words");
  cmd_equiv->add_option("monoid", monoid)->required();
  cmd_equiv->add_option("word1", word)->required();
  cmd_equiv->add_option("word2", word2)->required();

  CLI::App* cmd_check = app.add_subcommand("check", "Exhaustive identity check within bounds");
  cmd_check->add_option("monoid", monoid)->required();
  cmd_check->add_option("identity", identity, "e.g. \"xyxy=yxxy\"")->required();
  add_bounds(cmd_check);

  CLI::App* cmd_search =
      app.add_subcommand("search", "Shortest-identity search up to a length");
  cmd_search->add_option("monoid", monoid)->required();
  cmd_search->add_option("--max-length", max_length, "Largest identity length to enumerate");
  add_bounds(cmd_search);

  CLI::App* cmd_props = app.add_subcommand("properties", "Structural property suites");
  cmd_props->add_option("monoid", monoid)->required();
  cmd_props
      ->add_option("suite", suite,
                   "left-cancel right-cancel sameeval refinement freeness rps-rank "
                   "plactic-adian plac3-pq")
      ->required();
  add_bounds(cmd_props);
  cmd_props->add_option("--side", suite_options.side, "sameeval variant: left|right|both");
  cmd_props->add_option("--into", suite_options.into, "refinement target monoid");
  cmd_props->add_option("--variant", suite_options.variant, "plactic-adian: plac2|plac3");
  cmd_props->add_option("--generators", suite_options.generators,
                        "freeness generators, comma-separated");
  cmd_props->add_option("--max-blocks", suite_options.max_blocks, "freeness block bound");
  cmd_props->add_option("--n", suite_options.n, "rps-rank parameter");

  CLI::App* cmd_batch = app.add_subcommand("batch", "Run a task manifest, one task per line");
  cmd_batch->add_option("manifest", manifest, "Manifest path, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    bounds.include_empty = !no_empty;

    if (*cmd_psymbol) {
      MonoidId m = parse_monoid(monoid);
      Word w = Word::parse(word);
      if (parse_format(global.format) == OutputFormat::structured)
        std::cout << psymbol_report(m, w).dump() << '\n';
      else
        std::cout << to_ascii(psymbol(m, w)) << '\n';
      return 0;
    }

    if (*cmd_equiv) {
      MonoidId m = parse_monoid(monoid);
      bool eq = equivalent(m, Word::parse(word), Word::parse(word2));
      if (parse_format(global.format) == OutputFormat::structured)
        std::cout << equiv_report(m, Word::parse(word), Word::parse(word2), eq).dump() << '\n';
      else
        std::cout << (eq ? "true" : "false") << '\n';
      return eq ? 0 : 1;
    }

    if (*cmd_check) {
      MonoidId m = parse_monoid(monoid);
      Identity id = parse_identity(identity);
      if (id.trivial()) throw std::invalid_argument("identity is trivial (sides are equal)");
      Verdict v = check_identity(m, id, bounds, global.jobs);
      print_verdict(v, check_report(m, id, v),
                    "check " + std::string(name(m)) + " " + to_string(id) + "\n", global);
      return v.refuted() ? 1 : 0;
    }

    if (*cmd_search) {
      MonoidId m = parse_monoid(monoid);
      SearchReport r =
          shortest_identity_search(m, static_cast<std::size_t>(max_length), bounds, global.jobs);
      if (parse_format(global.format) == OutputFormat::structured)
        std::cout << search_report(r).dump() << '\n';
      else
        std::cout << render_search_ascii(r) << '\n';
      return 0;
    }

    if (*cmd_props) {
      MonoidId m = parse_monoid(monoid);
      suite_options.bounds = bounds;
      Verdict v = run_properties_suite(m, suite, suite_options, global.jobs);
      print_verdict(v, properties_report(m, suite, v),
                    "properties " + std::string(name(m)) + " " + suite + "\n", global);
      return v.refuted() ? 1 : 0;
    }

    if (*cmd_batch) {
      BatchOptions options{parse_format(global.format), global.jobs};
      if (manifest == "-") {
        run_batch(std::cin, std::cout, options);
      } else {
        std::ifstream in(manifest);
        if (!in) throw std::invalid_argument("cannot open manifest '" + manifest + "'");
        run_batch(in, std::cout, options);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
