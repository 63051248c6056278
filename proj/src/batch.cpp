#include "placid/batch.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "placid/report.hpp"

namespace placid {

OutputFormat parse_format(std::string_view s) {
  if (s == "ascii") return OutputFormat::ascii;
  if (s == "structured") return OutputFormat::structured;
  throw std::invalid_argument("format must be ascii or structured");
}

namespace {

struct Args {
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> flags;  // without leading --
  std::vector<std::string> bare_flags;

  bool has(const std::string& f) const {
    for (const auto& b : bare_flags)
      if (b == f) return true;
    return false;
  }
  std::string get(const std::string& f, const std::string& fallback) const {
    for (const auto& [k, v] : flags)
      if (k == f) return v;
    return fallback;
  }
  int get_int(const std::string& f, int fallback) const {
    for (const auto& [k, v] : flags)
      if (k == f) return std::stoi(v);
    return fallback;
  }
};

Args parse_args(const std::vector<std::string>& tokens, std::size_t from) {
  Args a;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok.rfind("--", 0) == 0) {
      std::string key = tok.substr(2);
      if (key == "no-empty") {
        a.bare_flags.push_back(key);
      } else {
        if (i + 1 >= tokens.size())
          throw std::invalid_argument("flag --" + key + " needs a value");
        a.flags.emplace_back(key, tokens[++i]);
      }
    } else {
      a.positional.push_back(tok);
    }
  }
  return a;
}

SearchBounds bounds_from(const Args& a) {
  SearchBounds b;
  b.rank = a.get_int("rank", b.rank);
  b.max_word_len = a.get_int("maxlen", b.max_word_len);
  if (a.has("no-empty")) b.include_empty = false;
  return b;
}

std::vector<Word> parse_generators(const std::string& list) {
  std::vector<Word> gens;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    std::string tok = comma == std::string::npos ? list.substr(pos) : list.substr(pos, comma - pos);
    gens.push_back(Word::parse(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return gens;
}

SuiteOptions suite_options_from(const Args& a) {
  SuiteOptions o;
  o.bounds = bounds_from(a);
  o.side = a.get("side", "");
  o.into = a.get("into", "");
  o.variant = a.get("variant", "plac2");
  o.generators = a.get("generators", "");
  o.max_blocks = a.get_int("max-blocks", 8);
  o.n = a.get_int("n", 2);
  return o;
}

}  // namespace

Verdict run_properties_suite(MonoidId m, const std::string& suite, const SuiteOptions& options,
                             int jobs) {
  const SearchBounds& b = options.bounds;
  if (suite == "left-cancel") return check_left_cancellative(m, b, jobs);
  if (suite == "right-cancel") return check_right_cancellative(m, b, jobs);
  if (suite == "sameeval") {
    SameEvalSide side =
        options.side.empty() ? default_sameeval_side(m) : parse_sameeval_side(options.side);
    return check_sameeval(m, side, b);
  }
  if (suite == "refinement") {
    MonoidId coarse;
    if (!options.into.empty())
      coarse = parse_monoid(options.into);
    else if (m == MonoidId::sylv)
      coarse = MonoidId::hypo;
    else if (m == MonoidId::stal)
      coarse = MonoidId::taig;
    else if (m == MonoidId::baxt)
      coarse = MonoidId::sylv;
    else
      throw std::invalid_argument("refinement suite supports sylv, stal, baxt");
    return check_refinement(m, coarse, b);
  }
  if (suite == "freeness") {
    if (options.generators.empty())
      throw std::invalid_argument("freeness needs --generators w1,w2,...");
    return check_free_submonoid(m, parse_generators(options.generators), options.max_blocks);
  }
  if (suite == "rps-rank") {
    if (m != MonoidId::rps) throw std::invalid_argument("rps-rank suite applies to rps");
    SearchBounds nb = b;
    nb.rank = options.n;
    return check_rps_rank_identity(options.n, nb, jobs);
  }
  if (suite == "plactic-adian") {
    if (m != MonoidId::plac) throw std::invalid_argument("plactic-adian suite applies to plac");
    if (options.variant != "plac2" && options.variant != "plac3")
      throw std::invalid_argument("variant must be plac2 or plac3");
    return check_plactic_adian(
        options.variant == "plac2" ? AdianVariant::plac2 : AdianVariant::plac3, b, jobs);
  }
  if (suite == "plac3-pq") {
    if (m != MonoidId::plac) throw std::invalid_argument("plac3-pq suite applies to plac");
    return check_plac3_pq_identity(b, jobs);
  }
  throw std::invalid_argument("unknown suite '" + suite +
                              "' (left-cancel right-cancel sameeval refinement freeness "
                              "rps-rank plactic-adian plac3-pq)");
}

namespace {

void emit(std::ostream& out, OutputFormat format, const nlohmann::json& structured,
          const std::string& ascii) {
  if (format == OutputFormat::structured)
    out << structured.dump() << '\n';
  else
    out << ascii << '\n';
}

void run_task(const std::vector<std::string>& tokens, std::ostream& out,
              const BatchOptions& options) {
  const std::string& task = tokens[0];
  if (task == "psymbol") {
    if (tokens.size() < 3) throw std::invalid_argument("psymbol needs <monoid> <word>");
    MonoidId m = parse_monoid(tokens[1]);
    Word w = Word::parse(tokens[2]);
    emit(out, options.format, psymbol_report(m, w), to_ascii(psymbol(m, w)));
    return;
  }
  if (task == "equiv") {
    if (tokens.size() < 4) throw std::invalid_argument("equiv needs <monoid> <word> <word>");
    MonoidId m = parse_monoid(tokens[1]);
    Word u = Word::parse(tokens[2]);
    Word v = Word::parse(tokens[3]);
    bool eq = equivalent(m, u, v);
    emit(out, options.format, equiv_report(m, u, v, eq), eq ? "true" : "false");
    return;
  }
  if (task == "check") {
    if (tokens.size() < 3) throw std::invalid_argument("check needs <monoid> <identity>");
    MonoidId m = parse_monoid(tokens[1]);
    Identity id = parse_identity(tokens[2]);
    if (id.trivial()) throw std::invalid_argument("identity is trivial (sides are equal)");
    Args a = parse_args(tokens, 3);
    Verdict v = check_identity(m, id, bounds_from(a), options.jobs);
    emit(out, options.format, check_report(m, id, v),
         "check " + std::string(name(m)) + " " + to_string(id) + "\n" + render_verdict_ascii(v));
    return;
  }
  if (task == "search") {
    if (tokens.size() < 2) throw std::invalid_argument("search needs <monoid>");
    MonoidId m = parse_monoid(tokens[1]);
    Args a = parse_args(tokens, 2);
    std::size_t max_length = static_cast<std::size_t>(a.get_int("max-length", 4));
    SearchReport r = shortest_identity_search(m, max_length, bounds_from(a), options.jobs);
    emit(out, options.format, search_report(r), render_search_ascii(r));
    return;
  }
  if (task == "properties") {
    if (tokens.size() < 3) throw std::invalid_argument("properties needs <monoid> <suite>");
    MonoidId m = parse_monoid(tokens[1]);
    Args a = parse_args(tokens, 3);
    Verdict v = run_properties_suite(m, tokens[2], suite_options_from(a), options.jobs);
    emit(out, options.format, properties_report(m, tokens[2], v),
         "properties " + std::string(name(m)) + " " + tokens[2] + "\n" +
             render_verdict_ascii(v));
    return;
  }
  throw std::invalid_argument("unknown task '" + task +
                              "' (psymbol equiv check search properties)");
}

}  // namespace

void run_batch(std::istream& in, std::ostream& out, const BatchOptions& options) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tok(line);
    std::vector<std::string> tokens;
    std::string t;
    while (tok >> t) tokens.push_back(t);
    if (tokens.empty()) continue;
    try {
      run_task(tokens, out, options);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace placid
