#include "biorder/cli.hpp"

#include "biorder/orderprops.hpp"
#include "biorder/presentation.hpp"
#include "biorder/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace biorder::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxLevel = kDefaultDegreeCap - 1;

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PresentationFile load(const std::string& target) {
  const std::string prefix = "corpus:";
  if (target.rfind(prefix, 0) == 0) {
    const CorpusEntry* e = find_corpus_entry(target.substr(prefix.size()));
    if (!e) throw LoadError("no corpus entry '" + target.substr(prefix.size()) + "'");
    return parse_presentation_file(e->text);
  }
  std::ifstream in(target);
  if (!in) throw LoadError("cannot read '" + target + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation_file(buf.str());
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

// Shared by analyze and corpus verify.
AnalysisReport run_analysis(const KnotRecord& k, int max_level, int max_degree) {
  if (max_level < 0 || max_level > kMaxLevel) {
    throw AnalysisError("--max-level must lie in [0, " + std::to_string(kMaxLevel) + "]");
  }
  for (int level = 0; level <= max_level; ++level) {
    const std::size_t dim = witt_dimension(k.rank(), level + 1);
    if (dim > static_cast<std::size_t>(max_degree)) {
      throw AnalysisError("level " + std::to_string(level) + " has dimension " +
                          std::to_string(dim) + ", above --max-degree " +
                          std::to_string(max_degree));
    }
  }
  if (verify_automorphism(k.monodromy).status == AutomorphismStatus::NotAnAutomorphism) {
    throw AnalysisError("the map of " + k.name + " is not an automorphism");
  }
  return analyze(k, max_level);
}

int cmd_analyze(const std::string& target, int max_level, int max_degree,
                const std::string& format, std::ostream& out, std::ostream& err) {
  PresentationFile file;
  try {
    file = load(target);
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ParseError& e) {
    err << "parse error: " << target << ": " << e.what() << '\n';
    return kParseError;
  }
  const KnotRecord& k = file.record;
  AnalysisReport report;
  try {
    report = run_analysis(k, max_level, max_degree);
  } catch (const std::exception& e) {
    err << "analysis error: " << e.what() << '\n';
    return kAnalysisError;
  }
  const AutomorphismStatus status = verify_automorphism(k.monodromy).status;
  if (format == "json") {
    ordered_json j = to_json(report, k.alphabet);
    j["automorphism"] = std::string(to_string(status));
    emit(out, j);
  } else {
    out << "automorphism " << to_string(status) << '\n' << to_text(report, k.alphabet);
  }
  return kOk;
}

int cmd_corpus_list(std::ostream& out) {
  for (const CorpusEntry& e : corpus()) {
    out << e.key << "  expected " << to_string(e.expected) << " at level "
        << e.expected_level << " by " << e.expected_rule << '\n';
  }
  return kOk;
}

int cmd_corpus_show(const std::string& key, std::ostream& out, std::ostream& err) {
  const CorpusEntry* e = find_corpus_entry(key);
  if (!e) {
    err << "error: no corpus entry '" << key << "'\n";
    return kUsageError;
  }
  out << e->text;
  return kOk;
}

int cmd_corpus_verify(const std::string& format, std::ostream& out, std::ostream& err) {
  ordered_json results = ordered_json::array();
  std::ostringstream text;
  bool all_ok = true;
  for (const CorpusEntry& e : corpus()) {
    ordered_json j;
    j["name"] = e.key;
    j["expected"] = {{"outcome", std::string(to_string(e.expected))},
                     {"level", e.expected_level},
                     {"rule", e.expected_rule}};
    bool ok = false;
    try {
      const KnotRecord k = parse_presentation(e.text);
      const AutomorphismStatus status = verify_automorphism(k.monodromy).status;
      const AnalysisReport r = run_analysis(k, std::max(1, e.expected_level), 8);
      ok = status == AutomorphismStatus::Confirmed && r.verdict.outcome == e.expected &&
           r.verdict.level == e.expected_level && r.verdict.rule == e.expected_rule;
      j["automorphism"] = std::string(to_string(status));
      j["verdict"] = {{"outcome", std::string(to_string(r.verdict.outcome))},
                      {"level", r.verdict.level},
                      {"rule", r.verdict.rule}};
      text << e.key << ": " << to_string(r.verdict.outcome) << " at level " << r.verdict.level
           << " by " << r.verdict.rule << ", automorphism " << to_string(status);
    } catch (const std::exception& ex) {
      j["error"] = ex.what();
      text << e.key << ": error: " << ex.what();
    }
    j["match"] = ok;
    text << (ok ? "  ok\n" : "  MISMATCH\n");
    all_ok = all_ok && ok;
    results.push_back(j);
  }
  if (format == "json") {
    emit(out, ordered_json{{"corpus", results}, {"all_match", all_ok}});
  } else {
    out << text.str() << (all_ok ? "all entries match\n" : "some entries do not match\n");
  }
  if (!all_ok) err << "corpus verification failed\n";
  return all_ok ? kOk : kFailure;
}

struct ProbeArgs {
  std::string name;
  ProbeConfig cfg;
  std::string generators = "xy";
  std::string g, f;
  std::string map = "identity";
  std::string format = "text";
};

FreeMap swap_map(std::size_t rank) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(i, rank));
  if (rank >= 2) std::swap(images[0], images[1]);
  std::vector<Word> inverse = images;
  return FreeMap(std::move(images), std::move(inverse));
}

int cmd_probe(ProbeArgs a, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kProbes = {
      "subgroup", "normality", "dominance", "commutator",
      "order-preservation", "invariance", "weak-comparability"};
  if (std::find(kProbes.begin(), kProbes.end(), a.name) == kProbes.end()) {
    err << "error: unknown probe '" << a.name << "'; expected one of";
    for (const auto& p : kProbes) err << ' ' << p;
    err << '\n';
    return kUsageError;
  }

  Alphabet alphabet("x");
  FreeMap phi = FreeMap::identity(1);
  try {
    alphabet = Alphabet(a.generators);
    if (a.map == "identity") {
      phi = FreeMap::identity(alphabet.rank());
    } else if (a.map == "swap") {
      phi = swap_map(alphabet.rank());
    } else {
      const PresentationFile file = load(a.map);
      alphabet = file.record.alphabet;
      phi = file.record.monodromy;
    }
  } catch (const FreeGroupError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ParseError& e) {
    err << "parse error: " << a.map << ": " << e.what() << '\n';
    return kParseError;
  }
  a.cfg.rank = alphabet.rank();

  auto word_arg = [&](const std::string& text, Word fallback) {
    return text.empty() ? fallback : alphabet.parse(text);
  };

  try {
    const Word x0 = Word::generator(0, alphabet.rank());
    const Word g = word_arg(a.g, x0);
    if (a.name == "weak-comparability") {
      if (a.f.empty() || a.g.empty()) {
        err << "error: weak-comparability needs --f and --g\n";
        return kUsageError;
      }
      const WeakComparabilityResult r = weak_comparability_search(word_arg(a.f, x0), g, a.cfg);
      const std::string status = r.witness ? "FOUND" : "NOT_FOUND_WITHIN_BOUND";
      if (a.format == "json") {
        ordered_json j{{"property", "weak-comparability"}, {"status", status},
                       {"searched", r.searched}, {"bound", a.cfg.search_bound}};
        j["witness"] = r.witness ? ordered_json(alphabet.format(*r.witness)) : ordered_json();
        emit(out, j);
      } else {
        out << "weak-comparability: " << status;
        if (r.witness) out << " h = " << alphabet.format(*r.witness);
        out << " (" << r.searched << " words searched, bound " << a.cfg.search_bound << ")\n";
      }
      return kOk;
    }

    ProbeResult r;
    if (a.name == "subgroup") r = subgroup_probe(g, a.cfg);
    else if (a.name == "normality") r = normality_probe(g, a.cfg);
    else if (a.name == "dominance") r = dominant_check(g, a.cfg);
    else if (a.name == "commutator") r = commutator_infinitesimal_probe(a.cfg);
    else if (a.name == "order-preservation") r = order_preservation_probe(phi, a.cfg);
    else r = invariance_probe(phi, a.cfg);

    if (a.format == "json") emit(out, to_json(r, alphabet));
    else out << to_text(r, alphabet);
    return kOk;
  } catch (const PremiseUnmet& e) {
    if (a.format == "json") {
      emit(out, ordered_json{{"property", a.name}, {"status", "PREMISE_UNMET"},
                             {"premise", to_json(e.premise(), alphabet)}});
    } else {
      out << a.name << ": PREMISE_UNMET (" << e.what() << ")\n"
          << to_text(e.premise(), alphabet);
    }
    return kAnalysisError;
  } catch (const FreeGroupError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kAnalysisError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-orderability obstructions for fibered knot groups"};
  app.name("biorder");
  app.require_subcommand(1);

  std::string target, format = "text";
  int max_level = 1, max_degree = 8;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze a presentation file");
  analyze_cmd->add_option("target", target, "file path or corpus:NAME")->required();
  analyze_cmd->add_option("--max-level", max_level, "deepest level to examine")
      ->capture_default_str();
  analyze_cmd->add_option("--max-degree", max_degree, "largest quotient dimension")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Bundled knots");
  corpus_cmd->require_subcommand(1);
  CLI::App* list_cmd = corpus_cmd->add_subcommand("list", "List bundled knots");
  std::string show_key;
  CLI::App* show_cmd = corpus_cmd->add_subcommand("show", "Print a bundled file");
  show_cmd->add_option("name", show_key)->required();
  CLI::App* verify_cmd = corpus_cmd->add_subcommand("verify", "Check stored verdicts");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  ProbeArgs probe;
  CLI::App* probe_cmd = app.add_subcommand("probe", "Run an order-property probe");
  probe_cmd->add_option("name", probe.name,
                        "subgroup, normality, dominance, commutator, order-preservation, "
                        "invariance or weak-comparability")
      ->required();
  probe_cmd->add_option("--seed", probe.cfg.seed)->capture_default_str();
  probe_cmd->add_option("--samples", probe.cfg.samples)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  probe_cmd->add_option("--max-word-length", probe.cfg.max_word_length)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  probe_cmd->add_option("--bound", probe.cfg.search_bound)
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  probe_cmd->add_option("--generators", probe.generators, "generator letters")
      ->capture_default_str();
  probe_cmd->add_option("--g", probe.g, "word g (default: first generator)");
  probe_cmd->add_option("--f", probe.f, "word f");
  probe_cmd->add_option("--map", probe.map, "identity, swap, a file or corpus:NAME")
      ->capture_default_str();
  probe_cmd->add_option("--format", probe.format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (*analyze_cmd) return cmd_analyze(target, max_level, max_degree, format, out, err);
  if (*list_cmd) return cmd_corpus_list(out);
  if (*show_cmd) return cmd_corpus_show(show_key, out, err);
  if (*verify_cmd) return cmd_corpus_verify(format, out, err);
  return cmd_probe(probe, out, err);
}

}  // namespace biorder::cli
