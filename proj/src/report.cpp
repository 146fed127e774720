#include "biorder/report.hpp"

#include <limits>
#include <sstream>

namespace biorder {

using nlohmann::ordered_json;

ordered_json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

ordered_json to_json(const IntPoly& p) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(to_json(p.coeff(i)));
  return out;
}

namespace {

std::string basis_label(const BasicCommutator& c, const Alphabet& alphabet) {
  std::string s;
  for (std::size_t g : c.lyndon) s += alphabet.name(g);
  return s;
}

ordered_json words_json(const std::vector<Word>& words, const Alphabet& alphabet) {
  ordered_json out = ordered_json::array();
  for (const Word& w : words) out.push_back(alphabet.format(w));
  return out;
}

}  // namespace

ordered_json to_json(const AnalysisReport& r, const Alphabet& alphabet) {
  ordered_json out;
  out["name"] = r.name;
  out["fibered"] = r.fibered;
  ordered_json levels = ordered_json::array();
  for (const LevelReport& l : r.levels) {
    ordered_json level;
    level["level"] = l.level;
    ordered_json basis = ordered_json::array();
    for (const auto& c : l.action.basis.elements) basis.push_back(basis_label(c, alphabet));
    level["basis"] = basis;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < l.action.matrix.dim(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < l.action.matrix.dim(); ++j) {
        row.push_back(to_json(l.action.matrix.at(i, j)));
      }
      rows.push_back(row);
    }
    level["matrix"] = rows;
    level["charpoly"] = to_json(l.charpoly);
    ordered_json factors = ordered_json::array();
    for (const IrreducibleFactor& f : l.factors.factors) {
      ordered_json fj;
      fj["coeffs"] = to_json(f.factor);
      fj["multiplicity"] = f.multiplicity;
      fj["pos_real_roots"] = f.positive_roots;
      fj["real_roots"] = f.real_roots;
      factors.push_back(fj);
    }
    level["factors"] = factors;
    level["flags"] = {
        {"has_rational_root", l.flags.has_rational_root},
        {"all_factors_have_positive_root", l.flags.all_factors_have_positive_root},
        {"some_factor_all_lambda", l.flags.some_factor_all_lambda},
    };
    levels.push_back(level);
  }
  out["levels"] = levels;
  out["premises"] = {
      {"R1", r.premises.r1_fibered_no_positive_root},
      {"R2", r.premises.r2_no_rational_root_and_lambda_block},
      {"R3", r.premises.r3_level1_lambda_block},
      {"R4", r.premises.r4_fibered_all_roots_positive},
      {"R3_evaluated", r.premises.r3_evaluated},
  };
  out["verdict"] = {
      {"outcome", std::string(to_string(r.verdict.outcome))},
      {"level", r.verdict.level},
      {"rule", r.verdict.rule},
      {"citation", r.verdict.citation},
  };
  return out;
}

ordered_json to_json(const ProbeResult& r, const Alphabet& alphabet) {
  ordered_json out;
  out["property"] = r.property;
  out["status"] = std::string(to_string(r.status));
  out["trials"] = r.trials;
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) failures.push_back(words_json(f, alphabet));
  out["failures"] = failures;
  return out;
}

std::string to_text(const AnalysisReport& r, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "knot " << r.name << (r.fibered ? " (fibered)" : " (not fibered)") << '\n';
  for (const LevelReport& l : r.levels) {
    out << "level " << l.level << ": basis";
    for (const auto& c : l.action.basis.elements) out << ' ' << basis_label(c, alphabet);
    out << '\n';
    std::istringstream rows(l.action.matrix.to_string());
    for (std::string line; std::getline(rows, line);) out << "  " << line << '\n';
    out << "  charpoly " << l.charpoly.to_string('t') << '\n';
    for (const IrreducibleFactor& f : l.factors.factors) {
      out << "  factor (" << f.factor.to_string('t') << ")";
      if (f.multiplicity > 1) out << '^' << f.multiplicity;
      out << ": " << f.real_roots << " real, " << f.positive_roots << " positive\n";
    }
  }
  out << "verdict " << to_string(r.verdict.outcome) << " at level " << r.verdict.level
      << " by " << r.verdict.rule << '\n';
  out << "  " << r.verdict.citation << '\n';
  return out.str();
}

std::string to_text(const ProbeResult& r, const Alphabet& alphabet) {
  std::ostringstream out;
  out << r.property << ": " << to_string(r.status) << " (" << r.trials << " trials)\n";
  for (const auto& f : r.failures) {
    out << "  witness";
    for (const Word& w : f) out << " [" << alphabet.format(w) << ']';
    out << '\n';
  }
  return out.str();
}

}  // namespace biorder
