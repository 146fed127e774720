#include "biorder/verdict.hpp"

#include "biorder/sturm.hpp"

#include <algorithm>

namespace biorder {

namespace {

// Citations name the result each rule applies.
constexpr const char* kCiteR1 =
    "fibered-knot necessity: a bi-orderable fibered knot group has an Alexander "
    "polynomial with a positive real root";
constexpr const char* kCiteR2 =
    "level 0: char(M) has no rational root, so elements outside [G,G] are pairwise "
    "comparable and Z x (G/[G,G]) inherits a bi-order; an irreducible block without a "
    "positive eigenvalue contradicts the Z x_A Z^d classification";
constexpr const char* kCiteR3 =
    "level 1: an irreducible block of the action on gamma_2/gamma_3 without a positive "
    "eigenvalue contains a rational vector; the infinitesimal-subgroup argument (generic "
    "and non-generic cases) with the single-block positive-eigenvalue lemma gives a "
    "contradiction";
constexpr const char* kCiteR4 =
    "fibered-knot sufficiency: all roots of the Alexander polynomial are real and "
    "positive";
constexpr const char* kCiteR5 = "no rule applied at the levels examined";

bool every_factor_has_positive_root(const FactorReport& r) {
  return std::all_of(r.factors.begin(), r.factors.end(),
                     [](const IrreducibleFactor& f) { return f.positive_roots >= 1; });
}

bool some_factor_without_positive_root(const FactorReport& r) {
  return std::any_of(r.factors.begin(), r.factors.end(),
                     [](const IrreducibleFactor& f) { return f.positive_roots == 0; });
}

bool has_linear_factor(const FactorReport& r) {
  return std::any_of(r.factors.begin(), r.factors.end(),
                     [](const IrreducibleFactor& f) { return f.factor.degree() == 1; });
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Biorderable: return "BIORDERABLE";
    case Outcome::NotBiorderable: return "NOT_BIORDERABLE";
    case Outcome::NoObstructionFound: return "NO_OBSTRUCTION_FOUND";
  }
  return "?";
}

Outcome classify_zd(const IntMatrix& a) {
  if (a.determinant() == 0) throw AnalysisError("singular matrix: not an automorphism");
  return every_factor_has_positive_root(factor_over_Q(char_poly(a))) ? Outcome::Biorderable
                                                                     : Outcome::NotBiorderable;
}

bool necessary_positive_eigenvalue(const IntMatrix& a) {
  return has_positive_real_root(char_poly(a));
}

bool lambda_block_obstruction(const IntMatrix& a) {
  return some_factor_without_positive_root(factor_over_Q(char_poly(a)));
}

std::optional<Outcome> cr_sufficient(const KnotRecord& k) {
  if (k.fibered && all_roots_positive_real(char_poly(abelianization_matrix(k.monodromy)))) {
    return Outcome::Biorderable;
  }
  return std::nullopt;
}

std::optional<Outcome> cr1_necessary(const KnotRecord& k) {
  if (k.fibered && !has_positive_real_root(char_poly(abelianization_matrix(k.monodromy)))) {
    return Outcome::NotBiorderable;
  }
  return std::nullopt;
}

LevelReport analyze_level(const FreeMap& phi, int level, int degree_cap) {
  LevelReport r;
  r.level = level;
  r.action = lcs_action(phi, level + 1, degree_cap);
  r.charpoly = char_poly(r.action.matrix);
  r.factors = factor_over_Q(r.charpoly);
  r.flags.has_rational_root = has_linear_factor(r.factors);
  r.flags.all_factors_have_positive_root = every_factor_has_positive_root(r.factors);
  r.flags.some_factor_all_lambda = some_factor_without_positive_root(r.factors);
  return r;
}

AnalysisReport analyze(const KnotRecord& k, int max_level, int degree_cap) {
  if (max_level < 0 || max_level + 1 > degree_cap) {
    throw AnalysisError("max level must lie in [0, " + std::to_string(degree_cap - 1) + "]");
  }
  const AutomorphismCheck check = verify_automorphism(k.monodromy);
  if (check.status == AutomorphismStatus::NotAnAutomorphism) {
    throw AnalysisError(k.name + ": monodromy is not an automorphism (" + check.detail + ")");
  }

  AnalysisReport report;
  report.name = k.name;
  report.fibered = k.fibered;
  for (int level = 0; level <= max_level; ++level) {
    report.levels.push_back(analyze_level(k.monodromy, level, degree_cap));
  }

  const LevelReport& base = report.levels.front();
  PremiseFlags& p = report.premises;
  p.r1_fibered_no_positive_root = k.fibered &&
                                  !has_positive_real_root(base.charpoly);
  p.r2_no_rational_root_and_lambda_block =
      !base.flags.has_rational_root && base.flags.some_factor_all_lambda;
  p.r4_fibered_all_roots_positive = k.fibered && all_roots_positive_real(base.charpoly);
  if (max_level >= 1) {
    p.r3_evaluated = true;
    p.r3_level1_lambda_block = report.levels[1].flags.some_factor_all_lambda;
  }

  if (p.r4_fibered_all_roots_positive &&
      (p.r1_fibered_no_positive_root || p.r2_no_rational_root_and_lambda_block ||
       p.r3_level1_lambda_block)) {
    throw AnalysisError(k.name +
                        ": sufficiency and obstruction premises hold simultaneously");
  }

  Verdict& v = report.verdict;
  if (p.r1_fibered_no_positive_root) {
    v = {Outcome::NotBiorderable, 0, "R1", kCiteR1};
  } else if (p.r2_no_rational_root_and_lambda_block) {
    v = {Outcome::NotBiorderable, 0, "R2", kCiteR2};
  } else if (p.r4_fibered_all_roots_positive) {
    v = {Outcome::Biorderable, 0, "R4", kCiteR4};
  } else if (p.r3_level1_lambda_block) {
    v = {Outcome::NotBiorderable, 1, "R3", kCiteR3};
  } else {
    v = {Outcome::NoObstructionFound, max_level, "R5", kCiteR5};
  }
  return report;
}

}  // namespace biorder
