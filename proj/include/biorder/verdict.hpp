#pragma once

// Bi-orderability decisions for Z x_A Z^d and for Z x F_n presented by a
// free-group automorphism.

#include "biorder/factor.hpp"
#include "biorder/freegroup.hpp"
#include "biorder/lcs.hpp"
#include "biorder/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biorder {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KnotRecord {
  std::string name;
  Alphabet alphabet;
  FreeMap monodromy;  // the t-conjugation
  bool fibered = false;
  std::string notes;

  std::size_t rank() const { return monodromy.rank(); }
};

enum class Outcome { Biorderable, NotBiorderable, NoObstructionFound };

std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::NoObstructionFound;
  /// Level at which the decision was made, or the deepest level examined for
  /// NoObstructionFound.
  int level = 0;
  std::string rule;  // "R1".."R5"
  std::string citation;
};

struct LevelFlags {
  bool has_rational_root = false;
  bool all_factors_have_positive_root = false;
  bool some_factor_all_lambda = false;
};

struct LevelReport {
  int level = 0;  // level L uses the quotient gamma_{L+1} / gamma_{L+2}
  QuotientAction action;
  IntPoly charpoly;
  FactorReport factors;
  LevelFlags flags;
};

/// Which rule premises held, recorded whether or not the rule fired.
struct PremiseFlags {
  bool r1_fibered_no_positive_root = false;
  bool r2_no_rational_root_and_lambda_block = false;
  bool r3_level1_lambda_block = false;
  bool r4_fibered_all_roots_positive = false;
  bool r3_evaluated = false;
};

struct AnalysisReport {
  std::string name;
  bool fibered = false;
  std::vector<LevelReport> levels;
  PremiseFlags premises;
  Verdict verdict;
};

/// Z x_A Z^d is bi-orderable iff every irreducible factor of char(A) over Q
/// has a root in (0, inf). Throws AnalysisError for singular A.
Outcome classify_zd(const IntMatrix& a);
bool necessary_positive_eigenvalue(const IntMatrix& a);
/// Some irreducible factor of char(A) has no root in (0, inf).
bool lambda_block_obstruction(const IntMatrix& a);

std::optional<Outcome> cr_sufficient(const KnotRecord& k);
std::optional<Outcome> cr1_necessary(const KnotRecord& k);

LevelReport analyze_level(const FreeMap& phi, int level, int degree_cap = kDefaultDegreeCap);

/// Builds level reports 0..max_level and applies the rules in order R1, R2,
/// R4, R3, R5. Throws AnalysisError if R4's premise holds together with an
/// obstruction premise.
AnalysisReport analyze(const KnotRecord& k, int max_level,
                       int degree_cap = kDefaultDegreeCap);

}  // namespace biorder
