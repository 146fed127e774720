#pragma once

// Randomized probes of infinitesimal-subgroup properties in the Magnus
// bi-order. A PASS is evidence from the sampled trials, not a proof.

#include "biorder/freegroup.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace biorder {

struct ProbeConfig {
  std::uint64_t seed = 1;
  int samples = 1000;
  int max_word_length = 10;
  int search_bound = 3;
  std::size_t rank = 2;
};

enum class ProbeStatus { Pass, Counterexample };

std::string_view to_string(ProbeStatus s);

struct ProbeResult {
  std::string property;
  int trials = 0;
  /// Each counterexample lists the words involved (the witness first).
  std::vector<std::vector<Word>> failures;
  ProbeStatus status = ProbeStatus::Pass;
};

class NotPositiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A premise probe failed; carries its result.
class PremiseUnmet : public std::runtime_error {
 public:
  PremiseUnmet(std::string what, ProbeResult premise)
      : std::runtime_error(std::move(what)), premise_(std::move(premise)) {}
  const ProbeResult& premise() const { return premise_; }

 private:
  ProbeResult premise_;
};

/// Deterministic random reduced words. Each trial draws from its own
/// generator seeded from (seed, trial index).
class WordSampler {
 public:
  WordSampler(std::size_t rank, std::uint64_t seed, std::uint64_t stream);
  /// Nonidentity reduced word of length uniform in [1, max_length].
  Word nonidentity(int max_length);
  /// Reduced word of length uniform in [0, max_length].
  Word any(int max_length);
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::size_t rank_;
  std::mt19937_64 engine_;
};

ProbeResult subgroup_probe(const Word& g, const ProbeConfig& cfg);
ProbeResult normality_probe(const Word& g, const ProbeConfig& cfg);
ProbeResult dominant_check(const Word& g, const ProbeConfig& cfg);
ProbeResult commutator_infinitesimal_probe(const ProbeConfig& cfg);
ProbeResult order_preservation_probe(const FreeMap& phi, const ProbeConfig& cfg);
ProbeResult invariance_probe(const FreeMap& phi, const ProbeConfig& cfg);

/// An element t^m w of Z x_phi F_n.
struct SemidirectElement {
  long power = 0;
  Word word;
};

/// (m, w) (n, v) = (m + n, phi^n(w) v). Negative n needs a declared inverse.
SemidirectElement semidirect_multiply(const SemidirectElement& p,
                                      const SemidirectElement& q,
                                      const FreeMap& phi);

struct SemidirectComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  /// Set when the order-preservation premise failed for phi; the comparison
  /// is still computed.
  std::optional<std::string> warning;
};

/// Lexicographic: integer parts first, then the words in the Magnus order.
std::strong_ordering semidirect_compare(const SemidirectElement& p,
                                        const SemidirectElement& q);
SemidirectComparison semidirect_compare(const SemidirectElement& p,
                                        const SemidirectElement& q,
                                        const FreeMap& phi, const ProbeConfig& cfg);

struct WeakComparabilityResult {
  std::optional<Word> witness;  // empty: NOT_FOUND_WITHIN_BOUND
  long searched = 0;
};

/// Enumerates reduced h with |h| <= cfg.search_bound in shortlex order and
/// returns the first for which f and h g h^-1 are comparable.
WeakComparabilityResult weak_comparability_search(const Word& f, const Word& g,
                                                  const ProbeConfig& cfg);

}  // namespace biorder
