#include "biorder/orderprops.hpp"

#include "biorder/magnus.hpp"

#include <algorithm>
#include <functional>

namespace biorder {

namespace {

constexpr std::size_t kMaxFailures = 10;
constexpr int kRejectionAttempts = 400;

void check_positive(const Word& g) {
  if (sign(g) != 1) throw NotPositiveError("probe element must be positive");
}

ProbeResult finish(ProbeResult r) {
  r.status = r.failures.empty() ? ProbeStatus::Pass : ProbeStatus::Counterexample;
  return r;
}

// Candidates skewed towards deeper lower-central-series terms so that
// rejection sampling for f << g finds hits for g beyond degree 1.
Word small_candidate(WordSampler& s, int max_length) {
  switch (s.next_u64() % 3) {
    case 0: return s.nonidentity(max_length);
    case 1: {
      const int part = std::max(1, max_length / 2);
      return commutator(s.nonidentity(part), s.nonidentity(part));
    }
    default: {
      const int part = std::max(1, max_length / 3);
      return commutator(commutator(s.nonidentity(part), s.nonidentity(part)),
                        s.nonidentity(part));
    }
  }
}

std::optional<Word> sample_infinitesimal(WordSampler& s, const Word& g, int max_length) {
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    Word f = small_candidate(s, max_length);
    if (!f.is_identity() && is_infinitesimal(f, g)) return f;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ProbeStatus s) {
  return s == ProbeStatus::Pass ? "PASS" : "COUNTEREXAMPLE";
}

WordSampler::WordSampler(std::size_t rank, std::uint64_t seed, std::uint64_t stream)
    : rank_(rank) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

Word WordSampler::any(int max_length) {
  const auto length = static_cast<int>(engine_() % static_cast<std::uint64_t>(max_length + 1));
  Word w(rank_);
  while (static_cast<int>(w.length()) < length) {
    const Letter l{static_cast<std::size_t>(engine_() % rank_), (engine_() & 1) ? 1 : -1};
    if (!w.is_identity() && w.letters().back().cancels(l)) continue;
    w.push_back(l);
  }
  return w;
}

Word WordSampler::nonidentity(int max_length) {
  while (true) {
    Word w = any(max_length);
    if (!w.is_identity()) return w;
  }
}

ProbeResult subgroup_probe(const Word& g, const ProbeConfig& cfg) {
  check_positive(g);
  ProbeResult r{"subgroup", 0, {}, ProbeStatus::Pass};
  for (int t = 0; t < cfg.samples && r.failures.size() < kMaxFailures; ++t) {
    WordSampler s(g.rank(), cfg.seed, static_cast<std::uint64_t>(t));
    const auto f1 = sample_infinitesimal(s, g, cfg.max_word_length);
    const auto f2 = sample_infinitesimal(s, g, cfg.max_word_length);
    if (!f1 || !f2) continue;
    ++r.trials;
    const Word product = multiply(*f1, *f2);
    const bool closed = product.is_identity() || is_infinitesimal(product, g);
    if (!closed || !is_infinitesimal(invert(*f1), g)) r.failures.push_back({*f1, *f2});
  }
  return finish(std::move(r));
}

ProbeResult dominant_check(const Word& g, const ProbeConfig& cfg) {
  check_positive(g);
  ProbeResult r{"dominance", 0, {}, ProbeStatus::Pass};
  auto test = [&](const Word& h) {
    ++r.trials;
    if (is_infinitesimal(g, h)) r.failures.push_back({h});
  };
  for (std::size_t i = 0; i < g.rank() && r.failures.empty(); ++i) {
    test(Word::generator(i, g.rank()));
  }
  for (int t = 0; t < cfg.samples && r.failures.size() < kMaxFailures; ++t) {
    WordSampler s(g.rank(), cfg.seed, static_cast<std::uint64_t>(t));
    test(s.nonidentity(cfg.max_word_length));
  }
  return finish(std::move(r));
}

ProbeResult normality_probe(const Word& g, const ProbeConfig& cfg) {
  ProbeResult premise = dominant_check(g, cfg);
  if (premise.status != ProbeStatus::Pass) {
    throw PremiseUnmet("normality probe needs a dominant element", std::move(premise));
  }
  ProbeResult r{"normality", 0, {}, ProbeStatus::Pass};
  for (int t = 0; t < cfg.samples && r.failures.size() < kMaxFailures; ++t) {
    WordSampler s(g.rank(), cfg.seed, static_cast<std::uint64_t>(t));
    const auto x = sample_infinitesimal(s, g, cfg.max_word_length);
    if (!x) continue;
    const Word u = s.any(cfg.max_word_length);
    ++r.trials;
    if (!is_infinitesimal(conjugate(u, *x), g)) r.failures.push_back({*x, u});
  }
  return finish(std::move(r));
}

ProbeResult commutator_infinitesimal_probe(const ProbeConfig& cfg) {
  ProbeResult r{"commutator", 0, {}, ProbeStatus::Pass};
  const Word dominant = Word::generator(0, cfg.rank);
  for (int t = 0; t < cfg.samples && r.failures.size() < kMaxFailures; ++t) {
    WordSampler s(cfg.rank, cfg.seed, static_cast<std::uint64_t>(t));
    const Word u = s.nonidentity(cfg.max_word_length);
    const Word v = s.nonidentity(cfg.max_word_length);
    const Word c = commutator(u, v);
    if (c.is_identity()) continue;
    ++r.trials;
    if (!is_infinitesimal(c, dominant)) r.failures.push_back({c, u, v});
  }
  return finish(std::move(r));
}

ProbeResult order_preservation_probe(const FreeMap& phi, const ProbeConfig& cfg) {
  const std::size_t n = phi.rank();
  ProbeResult r{"order-preservation", 0, {}, ProbeStatus::Pass};
  auto test = [&](const Word& w) {
    ++r.trials;
    if (sign(apply_map(phi, w)) != 1) r.failures.push_back({w});
  };
  // Generators and x_j^-1 x_i (i < j) are positive and catch permutations.
  for (std::size_t i = 0; i < n; ++i) test(Word::generator(i, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      test(multiply(Word::generator(j, n, -1), Word::generator(i, n)));
  for (int t = 0; t < cfg.samples && r.failures.size() < kMaxFailures; ++t) {
    WordSampler s(n, cfg.seed, static_cast<std::uint64_t>(t));
    test(absolute(s.nonidentity(cfg.max_word_length)));
  }
  return finish(std::move(r));
}

ProbeResult invariance_probe(const FreeMap& phi, const ProbeConfig& cfg) {
  ProbeResult premise = order_preservation_probe(phi, cfg);
  if (premise.status != ProbeStatus::Pass) {
    throw PremiseUnmet("invariance probe needs an order-preserving automorphism",
                       std::move(premise));
  }
  const std::size_t n = phi.rank();
  const Word dominant = Word::generator(0, n);
  ProbeResult r{"invariance", 0, {}, ProbeStatus::Pass};
  for (int t = 0; t < cfg.samples && r.failures.size() < kMaxFailures; ++t) {
    WordSampler s(n, cfg.seed, static_cast<std::uint64_t>(t));
    const auto f = sample_infinitesimal(s, dominant, cfg.max_word_length);
    if (!f) continue;
    ++r.trials;
    const Word image = apply_map(phi, *f);
    if (image.is_identity() || !is_infinitesimal(image, dominant)) r.failures.push_back({*f});
  }
  return finish(std::move(r));
}

// ---------------------------------------------------------------------------

SemidirectElement semidirect_multiply(const SemidirectElement& p, const SemidirectElement& q,
                                      const FreeMap& phi) {
  return {p.power + q.power, multiply(apply_map(map_power(phi, q.power), p.word), q.word)};
}

std::strong_ordering semidirect_compare(const SemidirectElement& p,
                                        const SemidirectElement& q) {
  if (p.power != q.power) return p.power <=> q.power;
  return compare(p.word, q.word);
}

SemidirectComparison semidirect_compare(const SemidirectElement& p, const SemidirectElement& q,
                                        const FreeMap& phi, const ProbeConfig& cfg) {
  SemidirectComparison out;
  out.order = semidirect_compare(p, q);
  if (order_preservation_probe(phi, cfg).status != ProbeStatus::Pass) {
    out.warning = "premise unmet: the map does not preserve the order on the free group";
  }
  return out;
}

WeakComparabilityResult weak_comparability_search(const Word& f, const Word& g,
                                                  const ProbeConfig& cfg) {
  if (f.is_identity() || g.is_identity()) {
    throw TrivialElementError("weak comparability needs nonidentity elements");
  }
  const std::size_t n = g.rank();
  WeakComparabilityResult result;
  // Letter order for shortlex: x0 < x0^-1 < x1 < x1^-1 < ...
  std::vector<Letter> alphabet;
  for (std::size_t i = 0; i < n; ++i) {
    alphabet.push_back({i, 1});
    alphabet.push_back({i, -1});
  }
  std::function<bool(Word&, int)> extend = [&](Word& h, int remaining) -> bool {
    if (remaining == 0) {
      ++result.searched;
      if (comparable(f, conjugate(h, g))) {
        result.witness = h;
        return true;
      }
      return false;
    }
    for (const Letter& l : alphabet) {
      if (!h.is_identity() && h.letters().back().cancels(l)) continue;
      Word next = h;
      next.push_back(l);
      if (extend(next, remaining - 1)) return true;
    }
    return false;
  };
  for (int length = 0; length <= cfg.search_bound; ++length) {
    Word h(n);
    if (extend(h, length)) break;
  }
  return result;
}

}  // namespace biorder
