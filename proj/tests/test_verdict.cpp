#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biorder/presentation.hpp"
#include "biorder/sturm.hpp"
#include "biorder/verdict.hpp"

using namespace biorder;

namespace {

KnotRecord knot(const char* key) { return parse_presentation(find_corpus_entry(key)->text); }

KnotRecord record(const char* name, bool fibered, const char* gens,
                  std::vector<std::string> images) {
  KnotRecord k;
  k.name = name;
  k.fibered = fibered;
  k.alphabet = Alphabet(gens);
  std::vector<Word> words;
  for (const auto& s : images) words.push_back(k.alphabet.parse(s));
  k.monodromy = FreeMap(words);
  return k;
}

}  // namespace

TEST_CASE("classification of Z x Z^d") {
  CHECK(classify_zd(IntMatrix{{2, 1}, {1, 1}}) == Outcome::Biorderable);
  CHECK(classify_zd(IntMatrix{{0, -1}, {1, 1}}) == Outcome::NotBiorderable);
  CHECK(classify_zd(IntMatrix{{-1, 0}, {0, -1}}) == Outcome::NotBiorderable);
  CHECK(classify_zd(IntMatrix::identity(3)) == Outcome::Biorderable);
  CHECK_THROWS_AS(classify_zd(IntMatrix{{1, 1}, {1, 1}}), AnalysisError);
  // A positive eigenvalue exists, yet the -1 block has none.
  const IntMatrix mixed{{2, 1, 0}, {1, 1, 0}, {0, 0, -1}};
  CHECK(necessary_positive_eigenvalue(mixed));
  CHECK(lambda_block_obstruction(mixed));
  CHECK(classify_zd(mixed) == Outcome::NotBiorderable);
  // x^2 - 2x - 1 has roots 1 +- sqrt 2: one positive root in the single block.
  const IntMatrix irrational{{0, 1}, {1, 2}};
  CHECK_FALSE(lambda_block_obstruction(irrational));
  CHECK(classify_zd(irrational) == Outcome::Biorderable);
}

TEST_CASE("fibered-knot criteria on the abelianized monodromy") {
  CHECK(cr1_necessary(knot("trefoil")) == Outcome::NotBiorderable);
  CHECK_FALSE(cr1_necessary(knot("figure8")));
  CHECK(cr_sufficient(knot("figure8")) == Outcome::Biorderable);
  CHECK_FALSE(cr_sufficient(knot("6_2")));
  CHECK_FALSE(cr_sufficient(knot("7_6")));
  CHECK_FALSE(cr1_necessary(knot("7_6")));
}

TEST_CASE("corpus verdicts") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.key);
    const AnalysisReport r = analyze(parse_presentation(e.text), 1);
    CHECK(r.verdict.outcome == e.expected);
    CHECK(r.verdict.level == e.expected_level);
    CHECK(r.verdict.rule == e.expected_rule);
    CHECK(r.levels.size() == 2);
    CHECK(r.premises.r3_evaluated);
  }
}

TEST_CASE("premise flags are recorded even when a rule does not fire") {
  const AnalysisReport six = analyze(knot("6_2"), 1);
  CHECK_FALSE(six.premises.r1_fibered_no_positive_root);
  CHECK_FALSE(six.premises.r2_no_rational_root_and_lambda_block);
  CHECK_FALSE(six.premises.r4_fibered_all_roots_positive);
  CHECK(six.premises.r3_level1_lambda_block);
  CHECK_FALSE(six.levels[0].flags.has_rational_root);
  CHECK(six.levels[1].flags.has_rational_root);

  const AnalysisReport trefoil = analyze(knot("trefoil"), 1);
  CHECK(trefoil.premises.r1_fibered_no_positive_root);
  CHECK(trefoil.premises.r2_no_rational_root_and_lambda_block);
}

TEST_CASE("deeper and shallower runs") {
  const AnalysisReport shallow = analyze(knot("6_2"), 0);
  CHECK(shallow.verdict.outcome == Outcome::NoObstructionFound);
  CHECK(shallow.verdict.rule == "R5");
  CHECK_FALSE(shallow.premises.r3_evaluated);

  const AnalysisReport deep = analyze(knot("figure8"), 3);
  CHECK(deep.levels.size() == 4);
  CHECK(deep.verdict.rule == "R4");
  CHECK(deep.levels[2].charpoly.degree() == 2);
  CHECK_THROWS_AS(analyze(knot("figure8"), 4), AnalysisError);
  CHECK_THROWS_AS(analyze(knot("figure8"), -1), AnalysisError);
}

TEST_CASE("unfibered inputs skip the fibered rules") {
  // Without fibering the trefoil map is caught by the level-0 block rule.
  const AnalysisReport r = analyze(record("t", false, "ab", {"b", "b A"}), 1);
  CHECK(r.verdict.rule == "R2");
  CHECK_FALSE(r.premises.r1_fibered_no_positive_root);

  const AnalysisReport id = analyze(record("id", false, "ab", {"a", "b"}), 2);
  CHECK(id.verdict.outcome == Outcome::NoObstructionFound);
  CHECK(id.verdict.level == 2);

  const AnalysisReport fib = analyze(record("id", true, "ab", {"a", "b"}), 1);
  CHECK(fib.verdict.rule == "R4");
}

TEST_CASE("non-automorphisms are rejected") {
  CHECK_THROWS_AS(analyze(record("bad", true, "ab", {"a a", "b"}), 1), AnalysisError);
}

TEST_CASE("homology sanity: char(M) at 1 is a unit") {
  const std::vector<std::pair<const char*, long>> expected = {
      {"6_2", -1}, {"7_6", -1}, {"trefoil", 1}, {"figure8", -1}};
  for (const auto& [key, value] : expected) {
    CAPTURE(key);
    CHECK(char_poly(abelianization_matrix(knot(key).monodromy)).eval(1) == value);
  }
}

TEST_CASE("outcome names") {
  CHECK(to_string(Outcome::Biorderable) == "BIORDERABLE");
  CHECK(to_string(Outcome::NotBiorderable) == "NOT_BIORDERABLE");
  CHECK(to_string(Outcome::NoObstructionFound) == "NO_OBSTRUCTION_FOUND");
}
