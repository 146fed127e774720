#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biorder/freegroup.hpp"
#include "biorder/presentation.hpp"
#include "support.hpp"

using namespace biorder;
using testing::random_nielsen;
using testing::random_word;

namespace {
const Alphabet xy("xy");
Word w2(const char* s) { return xy.parse(s); }
}  // namespace

TEST_CASE("reduction cancels adjacent inverse pairs") {
  const std::vector<Letter> letters = {{0, 1}, {1, 1}, {1, -1}, {0, -1}, {1, 1}};
  const Word w = Word::reduce(letters, 2);
  CHECK(w.length() == 1);
  CHECK(w == Word::generator(1, 2));
  CHECK_THROWS_AS(Word::reduce(std::vector<Letter>{{2, 1}}, 2), FreeGroupError);
  CHECK_THROWS_AS(Word::reduce(std::vector<Letter>{{0, 2}}, 2), FreeGroupError);
}

TEST_CASE("parse and format") {
  CHECK(xy.format(w2("x y X")) == "x y X");
  CHECK(xy.format(w2("x X")) == "e");
  CHECK(w2("e").is_identity());
  CHECK(w2("").is_identity());
  CHECK_THROWS_AS(w2("z"), FreeGroupError);
  CHECK_THROWS_AS(w2("xy"), FreeGroupError);
  CHECK_THROWS_AS(w2("x 1"), FreeGroupError);
  CHECK_THROWS_AS(Alphabet("xx"), FreeGroupError);
  CHECK_THROWS_AS(Alphabet("xe"), FreeGroupError);
  CHECK(Alphabet::standard(2).names() == "xy");
  CHECK(Alphabet::standard(4).names().size() == 4);
}

TEST_CASE("commutator convention is u v u^-1 v^-1") {
  CHECK(commutator(w2("x"), w2("y")) == w2("x y X Y"));
  CHECK(conjugate(w2("x"), w2("y")) == w2("x y X"));
  CHECK(power(w2("x y"), -2) == w2("Y X Y X"));
  CHECK(power(w2("x"), 0).is_identity());
  CHECK(w2("x x Y x").exponent_sums() == std::vector<long>{3, -1});
}

TEST_CASE("group axioms on random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word a = random_word(rng, 3, 12), b = random_word(rng, 3, 12),
               c = random_word(rng, 3, 12);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, invert(a)).is_identity());
    CHECK(invert(multiply(a, b)) == multiply(invert(b), invert(a)));
    const auto& l = a.letters();
    for (std::size_t k = 1; k < l.size(); ++k) CHECK_FALSE(l[k].cancels(l[k - 1]));
  }
}

TEST_CASE("maps are homomorphisms and compose") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const FreeMap phi = random_nielsen(rng, 3, 6), psi = random_nielsen(rng, 3, 6);
    const Word a = random_word(rng, 3, 10), b = random_word(rng, 3, 10);
    CHECK(apply_map(phi, multiply(a, b)) == multiply(apply_map(phi, a), apply_map(phi, b)));
    CHECK(apply_map(compose(phi, psi), a) == apply_map(phi, apply_map(psi, a)));
    CHECK(apply_map(phi.inverse(), apply_map(phi, a)) == a);
    CHECK(verify_automorphism(phi).status == AutomorphismStatus::Confirmed);
    CHECK(apply_map(map_power(phi, -2), apply_map(map_power(phi, 2), a)) == a);
  }
}

TEST_CASE("automorphism verification") {
  const FreeMap doubling({w2("x x"), w2("y")});
  CHECK(verify_automorphism(doubling).status == AutomorphismStatus::NotAnAutomorphism);
  const FreeMap unimodular({w2("x y"), w2("y")});
  CHECK(verify_automorphism(unimodular).status == AutomorphismStatus::NecessaryOnly);
  // Correct abelianization but a wrong inverse.
  const FreeMap wrong({w2("x y"), w2("y")}, std::vector<Word>{w2("Y x"), w2("y")});
  CHECK(verify_automorphism(wrong).status == AutomorphismStatus::NotAnAutomorphism);
  CHECK_THROWS_AS(map_power(unimodular, -1), FreeGroupError);
  CHECK(to_string(AutomorphismStatus::NecessaryOnly) == "NECESSARY-ONLY");
}

TEST_CASE("bundled monodromies carry confirmed inverses") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.key);
    const KnotRecord k = parse_presentation(e.text);
    CHECK(verify_automorphism(k.monodromy).status == AutomorphismStatus::Confirmed);
  }
}

TEST_CASE("6_2 images satisfy the defining relations") {
  // t a^-1 t^-1 = x b, t x a t^-1 = x, t b t^-1 = c^-1, t c t^-1 = a b c
  const KnotRecord k = parse_presentation(find_corpus_entry("6_2")->text);
  const Alphabet& al = k.alphabet;
  const FreeMap& phi = k.monodromy;
  CHECK(apply_map(phi, al.parse("A")) == al.parse("x b"));
  CHECK(apply_map(phi, al.parse("x a")) == al.parse("x"));
  CHECK(apply_map(phi, al.parse("b")) == al.parse("C"));
  CHECK(apply_map(phi, al.parse("c")) == al.parse("a b c"));
}

TEST_CASE("7_6 images satisfy the defining relations") {
  const KnotRecord k = parse_presentation(find_corpus_entry("7_6")->text);
  const Alphabet& al = k.alphabet;
  const FreeMap& phi = k.monodromy;
  CHECK(apply_map(phi, al.parse("a")) == al.parse("a b"));
  CHECK(apply_map(phi, al.parse("b")) == al.parse("a b d b b"));
  CHECK(apply_map(phi, al.parse("c")) == al.parse("B D"));
  CHECK(apply_map(phi, al.parse("d")) == al.parse("c d"));
}
