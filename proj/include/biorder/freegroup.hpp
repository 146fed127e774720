#pragma once

// Reduced words in a free group of finite rank, and endomorphisms given by
// generator images.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biorder {

class FreeGroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && exponent == -other.exponent;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word over generators 0..rank-1. The empty word is the
/// identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  /// Freely reduces an arbitrary letter sequence. Throws FreeGroupError if a
  /// generator index is out of range or an exponent is not +-1.
  static Word reduce(std::span<const Letter> letters, std::size_t rank);
  static Word generator(std::size_t index, std::size_t rank, int exponent = 1);

  std::size_t rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Appends a letter, cancelling against the last letter when possible.
  void push_back(const Letter& l);
  void append(const Word& w);

  /// Sum of exponents of each generator (the abelianization image).
  std::vector<long> exponent_sums() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

Word multiply(const Word& lhs, const Word& rhs);
Word invert(const Word& w);
/// [u, v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);
Word power(const Word& w, long n);
Word conjugate(const Word& h, const Word& w);  // h w h^-1

/// Generator names for textual I/O. Lowercase letters name generators;
/// uppercase denotes the inverse; "e" (or nothing) is the identity.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string names);
  /// x, y, z for rank <= 3; a, b, c, ... otherwise.
  static Alphabet standard(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::string& names() const { return names_; }
  char name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> index_of(char name) const;

  /// Parses whitespace-separated letters. Tokens must be single letters.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string names_;
};

/// An endomorphism of the free group of rank n given by generator images,
/// optionally paired with the images of a claimed inverse.
class FreeMap {
 public:
  FreeMap() = default;
  FreeMap(std::vector<Word> images,
          std::optional<std::vector<Word>> inverse_images = std::nullopt);

  static FreeMap identity(std::size_t rank);

  std::size_t rank() const { return images_.size(); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::size_t g) const { return images_.at(g); }
  const std::optional<std::vector<Word>>& inverse_images() const {
    return inverse_images_;
  }
  bool has_inverse() const { return inverse_images_.has_value(); }
  /// The declared inverse as a map (its inverse is this map). Throws if absent.
  FreeMap inverse() const;

  friend bool operator==(const FreeMap&, const FreeMap&) = default;

 private:
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
};

Word apply_map(const FreeMap& phi, const Word& w);
/// (phi o psi)(g) = phi(psi(g)). Inverse images are composed when both maps
/// carry them.
FreeMap compose(const FreeMap& phi, const FreeMap& psi);
/// phi^n; negative n requires a declared inverse.
FreeMap map_power(const FreeMap& phi, long n);

enum class AutomorphismStatus { Confirmed, NecessaryOnly, NotAnAutomorphism };

std::string_view to_string(AutomorphismStatus s);

struct AutomorphismCheck {
  AutomorphismStatus status = AutomorphismStatus::NotAnAutomorphism;
  std::string detail;
};

/// With a declared inverse, checks both compositions fix every generator.
/// Without one, only checks that the abelianized map has determinant +-1.
AutomorphismCheck verify_automorphism(const FreeMap& phi);

}  // namespace biorder
