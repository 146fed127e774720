#include "biorder/freegroup.hpp"

#include "biorder/lcs.hpp"
#include "biorder/matrix.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace biorder {

namespace {

void check_rank(const Word& a, const Word& b, const char* op) {
  if (a.rank() != b.rank()) {
    std::ostringstream msg;
    msg << op << ": rank mismatch (" << a.rank() << " vs " << b.rank() << ")";
    throw FreeGroupError(msg.str());
  }
}

}  // namespace

Word Word::reduce(std::span<const Letter> letters, std::size_t rank) {
  Word w(rank);
  for (const Letter& l : letters) w.push_back(l);
  return w;
}

Word Word::generator(std::size_t index, std::size_t rank, int exponent) {
  const Letter l{index, exponent};
  return reduce(std::span(&l, 1), rank);
}

void Word::push_back(const Letter& l) {
  if (l.generator >= rank_) {
    throw FreeGroupError("generator index " + std::to_string(l.generator) +
                         " out of range for rank " + std::to_string(rank_));
  }
  if (l.exponent != 1 && l.exponent != -1) {
    throw FreeGroupError("letter exponent must be +1 or -1");
  }
  if (!letters_.empty() && letters_.back().cancels(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

void Word::append(const Word& w) {
  check_rank(*this, w, "append");
  for (const Letter& l : w.letters_) push_back(l);
}

std::vector<long> Word::exponent_sums() const {
  std::vector<long> sums(rank_, 0);
  for (const Letter& l : letters_) sums[l.generator] += l.exponent;
  return sums;
}

Word multiply(const Word& lhs, const Word& rhs) {
  check_rank(lhs, rhs, "multiply");
  Word out = lhs;
  out.append(rhs);
  return out;
}

Word invert(const Word& w) {
  Word out(w.rank());
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word commutator(const Word& u, const Word& v) {
  check_rank(u, v, "commutator");
  Word out = u;
  out.append(v);
  out.append(invert(u));
  out.append(invert(v));
  return out;
}

Word power(const Word& w, long n) {
  const Word base = n < 0 ? invert(w) : w;
  Word out(w.rank());
  for (long i = 0; i < std::labs(n); ++i) out.append(base);
  return out;
}

Word conjugate(const Word& h, const Word& w) {
  check_rank(h, w, "conjugate");
  Word out = h;
  out.append(w);
  out.append(invert(h));
  return out;
}

// ---------------------------------------------------------------------------

Alphabet::Alphabet(std::string names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const char c = names_[i];
    if (c < 'a' || c > 'z' || c == 'e') {
      throw FreeGroupError(std::string("invalid generator name '") + c + "'");
    }
    if (names_.find(c) != i) {
      throw FreeGroupError(std::string("duplicate generator name '") + c + "'");
    }
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  if (rank <= 3) return Alphabet(std::string("xyz").substr(0, rank));
  static const std::string pool = "abcdfghijklmnopqrstuvwxyz";
  if (rank > pool.size()) throw FreeGroupError("rank too large for a letter alphabet");
  return Alphabet(pool.substr(0, rank));
}

std::optional<std::size_t> Alphabet::index_of(char name) const {
  const auto pos = names_.find(name);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

Word Alphabet::parse(std::string_view text) const {
  Word w(rank());
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    if (token.size() != 1 || !std::isalpha(static_cast<unsigned char>(token[0]))) {
      throw FreeGroupError("unreadable token '" + token + "'");
    }
    const char c = token[0];
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto idx = index_of(lower);
    if (!idx) throw FreeGroupError(std::string("unknown generator '") + lower + "'");
    w.push_back({*idx, c == lower ? 1 : -1});
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    const char c = name(l.generator);
    out.push_back(l.exponent > 0 ? c
                                 : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeMap::FreeMap(std::vector<Word> images, std::optional<std::vector<Word>> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  const std::size_t n = images_.size();
  for (const Word& w : images_) {
    if (w.rank() != n) throw FreeGroupError("map image has rank " + std::to_string(w.rank()) +
                                            ", expected " + std::to_string(n));
  }
  if (inverse_images_) {
    if (inverse_images_->size() != n) {
      throw FreeGroupError("inverse map must give one image per generator");
    }
    for (const Word& w : *inverse_images_) {
      if (w.rank() != n) throw FreeGroupError("inverse image has the wrong rank");
    }
  }
}

FreeMap FreeMap::identity(std::size_t rank) {
  std::vector<Word> images;
  for (std::size_t g = 0; g < rank; ++g) images.push_back(Word::generator(g, rank));
  return FreeMap(images, images);
}

FreeMap FreeMap::inverse() const {
  if (!inverse_images_) throw FreeGroupError("map has no declared inverse");
  return FreeMap(*inverse_images_, images_);
}

Word apply_map(const FreeMap& phi, const Word& w) {
  if (w.rank() != phi.rank()) {
    throw FreeGroupError("apply_map: word rank " + std::to_string(w.rank()) +
                         " does not match map rank " + std::to_string(phi.rank()));
  }
  Word out(phi.rank());
  for (const Letter& l : w.letters()) {
    const Word& img = phi.image(l.generator);
    if (l.exponent > 0) {
      out.append(img);
    } else {
      const auto& ls = img.letters();
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return out;
}

FreeMap compose(const FreeMap& phi, const FreeMap& psi) {
  if (phi.rank() != psi.rank()) throw FreeGroupError("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(psi.rank());
  for (const Word& w : psi.images()) images.push_back(apply_map(phi, w));
  std::optional<std::vector<Word>> inverse;
  if (phi.has_inverse() && psi.has_inverse()) {
    // (phi o psi)^-1 = psi^-1 o phi^-1
    const FreeMap psi_inv = psi.inverse();
    inverse.emplace();
    for (const Word& w : *phi.inverse_images()) inverse->push_back(apply_map(psi_inv, w));
  }
  return FreeMap(std::move(images), std::move(inverse));
}

FreeMap map_power(const FreeMap& phi, long n) {
  const FreeMap base = n < 0 ? phi.inverse() : phi;
  FreeMap out = FreeMap::identity(phi.rank());
  for (long i = 0; i < std::labs(n); ++i) out = compose(base, out);
  return out;
}

std::string_view to_string(AutomorphismStatus s) {
  switch (s) {
    case AutomorphismStatus::Confirmed: return "CONFIRMED";
    case AutomorphismStatus::NecessaryOnly: return "NECESSARY-ONLY";
    case AutomorphismStatus::NotAnAutomorphism: return "NOT_AN_AUTOMORPHISM";
  }
  return "?";
}

AutomorphismCheck verify_automorphism(const FreeMap& phi) {
  const std::size_t n = phi.rank();
  if (phi.has_inverse()) {
    const FreeMap inv = phi.inverse();
    for (std::size_t g = 0; g < n; ++g) {
      const Word gen = Word::generator(g, n);
      if (apply_map(phi, apply_map(inv, gen)) != gen ||
          apply_map(inv, apply_map(phi, gen)) != gen) {
        return {AutomorphismStatus::NotAnAutomorphism,
                "declared inverse does not compose to the identity on generator " +
                    std::to_string(g)};
      }
    }
    return {AutomorphismStatus::Confirmed, "both compositions fix every generator"};
  }
  const BigInt det = abelianization_matrix(phi).determinant();
  if (abs(det) != 1) {
    return {AutomorphismStatus::NotAnAutomorphism,
            "abelianized determinant is " + det.get_str()};
  }
  return {AutomorphismStatus::NecessaryOnly, "abelianized determinant is " + det.get_str()};
}

}  // namespace biorder
