#include "biorder/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace biorder {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

enum class Section { Header, Map, Inverse };

struct MapLine {
  std::size_t line;
  std::string image;
};

std::vector<Word> build_images(const std::map<char, MapLine>& lines, const Alphabet& alphabet,
                               std::size_t header_line, const char* what) {
  std::vector<Word> images;
  for (char g : alphabet.names()) {
    const auto it = lines.find(g);
    if (it == lines.end()) {
      throw ParseError(header_line, std::string(what) + " has no line for generator '" + g + "'");
    }
    try {
      images.push_back(alphabet.parse(it->second.image));
    } catch (const FreeGroupError& e) {
      throw ParseError(it->second.line, e.what());
    }
  }
  return images;
}

}  // namespace

PresentationFile parse_presentation_file(std::string_view text) {
  PresentationFile file;
  std::optional<std::string> name;
  std::optional<bool> fibered;
  std::optional<Alphabet> alphabet;
  std::size_t generators_line = 0, map_line = 0, inverse_line = 0;
  std::map<char, MapLine> map_lines, inverse_lines;
  bool seen_content = false;
  Section section = Section::Header;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      if (!seen_content) {
        std::string c = stripped.substr(1);
        if (!c.empty() && c.front() == ' ') c.erase(0, 1);
        file.comments.push_back(std::move(c));
      }
      continue;
    }
    seen_content = true;
    const std::string line = trim(stripped.substr(0, stripped.find('#')));
    const bool indented = raw.front() == ' ' || raw.front() == '\t';

    if (indented && section != Section::Header) {
      const auto arrow = line.find("->");
      if (arrow == std::string::npos) throw ParseError(lineno, "expected 'g -> word'");
      const std::string lhs = trim(line.substr(0, arrow));
      if (lhs.size() != 1 || !alphabet || !alphabet->index_of(lhs[0])) {
        throw ParseError(lineno, "unknown generator '" + lhs + "'");
      }
      auto& target = section == Section::Map ? map_lines : inverse_lines;
      if (!target.emplace(lhs[0], MapLine{lineno, trim(line.substr(arrow + 2))}).second) {
        throw ParseError(lineno, "duplicate map line for '" + lhs + "'");
      }
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "unreadable line '" + line + "'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    section = Section::Header;
    if (key == "name") {
      if (value.empty()) throw ParseError(lineno, "empty name");
      name = value;
    } else if (key == "fibered") {
      if (value != "true" && value != "false") {
        throw ParseError(lineno, "fibered must be 'true' or 'false'");
      }
      fibered = value == "true";
    } else if (key == "generators") {
      std::istringstream gs(value);
      std::string names, tok;
      while (gs >> tok) {
        if (tok.size() != 1) throw ParseError(lineno, "unreadable generator '" + tok + "'");
        names += tok;
      }
      if (names.empty()) throw ParseError(lineno, "no generators declared");
      try {
        alphabet = Alphabet(names);
      } catch (const FreeGroupError& e) {
        throw ParseError(lineno, e.what());
      }
      generators_line = lineno;
    } else if (key == "map" || key == "inverse") {
      if (!value.empty()) throw ParseError(lineno, "'" + key + ":' takes no value");
      if (!alphabet) throw ParseError(lineno, "'" + key + ":' before 'generators:'");
      if (key == "map") {
        if (map_line) throw ParseError(lineno, "duplicate 'map:' section");
        map_line = lineno;
        section = Section::Map;
      } else {
        if (inverse_line) throw ParseError(lineno, "duplicate 'inverse:' section");
        inverse_line = lineno;
        section = Section::Inverse;
      }
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }

  const std::size_t end = lineno + 1;
  if (!name) throw ParseError(end, "missing 'name:'");
  if (!fibered) throw ParseError(end, "missing 'fibered:'");
  if (!alphabet) throw ParseError(end, "missing 'generators:'");
  if (!map_line) throw ParseError(end, "missing 'map:' section");
  (void)generators_line;

  std::vector<Word> images = build_images(map_lines, *alphabet, map_line, "map");
  std::optional<std::vector<Word>> inverse;
  if (inverse_line) inverse = build_images(inverse_lines, *alphabet, inverse_line, "inverse");

  KnotRecord& r = file.record;
  r.name = *name;
  r.fibered = *fibered;
  r.alphabet = *alphabet;
  r.monodromy = FreeMap(std::move(images), std::move(inverse));
  std::ostringstream notes;
  for (std::size_t i = 0; i < file.comments.size(); ++i) {
    notes << (i ? "\n" : "") << file.comments[i];
  }
  r.notes = notes.str();
  return file;
}

KnotRecord parse_presentation(std::string_view text) {
  return parse_presentation_file(text).record;
}

std::string serialize(const PresentationFile& file) {
  const KnotRecord& r = file.record;
  std::ostringstream out;
  for (const std::string& c : file.comments) out << (c.empty() ? "#" : "# " + c) << '\n';
  out << "name: " << r.name << '\n';
  out << "fibered: " << (r.fibered ? "true" : "false") << '\n';
  out << "generators:";
  for (char g : r.alphabet.names()) out << ' ' << g;
  out << '\n';
  auto section = [&](const char* header, const std::vector<Word>& images) {
    out << header << '\n';
    for (std::size_t i = 0; i < images.size(); ++i) {
      out << "  " << r.alphabet.name(i) << " -> " << r.alphabet.format(images[i]) << '\n';
    }
  };
  section("map:", r.monodromy.images());
  if (r.monodromy.has_inverse()) section("inverse:", *r.monodromy.inverse_images());
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

constexpr const char* kTrefoil = R"(# Trefoil: <t, a, b | t a t^-1 = b, t b t^-1 = b a^-1>.
name: trefoil
fibered: true
generators: a b
map:
  a -> b
  b -> b A
inverse:
  a -> B a
  b -> a
)";

constexpr const char* kFigure8 = R"(# Figure-eight: <t, a, b | t a t^-1 = a b a, t b t^-1 = a b>.
name: figure8
fibered: true
generators: a b
map:
  a -> a b a
  b -> a b
inverse:
  a -> B a
  b -> A b b
)";

constexpr const char* kSixTwo = R"(# Knot 6_2: <t, x, a, b, c | t a^-1 t^-1 = x b, t x a t^-1 = x,
#   t b t^-1 = c^-1, t c t^-1 = a b c>.
# Solved images: t a^-1 t^-1 = x b gives phi(a) = b^-1 x^-1, and
# t x a t^-1 = x gives phi(x) = x phi(a)^-1 = x x b.
# The inverse sends x b -> a^-1, x -> x a, c^-1 -> b, a b c -> c.
name: 6_2
fibered: true
generators: x a b c
map:
  x -> x x b
  a -> B X
  b -> C
  c -> a b c
inverse:
  x -> x a
  a -> c b a x a
  b -> A X A
  c -> B
)";

constexpr const char* kSevenSix = R"(# Knot 7_6: <t, a, b, c, d | t a t^-1 = a b, t b t^-1 = a b d b^2,
#   t c t^-1 = b^-1 d^-1, t d t^-1 = c d>.
# The second relation is t b^-1 a c^-1 t^-1 = b^-1 solved for t b t^-1.
name: 7_6
fibered: true
generators: a b c d
map:
  a -> a b
  b -> a b d b b
  c -> B D
  d -> c d
inverse:
  a -> a B a C
  b -> c A b
  c -> d c A b c
  d -> C B a C
)";

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"trefoil", kTrefoil, Outcome::NotBiorderable, 0, "R1"},
      {"figure8", kFigure8, Outcome::Biorderable, 0, "R4"},
      {"6_2", kSixTwo, Outcome::NotBiorderable, 1, "R3"},
      {"7_6", kSevenSix, Outcome::NotBiorderable, 1, "R3"},
  };
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view key) {
  const auto& entries = corpus();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CorpusEntry& e) { return e.key == key; });
  return it == entries.end() ? nullptr : &*it;
}

}  // namespace biorder
