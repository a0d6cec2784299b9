#include "braidforge/presentation_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }
};

bool name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '^' &&
         c != ',' && c != '(' && c != ')' && c != '[' && c != ']';
}

// Names may embed bracketed segments with commas (alpha[k,eps,i]).
void scan_name(Cursor& c) {
  for (;;) {
    while (!c.done() && name_char(c.peek())) c.advance();
    if (c.done() || c.peek() != '[') return;
    while (!c.done() && c.peek() != ']') c.advance();
    if (!c.done()) c.advance();  // ']'
  }
}

std::int64_t parse_exponent(Cursor& c) {
  c.skip_space();
  std::size_t start = c.pos;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) c.advance();
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
    c.advance();
  std::int64_t value = 0;
  auto piece = c.text.substr(start, c.pos - start);
  auto [ptr, ec] =
      std::from_chars(piece.data(), piece.data() + piece.size(), value);
  if (ec != std::errc() || ptr != piece.data() + piece.size())
    throw ParseError("expected integer exponent", c.line, c.col);
  return value;
}

// term := (name | '(' expr ')') ['^' int]
Word parse_expr(Cursor& c, char stop);

Word parse_term(Cursor& c) {
  c.skip_space();
  if (c.done()) throw ParseError("unexpected end of relator", c.line, c.col);
  Word base;
  if (c.peek() == '(') {
    c.advance();
    base = parse_expr(c, ')');
    if (c.done() || c.peek() != ')')
      throw ParseError("missing ')'", c.line, c.col);
    c.advance();
  } else {
    std::size_t start = c.pos;
    int line = c.line, col = c.col;
    scan_name(c);
    if (c.pos == start)
      throw ParseError("expected generator name", line, col);
    base = Word(Symbol::intern(c.text.substr(start, c.pos - start)));
  }
  if (!c.done() && c.peek() == '^') {
    c.advance();
    base = base.pow(parse_exponent(c));
  }
  return base;
}

Word parse_expr(Cursor& c, char stop) {
  Word out;
  for (;;) {
    c.skip_space();
    if (c.done() || c.peek() == stop || c.peek() == ',') return out;
    out = out * parse_term(c);
  }
}

}  // namespace

PresentationFile parse_presentation_file(std::string_view text) {
  std::string name;
  std::vector<Symbol> gens;
  bool have_gens = false;
  std::vector<std::pair<std::string, int>> relator_chunks;  // text, line
  std::vector<std::string> provenance;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  enum class Section { None, Rels, Provenance } section = Section::None;
  std::string rels_text;
  int rels_line = 0;

  auto flush_rels = [&]() {
    if (rels_text.empty()) return;
    // Split on top-level commas (bracketed label segments keep theirs),
    // remembering each chunk's starting line.
    int ln = rels_line;
    std::string chunk;
    int chunk_line = ln;
    int depth = 0;
    for (char ch : rels_text) {
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (ch == ',' && depth == 0) {
        relator_chunks.emplace_back(chunk, chunk_line);
        chunk.clear();
        chunk_line = ln;
      } else {
        if (ch == '\n') ++ln;
        if (chunk.empty() &&
            std::isspace(static_cast<unsigned char>(ch))) {
          chunk_line = ln;
          continue;
        }
        chunk += ch;
      }
    }
    relator_chunks.emplace_back(chunk, chunk_line);
    rels_text.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (section == Section::Provenance) {
      std::string trimmed = line;
      while (!trimmed.empty() &&
             std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
      if (!trimmed.empty()) provenance.push_back(trimmed);
      continue;
    }
    if (line.rfind("name:", 0) == 0) {
      name = line.substr(5);
      while (!name.empty() &&
             std::isspace(static_cast<unsigned char>(name.front())))
        name.erase(name.begin());
      while (!name.empty() &&
             std::isspace(static_cast<unsigned char>(name.back())))
        name.pop_back();
      section = Section::None;
    } else if (line.rfind("gens:", 0) == 0) {
      have_gens = true;
      std::istringstream gl(line.substr(5));
      std::string g;
      while (gl >> g) gens.push_back(Symbol::intern(g));
      section = Section::None;
    } else if (line.rfind("rels:", 0) == 0) {
      section = Section::Rels;
      rels_text = line.substr(5);
      rels_line = lineno;
    } else if (line.rfind("provenance:", 0) == 0) {
      flush_rels();
      section = Section::Provenance;
    } else if (section == Section::Rels) {
      rels_text += '\n' + line;
    } else {
      bool blank = true;
      for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (!blank)
        throw ParseError("unrecognized line '" + line + "'", lineno, 1);
    }
  }
  flush_rels();
  if (!have_gens) throw ParseError("missing gens: line", lineno, 1);

  std::unordered_set<std::uint32_t> declared;
  for (Symbol g : gens) declared.insert(g.id());

  std::vector<Word> relators;
  for (const auto& [chunk, chunk_line] : relator_chunks) {
    bool blank = true;
    for (char ch : chunk)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) {
      if (relator_chunks.size() == 1) continue;  // empty rels section
      throw ParseError("empty relator", chunk_line, 1);
    }
    Cursor c{chunk, 0, chunk_line, 1};
    Word w = parse_expr(c, '\0');
    c.skip_space();
    if (!c.done())
      throw ParseError("unexpected character '" + std::string(1, c.peek()) +
                           "' in relator",
                       c.line, c.col);
    for (const Syllable& s : w.syllables())
      if (!declared.count(s.gen.id()))
        throw ParseError("undeclared generator '" + s.gen.name() +
                             "' in relator",
                         chunk_line, 1);
    if (w.is_identity())
      throw ParseError("relator reduces to the identity", chunk_line, 1);
    relators.push_back(std::move(w));
  }

  return {Presentation(std::move(name), std::move(gens), std::move(relators)),
          std::move(provenance)};
}

Presentation parse_presentation(std::string_view text) {
  return parse_presentation_file(text).presentation;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  if (!p.name().empty()) os << "name: " << p.name() << '\n';
  os << "gens:";
  for (Symbol g : p.generators()) os << ' ' << g.name();
  os << '\n';
  os << "rels:";
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    os << (i ? ", " : " ") << to_string(p.relators()[i]);
  os << '\n';
  return os.str();
}

std::string serialize_derived_presentation(const DerivedPresentation& dp) {
  std::ostringstream os;
  os << serialize_presentation(dp.base);
  os << "provenance:\n";
  const auto& src = dp.quotient.source();
  for (std::size_t j = 0; j < dp.origins.size(); ++j) {
    const RelatorOrigin& o = dp.origins[j];
    std::string label = src.labels().empty() ? std::string("-")
                                             : src.labels()[o.source_index];
    Word lam = o.conjugator;
    os << "  " << j << ": relator " << o.source_index << ' ' << label
       << " lambda " << (lam.is_identity() ? "1" : to_string(lam)) << '\n';
  }
  return os.str();
}

std::string presentation_json(const Presentation& p,
                              const std::vector<std::string>& provenance) {
  nlohmann::ordered_json j;
  j["schema"] = "braidforge-presentation/1";
  j["name"] = p.name();
  j["generators"] = nlohmann::ordered_json::array();
  for (Symbol g : p.generators()) {
    nlohmann::ordered_json e;
    e["name"] = g.name();
    if (auto s = g.strand()) e["strand"] = *s;
    j["generators"].push_back(e);
  }
  j["relators"] = nlohmann::ordered_json::array();
  for (const Word& r : p.relators()) j["relators"].push_back(to_string(r));
  if (!p.labels().empty()) j["labels"] = p.labels();
  if (!provenance.empty()) j["provenance"] = provenance;
  return j.dump(2) + "\n";
}

}  // namespace braidforge
