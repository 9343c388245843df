#include "qsplit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qsplit {

std::string format_parse_error(const ParseLocation& loc,
                               const std::string& msg) {
  return "line " + std::to_string(loc.line) + ", column " +
         std::to_string(loc.column) + ": " + msg;
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  fail(errc::parse_error, format_parse_error({line, col}, msg));
}

bool id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

struct Line {
  int number = 0;
  std::string text;  // comment-stripped
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    out.push_back({number, raw});
  }
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c);
  });
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// Scanner for one relation line: TERM ((+|-) TERM)*.
struct RelationScanner {
  const std::string& s;
  int line;
  size_t pos = 0;

  explicit RelationScanner(const std::string& text, int ln)
      : s(text), line(ln) {}

  int col() const { return static_cast<int>(pos) + 1; }
  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_space();
    return pos >= s.size();
  }
  char peek() { return pos < s.size() ? s[pos] : '\0'; }

  std::string scan_word() {
    skip_space();
    size_t start = pos;
    while (pos < s.size() && id_char(s[pos]) && s[pos] != '.') ++pos;
    if (pos == start) parse_fail(line, col(), "expected an identifier");
    return s.substr(start, pos - start);
  }

  std::string scan_integer() {
    skip_space();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) parse_fail(line, col(), "expected an integer");
    return s.substr(start, pos - start);
  }

  RelationTerm scan_term(const Quiver& q) {
    skip_space();
    int start_col = col();
    Scalar coeff(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = scan_integer();
      std::string lit = num;
      skip_space();
      if (peek() == '/') {
        ++pos;
        lit += "/" + scan_integer();
        skip_space();
      }
      coeff = scalar_from_string(lit);
      if (peek() != '*')
        parse_fail(line, col(), "expected '*' after the coefficient");
      ++pos;
    }
    std::vector<std::string> arrows;
    arrows.push_back(scan_word());
    skip_space();
    while (peek() == '.') {
      ++pos;
      arrows.push_back(scan_word());
      skip_space();
    }
    if (arrows.size() < 2)
      parse_fail(line, start_col,
                 "relation terms must be paths of length >= 2");
    for (const std::string& a : arrows)
      if (!q.has_arrow(a))
        parse_fail(line, start_col, "unknown arrow '" + a + "'");
    Path p{q.arrow(arrows.front()).source, arrows};
    std::string at = p.source;
    for (const std::string& a : arrows) {
      if (q.arrow(a).source != at)
        parse_fail(line, start_col,
                   "path is not composable at arrow '" + a + "'");
      at = q.arrow(a).target;
    }
    return {coeff, p};
  }
};

struct BlockParser {
  const std::vector<Line>& lines;
  size_t at = 0;

  explicit BlockParser(const std::vector<Line>& ls) : lines(ls) {}

  bool next_content() {
    while (at < lines.size() && blank(lines[at].text)) ++at;
    return at < lines.size();
  }

  Presentation parse_block() {
    next_content();
    const Line& head = lines[at];
    std::vector<std::string> t = tokens(head.text);
    if (t.empty() || t[0] != "algebra")
      parse_fail(head.number, 1, "expected 'algebra NAME'");
    if (t.size() != 2)
      parse_fail(head.number, 1, "'algebra' takes exactly one name");
    std::string name = t[1];
    ++at;

    Quiver q;
    std::vector<Relation> rels;
    bool saw_vertices = false;
    while (next_content()) {
      const Line& ln = lines[at];
      std::vector<std::string> tok = tokens(ln.text);
      if (tok[0] == "algebra") break;  // next block
      if (tok[0] == "vertices") {
        if (saw_vertices)
          parse_fail(ln.number, 1, "duplicate 'vertices' line");
        saw_vertices = true;
        for (size_t i = 1; i < tok.size(); ++i) {
          if (!std::all_of(tok[i].begin(), tok[i].end(), id_char))
            parse_fail(ln.number, 1, "bad vertex name '" + tok[i] + "'");
          try {
            q.add_vertex(tok[i]);
          } catch (const error& e) {
            parse_fail(ln.number, 1, e.what());
          }
        }
        ++at;
        continue;
      }
      if (tok[0] == "arrow") {
        // arrow NAME : SRC -> TGT
        if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->")
          parse_fail(ln.number, 1, "expected 'arrow NAME : SRC -> TGT'");
        if (tok[1].find('.') != std::string::npos)
          parse_fail(ln.number, 1,
                     "arrow names must not contain '.' (reserved for paths)");
        try {
          q.add_arrow(tok[1], tok[3], tok[5]);
        } catch (const error& e) {
          parse_fail(ln.number, 1, e.what());
        }
        ++at;
        continue;
      }
      if (tok[0] == "relations") {
        if (tok.size() != 1)
          parse_fail(ln.number, 1, "'relations' takes no arguments");
        ++at;
        bool closed = false;
        while (at < lines.size()) {
          const Line& rl = lines[at];
          if (blank(rl.text)) {
            ++at;
            continue;
          }
          std::vector<std::string> rt = tokens(rl.text);
          if (rt[0] == "end") {
            closed = true;
            ++at;
            break;
          }
          RelationScanner sc(rl.text, rl.number);
          Relation r;
          r.terms.push_back(sc.scan_term(q));
          while (!sc.done()) {
            char op = sc.peek();
            if (op != '+' && op != '-')
              parse_fail(rl.number, sc.col(), "expected '+' or '-'");
            ++sc.pos;
            RelationTerm term = sc.scan_term(q);
            if (op == '-') term.coeff = -term.coeff;
            r.terms.push_back(std::move(term));
          }
          const std::string src = r.terms.front().path.source;
          const std::string tgt = path_end(q, r.terms.front().path);
          for (const RelationTerm& term : r.terms)
            if (term.path.source != src || path_end(q, term.path) != tgt)
              parse_fail(rl.number, 1,
                         "relation is not uniform: terms connect different "
                         "vertex pairs");
          rels.push_back(std::move(r));
          ++at;
        }
        if (!closed)
          parse_fail(lines.back().number, 1,
                     "'relations' block without closing 'end'");
        continue;
      }
      parse_fail(ln.number, 1, "unrecognized directive '" + tok[0] + "'");
    }
    try {
      return Presentation(std::move(q), std::move(rels), std::move(name));
    } catch (const error& e) {
      parse_fail(head.number, 1, e.what());
    }
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::vector<Line> lines = split_lines(text);
  BlockParser p(lines);
  if (!p.next_content()) fail(errc::parse_error, "empty input");
  Presentation out = p.parse_block();
  if (p.next_content())
    parse_fail(lines[p.at].number, 1, "trailing content after the algebra");
  return out;
}

std::vector<Presentation> parse_presentation_stream(const std::string& text) {
  std::vector<Line> lines = split_lines(text);
  BlockParser p(lines);
  std::vector<Presentation> out;
  while (p.next_content()) out.push_back(p.parse_block());
  require(!out.empty(), errc::parse_error, "empty input");
  return out;
}

std::string print_presentation(const Presentation& pres) {
  std::ostringstream os;
  os << "algebra " << pres.name() << "\n";
  const Quiver& q = pres.quiver();
  if (!q.vertices().empty()) {
    os << "vertices";
    for (const std::string& v : q.vertices()) os << ' ' << v;
    os << "\n";
  }
  for (const Arrow& a : q.arrows())
    os << "arrow " << a.name << " : " << a.source << " -> " << a.target
       << "\n";
  if (!pres.relations().empty()) {
    os << "relations\n";
    for (const Relation& r : pres.relations()) {
      os << "  ";
      for (size_t i = 0; i < r.terms.size(); ++i) {
        const Scalar& c = r.terms[i].coeff;
        bool neg = sgn(c) < 0;
        Scalar mag = abs(c);
        if (i == 0) {
          if (neg) os << "- ";  // never produced by normalized relations
        } else {
          os << (neg ? " - " : " + ");
        }
        if (mag != 1) os << scalar_to_string(mag) << "*";
        const auto& arrows = r.terms[i].path.arrows;
        for (size_t k = 0; k < arrows.size(); ++k)
          os << (k ? "." : "") << arrows[k];
      }
      os << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

}  // namespace qsplit
