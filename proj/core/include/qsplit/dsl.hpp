#pragma once

#include <string>
#include <vector>

#include "qsplit/presentation.hpp"

namespace qsplit {

// Line-oriented presentation format:
//
//   # comment
//   algebra NAME
//   vertices ID...
//   arrow ID : ID -> ID
//   relations
//     TERM ((+|-) TERM)*
//   end
//
// TERM is an optional rational coefficient "n" or "n/d" followed by '*' and a
// path of at least two '.'-separated arrow names; paths read left-to-right
// (in "a.b" the arrow a comes first). Arrow names must not contain '.',
// vertex names may. Parse errors carry 1-based line and column numbers.
Presentation parse_presentation(const std::string& text);

// Parses a stream of consecutive algebra blocks.
std::vector<Presentation> parse_presentation_stream(const std::string& text);

// Canonical printer; parse(print(p)) reproduces p exactly.
std::string print_presentation(const Presentation& pres);

struct ParseLocation {
  int line = 0;
  int column = 0;
};

// Thrown as qsplit::error with code parse_error; the location is embedded in
// the message as "line L, column C".
std::string format_parse_error(const ParseLocation& loc, const std::string& msg);

}  // namespace qsplit
