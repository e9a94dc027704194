#pragma once
// Text formats for algebra presentations and modules.
//
//   file     := line*                 line := comment | decl
//   decl     := 'vertices' INT | 'arrow' NAME INT INT | 'relation' POLY | 'truncate' INT
//   POLY     := term (('+'|'-') term)*, optionally with a leading sign
//   term     := [RAT '*'] path        path := atom ('*' atom)*
//   atom     := NAME | 'e' INT        RAT  := INT ['/' INT]
//
// Module files hold `dim INT...` and `mat NAME row ; row ; ...` with signed RAT
// entries; a missing `mat` is a zero matrix.
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncdef/presentation.hpp"
#include "ncdef/repmod.hpp"

namespace ncdef {

class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                              message),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses and validates; semantic errors carry the position of the offending token.
AlgebraPresentation parse_algebra(std::string_view text);
std::string format_algebra(const AlgebraPresentation& pres);

std::string format_path(const Quiver& q, const Path& p);
/// Terms in descending term order, coefficients as p/q.
std::string format_poly(const Quiver& q, const NCPoly& p, const TermOrder& order);

RepModule parse_module(std::string_view text, std::shared_ptr<const AlgebraPresentation> algebra);
std::string format_module(const RepModule& m);

}  // namespace ncdef
