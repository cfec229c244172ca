// parse.hpp: polynomial expression parser, problem files, canonical formatting.
//
// Expression grammar (explicit '*' required, no implicit multiplication):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := nat ['/' nat] | ident | '(' expr ')'
// Identifiers are [a-zA-Z][a-zA-Z0-9_]* and must name ring variables.
// Exponents are literal non-negative integers.
//
// Problem files are line-oriented UTF-8 with LF endings:
//   ring: x, y, z
//   J: x^2, y^3           (or `f:`; several generator lines accumulate)
//   meta: key=value
// Blank lines and lines starting with '#' are ignored.
#ifndef NULLKIT_PARSE_HPP
#define NULLKIT_PARSE_HPP

#include <map>
#include <string>
#include <vector>

#include "nullkit/poly.hpp"

namespace nullkit {

struct ProblemInstance {
    RingPtr ring;
    std::vector<Polynomial> generators;
    std::map<std::string, std::string> meta;

    std::string id() const {
        auto it = meta.find("name");
        return it == meta.end() ? std::string("unnamed") : it->second;
    }
};

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line = 1);
ProblemInstance parse_problem_file(const std::string& text);

// Canonical rendering: terms descending by (total degree, lex), explicit '*',
// '^' only for exponents >= 2. parse(format(p)) == p.
std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const RingPtr& ring, const Monomial& m);
std::string format_problem_file(const ProblemInstance& inst);

} // namespace nullkit

#endif
