#ifndef ADJFACTOR_PARSER_HPP
#define ADJFACTOR_PARSER_HPP

#include <map>
#include <string>
#include <tuple>

#include "adjfactor/poly.hpp"

namespace af {

// Exponents of (y, x, t); the canonical term order is decreasing
// lexicographic on this triple (y > x > t).
using Mon = std::tuple<int, int, int>;
using GPoly = std::map<Mon, mpq_class>;

// Parses the shared grammar: integer/rational coefficients, variables x y t,
// operators + - * ^ (plus parentheses and implicit multiplication).
// Throws Err::Parse with a position-annotated message.
GPoly parse_gpoly(const std::string& text);

UPoly gpoly_to_upoly(const GPoly& g, const Field& f, char var);
BPoly gpoly_to_bpoly(const GPoly& g, const Field& f);
// x,y,t-polynomial over k[t]/(minpoly of f); t-powers reduce into the extension
BPoly gpoly_to_bpoly_ext(const GPoly& g, const Field& ext_field);

std::string print_upoly(const UPoly& p, char var);
std::string print_bpoly(const BPoly& p);
// flattens extension coefficients into explicit t-powers
std::string print_bpoly_xyt(const BPoly& p);

}  // namespace af

#endif
