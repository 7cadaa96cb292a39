#ifndef LEF_IO_HPP
#define LEF_IO_HPP

#include "lef/distraction.hpp"
#include "lef/ideal.hpp"
#include "lef/polynomial.hpp"

#include <string>
#include <vector>

namespace lef {

// Monomial grammar: '*'-joined factors "x<i>" or "x<i>^<e>", or the literal
// "1". Whitespace is insignificant. n <= 0 means "infer from the monomial".
Monomial parse_monomial(const std::string& text, int n = 0);
std::string format_monomial(const Monomial& m, bool pretty_names = false);

// Comma- or whitespace-separated integers.
std::vector<long long> parse_sequence(const std::string& text);
std::string format_sequence(const std::vector<long long>& values);

struct ParsedIdeal {
  MonomialIdeal ideal;
  bool was_minimal = true; // false when the input listed redundant generators
};

// Ideal file: optional "vars <n>" header, one monomial per line, '#' comments,
// blank lines ignored. Without the header n is the largest index present.
ParsedIdeal parse_ideal_file(const std::string& text);
std::string format_ideal_file(const MonomialIdeal& I, bool pretty_names = false);

// Linear form: signed terms "c*x<i>" or "x<i>", coefficients integer or "p/q";
// bare constants are rejected.
LinearForm parse_linear_form(const std::string& text, int n);
std::string format_linear_form(const LinearForm& f, bool pretty_names = false);

// Matrix file: "vars <n>" and "cols <N>" headers, then one line per row with
// N forms separated by ';'.
DistractionMatrix parse_matrix_file(const std::string& text);

std::string format_polynomial(const Polynomial& p, bool pretty_names = false);
std::string format_point(const RationalPoint& p);

} // namespace lef

#endif
