#ifndef LEF_RATIONAL_HPP
#define LEF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace lef {

using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws on junk.
Rat parse_rational(const std::string& text);

// Canonical text: "p" or "p/q".
std::string rational_to_string(const Rat& r);

} // namespace lef

#endif
