#include "lef/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lef {

Rat parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  try {
    r = Rat(t);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace lef
