/*
  This is rational.cpp.
*/

#include "flagvar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace flagvar {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  bool digits = false, slash = false, den_digits = false, den_zero = true;
  for (size_t k = pos; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/') {
      if (slash || !digits) throw std::invalid_argument("malformed rational: " + s);
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!slash)
        digits = true;
      else {
        den_digits = true;
        if (c != '0') den_zero = false;
      }
    } else {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }
  if (!digits || (slash && !den_digits)) throw std::invalid_argument("malformed rational: " + s);
  if (slash && den_zero) throw std::invalid_argument("zero denominator: " + s);
  Rat r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace flagvar
