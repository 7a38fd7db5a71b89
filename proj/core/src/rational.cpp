#include "conforma/rational.hpp"

#include <stdexcept>

namespace conforma {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_factorial(unsigned n) {
  Rat r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Rat rat_falling(long m, unsigned j) {
  Rat r = 1;
  for (unsigned k = 0; k < j; ++k) r *= Rat(m - static_cast<long>(k));
  return r;
}

Rat rat_binom(long m, unsigned j) { return rat_falling(m, j) / rat_factorial(j); }

}  // namespace conforma
