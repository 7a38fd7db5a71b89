#include "conforma/element.hpp"

#include <sstream>

namespace conforma {

GeneratorId gen_L() { return {Family::L, 0, 0}; }
GeneratorId gen_H(std::int32_t i) { return {Family::H, i, 0}; }
GeneratorId gen_X(std::int32_t i) { return {Family::X, i, 0}; }
GeneratorId gen_cur(std::int32_t idx) { return {Family::Cur, idx, 0}; }
GeneratorId gen_gc(std::int32_t xdeg, std::int32_t row, std::int32_t col, std::int32_t n) {
  return {Family::Gc, xdeg, row * n + col};
}

std::string gen_str(const GeneratorId& g) {
  std::ostringstream os;
  switch (g.fam) {
    case Family::L:
      os << "L";
      break;
    case Family::H:
      os << "H_" << g.a;
      break;
    case Family::X:
      os << "X_" << g.a;
      break;
    case Family::Cur:
      os << "C_" << g.a;
      break;
    case Family::Gc:
      os << "J" << g.a << "_" << g.b;
      break;
  }
  return os.str();
}

Element::Element(const GeneratorId& g, const Poly& coeff) {
  if (!coeff.is_zero()) comps_.emplace(g, coeff);
}

Element::Element(const GeneratorId& g) : Element(g, Poly(Rat(1))) {}

Poly Element::coeff(const GeneratorId& g) const {
  auto it = comps_.find(g);
  return it == comps_.end() ? Poly() : it->second;
}

void Element::set(const GeneratorId& g, const Poly& coeff) {
  if (coeff.is_zero())
    comps_.erase(g);
  else
    comps_[g] = coeff;
}

Element Element::operator-() const {
  Element r;
  for (const auto& [g, c] : comps_) r.comps_.emplace(g, -c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [g, c] : o.comps_) {
    auto it = comps_.find(g);
    if (it == comps_.end()) {
      comps_.emplace(g, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  *this += -o;
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator*(const Poly& p) const {
  Element r;
  if (p.is_zero()) return r;
  for (const auto& [g, c] : comps_) {
    Poly prod = c * p;
    if (!prod.is_zero()) r.comps_.emplace(g, prod);
  }
  return r;
}

Element Element::operator*(const Rat& c) const { return *this * Poly(c); }

Element Element::map_coeffs(const std::function<Poly(const Poly&)>& f) const {
  Element r;
  for (const auto& [g, c] : comps_) {
    Poly v = f(c);
    if (!v.is_zero()) r.comps_.emplace(g, v);
  }
  return r;
}

std::string Element::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << gen_str(g);
  }
  return os.str();
}

}  // namespace conforma
