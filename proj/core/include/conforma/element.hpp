#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "conforma/poly.hpp"

namespace conforma {

enum class Family : std::uint8_t { L, H, X, Cur, Gc };

// Generator of a presentation: family tag plus indices. `a` is the grade for
// H_i / X_i, the basis index for current algebras, and the x-degree for gc_N;
// `b` carries the matrix position (row * N + col) for gc_N.
struct GeneratorId {
  Family fam = Family::L;
  std::int32_t a = 0;
  std::int32_t b = 0;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

GeneratorId gen_L();
GeneratorId gen_H(std::int32_t i);
GeneratorId gen_X(std::int32_t i);
GeneratorId gen_cur(std::int32_t idx);
GeneratorId gen_gc(std::int32_t xdeg, std::int32_t row, std::int32_t col, std::int32_t n);

// Short stable name, e.g. "L", "H_-1", "X_3", "C_0", "J2_01".
std::string gen_str(const GeneratorId& g);

// Finitely supported C[d]-linear combination of generators. Used both for
// plain elements (coefficients in d and parameters) and for lambda-bracket
// values (coefficients also in l, m, n). Canonical: no zero entries.
class Element {
 public:
  Element() = default;
  Element(const GeneratorId& g, const Poly& coeff);
  explicit Element(const GeneratorId& g);

  bool is_zero() const { return comps_.empty(); }
  const std::map<GeneratorId, Poly>& comps() const { return comps_; }
  Poly coeff(const GeneratorId& g) const;
  void set(const GeneratorId& g, const Poly& coeff);

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator*(const Poly& p) const;  // scalar polynomial action
  Element operator*(const Rat& c) const;
  bool operator==(const Element& o) const { return comps_ == o.comps_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  // Applies f to every coefficient, dropping the entry if f returns zero.
  Element map_coeffs(const std::function<Poly(const Poly&)>& f) const;

  std::string str() const;

 private:
  std::map<GeneratorId, Poly> comps_;
};

inline Element operator*(const Poly& p, const Element& e) { return e * p; }

}  // namespace conforma
