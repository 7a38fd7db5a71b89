#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conforma/rational.hpp"
#include "conforma/symbols.hpp"

namespace conforma {

// Exponent vector over the global variable order, trailing zeros trimmed.
struct Mono {
  std::vector<std::uint32_t> exps;

  std::uint64_t degree() const;
  std::uint32_t exp(VarId v) const { return v < exps.size() ? exps[v] : 0; }
  void set_exp(VarId v, std::uint32_t e);
  void trim();
  bool divides(const Mono& other) const;
  Mono operator*(const Mono& other) const;     // throws on exponent overflow
  Mono divide_by(const Mono& other) const;     // caller ensures divisibility
  bool operator==(const Mono& other) const { return exps == other.exps; }
  // Graded lexicographic: total degree first, then lex over the fixed order.
  bool operator<(const Mono& other) const;
};

// Sparse multivariate polynomial over Q with named indeterminates and formal
// parameters. Canonical form: no zero coefficients are stored, so equality is
// equality of term maps. Values are immutable in spirit: every operation
// returns a fresh canonical polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c) : Poly(Rat(c)) {}

  static Poly var(VarId v, std::uint32_t exp = 1);
  static Poly monomial(const Rat& c, const Mono& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  std::uint64_t degree() const;
  std::uint32_t degree_in(VarId v) const;
  bool contains(VarId v) const;
  std::set<VarId> variables() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  Poly operator-() const;
  Poly operator+(const Poly& q) const;
  Poly operator-(const Poly& q) const;
  Poly operator*(const Poly& q) const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  Poly operator*(const Rat& c) const;
  Poly pow(std::uint32_t e) const;
  bool operator==(const Poly& q) const { return terms_ == q.terms_; }
  bool operator!=(const Poly& q) const { return !(*this == q); }

  // Replaces every occurrence of v by expr.
  Poly substitute(VarId v, const Poly& expr) const;

  // Coefficient polynomial of v^k, with the v-power removed.
  Poly coeff_of(VarId v, std::uint32_t k) const;

  // Specializes parameters to rationals. Every parameter occurring in the
  // polynomial must be covered; indeterminates are left alone.
  Poly eval_params(const std::map<VarId, Rat>& assignment) const;

  // Exact division: returns the quotient iff divisor divides this exactly.
  std::optional<Poly> try_divide(const Poly& divisor) const;

  // Division with remainder viewing the polynomial as univariate in v. The
  // divisor's leading v-coefficient must be a nonzero rational constant.
  struct DivMod;
  DivMod divmod_in_var(VarId v, const Poly& divisor) const;

  std::string str() const;

 private:
  void add_term(const Mono& m, const Rat& c);
  std::map<Mono, Rat> terms_;
};

struct Poly::DivMod {
  Poly quot, rem;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }
Poly operator+(const Poly& p, const Rat& c);
Poly operator-(const Poly& p, const Rat& c);

// Convenience accessors for the reserved indeterminates.
Poly poly_d();
Poly poly_l();
Poly poly_m();
Poly poly_n();

}  // namespace conforma
