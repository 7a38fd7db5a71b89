#include "conforma/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace conforma {

namespace {
constexpr std::uint32_t kMaxExp = std::numeric_limits<std::int32_t>::max();
}

std::uint64_t Mono::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

void Mono::set_exp(VarId v, std::uint32_t e) {
  if (v >= exps.size()) {
    if (e == 0) return;
    exps.resize(v + 1, 0);
  }
  exps[v] = e;
  trim();
}

void Mono::trim() {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

bool Mono::divides(const Mono& other) const {
  if (exps.size() > other.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Mono Mono::operator*(const Mono& other) const {
  Mono r;
  r.exps.resize(std::max(exps.size(), other.exps.size()), 0);
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(exp(static_cast<VarId>(i))) +
                      other.exp(static_cast<VarId>(i));
    if (s > kMaxExp) throw std::overflow_error("monomial exponent overflow");
    r.exps[i] = static_cast<std::uint32_t>(s);
  }
  r.trim();
  return r;
}

Mono Mono::divide_by(const Mono& other) const {
  Mono r;
  r.exps.resize(exps.size(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i)
    r.exps[i] = exps[i] - other.exp(static_cast<VarId>(i));
  r.trim();
  return r;
}

bool Mono::operator<(const Mono& other) const {
  std::uint64_t da = degree(), db = other.degree();
  if (da != db) return da < db;
  std::size_t sz = std::max(exps.size(), other.exps.size());
  for (std::size_t i = 0; i < sz; ++i) {
    std::uint32_t ea = exp(static_cast<VarId>(i)), eb = other.exp(static_cast<VarId>(i));
    if (ea != eb) return ea < eb;
  }
  return false;
}

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

Poly Poly::var(VarId v, std::uint32_t exp) {
  Poly p;
  if (exp > kMaxExp) throw std::overflow_error("monomial exponent overflow");
  Mono mono;
  mono.set_exp(v, exp);
  p.terms_.emplace(std::move(mono), Rat(1));
  return p;
}

Poly Poly::monomial(const Rat& c, const Mono& m) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

std::uint64_t Poly::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
  return d;
}

bool Poly::contains(VarId v) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(v) > 0) return true;
  return false;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] > 0) out.insert(static_cast<VarId>(i));
  return out;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& q) const {
  Poly r = *this;
  r += q;
  return r;
}

Poly Poly::operator-(const Poly& q) const {
  Poly r = *this;
  r -= q;
  return r;
}

Poly Poly::operator*(const Poly& q) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : q.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& q) {
  *this = *this * q;
  return *this;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly r(Rat(1));
  for (std::uint32_t i = 0; i < e; ++i) r *= *this;
  return r;
}

Poly Poly::substitute(VarId v, const Poly& expr) const {
  Poly out;
  std::vector<Poly> powers{Poly(Rat(1))};
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.exp(v);
    while (powers.size() <= e) powers.push_back(powers.back() * expr);
    Mono rest = m;
    rest.set_exp(v, 0);
    out += Poly::monomial(c, rest) * powers[e];
  }
  return out;
}

Poly Poly::coeff_of(VarId v, std::uint32_t k) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (m.exp(v) != k) continue;
    Mono rest = m;
    rest.set_exp(v, 0);
    out.add_term(rest, c);
  }
  return out;
}

Poly Poly::eval_params(const std::map<VarId, Rat>& assignment) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rat coeff = c;
    Mono rest;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      VarId v = static_cast<VarId>(i);
      if (SymbolTable::is_reserved(v)) {
        rest.set_exp(v, m.exps[i]);
        continue;
      }
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("eval_params: missing parameter " + symbol_name(v));
      for (std::uint32_t e = 0; e < m.exps[i]; ++e) coeff *= it->second;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  Poly rem = *this, quot;
  const auto& dlead = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    if (!dlead.first.divides(rlead.first)) return std::nullopt;
    Mono qm = rlead.first.divide_by(dlead.first);
    Rat qc = rlead.second / dlead.second;
    Poly t = Poly::monomial(qc, qm);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Poly::DivMod Poly::divmod_in_var(VarId v, const Poly& divisor) const {
  std::uint32_t dd = divisor.degree_in(v);
  Poly lead = divisor.coeff_of(v, dd);
  if (!lead.is_constant() || lead.is_zero())
    throw std::invalid_argument("divmod_in_var: leading coefficient must be a nonzero rational");
  Rat lc = lead.constant_value();
  Poly rem = *this, quot;
  while (!rem.is_zero()) {
    std::uint32_t dr = rem.degree_in(v);
    if (dr < dd) break;
    Poly c = rem.coeff_of(v, dr);
    Poly t = c * (Rat(1) / lc) * Poly::var(v, dr - dd);
    quot += t;
    rem -= t * divisor;
  }
  return {quot, rem};
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading (largest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = !m.exps.empty();
    if (abs != 1 || !has_vars) {
      os << rat_str(abs);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << symbol_name(static_cast<VarId>(i));
      if (m.exps[i] > 1) os << "^" << m.exps[i];
    }
  }
  return os.str();
}

Poly operator+(const Poly& p, const Rat& c) { return p + Poly(c); }
Poly operator-(const Poly& p, const Rat& c) { return p - Poly(c); }

Poly poly_d() { return Poly::var(kVarD); }
Poly poly_l() { return Poly::var(kVarL); }
Poly poly_m() { return Poly::var(kVarM); }
Poly poly_n() { return Poly::var(kVarN); }

}  // namespace conforma
