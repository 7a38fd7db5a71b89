#include "conforma/coeff.hpp"

#include <sstream>

namespace conforma {

std::string mode_str(const ModeKey& k) {
  std::ostringstream os;
  os << gen_str(k.gen) << "(" << k.mode << ")";
  return os.str();
}

ModeElement::ModeElement(const ModeKey& k, const Poly& coeff) {
  if (!coeff.is_zero()) comps_.emplace(k, coeff);
}

Poly ModeElement::coeff(const ModeKey& k) const {
  auto it = comps_.find(k);
  return it == comps_.end() ? Poly() : it->second;
}

void ModeElement::add(const ModeKey& k, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto it = comps_.find(k);
  if (it == comps_.end()) {
    comps_.emplace(k, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

ModeElement ModeElement::operator-() const {
  ModeElement r;
  for (const auto& [k, c] : comps_) r.comps_.emplace(k, -c);
  return r;
}

ModeElement& ModeElement::operator+=(const ModeElement& o) {
  for (const auto& [k, c] : o.comps_) add(k, c);
  return *this;
}

ModeElement& ModeElement::operator-=(const ModeElement& o) {
  for (const auto& [k, c] : o.comps_) add(k, -c);
  return *this;
}

ModeElement ModeElement::operator+(const ModeElement& o) const {
  ModeElement r = *this;
  r += o;
  return r;
}

ModeElement ModeElement::operator-(const ModeElement& o) const {
  ModeElement r = *this;
  r -= o;
  return r;
}

ModeElement ModeElement::operator*(const Poly& p) const {
  ModeElement r;
  if (p.is_zero()) return r;
  for (const auto& [k, c] : comps_) {
    Poly prod = c * p;
    if (!prod.is_zero()) r.comps_.emplace(k, prod);
  }
  return r;
}

std::string ModeElement::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << mode_str(k);
  }
  return os.str();
}

std::vector<std::pair<unsigned, Element>> jth_products(const Algebra& A, const GeneratorId& x,
                                                       const GeneratorId& y) {
  Element v = A.table(x, y, kVarL);
  std::vector<std::pair<unsigned, Element>> out;
  std::uint32_t top = 0;
  for (const auto& [g, c] : v.comps()) top = std::max(top, c.degree_in(kVarL));
  for (std::uint32_t j = 0; j <= top; ++j) {
    Element prod;
    for (const auto& [g, c] : v.comps()) {
      Poly cj = c.coeff_of(kVarL, j) * rat_factorial(j);
      if (!cj.is_zero()) prod += Element(g, cj);
    }
    if (!prod.is_zero()) out.emplace_back(j, prod);
  }
  return out;
}

ModeElement mode_of(const Element& e, std::int64_t n) {
  ModeElement out;
  for (const auto& [g, c] : e.comps()) {
    std::uint32_t dd = c.degree_in(kVarD);
    for (std::uint32_t p = 0; p <= dd; ++p) {
      Poly cp = c.coeff_of(kVarD, p);
      if (cp.is_zero()) continue;
      // (d^p g)_(n) = (-1)^p * falling(n, p) * g_(n - p)
      Rat scale = rat_falling(n, p);
      if (p % 2 == 1) scale = -scale;
      out.add({g, n - p}, cp * scale);
    }
  }
  return out;
}

ModeElement mode_bracket(const Algebra& A, const ModeElement& x, const ModeElement& y) {
  ModeElement out;
  for (const auto& [kx, cx] : x.comps())
    for (const auto& [ky, cy] : y.comps()) {
      Poly scale = cx * cy;
      for (const auto& [j, prod] : jth_products(A, kx.gen, ky.gen)) {
        Rat binom = rat_binom(kx.mode, j);
        if (binom == 0) continue;
        out += mode_of(prod, kx.mode + ky.mode - j) * (scale * binom);
      }
    }
  return out;
}

ModeElement extended_partial(const ModeElement& x) {
  ModeElement out;
  for (const auto& [k, c] : x.comps())
    out.add({k.gen, k.mode - 1}, c * Rat(-k.mode));
  return out;
}

ModeElement hv_ab_annihilation_bracket(const ModeKey& x, const ModeKey& y, const Poly& alpha,
                                       const Poly& beta) {
  bool xL = x.gen.fam == Family::L;
  bool yL = y.gen.fam == Family::L;
  std::int64_t m = x.mode, n = y.mode;
  if (xL && yL) return ModeElement({gen_L(), m + n}, Poly(Rat(m - n)));
  if (!xL && !yL) {
    long i = x.gen.a, j = y.gen.a;
    return ModeElement({gen_H(static_cast<std::int32_t>(i + j)), m + n}, Poly(Rat(j - i)));
  }
  if (xL) {
    long i = y.gen.a;
    Poly ia = alpha * Rat(i) - Rat(i);
    ModeElement out({y.gen, m + n}, ia * Rat(m + 1) - Rat(n));
    out.add({y.gen, m + n + 1}, beta * Rat(i));
    return out;
  }
  return -hv_ab_annihilation_bracket(y, x, alpha, beta);
}

ModeKey remark_label_to_mode(const ModeKey& label, int delta_L, int delta_H) {
  ModeKey k = label;
  k.mode += label.gen.fam == Family::L ? 1 + delta_L : delta_H;
  return k;
}

CrosscheckReport crosscheck_annihilation(const Algebra& hv_ab, const Poly& alpha,
                                         const Poly& beta, int grade_window, int mode_window,
                                         int delta_L, int delta_H) {
  CrosscheckReport rep;

  // Remark-label basis of the annihilation algebra on the window: L_m for
  // m >= -1 (i.e. L_(m+1), mode >= 0) and H_{i,m} for m >= 0.
  std::vector<ModeKey> labels;
  for (int m = -1; m <= mode_window; ++m) labels.push_back({gen_L(), m});
  for (int i = -1; i <= grade_window; ++i)
    for (int m = 0; m <= mode_window; ++m) labels.push_back({gen_H(i), m});

  for (const auto& lx : labels)
    for (const auto& ly : labels) {
      ModeElement via_modes = mode_bracket(hv_ab, ModeElement(remark_label_to_mode(lx, delta_L, delta_H), Poly(Rat(1))),
                                           ModeElement(remark_label_to_mode(ly, delta_L, delta_H), Poly(Rat(1))));
      ModeElement closed = hv_ab_annihilation_bracket(lx, ly, alpha, beta);
      // Relabel the closed form into Lie(A) modes for comparison.
      ModeElement closed_modes;
      for (const auto& [k, c] : closed.comps())
        closed_modes.add(remark_label_to_mode(k, delta_L, delta_H), c);
      ++rep.pairs_checked;
      if (via_modes != closed_modes) {
        rep.match = false;
        std::ostringstream os;
        os << "[" << mode_str(lx) << ", " << mode_str(ly) << "]: modes give "
           << via_modes.str() << ", closed form gives " << closed_modes.str();
        rep.mismatches.push_back(os.str());
        if (rep.mismatches.size() >= 5) return rep;
      }
    }
  return rep;
}

}  // namespace conforma
