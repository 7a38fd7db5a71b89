#pragma once

#include <vector>

#include "conforma/algebra.hpp"

namespace conforma {

// Mode a_(n) of a generator in the coefficient algebra Lie(A).
struct ModeKey {
  GeneratorId gen;
  std::int64_t mode = 0;

  friend auto operator<=>(const ModeKey&, const ModeKey&) = default;
};

std::string mode_str(const ModeKey& k);

// Finitely supported linear combination of generator modes with coefficients
// in Q[parameters]. Canonical form keeps only pure generator modes: the
// relation (d a)_(n) = -n a_(n-1) is applied eagerly on construction.
class ModeElement {
 public:
  ModeElement() = default;
  ModeElement(const ModeKey& k, const Poly& coeff);

  bool is_zero() const { return comps_.empty(); }
  const std::map<ModeKey, Poly>& comps() const { return comps_; }
  Poly coeff(const ModeKey& k) const;
  void add(const ModeKey& k, const Poly& coeff);

  ModeElement operator-() const;
  ModeElement operator+(const ModeElement& o) const;
  ModeElement operator-(const ModeElement& o) const;
  ModeElement& operator+=(const ModeElement& o);
  ModeElement& operator-=(const ModeElement& o);
  ModeElement operator*(const Poly& p) const;
  bool operator==(const ModeElement& o) const { return comps_ == o.comps_; }
  bool operator!=(const ModeElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<ModeKey, Poly> comps_;
};

// j-th products a_(j) b = j! [l^j]([a_l b]); only the nonzero ones.
std::vector<std::pair<unsigned, Element>> jth_products(const Algebra& A, const GeneratorId& x,
                                                       const GeneratorId& y);

// Mode of an algebra element: (f(d) g)_(n) expanded by the relation
// (d a)_(n) = -n a_(n-1), i.e. (d^p g)_(n) = (-1)^p n(n-1)...(n-p+1) g_(n-p).
ModeElement mode_of(const Element& e, std::int64_t n);

// Coefficient-algebra bracket [a_(m), b_(n)] = sum_j C(m,j) (a_(j) b)_(m+n-j),
// extended bilinearly.
ModeElement mode_bracket(const Algebra& A, const ModeElement& x, const ModeElement& y);

// Action of d on the extended annihilation algebra: d(a_(n)) = -n a_(n-1).
ModeElement extended_partial(const ModeElement& x);

// Closed-form annihilation table of HV(alpha, beta) in the relabelled basis
// L_m, H_{i,m}:
//   [L_m, L_n] = (m - n) L_{m+n}
//   [H_{i,m}, H_{j,n}] = (j - i) H_{i+j, m+n}
//   [L_m, H_{i,n}] = ((m+1)(i alpha - i) - n) H_{i,m+n} + i beta H_{i,m+n+1}
// Operands are gen_L()/gen_H(i) keys with the remark-label mode index.
ModeElement hv_ab_annihilation_bracket(const ModeKey& x, const ModeKey& y, const Poly& alpha,
                                       const Poly& beta);

// Pinned relabelling between Lie(A) modes and the closed-form labels:
// L_m = L_(m+1), H_{i,m} = H_{i,(m)}. The delta arguments perturb the shifts
// (used as a negative control).
ModeKey remark_label_to_mode(const ModeKey& label, int delta_L = 0, int delta_H = 0);

struct CrosscheckReport {
  bool match = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
};

// Compares the Eq-(106)-derived bracket of Lie(HV(alpha,beta))^+ with the
// closed-form table on remark-label modes in [0, mode_window] (L modes from
// -1) and grades in [-1, grade_window].
CrosscheckReport crosscheck_annihilation(const Algebra& hv_ab, const Poly& alpha,
                                         const Poly& beta, int grade_window, int mode_window,
                                         int delta_L = 0, int delta_H = 0);

}  // namespace conforma
