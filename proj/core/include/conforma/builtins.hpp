#pragma once

#include <optional>
#include <vector>

#include "conforma/algebra.hpp"

namespace conforma {

// Structure constants of a finite-dimensional Lie algebra: c[i][j][k] is the
// coefficient of basis k in [e_i, e_j].
struct StructureConstants {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<Rat>>> c;

  std::size_t dim() const { return names.size(); }
  bool is_lie_algebra(std::string* why = nullptr) const;
};

StructureConstants sl2_constants();  // basis e, h, f

// Virasoro: [L_l L] = (d + 2l) L.
Algebra make_vir();

// Current algebra Cur g: [a_l b] = [a, b]. Rejects non-Lie constants.
Algebra make_cur(const StructureConstants& sc);

// Standard semidirect sum Vir x Cur g: [L_l a] = (d + l) a.
Algebra make_semidirect_vir_cur(const StructureConstants& sc);

// Heisenberg-Virasoro: generators L, H (= H_0) with [L_l H] = (d + l) H,
// [H_l H] = 0.
Algebra make_hv();

// The graded algebra HV(alpha, beta) on L and H_i (i >= -1):
//   [L_l H_i] = (d + (i alpha - i + 1) l + i beta) H_i,
//   [H_i_l H_j] = (j - i) H_{i+j}.
// Passing nullopt keeps the parameter symbolic.
Algebra make_hv_ab(std::optional<Rat> alpha = std::nullopt,
                   std::optional<Rat> beta = std::nullopt);

// gc_N on J^n_A = x^n A with the binomial bracket formula.
Algebra make_gc_n(int n_size);

}  // namespace conforma
