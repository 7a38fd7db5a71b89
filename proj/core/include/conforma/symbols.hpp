#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conforma {

// Identifier of a polynomial variable. The first four ids are the reserved
// indeterminates d (the module generator "partial"), l, m, n (lambda, mu, nu
// slots). Everything above is a formal parameter: alpha, beta, free module
// scalars, classification scalars, solver unknowns, ...
using VarId = std::uint32_t;

inline constexpr VarId kVarD = 0;
inline constexpr VarId kVarL = 1;
inline constexpr VarId kVarM = 2;
inline constexpr VarId kVarN = 3;
inline constexpr VarId kNumReserved = 4;

inline constexpr VarId kVarAlpha = 4;
inline constexpr VarId kVarBeta = 5;
inline constexpr VarId kVarA = 6;
inline constexpr VarId kVarB = 7;
inline constexpr VarId kVarC = 8;
inline constexpr VarId kVarGamma1 = 9;

// Process-wide append-only symbol registry. Interning the same name always
// yields the same id; the well-known names above are pre-registered so the
// graded-lex term order over the fixed variable order is stable.
class SymbolTable {
 public:
  static SymbolTable& instance();

  VarId intern(const std::string& name);
  // Returns 0-for-failure sentinel via found=false when the name is unknown.
  bool lookup(const std::string& name, VarId& out) const;
  std::string name(VarId v) const;
  std::size_t size() const;

  static bool is_reserved(VarId v) { return v < kNumReserved; }
  static bool is_parameter(VarId v) { return v >= kNumReserved; }

 private:
  SymbolTable();
  struct Impl;
  Impl* impl_;
};

inline VarId intern_symbol(const std::string& name) {
  return SymbolTable::instance().intern(name);
}
inline std::string symbol_name(VarId v) { return SymbolTable::instance().name(v); }

}  // namespace conforma
