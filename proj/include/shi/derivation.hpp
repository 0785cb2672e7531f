#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shi/poly.hpp"

namespace shi {

/// Polynomial vector field sum_i coeff_x[i] d/dx_i + coeff_z d/dz on the
/// ring Q[x_1..x_l, z]. Variable index l (0-based) is z.
struct Derivation {
  int ell = 0;
  std::string name;
  std::vector<Poly> coeff_x;
  Poly coeff_z;

  std::size_t nvars() const { return static_cast<std::size_t>(ell) + 1; }

  /// Coefficient of d/d(variable v), v = ell meaning z.
  const Poly& coeff(std::size_t v) const { return v < coeff_x.size() ? coeff_x[v] : coeff_z; }

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// theta(f) = sum_v coeff(v) * df/dv.
inline Poly apply(const Derivation& theta, const Poly& f) {
  if (f.nvars() != theta.nvars()) throw std::invalid_argument("apply: derivation and polynomial rings differ");
  Poly result(f.nvars());
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    const Poly& c = theta.coeff(v);
    if (c.is_zero()) continue;
    Poly df = f.derivative(v);
    if (!df.is_zero()) result += c * df;
  }
  return result;
}

}  // namespace shi
