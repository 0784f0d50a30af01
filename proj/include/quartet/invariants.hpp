#pragma once

#include <optional>
#include <string_view>

#include "quartet/cartan.hpp"
#include "quartet/poly.hpp"
#include "quartet/pure_state.hpp"

namespace quartet {

// The four symmetric invariant generators, of degrees 2, 6, 8, 12.
enum class Invariant { F1, F3, F4, F6 };

Invariant invariant_from_name(std::string_view name);
std::string_view invariant_name(Invariant inv);
int invariant_degree(Invariant inv);

struct EValues {
  Complex e0, e1, e2, e3;  // e0 = z1 z2 z3 z4, e_i = sum_j z_j^{2i}
};
EValues eval_E(const CartanPoint& z);

struct GValues {
  Complex g0, g1, g2, g3;  // g0 = det, g_i = tr((M K M^T K)^i), K = J (x) J
};
GValues eval_G(const PureState& s);

// Derivatives of (g0, g1, g2, g3) with respect to the 16 flattening entries.
std::array<Eigen::Matrix4cd, 4> eval_G_gradients(const Flattening4x4& m);

struct FValues {
  Complex f1, f3, f4, f6;
};

// F_k restricted to the Cartan subspace, evaluated as the sum over pairs
// (z_i - z_j)^{2k} + (z_i + z_j)^{2k}.
FValues eval_F_cartan(const CartanPoint& z);

// F_k written as polynomials in (e0, e1, e2, e3).
FValues f_from_e(const EValues& e);
const CPoly& f_in_e_poly(Invariant inv);  // variables (e0, e1, e2, e3)

// F_k on the full state space, via the invariants G substituted for E.
FValues eval_F_full(const PureState& s);

// F_k|a as a polynomial in (z1, z2, z3, z4), integer coefficients.
const CPoly& restricted_invariant_poly(Invariant inv);

// Hyperdeterminant on the Cartan subspace: prod_{i<j} (z_i^2 - z_j^2)^2.
Complex eval_hdet_cartan(const CartanPoint& z);

// Hyperdeterminant in terms of the generators G1 = F1/6, F3, F4, F6.
Complex eval_hdet_from_generators(const PureState& s);

struct InvariantFingerprint {
  double f1 = 0, f3 = 0, f4 = 0, f6 = 0;
  std::optional<double> hdet;

  double max_difference(const InvariantFingerprint& o) const;
};

// (|F1|, |F3|, |F4|, |F6|) of s normalized; optionally |Hdet| as well.
InvariantFingerprint fingerprint(const PureState& s, bool with_hdet = false);
InvariantFingerprint fingerprint(const CartanPoint& z, bool with_hdet = false);

}  // namespace quartet
