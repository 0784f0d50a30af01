#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace quartet {

using Complex = std::complex<double>;

// An n-qubit pure state, not necessarily normalized. Amplitudes are stored
// in binary ket order with qubit 1 as the most significant bit, so
// amplitudes[i] is the coefficient of |i_1 i_2 ... i_n>.
struct PureState {
  int n = 0;
  Eigen::VectorXcd amplitudes;

  PureState() = default;
  PureState(int n_qubits, Eigen::VectorXcd amps);

  static PureState zero(int n_qubits);
  int dim() const { return 1 << n; }

  double norm_squared() const { return amplitudes.squaredNorm(); }
  double norm() const { return amplitudes.norm(); }
  PureState normalized() const;  // throws on (numerically) zero states
  Complex inner(const PureState& other) const;  // Hermitian, conjugate-linear in *this
  PureState conjugated() const;  // entrywise complex conjugation
};

// The 4x4 matrix of a 4-qubit state: row index encodes (i1,i2), column
// index encodes (i3,i4).
using Flattening4x4 = Eigen::Matrix4cd;

using DensityMatrix = Eigen::MatrixXcd;

// Index of |bits> given as a string such as "0101".
int ket_index(std::string_view bits);

// The named four-qubit states: GHZ, MP, YC, HS, BSSB, C1, C2, C3, HD, OS, L, M.
PureState named_state(std::string_view name);
std::vector<std::string> named_state_names();

// rho(g_1,...,g_n) s: each 2x2 matrix acts on its own tensor factor.
PureState apply_local(std::span<const Eigen::Matrix2cd> gates, const PureState& s);

// Permutation action on tensor factors. sigma is 0-based: the state
// v_1 x ... x v_n maps to v_{sigma(1)} x ... x v_{sigma(n)}, so
// permute(sigma, permute(tau, s)) == permute(tau o sigma, s).
PureState permute_qubits(std::span<const int> sigma, const PureState& s);

Flattening4x4 flatten(const PureState& s);
PureState unflatten(const Flattening4x4& m);

// The unitary change of coordinates R = T m T*.
Flattening4x4 t_transform(const Flattening4x4& m);
const Eigen::Matrix4cd& t_matrix();

// Partial trace of a 2^n x 2^n operator over the qubits in trace_out
// (0-based). Remaining qubits keep their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, int n, std::span<const int> trace_out);

// Reduced density matrix of s on the qubits in keep (0-based), normalized
// to unit trace.
DensityMatrix reduced_density_matrix(const PureState& s, std::span<const int> keep);

// Largest entry deviation of any single-qubit reduced density matrix from I/2.
double criticality_residual_rdm(const PureState& s);
// Largest |<X phi, phi>| over the 12 traceless one-qubit generators.
double criticality_residual_lie(const PureState& s);

// A state is critical when every single-qubit marginal is maximally mixed.
bool is_critical(const PureState& s, double tol = 1e-9);

// Worst max-entry deviation of any r-qubit marginal from I/2^r.
double uniformity_deviation(const PureState& s, int r);
bool is_r_uniform(const PureState& s, int r, double tol = 1e-9);

}  // namespace quartet
