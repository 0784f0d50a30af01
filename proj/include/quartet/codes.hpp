#pragma once

#include <string>
#include <vector>

#include "quartet/cartan.hpp"
#include "quartet/pure_state.hpp"

namespace quartet {

// An ((n, K, d)) code candidate: K orthonormal basis vectors of a subspace
// of n-qubit space together with the claimed distance.
struct CodeSubspace {
  int n = 0;
  std::vector<PureState> basis;
  int claimed_distance = 0;

  int dimension() const { return int(basis.size()); }
};

// A pair of Cartan critical states that seed the six-qubit construction,
// stored in u-coordinates.
struct AMEPair {
  std::string name;
  CartanPoint phi0;
  CartanPoint phi1;
};

// Basis change from v-coordinates (v1 = u1+u2, v2 = u1-u2, v3 = u3+u4,
// v4 = u3-u4) to u-coordinates.
CartanPoint v_to_u(const Eigen::Vector4cd& coeffs);

// The five registered pairs, addressable as pair1..pair5.
const std::vector<AMEPair>& registered_pairs();
const AMEPair& pair_by_name(const std::string& name);

// |00> x Phi0 + |01> x Phi1 - |10> x conj(Phi1) + |11> x conj(Phi0),
// normalized. Conjugation acts entrywise on the embedded amplitudes.
PureState build_six_qubit(const AMEPair& pair);

// Orthonormal basis {|0>xPhi0 + |1>xPhi1, -|0>xconj(Phi1) + |1>xconj(Phi0)}
// with claimed parameters ((5, 2, 3)).
CodeSubspace five_qubit_code(const AMEPair& pair);

// Image of the first-qubit partial trace of the code projector: an
// ((n-1, 2K, d-1)) code. Throws when the traced operator does not have
// rank exactly 2K.
CodeSubspace rains_reduce(const CodeSubspace& code);

// The Cartan subspace as a ((4, 4, 2)) code.
CodeSubspace cartan_code();

struct MarginalDeviation {
  std::vector<int> kept_qubits;
  double deviation = 0.0;
};

struct PurityReport {
  bool pass = false;
  int r = 0;  // marginals checked at size r = d - 1
  double tol = 0.0;
  double worst_basis_deviation = 0.0;
  double worst_random_deviation = 0.0;
  std::vector<MarginalDeviation> worst_marginals;  // per kept subset, basis vectors
};

// Checks that every basis vector and n_random seeded random unit vectors in
// the span are (d-1)-uniform at the given tolerance.
PurityReport verify_pure_code(const CodeSubspace& code, double tol = 1e-9,
                              int n_random = 50, std::uint64_t seed = 12345);

// Principal angles between the spans of two codes on the same qubit count.
std::vector<double> principal_angles(const CodeSubspace& a, const CodeSubspace& b);

}  // namespace quartet
