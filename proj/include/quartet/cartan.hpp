#pragma once

#include <array>
#include <variant>
#include <vector>

#include "quartet/pure_state.hpp"

namespace quartet {

// A point z = (z1,z2,z3,z4) in the Cartan subspace, in the basis u1..u4.
using CartanPoint = Eigen::Vector4cd;

// The orthonormal basis states u1..u4 spanning the Cartan subspace.
const std::array<PureState, 4>& cartan_basis();

// z1 u1 + z2 u2 + z3 u3 + z4 u4.
PureState cartan_embed(const CartanPoint& z);

// The eight computational kets supporting the Cartan subspace.
const std::vector<int>& cartan_support_kets();

// Finite symmetries acting on the Cartan subspace.
//
// SignedPermutation: z_i -> sign_i * z_{perm_i} with an even sign pattern.
// TranspositionWord: a word in the three adjacent-transposition matrices
//   acting on coordinates (generators 1..3; 1 and 3 share a matrix).
// PhaseRotation: z -> e^{it} z. Conjugation: entrywise complex conjugation.
struct SignedPermutation {
  std::array<int, 4> perm{0, 1, 2, 3};  // 0-based images
  std::array<int, 4> sign{1, 1, 1, 1};  // product must be +1
};
struct TranspositionWord {
  std::vector<int> generators;  // values in {1,2,3}
};
struct PhaseRotation {
  double t = 0.0;
};
struct Conjugation {};

using CartanSymmetry =
    std::variant<SignedPermutation, TranspositionWord, PhaseRotation, Conjugation>;

// Matrices of the coordinate transpositions (1,2)/(3,4) and (2,3).
const Eigen::Matrix4d& transposition_matrix(int generator);

CartanPoint apply_symmetry(const CartanSymmetry& g, const CartanPoint& p);
CartanPoint apply_symmetry(std::span<const CartanSymmetry> word, const CartanPoint& p);

// All real matrices in the group generated by the 192 even signed
// permutations and the two transposition matrices, enumerated by closure.
const std::vector<Eigen::Matrix4d>& symmetry_group_matrices();

// Deterministic representative of the orbit of p under the finite matrix
// group, conjugation, and phase rotation. The phase is fixed so that the
// first coordinate of magnitude > 1e-12 is real and positive; among all
// orbit elements the lexicographically smallest (by real part then
// imaginary part, coordinate-wise) is returned.
CartanPoint canonicalize(const CartanPoint& p);

// Cartan representative of a critical 4-qubit state: the eigenvalues of
// R R^T (R the t_transform of the flattening) are computed, square roots
// taken, and the resulting point canonicalized. With require_critical the
// input is checked to be critical at tolerance 1e-8.
CartanPoint normal_form(const PureState& s, bool require_critical = true);

}  // namespace quartet
