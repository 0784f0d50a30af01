#include "quartet/cartan.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace quartet {

namespace {

constexpr double kCoordZeroTol = 1e-12;
constexpr double kLexCompareTol = 1e-12;
constexpr double kEigenClusterTol = 1e-8;
constexpr double kCriticalTol = 1e-8;
constexpr std::size_t kGroupCap = 10000;

PureState basis_state(std::initializer_list<const char*> plus,
                      std::initializer_list<const char*> minus) {
  PureState s = PureState::zero(4);
  for (const char* k : plus) s.amplitudes[ket_index(k)] = 0.5;
  for (const char* k : minus) s.amplitudes[ket_index(k)] = -0.5;
  return s;
}

}  // namespace

const std::array<PureState, 4>& cartan_basis() {
  static const std::array<PureState, 4> basis = {
      basis_state({"0000", "0011", "1100", "1111"}, {}),
      basis_state({"0000", "1111"}, {"0011", "1100"}),
      basis_state({"0101", "0110", "1001", "1010"}, {}),
      basis_state({"0101", "1010"}, {"0110", "1001"}),
  };
  return basis;
}

PureState cartan_embed(const CartanPoint& z) {
  const auto& basis = cartan_basis();
  PureState out = PureState::zero(4);
  for (int i = 0; i < 4; ++i) out.amplitudes += z[i] * basis[i].amplitudes;
  return out;
}

const std::vector<int>& cartan_support_kets() {
  static const std::vector<int> kets = [] {
    std::vector<int> v;
    for (const char* k : {"0000", "0011", "1100", "1111", "0101", "0110", "1001", "1010"})
      v.push_back(ket_index(k));
    std::sort(v.begin(), v.end());
    return v;
  }();
  return kets;
}

const Eigen::Matrix4d& transposition_matrix(int generator) {
  static const Eigen::Matrix4d odd = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(3, 3) = -1.0;
    return m;
  }();
  static const Eigen::Matrix4d middle = [] {
    Eigen::Matrix4d m;
    m << 1, 1, 1, 1,
         1, 1, -1, -1,
         1, -1, -1, 1,
         1, -1, 1, -1;
    return Eigen::Matrix4d(0.5 * m);
  }();
  switch (generator) {
    case 1:
    case 3:
      return odd;
    case 2:
      return middle;
    default:
      throw std::invalid_argument("transposition_matrix: generator must be 1, 2, or 3");
  }
}

CartanPoint apply_symmetry(const CartanSymmetry& g, const CartanPoint& p) {
  return std::visit(
      [&](const auto& elem) -> CartanPoint {
        using T = std::decay_t<decltype(elem)>;
        if constexpr (std::is_same_v<T, SignedPermutation>) {
          int prod = 1;
          std::array<bool, 4> seen{};
          for (int i = 0; i < 4; ++i) {
            if (elem.perm[i] < 0 || elem.perm[i] > 3 || seen[elem.perm[i]])
              throw std::invalid_argument("apply_symmetry: invalid permutation");
            seen[elem.perm[i]] = true;
            if (elem.sign[i] != 1 && elem.sign[i] != -1)
              throw std::invalid_argument("apply_symmetry: signs must be +/-1");
            prod *= elem.sign[i];
          }
          if (prod != 1)
            throw std::invalid_argument("apply_symmetry: sign pattern must have product +1");
          CartanPoint out;
          for (int i = 0; i < 4; ++i) out[i] = double(elem.sign[i]) * p[elem.perm[i]];
          return out;
        } else if constexpr (std::is_same_v<T, TranspositionWord>) {
          CartanPoint out = p;
          for (auto it = elem.generators.rbegin(); it != elem.generators.rend(); ++it)
            out = transposition_matrix(*it) * out;
          return out;
        } else if constexpr (std::is_same_v<T, PhaseRotation>) {
          return CartanPoint(std::polar(1.0, elem.t) * p);
        } else {
          return CartanPoint(p.conjugate());
        }
      },
      g);
}

CartanPoint apply_symmetry(std::span<const CartanSymmetry> word, const CartanPoint& p) {
  CartanPoint out = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_symmetry(*it, out);
  return out;
}

namespace {

using MatrixKey = std::array<int, 16>;

MatrixKey key_of(const Eigen::Matrix4d& m) {
  MatrixKey k{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) k[4 * r + c] = int(std::lround(4.0 * m(r, c)));
  return k;
}

}  // namespace

const std::vector<Eigen::Matrix4d>& symmetry_group_matrices() {
  static const std::vector<Eigen::Matrix4d> group = [] {
    std::vector<Eigen::Matrix4d> gens;
    // All 192 even signed permutations.
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
      for (int bits = 0; bits < 16; ++bits) {
        int prod = 1;
        for (int i = 0; i < 4; ++i) prod *= (bits >> i) & 1 ? -1 : 1;
        if (prod != 1) continue;
        Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
        for (int i = 0; i < 4; ++i) m(i, perm[i]) = (bits >> i) & 1 ? -1.0 : 1.0;
        gens.push_back(m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    gens.push_back(transposition_matrix(1));
    gens.push_back(transposition_matrix(2));

    std::map<MatrixKey, Eigen::Matrix4d> elements;
    for (const auto& g : gens) elements.emplace(key_of(g), g);
    std::vector<Eigen::Matrix4d> frontier;
    for (const auto& [k, m] : elements) frontier.push_back(m);
    while (!frontier.empty()) {
      std::vector<Eigen::Matrix4d> next;
      for (const auto& a : frontier) {
        for (const auto& g : gens) {
          Eigen::Matrix4d prod = a * g;
          if (elements.emplace(key_of(prod), prod).second) next.push_back(prod);
          if (elements.size() > kGroupCap)
            throw std::runtime_error(
                "symmetry_group_matrices: closure exceeded 10000 elements");
        }
      }
      frontier = std::move(next);
    }
    std::vector<Eigen::Matrix4d> out;
    out.reserve(elements.size());
    for (const auto& [k, m] : elements) out.push_back(m);
    return out;
  }();
  return group;
}

namespace {

// Rotate so the first coordinate with |z_i| > 1e-12 is real and positive.
CartanPoint fix_phase(const CartanPoint& p) {
  for (int i = 0; i < 4; ++i) {
    const double mag = std::abs(p[i]);
    if (mag > kCoordZeroTol) {
      return CartanPoint((std::conj(p[i]) / mag) * p);
    }
  }
  throw std::invalid_argument("canonicalize: zero point");
}

// Lexicographic comparison of (Re z1, Im z1, ..., Re z4, Im z4) with a
// small tolerance so that orbit elements equal up to roundoff compare equal.
bool lex_less(const CartanPoint& a, const CartanPoint& b, double tol) {
  for (int i = 0; i < 4; ++i) {
    const double dr = a[i].real() - b[i].real();
    if (std::abs(dr) > tol) return dr < 0;
    const double di = a[i].imag() - b[i].imag();
    if (std::abs(di) > tol) return di < 0;
  }
  return false;
}

}  // namespace

CartanPoint canonicalize(const CartanPoint& p) {
  if (p.norm() <= kCoordZeroTol)
    throw std::invalid_argument("canonicalize: zero point");
  const double tol = kLexCompareTol * std::max(1.0, p.norm());
  const auto& group = symmetry_group_matrices();
  const CartanPoint pc = p.conjugate();
  bool have_best = false;
  CartanPoint best;
  for (const auto& m : group) {
    for (const CartanPoint& q : {CartanPoint(m * p), CartanPoint(m * pc)}) {
      const CartanPoint fixed = fix_phase(q);
      if (!have_best || lex_less(fixed, best, tol)) {
        best = fixed;
        have_best = true;
      }
    }
  }
  return best;
}

CartanPoint normal_form(const PureState& s, bool require_critical) {
  if (s.n != 4) throw std::invalid_argument("normal_form: requires a 4-qubit state");
  if (require_critical && criticality_residual_rdm(s) > kCriticalTol)
    throw std::invalid_argument("normal_form: input state is not critical");

  const Flattening4x4 r = t_transform(flatten(s));
  const Eigen::Matrix4cd tau = r * r.transpose();
  Eigen::ComplexSchur<Eigen::Matrix4cd> schur(tau, /*computeU=*/false);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("normal_form: eigenvalue computation failed");
  std::array<Complex, 4> mu;
  for (int i = 0; i < 4; ++i) mu[i] = schur.matrixT()(i, i);

  // Average eigenvalues that agree to within the clustering threshold; for
  // critical inputs tau is diagonalizable and clusters are exact multiples.
  const double scale = std::max(1.0, std::abs(tau.cwiseAbs().maxCoeff()));
  std::array<bool, 4> used{};
  for (int i = 0; i < 4; ++i) {
    if (used[i]) continue;
    std::vector<int> cluster{i};
    for (int j = i + 1; j < 4; ++j)
      if (!used[j] && std::abs(mu[i] - mu[j]) < kEigenClusterTol * scale) {
        cluster.push_back(j);
        used[j] = true;
      }
    if (cluster.size() > 1) {
      Complex avg = 0;
      for (int j : cluster) avg += mu[j];
      avg /= double(cluster.size());
      for (int j : cluster) mu[j] = avg;
    }
  }

  CartanPoint z;
  for (int i = 0; i < 4; ++i) z[i] = std::sqrt(mu[i]);  // principal branch
  return canonicalize(z);
}

}  // namespace quartet
