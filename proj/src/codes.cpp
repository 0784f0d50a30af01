#include "quartet/codes.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quartet/random.hpp"

namespace quartet {

namespace {

constexpr double kOrthoTol = 1e-10;
constexpr double kRankRelTol = 1e-10;

void check_combinable(const CodeSubspace& code) {
  if (code.basis.empty()) throw std::invalid_argument("code has an empty basis");
  for (const PureState& v : code.basis)
    if (v.n != code.n) throw std::invalid_argument("code basis qubit count mismatch");
}

Eigen::MatrixXcd basis_matrix(const CodeSubspace& code) {
  Eigen::MatrixXcd m(code.basis.front().dim(), code.dimension());
  for (int j = 0; j < code.dimension(); ++j) m.col(j) = code.basis[j].amplitudes;
  return m;
}

}  // namespace

CartanPoint v_to_u(const Eigen::Vector4cd& c) {
  CartanPoint z;
  z << c[0] + c[1], c[0] - c[1], c[2] + c[3], c[2] - c[3];
  return z;
}

const std::vector<AMEPair>& registered_pairs() {
  static const std::vector<AMEPair> pairs = [] {
    using std::numbers::pi;
    const Complex i(0.0, 1.0);
    const double rt2 = std::sqrt(2.0), rt3 = std::sqrt(3.0), rt6 = std::sqrt(6.0);
    const auto eip = [](double t) { return std::polar(1.0, t); };
    auto v4 = [](Complex a, Complex b, Complex c, Complex d) {
      Eigen::Vector4cd v;
      v << a, b, c, d;
      return v;
    };
    std::vector<AMEPair> out;
    out.push_back({"pair1", v_to_u(v4(rt2 + i, rt2 - i, i, i)),
                   v_to_u(v4(-i, i, rt2 + i, -rt2 + i))});
    out.push_back({"pair2", v_to_u(v4(rt3 + i, rt3 - i, 2.0 * i, 0)),
                   v_to_u(v4(-rt2 * eip(pi / 3), rt2 * eip(pi / 3), rt2 * eip(pi / 3),
                             rt2 * (1.0 + eip(-pi / 3))))});
    out.push_back({"pair3",
                   v_to_u(v4(2.0 * rt2 - rt3 + i, rt3 - i, rt3 - rt2 + rt6 * i - i,
                             rt3 - rt2 - rt6 * i + 3.0 * i)),
                   v_to_u(v4(rt2 - rt3 + rt6 * i - i, rt3 - rt2 + rt6 * i - 3.0 * i,
                             2.0 * rt2 - rt3 - i, -rt3 - i))});
    out.push_back({"pair4", v_to_u(v4(eip(pi / 4), eip(-pi / 4), 0, 0)),
                   v_to_u(v4(0, 0, eip(-pi / 4), -eip(pi / 4)))});
    out.push_back({"pair5", v_to_u(v4(eip(pi / 4), eip(-pi / 4), 1, -i)),
                   v_to_u(v4(eip(pi / 4), eip(-pi / 4), -1, i))});
    return out;
  }();
  return pairs;
}

const AMEPair& pair_by_name(const std::string& name) {
  for (const AMEPair& p : registered_pairs())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown pair '" + name + "' (expected pair1..pair5)");
}

PureState build_six_qubit(const AMEPair& pair) {
  const Eigen::VectorXcd p0 = cartan_embed(pair.phi0).amplitudes;
  const Eigen::VectorXcd p1 = cartan_embed(pair.phi1).amplitudes;
  PureState out = PureState::zero(6);
  out.amplitudes.segment(0, 16) = p0;
  out.amplitudes.segment(16, 16) = p1;
  out.amplitudes.segment(32, 16) = -p1.conjugate();
  out.amplitudes.segment(48, 16) = p0.conjugate();
  return out.normalized();
}

CodeSubspace five_qubit_code(const AMEPair& pair) {
  const Eigen::VectorXcd p0 = cartan_embed(pair.phi0).amplitudes;
  const Eigen::VectorXcd p1 = cartan_embed(pair.phi1).amplitudes;
  PureState zero_l = PureState::zero(5);
  zero_l.amplitudes.segment(0, 16) = p0;
  zero_l.amplitudes.segment(16, 16) = p1;
  PureState one_l = PureState::zero(5);
  one_l.amplitudes.segment(0, 16) = -p1.conjugate();
  one_l.amplitudes.segment(16, 16) = p0.conjugate();

  CodeSubspace code;
  code.n = 5;
  code.claimed_distance = 3;
  code.basis = {zero_l.normalized(), one_l.normalized()};
  if (std::abs(code.basis[0].inner(code.basis[1])) > kOrthoTol)
    throw std::runtime_error("five_qubit_code: logical basis is not orthogonal");
  return code;
}

CodeSubspace rains_reduce(const CodeSubspace& code) {
  check_combinable(code);
  if (code.n < 2) throw std::invalid_argument("rains_reduce: need at least two qubits");
  if (code.claimed_distance < 2)
    throw std::invalid_argument("rains_reduce: need claimed distance >= 2");

  const int dim = code.basis.front().dim();
  Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PureState& v : code.basis) {
    const PureState u = v.normalized();
    projector += u.amplitudes * u.amplitudes.adjoint();
  }
  const int traced[1] = {0};
  const Eigen::MatrixXcd reduced = partial_trace(projector, code.n, traced);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(reduced);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("rains_reduce: eigensolver failed");
  const double lmax = es.eigenvalues().maxCoeff();
  const int expected = 2 * code.dimension();
  CodeSubspace out;
  out.n = code.n - 1;
  out.claimed_distance = code.claimed_distance - 1;
  for (int k = 0; k < reduced.rows(); ++k) {
    if (es.eigenvalues()[k] > kRankRelTol * lmax)
      out.basis.emplace_back(out.n, Eigen::VectorXcd(es.eigenvectors().col(k)));
  }
  if (out.dimension() != expected)
    throw std::runtime_error("rains_reduce: traced operator has rank " +
                             std::to_string(out.dimension()) + ", expected " +
                             std::to_string(expected) + " (input code is not pure)");
  return out;
}

CodeSubspace cartan_code() {
  CodeSubspace code;
  code.n = 4;
  code.claimed_distance = 2;
  for (const PureState& u : cartan_basis()) code.basis.push_back(u);
  return code;
}

PurityReport verify_pure_code(const CodeSubspace& code, double tol, int n_random,
                              std::uint64_t seed) {
  check_combinable(code);
  if (code.claimed_distance < 2)
    throw std::invalid_argument("verify_pure_code: need claimed distance >= 2");
  PurityReport report;
  report.r = code.claimed_distance - 1;
  report.tol = tol;
  if (report.r > code.n / 2) {
    report.pass = false;
    return report;
  }

  for (const PureState& v : code.basis)
    report.worst_basis_deviation =
        std::max(report.worst_basis_deviation, uniformity_deviation(v, report.r));

  // Worst basis-vector deviation per kept subset, for reporting.
  {
    std::vector<int> idx(report.r);
    for (int i = 0; i < report.r; ++i) idx[i] = i;
    while (true) {
      MarginalDeviation md;
      md.kept_qubits = idx;
      for (const PureState& v : code.basis) {
        DensityMatrix rho = reduced_density_matrix(v, idx);
        for (int d = 0; d < rho.rows(); ++d) rho(d, d) -= 1.0 / double(rho.rows());
        md.deviation = std::max(md.deviation, rho.cwiseAbs().maxCoeff());
      }
      report.worst_marginals.push_back(std::move(md));
      int i = report.r - 1;
      while (i >= 0 && idx[i] == code.n - report.r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < report.r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::mt19937_64 rng = seeded_engine(seed);
  for (int k = 0; k < n_random; ++k) {
    PureState v = PureState::zero(code.n);
    for (const PureState& b : code.basis) v.amplitudes += gaussian_complex(rng) * b.amplitudes;
    report.worst_random_deviation =
        std::max(report.worst_random_deviation, uniformity_deviation(v, report.r));
  }

  report.pass = report.worst_basis_deviation < tol && report.worst_random_deviation < tol;
  return report;
}

std::vector<double> principal_angles(const CodeSubspace& a, const CodeSubspace& b) {
  check_combinable(a);
  check_combinable(b);
  if (a.n != b.n) throw std::invalid_argument("principal_angles: qubit count mismatch");
  const Eigen::MatrixXcd ma = basis_matrix(a);
  const Eigen::MatrixXcd mb = basis_matrix(b);
  // Sine formulation: singular values of (I - A A*) B resolve angles near
  // zero to machine precision, where the cosine route loses half the digits.
  const Eigen::MatrixXcd residue = mb - ma * (ma.adjoint() * mb);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residue);
  std::vector<double> angles;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    const double s = std::clamp(svd.singularValues()[k], 0.0, 1.0);
    angles.push_back(std::asin(s));
  }
  return angles;
}

}  // namespace quartet
