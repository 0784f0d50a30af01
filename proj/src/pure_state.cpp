#include "quartet/pure_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quartet {

namespace {

constexpr double kZeroStateTol = 1e-300;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Enumerate all size-r subsets of {0..n-1}, calling f on each.
template <class F>
void for_each_subset(int n, int r, F&& f) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(std::span<const int>(idx));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PureState::PureState(int n_qubits, Eigen::VectorXcd amps)
    : n(n_qubits), amplitudes(std::move(amps)) {
  require(n >= 1, "PureState: qubit count must be >= 1");
  require(amplitudes.size() == (1 << n), "PureState: amplitude count must be 2^n");
}

PureState PureState::zero(int n_qubits) {
  require(n_qubits >= 1, "PureState: qubit count must be >= 1");
  return PureState(n_qubits, Eigen::VectorXcd::Zero(1 << n_qubits));
}

PureState PureState::normalized() const {
  const double nrm = norm();
  if (!(nrm > kZeroStateTol)) throw std::invalid_argument("PureState: cannot normalize zero state");
  return PureState(n, amplitudes / nrm);
}

Complex PureState::inner(const PureState& other) const {
  require(n == other.n, "PureState: inner product dimension mismatch");
  return amplitudes.dot(other.amplitudes);  // Eigen conjugates the left factor
}

PureState PureState::conjugated() const {
  return PureState(n, amplitudes.conjugate());
}

int ket_index(std::string_view bits) {
  int idx = 0;
  for (char c : bits) {
    require(c == '0' || c == '1', "ket_index: bits must be 0/1");
    idx = (idx << 1) | (c - '0');
  }
  return idx;
}

namespace {

// Some of the published forms carry a nonunit norm; every named state is
// returned normalized.
PureState from_kets(std::initializer_list<std::pair<const char*, Complex>> entries,
                    double scale) {
  PureState s = PureState::zero(4);
  for (const auto& [bits, amp] : entries) s.amplitudes[ket_index(bits)] += amp;
  s.amplitudes *= scale;
  return s.normalized();
}

}  // namespace

PureState named_state(std::string_view name) {
  using std::numbers::pi;
  const Complex i(0.0, 1.0);
  const Complex omega = std::polar(1.0, 2.0 * pi / 3.0);
  const Complex omega2 = omega * omega;

  if (name == "GHZ")
    return from_kets({{"0000", 1}, {"1111", 1}}, 1.0 / std::sqrt(2.0));
  if (name == "MP")
    return from_kets({{"0000", 1}, {"0101", 1}, {"1010", 1}, {"1111", 1}}, 0.5);
  if (name == "YC")
    return from_kets({{"0000", 1}, {"0011", -1}, {"0101", -1}, {"0110", 1},
                      {"1001", 1}, {"1010", 1}, {"1100", 1}, {"1111", 1}},
                     1.0 / std::sqrt(8.0));
  if (name == "HS")
    return from_kets({{"0011", 1}, {"1100", 1}, {"0101", omega}, {"1010", omega},
                      {"0110", omega2}, {"1001", omega2}},
                     1.0 / std::sqrt(6.0));
  if (name == "BSSB")
    return from_kets({{"0110", 1}, {"1011", 1}, {"0010", i}, {"1111", i},
                      {"0101", 1.0 + i}, {"1000", 1.0 + i}},
                     1.0 / std::sqrt(12.0));
  if (name == "C1")
    return from_kets({{"0000", 1}, {"0011", 1}, {"1100", 1}, {"1111", -1}}, 0.5);
  if (name == "C2")
    return from_kets({{"0000", 1}, {"0110", 1}, {"1001", 1}, {"1111", -1}}, 0.5);
  if (name == "C3")
    return from_kets({{"0000", 1}, {"0101", 1}, {"1010", 1}, {"1111", -1}}, 0.5);
  if (name == "HD")
    return from_kets({{"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1},
                      {"1111", std::sqrt(2.0)}},
                     1.0 / std::sqrt(6.0));
  if (name == "OS")
    return from_kets({{"0001", 1}, {"0010", 1}, {"1100", 1}, {"1111", 1}}, 0.5);
  if (name == "L")
    return from_kets({{"0000", 1.0 + omega}, {"1111", 1.0 + omega},
                      {"0011", 1.0 - omega}, {"1100", 1.0 - omega},
                      {"0101", omega2}, {"0110", omega2},
                      {"1001", omega2}, {"1010", omega2}},
                     0.25);
  if (name == "M")
    return from_kets({{"0000", 1.0 + std::sqrt(3.0) * i}, {"1111", 1.0 + std::sqrt(3.0) * i},
                      {"0011", -1.0 + std::sqrt(3.0) * i}, {"1100", -1.0 + std::sqrt(3.0) * i},
                      {"0101", 2}, {"1010", 2}},
                     1.0 / std::sqrt(24.0));
  throw std::invalid_argument("named_state: unknown state '" + std::string(name) + "'");
}

std::vector<std::string> named_state_names() {
  return {"GHZ", "MP", "YC", "HS", "BSSB", "C1", "C2", "C3", "HD", "OS", "L", "M"};
}

PureState apply_local(std::span<const Eigen::Matrix2cd> gates, const PureState& s) {
  require(int(gates.size()) == s.n, "apply_local: need one 2x2 matrix per qubit");
  Eigen::VectorXcd amps = s.amplitudes;
  const int dim = s.dim();
  for (int q = 0; q < s.n; ++q) {
    const Eigen::Matrix2cd& g = gates[q];
    const int shift = s.n - 1 - q;  // qubit q is bit (n-1-q) from the LSB
    const int mask = 1 << shift;
    for (int idx = 0; idx < dim; ++idx) {
      if (idx & mask) continue;
      const Complex a0 = amps[idx];
      const Complex a1 = amps[idx | mask];
      amps[idx] = g(0, 0) * a0 + g(0, 1) * a1;
      amps[idx | mask] = g(1, 0) * a0 + g(1, 1) * a1;
    }
  }
  return PureState(s.n, std::move(amps));
}

PureState permute_qubits(std::span<const int> sigma, const PureState& s) {
  require(int(sigma.size()) == s.n, "permute_qubits: permutation size mismatch");
  std::vector<int> seen(s.n, 0), inv(s.n, -1);
  for (int k = 0; k < s.n; ++k) {
    const int v = sigma[k];
    require(v >= 0 && v < s.n && !seen[v], "permute_qubits: not a permutation");
    seen[v] = 1;
    inv[v] = k;
  }
  // out_{j_1..j_n} = a_{i_1..i_n} with i_{sigma(k)} = j_k, i.e. i_m = j_{inv(m)}.
  PureState out = PureState::zero(s.n);
  for (int j = 0; j < s.dim(); ++j) {
    int in_idx = 0;
    for (int m = 0; m < s.n; ++m) {
      const int bit = (j >> (s.n - 1 - inv[m])) & 1;
      in_idx |= bit << (s.n - 1 - m);
    }
    out.amplitudes[j] = s.amplitudes[in_idx];
  }
  return out;
}

Flattening4x4 flatten(const PureState& s) {
  require(s.n == 4, "flatten: requires a 4-qubit state");
  Flattening4x4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = s.amplitudes[(r << 2) | c];
  return m;
}

PureState unflatten(const Flattening4x4& m) {
  PureState s = PureState::zero(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s.amplitudes[(r << 2) | c] = m(r, c);
  return s;
}

const Eigen::Matrix4cd& t_matrix() {
  static const Eigen::Matrix4cd t = [] {
    const Complex i(0.0, 1.0);
    Eigen::Matrix4cd m;
    m << 1, 0, 0, 1,
         0, i, i, 0,
         0, -1, 1, 0,
         i, 0, 0, -i;
    return Eigen::Matrix4cd(m / std::sqrt(2.0));
  }();
  return t;
}

Flattening4x4 t_transform(const Flattening4x4& m) {
  const Eigen::Matrix4cd& t = t_matrix();
  return t * m * t.adjoint();
}

DensityMatrix partial_trace(const DensityMatrix& rho, int n, std::span<const int> trace_out) {
  require(n >= 1 && rho.rows() == (1 << n) && rho.cols() == (1 << n),
          "partial_trace: operator dimension must be 2^n");
  require(!trace_out.empty(), "partial_trace: subset must be nonempty");
  std::vector<int> traced(trace_out.begin(), trace_out.end());
  std::sort(traced.begin(), traced.end());
  require(std::unique(traced.begin(), traced.end()) == traced.end(),
          "partial_trace: repeated qubit index");
  require(traced.front() >= 0 && traced.back() < n, "partial_trace: qubit index out of range");

  std::vector<int> kept;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(traced.begin(), traced.end(), q)) kept.push_back(q);

  const int nk = int(kept.size());
  const int nt = int(traced.size());
  const int dk = 1 << nk;
  const int dt = 1 << nt;

  auto assemble = [&](int kept_bits, int traced_bits) {
    int idx = 0;
    for (int a = 0; a < nk; ++a)
      idx |= ((kept_bits >> (nk - 1 - a)) & 1) << (n - 1 - kept[a]);
    for (int b = 0; b < nt; ++b)
      idx |= ((traced_bits >> (nt - 1 - b)) & 1) << (n - 1 - traced[b]);
    return idx;
  };

  DensityMatrix out = DensityMatrix::Zero(dk, dk);
  for (int a = 0; a < dk; ++a)
    for (int b = 0; b < dk; ++b) {
      Complex sum = 0;
      for (int t = 0; t < dt; ++t) sum += rho(assemble(a, t), assemble(b, t));
      out(a, b) = sum;
    }
  return out;
}

DensityMatrix reduced_density_matrix(const PureState& s, std::span<const int> keep) {
  require(!keep.empty(), "reduced_density_matrix: keep set must be nonempty");
  const PureState u = s.normalized();
  if (int(keep.size()) == u.n) {
    return u.amplitudes * u.amplitudes.adjoint();
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  require(std::unique(kept.begin(), kept.end()) == kept.end(),
          "reduced_density_matrix: repeated qubit index");
  require(kept.front() >= 0 && kept.back() < u.n,
          "reduced_density_matrix: qubit index out of range");
  std::vector<int> traced;
  for (int q = 0; q < u.n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  const DensityMatrix rho = u.amplitudes * u.amplitudes.adjoint();
  return partial_trace(rho, u.n, traced);
}

double criticality_residual_rdm(const PureState& s) {
  double worst = 0.0;
  for (int q = 0; q < s.n; ++q) {
    const int keep[1] = {q};
    DensityMatrix rho = reduced_density_matrix(s, keep);
    rho(0, 0) -= 0.5;
    rho(1, 1) -= 0.5;
    worst = std::max(worst, rho.cwiseAbs().maxCoeff());
  }
  return worst;
}

double criticality_residual_lie(const PureState& s) {
  const PureState u = s.normalized();
  // Traceless basis of sl_2 acting on one qubit at a time.
  std::array<Eigen::Matrix2cd, 3> gens;
  gens[0] << 0, 1, 0, 0;
  gens[1] << 0, 0, 1, 0;
  gens[2] << 1, 0, 0, -1;
  double worst = 0.0;
  for (int q = 0; q < u.n; ++q) {
    for (const auto& x : gens) {
      std::vector<Eigen::Matrix2cd> gates(u.n, Eigen::Matrix2cd::Identity());
      gates[q] = x;
      const PureState xu = apply_local(gates, u);
      worst = std::max(worst, std::abs(u.inner(xu)));
    }
  }
  return worst;
}

bool is_critical(const PureState& s, double tol) {
  return criticality_residual_rdm(s) < tol;
}

double uniformity_deviation(const PureState& s, int r) {
  require(r >= 1 && r <= s.n / 2, "uniformity: r out of range");
  const PureState u = s.normalized();
  const double target = 1.0 / double(1 << r);
  double worst = 0.0;
  for_each_subset(u.n, r, [&](std::span<const int> keep) {
    DensityMatrix rho = reduced_density_matrix(u, keep);
    for (int d = 0; d < rho.rows(); ++d) rho(d, d) -= target;
    worst = std::max(worst, rho.cwiseAbs().maxCoeff());
  });
  return worst;
}

bool is_r_uniform(const PureState& s, int r, double tol) {
  return uniformity_deviation(s, r) < tol;
}

}  // namespace quartet
