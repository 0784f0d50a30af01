#include "quartet/stationary.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "quartet/random.hpp"

namespace quartet {

namespace {

constexpr double kStationaryTolS7 = 1e-8;
constexpr double kVanishingTol = 1e-8;
constexpr double kChartTol = 1e-6;
constexpr double kDedupTol = 1e-6;

Complex evalz(const CPoly& p, const CartanPoint& z) {
  const std::array<Complex, 4> x = {z[0], z[1], z[2], z[3]};
  return p.eval(std::span<const Complex>(x));
}

// Symbolic first and second complex derivatives of F_k restricted to the
// Cartan subspace.
struct CartanDerivs {
  CPoly f;
  std::array<CPoly, 4> d1;
  std::array<std::array<CPoly, 4>, 4> d2;
};

const CartanDerivs& cartan_derivs(Invariant inv) {
  static const std::array<CartanDerivs, 4> cache = [] {
    std::array<CartanDerivs, 4> out;
    for (Invariant inv : {Invariant::F1, Invariant::F3, Invariant::F4, Invariant::F6}) {
      CartanDerivs d;
      d.f = restricted_invariant_poly(inv);
      for (int i = 0; i < 4; ++i) d.d1[i] = d.f.derivative(i);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d.d2[i][j] = d.d1[i].derivative(j);
      out[std::size_t(inv)] = std::move(d);
    }
    return out;
  }();
  return cache[std::size_t(inv)];
}

// Value and complex amplitude-gradient of the full-space invariant.
std::pair<Complex, Eigen::VectorXcd> full_value_and_gradient(const PureState& s,
                                                             Invariant inv) {
  const GValues g = eval_G(s);
  const std::array<Complex, 4> gv = {g.g0, g.g1, g.g2, g.g3};
  const CPoly& fe = f_in_e_poly(inv);
  const Complex value = fe.eval(std::span<const Complex>(gv));
  std::array<Complex, 4> w;
  for (int i = 0; i < 4; ++i)
    w[i] = fe.derivative(i).eval(std::span<const Complex>(gv));
  const auto ggrad = eval_G_gradients(flatten(s));
  Eigen::Matrix4cd dfdm = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) dfdm += w[i] * ggrad[i];
  Eigen::VectorXcd grad(16);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) grad[(r << 2) | c] = dfdm(r, c);
  return {value, grad};
}

// Tangential norm of grad |f|^2 on the unit sphere of R^{2k}, built from a
// holomorphic value/gradient pair via z_j = x_j + i y_j.
double tangential_norm(const Eigen::VectorXcd& point, Complex value,
                       const Eigen::VectorXcd& grad) {
  const int k = int(point.size());
  Eigen::VectorXd g(2 * k), u(2 * k);
  for (int j = 0; j < k; ++j) {
    const Complex w = grad[j] * std::conj(value);
    g[2 * j] = 2.0 * w.real();
    g[2 * j + 1] = -2.0 * w.imag();
    u[2 * j] = point[j].real();
    u[2 * j + 1] = point[j].imag();
  }
  return (g - g.dot(u) * u).norm();
}

}  // namespace

double tangential_residual(const CartanPoint& p, Invariant inv, Sphere sphere) {
  const double nrm = p.norm();
  if (!(nrm > 0)) throw std::invalid_argument("tangential_residual: zero point");
  const CartanPoint u = p / nrm;
  if (sphere == Sphere::S7) {
    const CartanDerivs& d = cartan_derivs(inv);
    const Complex value = evalz(d.f, u);
    Eigen::VectorXcd grad(4);
    for (int i = 0; i < 4; ++i) grad[i] = evalz(d.d1[i], u);
    return tangential_norm(Eigen::VectorXcd(u), value, grad);
  }
  const PureState s = cartan_embed(u);
  const auto [value, grad] = full_value_and_gradient(s, inv);
  return tangential_norm(s.amplitudes, value, grad);
}

double tangential_residual_realpart(const CartanPoint& p, Invariant inv) {
  const double nrm = p.norm();
  if (!(nrm > 0)) throw std::invalid_argument("tangential_residual: zero point");
  const CartanPoint u = p / nrm;
  const CartanDerivs& d = cartan_derivs(inv);
  const Complex iu(0.0, 1.0);
  Eigen::VectorXd g(8), x(8);
  for (int j = 0; j < 4; ++j) {
    const Complex fj = evalz(d.d1[j], u);
    g[2 * j] = fj.real();           // d(Re f)/dx_j
    g[2 * j + 1] = (iu * fj).real();  // d(Re f)/dy_j
    x[2 * j] = u[j].real();
    x[2 * j + 1] = u[j].imag();
  }
  return (g - g.dot(x) * x).norm();
}

CartanPoint phase_fix_f_real(const CartanPoint& p, Invariant inv) {
  const CartanDerivs& d = cartan_derivs(inv);
  const Complex value = evalz(d.f, p);
  if (std::abs(value) < 1e-300) return p;
  const int m = invariant_degree(inv);
  const double arg = std::arg(value);
  const double k = std::round(arg / std::numbers::pi);
  const double t = (k * std::numbers::pi - arg) / double(m);
  return CartanPoint(std::polar(1.0, t) * p);
}

CartanPoint chart_representative(const CartanPoint& p, Invariant inv) {
  const CartanPoint fixed = phase_fix_f_real(p, inv);
  const CartanPoint fixed_conj = fixed.conjugate();
  CartanPoint best = fixed;
  for (const auto& m : symmetry_group_matrices()) {
    for (const CartanPoint& q : {CartanPoint(m * fixed), CartanPoint(m * fixed_conj)}) {
      if (q[0].real() > best[0].real() + 1e-15) best = q;
    }
  }
  return best;
}

std::string real_coordinate_name(int ambient_index) {
  if (ambient_index < 0 || ambient_index > 7)
    throw std::out_of_range("real_coordinate_name: index");
  return (ambient_index % 2 ? "y" : "x") + std::to_string(ambient_index / 2 + 1);
}

RealPolynomialSystem build_lagrange_system(Invariant inv, int chart_var) {
  if (chart_var < 0 || chart_var > 7)
    throw std::invalid_argument("build_lagrange_system: chart variable out of range");
  const auto [re, im] = real_imag_parts(restricted_invariant_poly(inv));
  const RPoly& g = re;
  const RPoly dg_chart = g.derivative(chart_var);
  RealPolynomialSystem sys;
  sys.invariant = std::string(invariant_name(inv));
  sys.chart_var = chart_var;
  for (int v = 0; v < 8; ++v) {
    if (v == chart_var) continue;
    sys.active_vars.push_back(v);
    sys.variables.push_back(real_coordinate_name(v));
    RPoly eq = g.derivative(v) - dg_chart * RPoly::variable(8, v);
    sys.equations.push_back(eq.set_to_one(chart_var));
  }
  return sys;
}

namespace {

// Flat-term form of a polynomial for the Newton hot loop; powers of the
// eight ambient coordinates are shared across all polynomials of a system.
struct CompiledPoly {
  struct Term {
    std::array<std::uint8_t, 8> e;
    double c;
  };
  std::vector<Term> terms;

  static CompiledPoly from(const RPoly& p) {
    CompiledPoly out;
    out.terms.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.terms.push_back({e, c});
    return out;
  }

  double eval(const double pw[8][16]) const {
    double acc = 0.0;
    for (const Term& t : terms) {
      double m = t.c;
      for (int v = 0; v < 8; ++v)
        if (t.e[v]) m *= pw[v][t.e[v]];
      acc += m;
    }
    return acc;
  }
};

struct CompiledSystem {
  int chart_var = 0;
  std::array<int, 7> active{};
  int maxdeg = 0;
  std::array<CompiledPoly, 7> eqs;
  std::array<std::array<CompiledPoly, 7>, 7> jac;

  explicit CompiledSystem(const RealPolynomialSystem& sys) {
    chart_var = sys.chart_var;
    if (sys.equations.size() != 7 || sys.active_vars.size() != 7)
      throw std::invalid_argument("newton_refine: system must have 7 equations in 7 variables");
    for (int i = 0; i < 7; ++i) active[i] = sys.active_vars[i];
    for (int i = 0; i < 7; ++i) {
      maxdeg = std::max(maxdeg, sys.equations[i].max_exponent());
      eqs[i] = CompiledPoly::from(sys.equations[i]);
      for (int j = 0; j < 7; ++j) {
        const RPoly d = sys.equations[i].derivative(active[j]);
        maxdeg = std::max(maxdeg, d.max_exponent());
        jac[i][j] = CompiledPoly::from(d);
      }
    }
    if (maxdeg > 15) throw std::invalid_argument("newton_refine: degree too large");
  }

  void fill_powers(const Eigen::VectorXd& x8, double pw[8][16]) const {
    for (int v = 0; v < 8; ++v) {
      pw[v][0] = 1.0;
      for (int d = 1; d <= maxdeg; ++d) pw[v][d] = pw[v][d - 1] * x8[v];
    }
  }

  Eigen::VectorXd ambient(const Eigen::VectorXd& x7) const {
    Eigen::VectorXd x8(8);
    x8[chart_var] = 1.0;
    for (int i = 0; i < 7; ++i) x8[active[i]] = x7[i];
    return x8;
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& x7) const {
    double pw[8][16];
    fill_powers(ambient(x7), pw);
    Eigen::VectorXd f(7);
    for (int i = 0; i < 7; ++i) f[i] = eqs[i].eval(pw);
    return f;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x7) const {
    double pw[8][16];
    fill_powers(ambient(x7), pw);
    Eigen::MatrixXd j(7, 7);
    for (int i = 0; i < 7; ++i)
      for (int c = 0; c < 7; ++c) j(i, c) = jac[i][c].eval(pw);
    return j;
  }
};

NewtonResult run_newton(const CompiledSystem& cs, Eigen::VectorXd x, int max_iter,
                        double tol) {
  NewtonResult res;
  Eigen::VectorXd f = cs.residual(x);
  double fn = f.norm();
  for (int iter = 0; iter < max_iter; ++iter) {
    if (fn < tol) {
      res.converged = true;
      res.iterations = iter;
      res.residual = fn;
      res.solution = cs.ambient(x);
      return res;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(cs.jacobian(x));
    if (!lu.isInvertible()) {
      res.failure = "singular jacobian";
      res.iterations = iter;
      res.residual = fn;
      res.solution = cs.ambient(x);
      return res;
    }
    const Eigen::VectorXd step = lu.solve(-f);
    double lambda = 1.0;
    bool accepted = false;
    while (lambda >= 1e-12) {
      const Eigen::VectorXd xn = x + lambda * step;
      const Eigen::VectorXd fnew = cs.residual(xn);
      if (fnew.norm() <= (1.0 - 1e-4 * lambda) * fn) {
        x = xn;
        f = fnew;
        fn = fnew.norm();
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) {
      res.failure = "line search stalled";
      res.iterations = iter;
      res.residual = fn;
      res.solution = cs.ambient(x);
      return res;
    }
    if (x.norm() > 1e8) {
      res.failure = "diverged";
      res.iterations = iter;
      res.residual = fn;
      res.solution = cs.ambient(x);
      return res;
    }
  }
  res.failure = fn < tol ? "" : "max iterations exceeded";
  res.converged = fn < tol;
  res.residual = fn;
  res.solution = cs.ambient(x);
  return res;
}

}  // namespace

NewtonResult newton_refine(const RealPolynomialSystem& sys, const Eigen::VectorXd& start,
                           int max_iter, double tol) {
  const CompiledSystem cs(sys);
  Eigen::VectorXd x7(7);
  if (start.size() == 7) {
    x7 = start;
  } else if (start.size() == 8) {
    const double chart_value = start[sys.chart_var];
    if (std::abs(chart_value) < 1e-12) {
      NewtonResult res;
      res.failure = "degenerate start: chart coordinate is zero";
      res.solution = start;
      return res;
    }
    const Eigen::VectorXd scaled = start / chart_value;
    for (int i = 0; i < 7; ++i) x7[i] = scaled[sys.active_vars[i]];
  } else {
    throw std::invalid_argument("newton_refine: start must have 7 or 8 entries");
  }
  return run_newton(cs, x7, max_iter, tol);
}

HessianResult hessian_signature(const CartanPoint& p, Invariant inv, double zero_tol_rel) {
  const double nrm = p.norm();
  if (!(nrm > 0)) throw std::invalid_argument("hessian_signature: zero point");
  CartanPoint u = phase_fix_f_real(CartanPoint(p / nrm), inv);

  if (tangential_residual(u, inv, Sphere::S7) > kStationaryTolS7)
    throw std::invalid_argument("hessian_signature: point is not stationary");
  if (!(u[0].real() > kChartTol))
    throw std::invalid_argument("hessian_signature: chart invalid (first coordinate <= 0)");

  const CartanDerivs& d = cartan_derivs(inv);
  const Complex value = evalz(d.f, u);
  if (std::abs(value) < kVanishingTol)
    throw std::invalid_argument("hessian_signature: invariant vanishes at the point");

  std::array<Complex, 4> f1;
  std::array<std::array<Complex, 4>, 4> f2;
  for (int i = 0; i < 4; ++i) f1[i] = evalz(d.d1[i], u);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f2[i][j] = evalz(d.d2[i][j], u);

  // Gradient and Hessian of |f|^2 over the eight real coordinates, from the
  // holomorphic derivatives: d/dx_j ~ f'_j, d/dy_j ~ i f'_j.
  const Complex iu(0.0, 1.0);
  auto sfac = [&](int v) { return v % 2 ? iu : Complex(1.0); };
  Eigen::VectorXd x(8), g8(8);
  Eigen::MatrixXd h8(8, 8);
  std::array<Complex, 8> df;
  for (int v = 0; v < 8; ++v) {
    df[v] = sfac(v) * f1[v / 2];
    g8[v] = 2.0 * (std::conj(value) * df[v]).real();
    x[v] = v % 2 ? u[v / 2].imag() : u[v / 2].real();
  }
  for (int v = 0; v < 8; ++v)
    for (int w = 0; w < 8; ++w) {
      const Complex second = sfac(v) * sfac(w) * f2[v / 2][w / 2];
      h8(v, w) = 2.0 * (std::conj(df[w]) * df[v] + std::conj(value) * second).real();
    }

  // Chart with the first real coordinate solved from the unit constraint.
  const double s0 = x[0];
  Eigen::MatrixXd hc(7, 7);
  for (int b = 1; b < 8; ++b) {
    const double dsb = -x[b] / s0;
    for (int c = 1; c < 8; ++c) {
      const double dsc = -x[c] / s0;
      const double d2s = -(b == c ? 1.0 / s0 : 0.0) - x[b] * x[c] / (s0 * s0 * s0);
      hc(b - 1, c - 1) = h8(0, 0) * dsb * dsc + h8(0, c) * dsb + h8(b, 0) * dsc +
                         h8(b, c) + g8[0] * d2s;
    }
  }
  hc = ((hc + hc.transpose()) / 2.0).eval();
  hc /= 2.0 * std::abs(value);  // H(|f|^2) = 2|f| H(|f|) at a stationary point

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hc);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hessian_signature: eigensolver failed");

  HessianResult out;
  out.eigenvalues = es.eigenvalues();
  const double scale = out.eigenvalues.cwiseAbs().maxCoeff();
  const double zero_tol = zero_tol_rel * std::max(scale, 1e-300);
  for (int i = 0; i < 7; ++i) {
    const double ev = out.eigenvalues[i];
    if (std::abs(ev) < zero_tol)
      ++out.signature[1];
    else if (ev < 0)
      ++out.signature[0];
    else
      ++out.signature[2];
  }
  return out;
}

StationaryReport verify_point(const CartanPoint& p, Invariant inv, double tol_s7,
                              double tol_s15) {
  const double nrm = p.norm();
  if (!(nrm > 0)) throw std::invalid_argument("verify_point: zero point");
  const CartanPoint u = phase_fix_f_real(CartanPoint(p / nrm), inv);

  StationaryReport r;
  r.point = u;
  r.invariant = inv;
  r.residual_s7 = tangential_residual(u, inv, Sphere::S7);
  r.residual_s15 = tangential_residual(u, inv, Sphere::S15);
  r.value = std::abs(evalz(cartan_derivs(inv).f, u));
  r.stationary = r.residual_s7 < tol_s7 && r.residual_s15 < tol_s15;
  if (r.stationary && r.value > kVanishingTol) {
    try {
      const CartanPoint at = u[0].real() > kChartTol ? u : chart_representative(u, inv);
      const HessianResult h = hessian_signature(at, inv);
      r.has_hessian = true;
      r.hessian_eigenvalues = h.eigenvalues;
      r.signature = h.signature;
    } catch (const std::exception&) {
      r.has_hessian = false;
    }
  }
  return r;
}

namespace {

// Newton refinement for the algebraically defined catalog entries. The
// printed approximate coordinates seed the iteration; if a second distinct
// root of the defining system lies within 0.05 of the seed, refuse to guess.
Eigen::VectorXd refine_algebraic(const std::vector<RPoly>& eqs, const Eigen::VectorXd& seed) {
  const int k = int(seed.size());
  for (const RPoly& e : eqs)
    if (e.nvars() != k) throw std::invalid_argument("refine_algebraic: variable mismatch");
  if (int(eqs.size()) != k)
    throw std::invalid_argument("refine_algebraic: system must be square");

  std::vector<std::vector<RPoly>> jac(k, std::vector<RPoly>(k, RPoly(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) jac[i][j] = eqs[i].derivative(j);

  // Converge on step size: the equations carry integer coefficients in the
  // thousands, so their residual floors above 1e-14 while the root itself is
  // determined to full precision.
  auto newton_from = [&](Eigen::VectorXd x) -> std::optional<Eigen::VectorXd> {
    for (int iter = 0; iter < 200; ++iter) {
      Eigen::VectorXd f(k);
      for (int i = 0; i < k; ++i)
        f[i] = eqs[i].eval(std::span<const double>(x.data(), std::size_t(k)));
      Eigen::MatrixXd j(k, k);
      for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c)
          j(i, c) = jac[i][c].eval(std::span<const double>(x.data(), std::size_t(k)));
      Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
      if (!lu.isInvertible()) return std::nullopt;
      const Eigen::VectorXd step = lu.solve(-f);
      x += step;
      if (step.cwiseAbs().maxCoeff() < 1e-14) return x;
      if (x.norm() > 1e3) return std::nullopt;
    }
    return std::nullopt;
  };

  std::vector<Eigen::VectorXd> roots;
  std::vector<int> offsets(k, 0);
  const int probes = 1;
  for (int mask = 0; mask < (probes * 2 + 1) * ((k >= 2) ? (probes * 2 + 1) : 1) *
                                ((k >= 3) ? (probes * 2 + 1) : 1);
       ++mask) {
    Eigen::VectorXd start = seed;
    int rem = mask;
    for (int v = 0; v < k; ++v) {
      const int o = rem % (2 * probes + 1) - probes;
      rem /= 2 * probes + 1;
      start[v] += 0.02 * o;
    }
    const auto root = newton_from(start);
    if (!root) continue;
    if ((*root - seed).cwiseAbs().maxCoeff() > 0.05) continue;
    bool fresh = true;
    for (const auto& r : roots)
      if ((*root - r).norm() < 1e-8) fresh = false;
    if (fresh) roots.push_back(*root);
  }
  if (roots.empty())
    throw std::runtime_error("refine_algebraic: no root near the printed seed");
  if (roots.size() > 1)
    throw std::runtime_error("refine_algebraic: ambiguous roots near the printed seed");
  return roots.front();
}

CartanPoint c4(Complex a, Complex b, Complex c, Complex d) {
  CartanPoint z;
  z << a, b, c, d;
  return z;
}

std::vector<CartanPoint> f3_points() {
  const Complex i(0.0, 1.0);
  const double rt2 = std::sqrt(2.0), rt3 = std::sqrt(3.0), rt6 = std::sqrt(6.0);
  const double rt7 = std::sqrt(7.0), rt203 = std::sqrt(203.0);
  const auto eip = [](double t) { return std::polar(1.0, t); };
  using std::numbers::pi;

  std::vector<CartanPoint> pts;
  pts.push_back(c4(1, 0, 0, 0));
  pts.push_back(c4(1, 1, 0, 0));
  pts.push_back(c4(1, 1, 1, 0));
  pts.push_back(c4(2, 1, 1, 0));
  pts.push_back(c4(rt2, i, 0, 0));
  pts.push_back(c4(rt2, i, i, 0));
  pts.push_back(c4(rt2, i, i, i));
  pts.push_back(c4(rt3, i, i, i));
  pts.push_back(c4(1, eip(pi / 3), eip(2 * pi / 3), 0));
  pts.push_back(c4(rt2, rt2 - rt3 + i, rt3 - rt2 + i, (rt6 - 2.0) * i));
  pts.push_back(c4(7, 2 * rt7 * i, 2 * rt7 * i, 0));
  pts.push_back(c4(18, 11.0 - rt203 * i, 7.0 + rt203 * i, 0));

  {  // (1, a+bi, -a-bi, 0)
    const RPoly a = RPoly::variable(2, 0), b = RPoly::variable(2, 1);
    std::vector<RPoly> eqs = {
        1000.0 * a.pow(2) * b.pow(2) - 872.0 * b.pow(4) + 85.0 * a.pow(2) +
            345.0 * b.pow(2) - RPoly::constant(2, 7.0),
        100.0 * a.pow(4) - 244.0 * b.pow(4) + 45.0 * a.pow(2) + 65.0 * b.pow(2) +
            RPoly::constant(2, 11.0)};
    Eigen::Vector2d seed(0.0933, 0.622);
    const Eigen::VectorXd r = refine_algebraic(eqs, seed);
    pts.push_back(c4(1, r[0] + r[1] * i, -r[0] - r[1] * i, 0));
  }
  {  // (1, a-bi, a+bi, ci)
    const RPoly a = RPoly::variable(3, 0), b = RPoly::variable(3, 1),
                c = RPoly::variable(3, 2);
    std::vector<RPoly> eqs = {
        5.0 * a.pow(4) * c - 30.0 * a.pow(2) * b.pow(2) * c + 5.0 * b.pow(4) * c -
            5.0 * a.pow(2) * c.pow(3) + 5.0 * b.pow(2) * c.pow(3) + 2.0 * c.pow(5) +
            5.0 * a.pow(2) * c - 5.0 * b.pow(2) * c - 5.0 * c.pow(3) + 2.0 * c,
        10.0 * a.pow(4) * b - 40.0 * a.pow(2) * b.pow(3) + 14.0 * b.pow(5) -
            15.0 * a.pow(2) * b * c.pow(2) + 5.0 * b.pow(3) * c.pow(2) +
            5.0 * b * c.pow(4) + 25.0 * a.pow(2) * b - 15.0 * b.pow(3) -
            5.0 * b * c.pow(2) + 4.0 * b,
        4.0 * a.pow(5) + 20.0 * a.pow(3) * b.pow(2) - 5.0 * a.pow(3) * c.pow(2) +
            15.0 * a * b.pow(2) * c.pow(2) - 5.0 * a.pow(3) - 5.0 * a * b.pow(2) +
            5.0 * a * c.pow(2) + a};
    Eigen::Vector3d seed(0.217, 0.830, 0.366);
    const Eigen::VectorXd r = refine_algebraic(eqs, seed);
    pts.push_back(c4(1, r[0] - r[1] * i, r[0] + r[1] * i, r[2] * i));
  }
  return pts;
}

std::vector<CartanPoint> f4_points() {
  const Complex i(0.0, 1.0);
  const double rt13 = std::sqrt(13.0), rt20 = std::sqrt(20.0), rt33 = std::sqrt(33.0);
  const auto eip = [](double t) { return std::polar(1.0, t); };
  using std::numbers::pi;

  std::vector<CartanPoint> pts;
  pts.push_back(c4(1, 0, 0, 0));
  pts.push_back(c4(1, 1, 0, 0));
  pts.push_back(c4(1, 1, 1, 0));
  pts.push_back(c4(2, 1, 1, 0));
  pts.push_back(c4(1, i, 0, 0));
  pts.push_back(c4(1, i, eip(-pi / 4), eip(pi / 4)));
  pts.push_back(c4(rt33, rt33, rt13 - rt20 * i, rt13 - rt20 * i));

  auto univariate = [&](std::initializer_list<double> coeffs_desc, int degree_step,
                        double seed_value) {
    // polynomial sum_k coeffs[k] * a^{(n-k)*2} given in descending even powers
    const RPoly a = RPoly::variable(1, 0);
    RPoly p(1);
    int e = (int(coeffs_desc.size()) - 1) * degree_step;
    for (double c : coeffs_desc) {
      p += c * a.pow(e);
      e -= degree_step;
    }
    Eigen::VectorXd seed(1);
    seed[0] = seed_value;
    const std::vector<RPoly> eqs = {p};
    return refine_algebraic(eqs, seed)[0];
  };

  {  // (1, ai, ai, 0) with 80a^6 - 91a^4 + 77a^2 - 10 = 0
    const double a = univariate({80, -91, 77, -10}, 2, 0.393);
    pts.push_back(c4(1, a * i, a * i, 0));
  }
  {  // (1, ai, ai, ai) with 75a^6 - 63a^4 + 49a^2 - 5 = 0
    const double a = univariate({75, -63, 49, -5}, 2, 0.342);
    pts.push_back(c4(1, a * i, a * i, a * i));
  }
  {  // (1, 1/2 + ai, 1/2 - ai, 0) with 640a^6 - 1232a^4 + 2016a^2 - 465 = 0
    const double a = univariate({640, -1232, 2016, -465}, 2, 0.518);
    pts.push_back(c4(1, 0.5 + a * i, 0.5 - a * i, 0));
  }
  {  // (1, ai, b, 0)
    const RPoly a = RPoly::variable(2, 0), b = RPoly::variable(2, 1);
    std::vector<RPoly> eqs = {
        35.0 * a.pow(4) - 21.0 * a.pow(2) * b.pow(2) - 4.0 * b.pow(4) -
            21.0 * a.pow(2) - 18.0 * b.pow(2) - RPoly::constant(2, 4.0),
        190.0 * a.pow(2) * b.pow(4) - 110.0 * b.pow(6) - 237.0 * a.pow(2) * b.pow(2) -
            339.0 * b.pow(4) + 190.0 * a.pow(2) - 339.0 * b.pow(2) -
            RPoly::constant(2, 110.0)};
    Eigen::Vector2d seed(0.920, 0.302);
    const Eigen::VectorXd r = refine_algebraic(eqs, seed);
    pts.push_back(c4(1, r[0] * i, r[1], 0));
  }
  {  // (1, ai, b, b)
    const RPoly a = RPoly::variable(2, 0), b = RPoly::variable(2, 1);
    std::vector<RPoly> eqs = {
        35.0 * a.pow(4) - 21.0 * a.pow(2) * b.pow(2) + 52.0 * b.pow(4) -
            21.0 * a.pow(2) + 3.0 * b.pow(2) - RPoly::constant(2, 4.0),
        587.0 * a.pow(2) * b.pow(4) + 446.0 * b.pow(6) - 918.0 * a.pow(2) * b.pow(2) +
            129.0 * b.pow(4) + 475.0 * a.pow(2) - 732.0 * b.pow(2) -
            RPoly::constant(2, 275.0)};
    Eigen::Vector2d seed(0.879, 0.256);
    const Eigen::VectorXd r = refine_algebraic(eqs, seed);
    pts.push_back(c4(1, r[0] * i, r[1], r[1]));
  }
  {  // (1, a+bi, a+bi, 0)
    const RPoly a = RPoly::variable(2, 0), b = RPoly::variable(2, 1);
    std::vector<RPoly> eqs = {
        2696.0 * a.pow(6) - 24472.0 * a.pow(2) * b.pow(4) + 7792.0 * b.pow(6) -
            161.0 * a.pow(4) - 2030.0 * a.pow(2) * b.pow(2) - 4221.0 * b.pow(4) +
            679.0 * a.pow(2) + 1659.0 * b.pow(2) + RPoly::constant(2, 26.0),
        94360.0 * a.pow(4) * b.pow(2) - 213584.0 * a.pow(2) * b.pow(4) +
            51096.0 * b.pow(6) + 3437.0 * a.pow(4) + 2310.0 * a.pow(2) * b.pow(2) -
            29687.0 * b.pow(4) + 1505.0 * a.pow(2) + 13405.0 * b.pow(2) -
            RPoly::constant(2, 262.0)};
    Eigen::Vector2d seed(0.347, 0.716);
    const Eigen::VectorXd r = refine_algebraic(eqs, seed);
    pts.push_back(c4(1, r[0] + r[1] * i, r[0] + r[1] * i, 0));
  }
  return pts;
}

}  // namespace

std::vector<CartanPoint> known_points(Invariant inv) {
  if (inv == Invariant::F3) {
    static const std::vector<CartanPoint> pts = f3_points();
    return pts;
  }
  if (inv == Invariant::F4) {
    static const std::vector<CartanPoint> pts = f4_points();
    return pts;
  }
  throw std::invalid_argument("known_points: catalog covers F3 and F4 only");
}

std::vector<std::string> known_point_names(Invariant inv) {
  std::vector<std::string> names;
  if (inv == Invariant::F3) {
    for (int k = 1; k <= 14; ++k) names.push_back("phi" + std::to_string(k));
    return names;
  }
  if (inv == Invariant::F4) {
    for (int k = 1; k <= 13; ++k) names.push_back("psi" + std::to_string(k));
    return names;
  }
  throw std::invalid_argument("known_point_names: catalog covers F3 and F4 only");
}

std::vector<CatalogRow> stationary_catalog() {
  const std::vector<CartanPoint> f3 = known_points(Invariant::F3);
  const std::vector<std::string> f3_names = known_point_names(Invariant::F3);
  const std::vector<CartanPoint> f4 = known_points(Invariant::F4);
  const std::vector<std::string> f4_names = known_point_names(Invariant::F4);

  std::vector<CatalogRow> rows;
  auto add_row = [&](const std::string& name, const CartanPoint& p) {
    CatalogRow row;
    row.name = name;
    row.point = p;
    row.fp = fingerprint(p);
    int k = 0;
    for (Invariant inv : {Invariant::F3, Invariant::F4, Invariant::F6})
      row.reports[k++] = verify_point(p, inv);
    rows.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < f3.size(); ++i) add_row(f3_names[i], f3[i]);
  for (std::size_t i = 4; i < f4.size(); ++i) add_row(f4_names[i], f4[i]);
  return rows;
}

namespace {

struct Candidate {
  CartanPoint point;
  InvariantFingerprint fp;
};

}  // namespace

std::vector<StationaryReport> multistart_search(Invariant inv, int n_starts,
                                                std::uint64_t seed, int workers) {
  if (inv != Invariant::F3 && inv != Invariant::F4)
    throw std::invalid_argument("multistart_search: search covers F3 and F4 only");
  if (n_starts < 0) throw std::invalid_argument("multistart_search: negative start count");
  if (n_starts == 0) return {};

  std::vector<CompiledSystem> systems;
  systems.reserve(8);
  for (int chart = 0; chart < 8; ++chart)
    systems.emplace_back(build_lagrange_system(inv, chart));

  std::vector<std::optional<Candidate>> found(n_starts);
  std::atomic<int> cursor{0};
  const int n_workers =
      workers > 0 ? workers
                  : std::max(1, int(std::min(8u, std::thread::hardware_concurrency())));

  auto work = [&] {
    constexpr int kBatch = 32;
    while (true) {
      const int begin = cursor.fetch_add(kBatch);
      if (begin >= n_starts) return;
      const int end = std::min(begin + kBatch, n_starts);
      for (int idx = begin; idx < end; ++idx) {
        SplitMix64 rng(seed, std::uint64_t(idx));
        const int chart = idx % 8;
        Eigen::VectorXd x7(7);
        for (int v = 0; v < 7; ++v) x7[v] = rng.uniform(-2.0, 2.0);
        const NewtonResult nr = run_newton(systems[chart], x7, 100, 1e-12);
        if (!nr.converged) continue;
        CartanPoint z;
        for (int j = 0; j < 4; ++j) z[j] = Complex(nr.solution[2 * j], nr.solution[2 * j + 1]);
        const double nrm = z.norm();
        if (!(nrm > 1e-8)) continue;
        z /= nrm;
        z = phase_fix_f_real(z, inv);
        const double value = std::abs(evalz(cartan_derivs(inv).f, z));
        if (value < kVanishingTol) continue;
        if (tangential_residual(z, inv, Sphere::S7) > 1e-8) continue;
        if (tangential_residual(z, inv, Sphere::S15) > 1e-7) continue;
        found[idx] = Candidate{z, fingerprint(z)};
      }
    }
  };

  if (n_workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Deduplicate in start order so the class list is independent of the
  // thread schedule.
  std::vector<StationaryReport> classes;
  std::vector<InvariantFingerprint> fps;
  for (int idx = 0; idx < n_starts; ++idx) {
    if (!found[idx]) continue;
    const Candidate& cand = *found[idx];
    bool fresh = true;
    for (const auto& fp : fps)
      if (cand.fp.max_difference(fp) < kDedupTol) {
        fresh = false;
        break;
      }
    if (!fresh) continue;
    fps.push_back(cand.fp);
    const CartanPoint canonical = canonicalize(cand.point);
    classes.push_back(verify_point(canonical, inv));
  }
  return classes;
}

}  // namespace quartet
