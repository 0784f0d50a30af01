#include "quartet/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quartet {

namespace {

const Eigen::Matrix4cd& jj_matrix() {
  static const Eigen::Matrix4cd k = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = 1;
    m(1, 2) = -1;
    m(2, 1) = -1;
    m(3, 0) = 1;
    return m;
  }();
  return k;
}

Eigen::Matrix4cd cofactor_transpose(const Eigen::Matrix4cd& m) {
  // adj(m)^T: entry (i,j) is the signed 3x3 minor obtained by deleting
  // row i and column j, so that d(det)/dm_ij = cof(i,j).
  Eigen::Matrix4cd cof;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Eigen::Matrix3cd sub;
      int rr = 0;
      for (int r = 0; r < 4; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < 4; ++c) {
          if (c == j) continue;
          sub(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      cof(i, j) = sign * sub.determinant();
    }
  }
  return cof;
}

}  // namespace

Invariant invariant_from_name(std::string_view name) {
  if (name == "F1") return Invariant::F1;
  if (name == "F3") return Invariant::F3;
  if (name == "F4") return Invariant::F4;
  if (name == "F6") return Invariant::F6;
  throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
}

std::string_view invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::F1: return "F1";
    case Invariant::F3: return "F3";
    case Invariant::F4: return "F4";
    case Invariant::F6: return "F6";
  }
  throw std::logic_error("invariant_name: bad enum");
}

int invariant_degree(Invariant inv) {
  switch (inv) {
    case Invariant::F1: return 2;
    case Invariant::F3: return 6;
    case Invariant::F4: return 8;
    case Invariant::F6: return 12;
  }
  throw std::logic_error("invariant_degree: bad enum");
}

EValues eval_E(const CartanPoint& z) {
  EValues e;
  e.e0 = z[0] * z[1] * z[2] * z[3];
  e.e1 = e.e2 = e.e3 = 0;
  for (int i = 0; i < 4; ++i) {
    const Complex z2 = z[i] * z[i];
    e.e1 += z2;
    e.e2 += z2 * z2;
    e.e3 += z2 * z2 * z2;
  }
  return e;
}

GValues eval_G(const PureState& s) {
  const Flattening4x4 m = flatten(s);
  const Eigen::Matrix4cd& k = jj_matrix();
  const Eigen::Matrix4cd b = m * k * m.transpose() * k;
  GValues g;
  g.g0 = m.determinant();
  g.g1 = b.trace();
  const Eigen::Matrix4cd b2 = b * b;
  g.g2 = b2.trace();
  g.g3 = (b2 * b).trace();
  return g;
}

std::array<Eigen::Matrix4cd, 4> eval_G_gradients(const Flattening4x4& m) {
  const Eigen::Matrix4cd& k = jj_matrix();
  const Eigen::Matrix4cd b = m * k * m.transpose() * k;
  std::array<Eigen::Matrix4cd, 4> out;
  out[0] = cofactor_transpose(m);
  // d tr(B^p)/dM = p [ (K M^T K B^{p-1})^T + K B^{p-1} M K ]
  Eigen::Matrix4cd bpow = Eigen::Matrix4cd::Identity();
  for (int p = 1; p <= 3; ++p) {
    out[p] = double(p) * ((k * m.transpose() * k * bpow).transpose() + k * bpow * m * k);
    bpow = bpow * b;  // after the p-th pass, bpow = B^p
  }
  return out;
}

namespace {

// F_k as polynomials in (e0, e1, e2, e3).
CPoly build_f_in_e(Invariant inv) {
  const CPoly e0 = CPoly::variable(4, 0);
  const CPoly e1 = CPoly::variable(4, 1);
  const CPoly e2 = CPoly::variable(4, 2);
  const CPoly e3 = CPoly::variable(4, 3);
  using C = Complex;
  switch (inv) {
    case Invariant::F1:
      return C(6) * e1;
    case Invariant::F3:
      return C(30) * e1 * e2 - C(24) * e3;
    case Invariant::F4:
      return C(-20) * e1.pow(4) + C(120) * e1.pow(2) * e2 + C(480) * e0.pow(2) +
             C(10) * e2.pow(2) - C(104) * e1 * e3;
    case Invariant::F6:
      return C(-148) * e1.pow(6) + C(565) * e1.pow(4) * e2 +
             C(5460) * e0.pow(2) * e1.pow(2) + C(540) * e1.pow(2) * e2.pow(2) -
             C(570) * e1.pow(3) * e3 + C(2160) * e0.pow(2) * e2 - C(15) * e2.pow(3) -
             C(610) * e1 * e2 * e3 + C(244) * e3.pow(2);
  }
  throw std::logic_error("build_f_in_e: bad enum");
}

}  // namespace

const CPoly& f_in_e_poly(Invariant inv) {
  static const std::array<CPoly, 4> polys = {
      build_f_in_e(Invariant::F1), build_f_in_e(Invariant::F3),
      build_f_in_e(Invariant::F4), build_f_in_e(Invariant::F6)};
  return polys[std::size_t(inv)];
}

FValues f_from_e(const EValues& e) {
  const std::array<Complex, 4> x = {e.e0, e.e1, e.e2, e.e3};
  FValues f;
  f.f1 = f_in_e_poly(Invariant::F1).eval(std::span<const Complex>(x));
  f.f3 = f_in_e_poly(Invariant::F3).eval(std::span<const Complex>(x));
  f.f4 = f_in_e_poly(Invariant::F4).eval(std::span<const Complex>(x));
  f.f6 = f_in_e_poly(Invariant::F6).eval(std::span<const Complex>(x));
  return f;
}

FValues eval_F_cartan(const CartanPoint& z) {
  FValues f{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Complex d = z[i] - z[j];
      const Complex s = z[i] + z[j];
      const Complex d2 = d * d, s2 = s * s;
      Complex dp = d2, sp = s2;  // running (z_i -+ z_j)^{2k}
      f.f1 += dp + sp;
      dp *= d2 * d2;
      sp *= s2 * s2;
      f.f3 += dp + sp;
      dp *= d2;
      sp *= s2;
      f.f4 += dp + sp;
      dp *= d2 * d2;
      sp *= s2 * s2;
      f.f6 += dp + sp;
    }
  }
  return f;
}

FValues eval_F_full(const PureState& s) {
  const GValues g = eval_G(s);
  return f_from_e(EValues{g.g0, g.g1, g.g2, g.g3});
}

const CPoly& restricted_invariant_poly(Invariant inv) {
  static const std::array<CPoly, 4> polys = [] {
    std::array<CPoly, 4> out;
    const std::array<int, 4> exps = {2, 6, 8, 12};
    for (int k = 0; k < 4; ++k) {
      CPoly f(4);
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          const CPoly zi = CPoly::variable(4, i);
          const CPoly zj = CPoly::variable(4, j);
          f += (zi - zj).pow(exps[k]) + (zi + zj).pow(exps[k]);
        }
      }
      out[k] = f;
    }
    return out;
  }();
  return polys[std::size_t(inv)];
}

Complex eval_hdet_cartan(const CartanPoint& z) {
  Complex prod = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Complex d = z[i] * z[i] - z[j] * z[j];
      prod *= d * d;
    }
  return prod;
}

Complex eval_hdet_from_generators(const PureState& s) {
  const GValues g = eval_G(s);
  const FValues f = f_from_e(EValues{g.g0, g.g1, g.g2, g.g3});
  const Complex g1 = f.f1 / 6.0;

  struct Term {
    double coef;
    int a, b, c, d;  // exponents of g1, f3, f4, f6
  };
  static constexpr Term terms[] = {
      {-23794560, 12, 0, 0, 0}, {14450400, 9, 1, 0, 0}, {-6828300, 8, 0, 1, 0},
      {-2211120, 6, 2, 0, 0},   {2043360, 5, 1, 1, 0},  {563760, 6, 0, 0, 1},
      {5376, 3, 3, 0, 0},       {-484380, 4, 0, 2, 0},  {6552, 2, 2, 1, 0},
      {-172800, 3, 1, 0, 1},    {-40, 0, 4, 0, 0},      {-5832, 1, 1, 2, 0},
      {81000, 2, 0, 1, 1},      {729, 0, 0, 3, 0},      {720, 0, 2, 0, 1},
      {-3240, 0, 0, 0, 2},
  };

  auto cpow = [](Complex base, int e) {
    Complex r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };

  // The coefficients span eight orders of magnitude; accumulate in long
  // double with Neumaier compensation to keep the cancellation clean.
  std::complex<long double> sum = 0, comp = 0;
  for (const Term& t : terms) {
    const Complex v =
        t.coef * cpow(g1, t.a) * cpow(f.f3, t.b) * cpow(f.f4, t.c) * cpow(f.f6, t.d);
    const std::complex<long double> x(v.real(), v.imag());
    const std::complex<long double> s1 = sum + x;
    auto piece = [](long double a, long double b, long double s) {
      return std::abs(a) >= std::abs(b) ? (a - s) + b : (b - s) + a;
    };
    comp += std::complex<long double>(piece(sum.real(), x.real(), s1.real()),
                                      piece(sum.imag(), x.imag(), s1.imag()));
    sum = s1;
  }
  sum += comp;
  const long double prefactor = 1.0L / 314928000.0L;
  return Complex(double(sum.real() * prefactor), double(sum.imag() * prefactor));
}

double InvariantFingerprint::max_difference(const InvariantFingerprint& o) const {
  double d = std::abs(f1 - o.f1);
  d = std::max(d, std::abs(f3 - o.f3));
  d = std::max(d, std::abs(f4 - o.f4));
  d = std::max(d, std::abs(f6 - o.f6));
  return d;
}

InvariantFingerprint fingerprint(const PureState& s, bool with_hdet) {
  const PureState u = s.normalized();
  const FValues f = eval_F_full(u);
  InvariantFingerprint fp;
  fp.f1 = std::abs(f.f1);
  fp.f3 = std::abs(f.f3);
  fp.f4 = std::abs(f.f4);
  fp.f6 = std::abs(f.f6);
  if (with_hdet) fp.hdet = std::abs(eval_hdet_from_generators(u));
  return fp;
}

InvariantFingerprint fingerprint(const CartanPoint& z, bool with_hdet) {
  const double nrm = z.norm();
  if (!(nrm > 0)) throw std::invalid_argument("fingerprint: zero point");
  const CartanPoint u = z / nrm;
  const FValues f = eval_F_cartan(u);
  InvariantFingerprint fp;
  fp.f1 = std::abs(f.f1);
  fp.f3 = std::abs(f.f3);
  fp.f4 = std::abs(f.f4);
  fp.f6 = std::abs(f.f6);
  if (with_hdet) fp.hdet = std::abs(eval_hdet_cartan(u));
  return fp;
}

}  // namespace quartet
