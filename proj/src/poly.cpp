#include "quartet/poly.hpp"

namespace quartet {

namespace {

// Pascal's triangle, enough for the degree-12 invariants.
constexpr int kMaxBinom = 32;

double binom(int n, int k) {
  static const auto table = [] {
    std::array<std::array<double, kMaxBinom>, kMaxBinom> t{};
    for (int i = 0; i < kMaxBinom; ++i) {
      t[i][0] = 1.0;
      for (int j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0.0);
    }
    return t;
  }();
  return table[n][k];
}

}  // namespace

std::pair<RPoly, RPoly> real_imag_parts(const CPoly& p) {
  const int k = p.nvars();
  if (2 * k > CPoly::kMaxVars)
    throw std::invalid_argument("real_imag_parts: too many variables");
  CPoly expanded(2 * k);  // complex coefficients over real monomials
  const std::complex<double> iu(0.0, 1.0);
  for (const auto& [e, c] : p.terms()) {
    // Expand c * prod_j (x_j + i y_j)^{e_j} by binomials.
    CPoly term = CPoly::constant(2 * k, c);
    for (int j = 0; j < k; ++j) {
      const int a = e[j];
      if (a == 0) continue;
      CPoly factor(2 * k);
      std::complex<double> ipow(1.0, 0.0);
      for (int m = 0; m <= a; ++m) {  // sum_m C(a,m) x^{a-m} (i y)^m
        CPoly::Exponents ex{};
        ex[2 * j] = std::uint8_t(a - m);
        ex[2 * j + 1] = std::uint8_t(m);
        factor.add_term(ex, binom(a, m) * ipow);
        ipow *= iu;
      }
      term = term * factor;
    }
    expanded += term;
  }
  RPoly re(2 * k), im(2 * k);
  for (const auto& [e, c] : expanded.terms()) {
    if (c.real() != 0.0) re.add_term(e, c.real());
    if (c.imag() != 0.0) im.add_term(e, c.imag());
  }
  return {re, im};
}

}  // namespace quartet
