#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace quartet {

// Sparse multivariate polynomial in up to 8 variables.
//
// Terms are kept in a map keyed by the exponent vector, so the internal
// representation is canonical and arithmetic is deterministic. Coefficients
// are double or complex<double>; all polynomials built in this project have
// exact integer coefficients, which both types represent exactly.
template <class Coef>
class Poly {
 public:
  static constexpr int kMaxVars = 8;
  using Exponents = std::array<std::uint8_t, kMaxVars>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(check_nvars(nvars)) {}

  static Poly constant(int nvars, const Coef& c) {
    Poly p(nvars);
    if (c != Coef{}) p.terms_[Exponents{}] = c;
    return p;
  }

  static Poly variable(int nvars, int index, const Coef& scale = Coef(1)) {
    Poly p(nvars);
    if (index < 0 || index >= nvars) throw std::out_of_range("Poly: variable index");
    Exponents e{};
    e[index] = 1;
    if (scale != Coef{}) p.terms_[e] = scale;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Coef>& terms() const { return terms_; }

  int total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int v = 0; v < nvars_; ++v) d += e[v];
      deg = std::max(deg, d);
    }
    return deg;
  }

  int max_exponent() const {
    int m = 0;
    for (const auto& [e, c] : terms_)
      for (int v = 0; v < nvars_; ++v) m = std::max(m, int(e[v]));
    return m;
  }

  void add_term(const Exponents& e, const Coef& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != Coef{}) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == Coef{}) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Coef& s) {
    if (s == Coef{}) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Coef& s) { return a *= s; }
  friend Poly operator*(const Coef& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_vars(b);
    Poly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (int v = 0; v < kMaxVars; ++v) {
          int sum = int(ea[v]) + int(eb[v]);
          if (sum > 255) throw std::overflow_error("Poly: exponent overflow");
          e[v] = std::uint8_t(sum);
        }
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Poly pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly: negative power");
    Poly result = constant(nvars_, Coef(1));
    Poly base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  Poly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("Poly: derivative index");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      out.add_term(d, c * Coef(double(e[var])));
    }
    return out;
  }

  // Substitute x_var = 1 (drops the variable from every monomial).
  Poly set_to_one(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("Poly: substitution index");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[var] = 0;
      out.add_term(d, c);
    }
    return out;
  }

  // Evaluate at a point; X may be double or complex for real polynomials.
  template <class X>
  X eval(std::span<const X> x) const {
    if (int(x.size()) != nvars_) throw std::invalid_argument("Poly: eval dimension");
    const int maxdeg = max_exponent();
    // power table: pw[v][d] = x_v^d
    std::array<std::vector<X>, kMaxVars> pw;
    for (int v = 0; v < nvars_; ++v) {
      pw[v].resize(maxdeg + 1);
      pw[v][0] = X(1);
      for (int d = 1; d <= maxdeg; ++d) pw[v][d] = pw[v][d - 1] * x[v];
    }
    X acc{};
    for (const auto& [e, c] : terms_) {
      X m = X(c);
      for (int v = 0; v < nvars_; ++v)
        if (e[v]) m *= pw[v][e[v]];
      acc += m;
    }
    return acc;
  }

 private:
  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("Poly: nvars out of range");
    return n;
  }
  void require_same_vars(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mixed variable counts");
  }

  int nvars_ = 0;
  std::map<Exponents, Coef> terms_;
};

using RPoly = Poly<double>;
using CPoly = Poly<std::complex<double>>;

// Split a polynomial in complex variables z_1..z_k into real and imaginary
// parts as polynomials in the 2k real variables (x_1, y_1, ..., x_k, y_k),
// where z_j = x_j + i y_j. Integer coefficients stay integers.
std::pair<RPoly, RPoly> real_imag_parts(const CPoly& p);

}  // namespace quartet
