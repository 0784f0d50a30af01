#include <doctest.h>

#include <numbers>

#include "quartet/invariants.hpp"
#include "quartet/random.hpp"

using namespace quartet;

namespace {

CartanPoint c4(Complex a, Complex b, Complex c, Complex d) {
  CartanPoint z;
  z << a, b, c, d;
  return z;
}

double rel_diff(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

PureState random_separable(std::mt19937_64& rng) {
  std::array<Eigen::Vector2cd, 4> factors;
  for (auto& v : factors) v << gaussian_complex(rng), gaussian_complex(rng);
  PureState s = PureState::zero(4);
  for (int idx = 0; idx < 16; ++idx) {
    Complex amp = 1.0;
    for (int q = 0; q < 4; ++q) amp *= factors[q][(idx >> (3 - q)) & 1];
    s.amplitudes[idx] = amp;
  }
  return s;
}

}  // namespace

TEST_CASE("eval_E on simple points") {
  auto e = eval_E(c4(1, 1, 0, 0));
  CHECK(std::abs(e.e0 - 0.0) == 0.0);
  CHECK(std::abs(e.e1 - 2.0) < 1e-15);
  CHECK(std::abs(e.e2 - 2.0) < 1e-15);
  CHECK(std::abs(e.e3 - 2.0) < 1e-15);

  e = eval_E(c4(1, 0, 0, 0));
  CHECK(std::abs(e.e1 - 1.0) < 1e-15);
  CHECK(std::abs(e.e2 - 1.0) < 1e-15);
  CHECK(std::abs(e.e3 - 1.0) < 1e-15);

  const Complex i(0, 1);
  e = eval_E(c4(1, i, 0, 0));
  CHECK(std::abs(e.e1) < 1e-15);
  CHECK(std::abs(e.e2 - 2.0) < 1e-15);
  CHECK(std::abs(e.e3) < 1e-15);
}

TEST_CASE("restriction identity: G on embedded points equals E") {
  auto rng = seeded_engine(43);
  for (int rep = 0; rep < 1000; ++rep) {
    const CartanPoint z = random_cartan_point(rng, /*unit=*/false);
    const EValues e = eval_E(z);
    const GValues g = eval_G(cartan_embed(z));
    CHECK(rel_diff(e.e0, g.g0) < 1e-10);
    CHECK(rel_diff(e.e1, g.g1) < 1e-10);
    CHECK(rel_diff(e.e2, g.g2) < 1e-10);
    CHECK(rel_diff(e.e3, g.g3) < 1e-10);
  }
}

TEST_CASE("G vanishes on separable states; G1(GHZ) = 1") {
  auto rng = seeded_engine(47);
  for (int rep = 0; rep < 100; ++rep) {
    PureState s = random_separable(rng);
    s = s.normalized();
    const GValues g = eval_G(s);
    CHECK(std::abs(g.g0) < 1e-12);
    CHECK(std::abs(g.g1) < 1e-12);
    CHECK(std::abs(g.g2) < 1e-12);
    CHECK(std::abs(g.g3) < 1e-12);
    const FValues f = eval_F_full(s);
    CHECK(std::abs(f.f1) < 1e-12);
    CHECK(std::abs(f.f6) < 1e-11);
    CHECK(std::abs(eval_hdet_from_generators(s)) < 1e-12);
  }
  CHECK(std::abs(eval_G(named_state("GHZ")).g1 - 1.0) < 1e-14);
}

TEST_CASE("published invariant values on the Cartan subspace") {
  const double rt2 = std::sqrt(2.0);
  auto f = eval_F_cartan(c4(1 / rt2, 1 / rt2, 0, 0));
  CHECK(std::abs(f.f1) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(std::abs(f.f3) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(std::abs(f.f4) == doctest::Approx(16.5).epsilon(1e-12));
  CHECK(std::abs(f.f6) == doctest::Approx(64.125).epsilon(1e-12));

  f = eval_F_cartan(c4(1, 0, 0, 0));
  CHECK(std::abs(f.f1) == doctest::Approx(6.0));
  CHECK(std::abs(f.f3) == doctest::Approx(6.0));
  CHECK(std::abs(f.f4) == doctest::Approx(6.0));
  CHECK(std::abs(f.f6) == doctest::Approx(6.0));

  const Complex i(0, 1);
  f = eval_F_cartan(c4(std::sqrt(3.0), i, i, i) / std::sqrt(6.0));
  CHECK(std::abs(f.f1) < 1e-14);
  CHECK(std::abs(f.f3) == doctest::Approx(8.0 / 3.0));
  CHECK(std::abs(f.f4) < 1e-14);
  CHECK(std::abs(f.f6) == doctest::Approx(64.0 / 81.0));
}

TEST_CASE("two formulas for F agree on the Cartan subspace") {
  auto rng = seeded_engine(53);
  for (int rep = 0; rep < 1000; ++rep) {
    const CartanPoint z = random_cartan_point(rng, /*unit=*/false);
    const FValues direct = eval_F_cartan(z);
    const FValues via_e = f_from_e(eval_E(z));
    CHECK(rel_diff(direct.f1, via_e.f1) < 1e-10);
    CHECK(rel_diff(direct.f3, via_e.f3) < 1e-10);
    CHECK(rel_diff(direct.f4, via_e.f4) < 1e-10);
    CHECK(rel_diff(direct.f6, via_e.f6) < 1e-10);
  }
}

TEST_CASE("full-space values: table column entries") {
  auto fp = fingerprint(named_state("BSSB"), true);
  CHECK(fp.f1 < 1e-12);
  CHECK(fp.f3 < 1e-12);
  CHECK(fp.f4 == doctest::Approx(1.875).epsilon(1e-10));
  CHECK(fp.f6 < 1e-12);
  CHECK(*fp.hdet == doctest::Approx(1.0 / 65536.0).epsilon(1e-4));

  fp = fingerprint(named_state("C1"), true);
  CHECK(fp.f4 == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(fp.f6 == doctest::Approx(1.875).epsilon(1e-12));
}

TEST_CASE("SLOCC and permutation invariance of the full-space invariants") {
  auto rng = seeded_engine(59);
  for (int rep = 0; rep < 100; ++rep) {
    const PureState s = random_state(4, rng).normalized();
    const FValues base = eval_F_full(s);
    const PureState moved = apply_local(random_sl2_tuple(rng), s);
    const FValues after = eval_F_full(moved);
    CHECK(rel_diff(base.f1, after.f1) < 1e-9);
    CHECK(rel_diff(base.f3, after.f3) < 1e-9);
    CHECK(rel_diff(base.f4, after.f4) < 1e-9);
    CHECK(rel_diff(base.f6, after.f6) < 1e-9);
    const Complex h_base = eval_hdet_from_generators(s);
    const Complex h_after = eval_hdet_from_generators(moved);
    CHECK(rel_diff(h_base, h_after) < 1e-8);
  }

  // all 24 qubit permutations
  std::vector<int> perm = {0, 1, 2, 3};
  const PureState s = random_state(4, rng).normalized();
  const FValues base = eval_F_full(s);
  do {
    const FValues after = eval_F_full(permute_qubits(perm, s));
    CHECK(rel_diff(base.f1, after.f1) < 1e-11);
    CHECK(rel_diff(base.f3, after.f3) < 1e-11);
    CHECK(rel_diff(base.f4, after.f4) < 1e-11);
    CHECK(rel_diff(base.f6, after.f6) < 1e-11);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("Weyl invariance of E and restricted F") {
  auto rng = seeded_engine(61);
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>> weyl;
  do {
    for (int bits = 0; bits < 16; ++bits) {
      std::array<int, 4> sign;
      int prod = 1;
      for (int i = 0; i < 4; ++i) {
        sign[i] = (bits >> i) & 1 ? -1 : 1;
        prod *= sign[i];
      }
      if (prod == 1) weyl.push_back({perm, sign});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(weyl.size() == 192);

  for (int rep = 0; rep < 5; ++rep) {
    const CartanPoint z = random_cartan_point(rng);
    const EValues e = eval_E(z);
    const FValues f = eval_F_cartan(z);
    for (const auto& [p, s] : weyl) {
      SignedPermutation w;
      w.perm = p;
      w.sign = s;
      const CartanPoint img = apply_symmetry(w, z);
      const EValues ei = eval_E(img);
      const FValues fi = eval_F_cartan(img);
      CHECK(std::abs(e.e0 - ei.e0) < 1e-12);
      CHECK(std::abs(e.e1 - ei.e1) < 1e-12);
      CHECK(std::abs(e.e2 - ei.e2) < 1e-12);
      CHECK(std::abs(e.e3 - ei.e3) < 1e-12);
      CHECK(std::abs(f.f3 - fi.f3) < 1e-12);
      CHECK(std::abs(f.f6 - fi.f6) < 1e-11);
    }
  }
}

TEST_CASE("hyperdeterminant: product formula values") {
  const Complex i(0, 1);
  using std::numbers::pi;
  const CartanPoint hd = c4(1, std::polar(1.0, pi / 3), std::polar(1.0, 2 * pi / 3), 0) /
                         std::sqrt(3.0);
  CHECK(std::abs(eval_hdet_cartan(hd)) == doctest::Approx(1.0 / 19683.0).epsilon(1e-10));
  CHECK(std::abs(eval_hdet_cartan(c4(1, 1, 0, 0))) == 0.0);
  CHECK(std::abs(eval_hdet_cartan(c4(1, 0, 0, 0))) == 0.0);
}

TEST_CASE("hyperdeterminant: generator expression agrees with the product formula") {
  auto rng = seeded_engine(67);
  for (int rep = 0; rep < 1000; ++rep) {
    const CartanPoint z = random_cartan_point(rng);  // unit norm
    const Complex direct = eval_hdet_cartan(z);
    const Complex via_gens = eval_hdet_from_generators(cartan_embed(z));
    CHECK(std::abs(direct - via_gens) < 1e-8 * std::max(1.0, std::abs(direct)));
  }
  CHECK(std::abs(eval_hdet_from_generators(named_state("HS"))) < 1e-10);
}

TEST_CASE("homogeneity degrees under amplitude scaling") {
  auto rng = seeded_engine(71);
  const PureState s = random_state(4, rng).normalized();
  PureState scaled = s;
  scaled.amplitudes *= 2.0;
  const FValues base = eval_F_full(s);
  const FValues big = eval_F_full(scaled);
  CHECK(rel_diff(big.f1, 4.0 * base.f1) < 1e-10);
  CHECK(rel_diff(big.f3, 64.0 * base.f3) < 1e-10);
  CHECK(rel_diff(big.f4, 256.0 * base.f4) < 1e-10);
  CHECK(rel_diff(big.f6, 4096.0 * base.f6) < 1e-10);
  CHECK(rel_diff(eval_hdet_from_generators(scaled),
                 16777216.0 * eval_hdet_from_generators(s)) < 1e-8);
}

TEST_CASE("fingerprint: normalization, invariances, catalog rows") {
  const auto fp = fingerprint(named_state("GHZ"));
  CHECK(fp.f1 == doctest::Approx(6.0));
  CHECK(fp.f3 == doctest::Approx(9.0));
  CHECK(fp.f4 == doctest::Approx(16.5));
  CHECK(fp.f6 == doctest::Approx(64.125));

  const Complex i(0, 1);
  const auto fp7 = fingerprint(c4(std::sqrt(2.0), i, i, i));
  CHECK(fp7.f1 == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(fp7.f3 == doctest::Approx(2.64).epsilon(1e-12));
  CHECK(fp7.f4 == doctest::Approx(1.392).epsilon(1e-12));
  CHECK(fp7.f6 == doctest::Approx(0.912768).epsilon(1e-12));

  const auto fp3 = fingerprint(c4(1, 1, 1, 0));
  CHECK(fp3.f1 == doctest::Approx(6.0));
  CHECK(fp3.f3 == doctest::Approx(22.0 / 3.0));
  CHECK(fp3.f4 == doctest::Approx(86.0 / 9.0));
  CHECK(fp3.f6 == doctest::Approx(16.9).epsilon(0.005));

  // global phase and conjugation
  auto rng = seeded_engine(73);
  for (int rep = 0; rep < 50; ++rep) {
    const PureState s = random_state(4, rng);
    const auto base = fingerprint(s);
    PureState rotated = s;
    rotated.amplitudes *= std::polar(1.0, 1.234);
    CHECK(base.max_difference(fingerprint(rotated)) < 1e-9);
    CHECK(base.max_difference(fingerprint(s.conjugated())) < 1e-9);
  }

  CHECK_THROWS_AS(fingerprint(PureState::zero(4)), std::invalid_argument);
}
