#include <doctest.h>

#include <numbers>

#include "quartet/cartan.hpp"
#include "quartet/invariants.hpp"
#include "quartet/random.hpp"

using namespace quartet;

namespace {

CartanPoint c4(Complex a, Complex b, Complex c, Complex d) {
  CartanPoint z;
  z << a, b, c, d;
  return z;
}

CartanPoint random_word_image(const CartanPoint& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> gen(1, 3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  CartanPoint q = p;
  for (int step = 0; step < 6; ++step) {
    switch (kind(rng)) {
      case 0: {
        SignedPermutation w;
        std::array<int, 4> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        w.perm = perm;
        int prod = 1;
        for (int i = 0; i < 3; ++i) {
          w.sign[i] = rng() % 2 ? 1 : -1;
          prod *= w.sign[i];
        }
        w.sign[3] = prod;
        q = apply_symmetry(w, q);
        break;
      }
      case 1:
        q = apply_symmetry(TranspositionWord{{gen(rng)}}, q);
        break;
      case 2:
        q = apply_symmetry(PhaseRotation{angle(rng)}, q);
        break;
      default:
        q = apply_symmetry(Conjugation{}, q);
    }
  }
  return q;
}

}  // namespace

TEST_CASE("cartan_embed: published basis combinations") {
  // u1 + u2 collapses to |0000> + |1111>
  PureState s = cartan_embed(c4(1, 1, 0, 0));
  CHECK(std::abs(s.amplitudes[ket_index("0000")] - 1.0) < 1e-15);
  CHECK(std::abs(s.amplitudes[ket_index("1111")] - 1.0) < 1e-15);
  CHECK(s.amplitudes.cwiseAbs().sum() == doctest::Approx(2.0));

  s = cartan_embed(c4(1, 0, 0, 0));
  for (const char* k : {"0000", "0011", "1100", "1111"})
    CHECK(std::abs(s.amplitudes[ket_index(k)] - 0.5) < 1e-15);

  s = cartan_embed(c4(0, 0, 1, -1));
  CHECK(std::abs(s.amplitudes[ket_index("0110")] - 1.0) < 1e-15);
  CHECK(std::abs(s.amplitudes[ket_index("1001")] - 1.0) < 1e-15);
  CHECK(s.amplitudes.cwiseAbs().sum() == doctest::Approx(2.0));
}

TEST_CASE("norm identity on the Cartan subspace") {
  auto rng = seeded_engine(23);
  for (int rep = 0; rep < 1000; ++rep) {
    const CartanPoint z = random_cartan_point(rng, /*unit=*/false);
    CHECK(std::abs(cartan_embed(z).norm_squared() - z.squaredNorm()) <
          1e-13 * std::max(1.0, z.squaredNorm()));
  }
}

TEST_CASE("symmetry generators") {
  // sign action with even pattern
  SignedPermutation w;
  w.sign = {-1, -1, 1, 1};
  CHECK((apply_symmetry(w, c4(1, 1, 0, 0)) - c4(-1, -1, 0, 0)).norm() == 0.0);

  // odd sign pattern is rejected
  SignedPermutation bad;
  bad.sign = {-1, 1, 1, 1};
  CHECK_THROWS_AS(apply_symmetry(bad, c4(1, 1, 0, 0)), std::invalid_argument);

  // the middle transposition matrix fixes (1,1,0,0)
  CHECK((apply_symmetry(TranspositionWord{{2}}, c4(1, 1, 0, 0)) - c4(1, 1, 0, 0)).norm() <
        1e-15);

  // diag(1,1,1,-1) on (sqrt3, i, i, i)
  const Complex i(0, 1);
  CHECK((apply_symmetry(TranspositionWord{{1}}, c4(std::sqrt(3.0), i, i, i)) -
         c4(std::sqrt(3.0), i, i, -i))
            .norm() < 1e-15);

  // every generator preserves the fingerprint
  auto rng = seeded_engine(29);
  for (int rep = 0; rep < 500; ++rep) {
    const CartanPoint z = random_cartan_point(rng);
    const CartanPoint img = random_word_image(z, rng);
    CHECK(fingerprint(z).max_difference(fingerprint(img)) < 1e-11);
  }
}

TEST_CASE("symmetry group closure") {
  CHECK(symmetry_group_matrices().size() == 1152);
  // spot check: every matrix is orthogonal with entries in {0, +-1/2, +-1}
  auto rng = seeded_engine(31);
  const auto& group = symmetry_group_matrices();
  for (int rep = 0; rep < 40; ++rep) {
    const auto& m = group[rng() % group.size()];
    CHECK((m * m.transpose() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const double doubled = 2.0 * std::abs(m(r, c));
        CHECK(std::abs(doubled - std::round(doubled)) < 1e-14);
      }
  }
}

TEST_CASE("canonicalize: known orbits") {
  const Complex i(0, 1);
  CHECK((canonicalize(c4(-1, -1, 0, 0)) - canonicalize(c4(1, 1, 0, 0))).norm() < 1e-12);
  CHECK((canonicalize(c4(0, 0, i, i)) - canonicalize(c4(1, 1, 0, 0))).norm() < 1e-12);
  CHECK((canonicalize(c4(1, i, 0, 0)) - canonicalize(c4(1, -i, 0, 0))).norm() < 1e-12);
  CHECK_THROWS_AS(canonicalize(c4(0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent and orbit-constant") {
  auto rng = seeded_engine(37);
  for (int rep = 0; rep < 10; ++rep) {
    const CartanPoint z = random_cartan_point(rng);
    const CartanPoint canon = canonicalize(z);
    CHECK((canonicalize(canon) - canon).norm() < 1e-10);
    for (int w = 0; w < 50; ++w) {
      const CartanPoint img = random_word_image(z, rng);
      CHECK((canonicalize(img) - canon).norm() < 1e-10);
    }
  }
}

TEST_CASE("normal_form: published representatives") {
  const Complex i(0, 1);
  const double rt2 = std::sqrt(2.0), rt3 = std::sqrt(3.0);

  CHECK((normal_form(named_state("GHZ")) - canonicalize(c4(1, 1, 0, 0) / rt2)).norm() < 1e-10);
  CHECK((normal_form(named_state("MP")) - canonicalize(c4(1, 0, 0, 0))).norm() < 1e-10);

  // YC = C1 = OS land on the canonical form of (1, i, 0, 0)
  const CartanPoint yc = normal_form(named_state("YC"));
  CHECK((yc - canonicalize(c4(1, i, 0, 0) / rt2)).norm() < 1e-10);
  CHECK((yc - normal_form(named_state("C1"))).norm() < 1e-10);
  CHECK((yc - normal_form(named_state("OS"))).norm() < 1e-10);
  CHECK((yc - normal_form(named_state("C2"))).norm() < 1e-10);
  CHECK((yc - normal_form(named_state("C3"))).norm() < 1e-10);

  CHECK((normal_form(named_state("HS")) - canonicalize(c4(rt3, i, i, i) / std::sqrt(6.0))).norm() <
        1e-10);
  CHECK((normal_form(named_state("HS")) - normal_form(named_state("M"))).norm() < 1e-10);
  CHECK((normal_form(named_state("HD")) - normal_form(named_state("L"))).norm() < 1e-10);

  const CartanPoint bssb_rep =
      c4(1, i, std::polar(1.0, -std::numbers::pi / 4), std::polar(1.0, std::numbers::pi / 4)) / 2.0;
  CHECK(fingerprint(normal_form(named_state("BSSB"))).max_difference(fingerprint(bssb_rep)) <
        1e-10);

  // a separable state is rejected when criticality is required
  PureState zeros = PureState::zero(4);
  zeros.amplitudes[0] = 1.0;
  CHECK_THROWS_AS(normal_form(zeros), std::invalid_argument);
}

TEST_CASE("normal_form fingerprint fixpoint on random Cartan points") {
  auto rng = seeded_engine(41);
  for (int rep = 0; rep < 500; ++rep) {
    const CartanPoint z = random_cartan_point(rng);
    const CartanPoint back = normal_form(cartan_embed(z));
    CHECK(fingerprint(z).max_difference(fingerprint(back)) < 1e-8);
  }
}
