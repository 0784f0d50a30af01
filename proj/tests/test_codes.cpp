#include <doctest.h>

#include <numbers>

#include "quartet/codes.hpp"
#include "quartet/invariants.hpp"
#include "quartet/stationary.hpp"

using namespace quartet;

namespace {

double max_angle(const CodeSubspace& a, const CodeSubspace& b) {
  const auto angles = principal_angles(a, b);
  return *std::max_element(angles.begin(), angles.end());
}

}  // namespace

TEST_CASE("v_to_u basis change") {
  Eigen::Vector4cd c;
  c << 1, 0, 0, 0;
  CHECK((v_to_u(c) - (CartanPoint() << 1, 1, 0, 0).finished()).norm() == 0.0);
  c << 0, 0, 1, 0;
  CHECK((v_to_u(c) - (CartanPoint() << 0, 0, 1, 1).finished()).norm() == 0.0);

  // pair 4's first constituent is proportional to (1, i, 0, 0)
  using std::numbers::pi;
  c << std::polar(1.0, pi / 4), std::polar(1.0, -pi / 4), 0, 0;
  const CartanPoint z = v_to_u(c);
  const Complex ratio = z[1] / z[0];
  CHECK(std::abs(z[0] - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(ratio - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(z[2]) + std::abs(z[3]) == 0.0);
}

TEST_CASE("registered pairs: transcription spot checks") {
  const auto& pairs = registered_pairs();
  REQUIRE(pairs.size() == 5);
  CHECK_THROWS_AS(pair_by_name("pair9"), std::invalid_argument);

  // pair 2's first member is 2 * (sqrt3, i, i, i), the HS representative
  const CartanPoint hs2 = 2.0 * (CartanPoint() << std::sqrt(3.0), Complex(0, 1),
                                 Complex(0, 1), Complex(0, 1))
                                    .finished();
  CHECK((pairs[1].phi0 - hs2).norm() < 1e-14);

  // pair 1's first member is 2 * (sqrt2, i, i, 0) = 2 * phi6
  const CartanPoint phi6_2 = 2.0 * (CartanPoint() << std::sqrt(2.0), Complex(0, 1),
                                    Complex(0, 1), 0)
                                       .finished();
  CHECK((pairs[0].phi0 - phi6_2).norm() < 1e-14);

  // pair 1's second member in u-coordinates: (0, -2i, 2i, 2 sqrt2)
  const CartanPoint pair1_phi1 =
      (CartanPoint() << 0, Complex(0, -2), Complex(0, 2), 2.0 * std::sqrt(2.0)).finished();
  CHECK((pairs[0].phi1 - pair1_phi1).norm() < 1e-14);

  // pair 5's second member: (sqrt2, sqrt2 i, -1 + i, -1 - i)
  const CartanPoint pair5_phi1 =
      (CartanPoint() << std::sqrt(2.0), Complex(0, std::sqrt(2.0)), Complex(-1, 1),
       Complex(-1, -1))
          .finished();
  CHECK((pairs[4].phi1 - pair5_phi1).norm() < 1e-14);

  // both members of every pair embed to critical states
  for (const auto& p : pairs) {
    CHECK(is_critical(cartan_embed(p.phi0), 1e-8));
    CHECK(is_critical(cartan_embed(p.phi1), 1e-8));
  }
}

TEST_CASE("pair constituents: vanishing patterns and fingerprint matching") {
  const auto& pairs = registered_pairs();
  for (const auto& p : pairs) {
    CHECK(fingerprint(p.phi0).f1 < 1e-10);
    CHECK(fingerprint(p.phi1).f1 < 1e-10);
  }
  // pairs 1, 3, 4, 5 join a point with an equivalent copy of itself
  for (int k : {0, 2, 3, 4})
    CHECK(fingerprint(pairs[k].phi0).max_difference(fingerprint(pairs[k].phi1)) < 1e-8);

  // pair 2 joins the HS and HD classes
  const auto f3pts = known_points(Invariant::F3);
  CHECK(fingerprint(pairs[1].phi0).max_difference(fingerprint(f3pts[7])) < 1e-8);
  CHECK(fingerprint(pairs[1].phi1).max_difference(fingerprint(f3pts[8])) < 1e-8);

  // extra vanishings: F4 on the pair-2 and pair-3 constituents, F3 on pairs 4-5,
  // F6 additionally on pair 5
  CHECK(fingerprint(pairs[1].phi0).f4 < 1e-9);
  CHECK(fingerprint(pairs[1].phi1).f4 < 1e-9);
  CHECK(fingerprint(pairs[2].phi0).f4 < 1e-9);
  CHECK(fingerprint(pairs[3].phi0).f3 < 1e-9);
  CHECK(fingerprint(pairs[4].phi0).f3 < 1e-9);
  CHECK(fingerprint(pairs[4].phi0).f6 < 1e-9);
}

TEST_CASE("six-qubit states: uniformity, sparsity, support") {
  for (const auto& p : registered_pairs()) {
    const PureState six = build_six_qubit(p);
    CHECK(six.n == 6);
    CHECK(uniformity_deviation(six, 3) < 1e-10);

    int exact_zeros = 0;
    for (int k = 0; k < 64; ++k)
      if (six.amplitudes[k] == Complex(0, 0)) ++exact_zeros;
    CHECK(exact_zeros >= 32);

    // support restricted to the Cartan ket pattern in the last four bits
    const auto& support = cartan_support_kets();
    for (int k = 0; k < 64; ++k) {
      if (six.amplitudes[k] == Complex(0, 0)) continue;
      CHECK(std::binary_search(support.begin(), support.end(), k & 15));
    }
  }
}

TEST_CASE("five-qubit code: orthogonality and purity") {
  for (const auto& p : registered_pairs()) {
    const CodeSubspace code = five_qubit_code(p);
    CHECK(std::abs(code.basis[0].inner(code.basis[1])) < 1e-12);
    CHECK(std::abs(code.basis[0].norm() - 1.0) < 1e-12);
  }
  const PurityReport rep = verify_pure_code(five_qubit_code(pair_by_name("pair3")), 1e-9);
  CHECK(rep.pass);
}

TEST_CASE("rains chain down to the Cartan code") {
  for (const auto& p : registered_pairs()) {
    CodeSubspace code6{6, {build_six_qubit(p)}, 4};
    CHECK(verify_pure_code(code6, 1e-9).pass);

    const CodeSubspace code5 = rains_reduce(code6);
    CHECK(code5.dimension() == 2);
    CHECK(code5.claimed_distance == 3);
    CHECK(verify_pure_code(code5, 1e-9).pass);
    CHECK(max_angle(code5, five_qubit_code(p)) < 1e-8);

    const CodeSubspace code4 = rains_reduce(code5);
    CHECK(code4.dimension() == 4);
    CHECK(verify_pure_code(code4, 1e-9).pass);
    CHECK(max_angle(code4, cartan_code()) < 1e-8);
  }
}

TEST_CASE("rains_reduce rejects non-pure inputs") {
  PureState product = PureState::zero(5);
  product.amplitudes[0] = 1.0;
  CodeSubspace bogus{5, {product}, 3};
  CHECK_THROWS_WITH_AS(rains_reduce(bogus), doctest::Contains("rank"), std::runtime_error);
}

TEST_CASE("verify_pure_code: cartan subspace passes, product state fails") {
  CHECK(verify_pure_code(cartan_code(), 1e-9).pass);

  PureState product = PureState::zero(4);
  product.amplitudes[0] = 1.0;
  CodeSubspace bogus{4, {product}, 2};
  CHECK_FALSE(verify_pure_code(bogus, 1e-9).pass);
}
