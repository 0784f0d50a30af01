#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartet/invariants.hpp"
#include "quartet/poly.hpp"

namespace quartet {

enum class Sphere { S7, S15 };

// The dehomogenized Lagrange system for Re(F_k|a) on the unit sphere of the
// Cartan subspace. Ambient variables are the eight real coordinates
// (x1, y1, x2, y2, x3, y3, x4, y4); the chart variable is set to one and the
// remaining seven are active. Coefficients are exact integers.
struct RealPolynomialSystem {
  std::string invariant;
  int chart_var = 0;                  // ambient index 0..7
  std::vector<int> active_vars;       // the 7 remaining ambient indices
  std::vector<std::string> variables; // names of the active variables
  std::vector<RPoly> equations;       // 7 polynomials over the 8 ambient vars
};

std::string real_coordinate_name(int ambient_index);

RealPolynomialSystem build_lagrange_system(Invariant inv, int chart_var);

// Norm of the tangential part of grad |f|^2 at the normalized point, with f
// viewed on R^8 (S7) or, through the embedding of the Cartan subspace into
// the full state space, on R^32 (S15).
double tangential_residual(const CartanPoint& p, Invariant inv, Sphere sphere);

// Same residual computed from g = Re f instead of |f|^2; meaningful under
// the f-real phase convention.
double tangential_residual_realpart(const CartanPoint& p, Invariant inv);

// Rotate by the smallest phase making f(p) real.
CartanPoint phase_fix_f_real(const CartanPoint& p, Invariant inv);

// Orbit element (finite symmetry group plus conjugation) maximizing the
// first real coordinate; keeps f real. Used to place a point inside the
// hemisphere chart.
CartanPoint chart_representative(const CartanPoint& p, Invariant inv);

struct NewtonResult {
  bool converged = false;
  Eigen::VectorXd solution;  // 8 ambient coordinates, chart variable = 1
  double residual = 0.0;
  int iterations = 0;
  std::string failure;       // empty on success
};

// Damped Newton iteration on the square 7x7 system. The start may be given
// in the 7 active variables or as an 8-vector, which is scaled so the chart
// variable becomes one.
NewtonResult newton_refine(const RealPolynomialSystem& sys, const Eigen::VectorXd& start,
                           int max_iter = 100, double tol = 1e-12);

struct HessianResult {
  Eigen::VectorXd eigenvalues;      // 7 chart-Hessian eigenvalues, scaled to H(|f|)
  std::array<int, 3> signature{};   // (negative, zero, positive)
};

// Hessian of |f|^2 in the hemisphere chart (first real coordinate solved
// from the sphere constraint), evaluated at the normalized, phase-fixed
// point and rescaled by 1/(2|f|). Throws if the point is not stationary at
// 1e-8 or the chart is invalid there.
HessianResult hessian_signature(const CartanPoint& p, Invariant inv,
                                double zero_tol_rel = 1e-6);

struct StationaryReport {
  CartanPoint point;  // normalized, phase fixed so f is real
  Invariant invariant = Invariant::F3;
  double residual_s7 = 0.0;
  double residual_s15 = 0.0;
  double value = 0.0;  // |f| at the point
  bool stationary = false;
  bool has_hessian = false;
  Eigen::VectorXd hessian_eigenvalues;
  std::array<int, 3> signature{};
};

// Residuals, value, and (for stationary nonvanishing points) the Hessian
// classification of a single point.
StationaryReport verify_point(const CartanPoint& p, Invariant inv,
                              double tol_s7 = 1e-8, double tol_s15 = 1e-7);

// The catalog of stationary points of |F3| (14 entries) and |F4| (13).
// Entries defined by algebraic equations are refined by Newton iteration to
// 1e-14 before being returned; all points are unnormalized representatives.
std::vector<CartanPoint> known_points(Invariant inv);
std::vector<std::string> known_point_names(Invariant inv);

// One row of the combined stationary-point table: the catalog point, its
// fingerprint, and the verification report for each of F3, F4, F6.
struct CatalogRow {
  std::string name;
  CartanPoint point;  // unnormalized catalog representative
  InvariantFingerprint fp;
  std::array<StationaryReport, 3> reports;  // for F3, F4, F6
};

// The 23 distinct catalog points (the first four F4 entries coincide with
// the first four F3 entries), each verified against all three invariants.
std::vector<CatalogRow> stationary_catalog();

// Seeded multi-start Newton search over all eight charts; solutions are
// normalized, phase fixed, filtered by the residuals on both spheres, and
// deduplicated by invariant fingerprint (absolute tolerance 1e-6). Each
// class is reported once, with the canonical point. Identical results for
// any worker count.
std::vector<StationaryReport> multistart_search(Invariant inv, int n_starts,
                                                std::uint64_t seed, int workers = 0);

}  // namespace quartet
