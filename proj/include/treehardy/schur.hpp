#pragma once

#include <Eigen/Dense>
#include <vector>

#include "treehardy/hardy.hpp"

namespace treehardy {

// Kernel of a multiplier candidate S at a pair of disk points:
//   sum_n c^[n] (1 - S(c) conj(S(d)))^(n) conj(d)^[n],
// truncated when ||c^[n]|| ||d^[n]|| < tol.
KElement schur_kernel(const HardySeries& s, const KElement& c, const KElement& d,
                      double tol = 1e-12);

// Gram matrix G_ij = [K_S(c_i, c_j) k_j, k_i] of kernel pairings against
// square-summable vectors. Hermitian up to truncation error.
Eigen::MatrixXcd gram(const HardySeries& s, const std::vector<KElement>& points,
                      const std::vector<KElement>& vectors, double tol = 1e-12);

struct PsdReport {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

// Eigenvalue test: positive semidefinite iff min eigenvalue of the
// Hermitian part is >= -tol_eig.
PsdReport is_psd(const Eigen::MatrixXcd& g, double tol_eig = 1e-8);

struct InterpolationProblem {
    std::vector<KElement> points;
    double tol = 1e-12;
    double inv_threshold = 1e-9;
};

struct InterpolationSolution {
    HardySeries blaschke_product;
    std::vector<KElement> ks;
    std::vector<double> residuals;  // sup norm of the product at each point
};

// Homogeneous interpolation: builds the Blaschke product B with B(c_j) = 0
// for every prescribed point, through the recursion
//   k_1 = 1,  k_{j+1} = (B_1 ... B_j)(c_{j+1}),
// each factor taken at the modified point k_j^(1) k_j^{-1} c_j. Throws
// RecursionBreakdownError when some k_j fails the invertibility threshold
// and DivergenceError when a point leaves the disk.
InterpolationSolution interpolate(const InterpolationProblem& problem);

}  // namespace treehardy
