#include "treehardy/schur.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace treehardy {

namespace {
constexpr int kMaxExpansionTerms = 100000;
}

KElement schur_kernel(const HardySeries& s, const KElement& c, const KElement& d,
                      double tol) {
    if (!in_disk(c) || !in_disk(d))
        throw DivergenceError("schur_kernel: point outside the unit disk");
    const KElement middle =
        KElement::one() - point_eval(s, c) * k_conj(point_eval(s, d));
    const KElement dbar = k_conj(d);
    KElement acc;
    KElement wc = KElement::one();  // c^[n]
    KElement wd = KElement::one();  // conj(d)^[n]
    int n = 0;
    while (true) {
        acc = acc + wc * k_shift(middle, n) * wd;
        if (k_norm_inf(wc) * k_norm_inf(wd) < tol) break;
        wc = wc * k_shift(c, n);
        wd = wd * k_shift(dbar, n);
        ++n;
        if (n > kMaxExpansionTerms)
            throw DivergenceError("schur_kernel: expansion did not converge");
    }
    return acc;
}

Eigen::MatrixXcd gram(const HardySeries& s, const std::vector<KElement>& points,
                      const std::vector<KElement>& vectors, double tol) {
    if (points.size() != vectors.size())
        throw InvalidParameterError("gram: points/vectors size mismatch");
    const int m = static_cast<int>(points.size());
    Eigen::MatrixXcd g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            g(i, j) = k2_inner(schur_kernel(s, points[i], points[j], tol) * vectors[j],
                               vectors[i]);
    return g;
}

PsdReport is_psd(const Eigen::MatrixXcd& g, double tol_eig) {
    const Eigen::MatrixXcd hermitian = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian,
                                                           Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    return PsdReport{min_eig >= -tol_eig, min_eig};
}

InterpolationSolution interpolate(const InterpolationProblem& problem) {
    for (const KElement& c : problem.points)
        if (!in_disk(c))
            throw DivergenceError("interpolate: point outside the unit disk");

    InterpolationSolution solution;
    HardySeries product = HardySeries::one();
    for (size_t j = 0; j < problem.points.size(); ++j) {
        const KElement kj =
            j == 0 ? KElement::one() : point_eval(product, problem.points[j]);
        solution.ks.push_back(kj);
        KElement kj_inv;
        try {
            kj_inv = k_invert(kj, problem.inv_threshold);
        } catch (const NotInvertibleError&) {
            throw RecursionBreakdownError(
                "interpolate: constant k_" + std::to_string(j + 1) +
                " fell below the invertibility threshold");
        }
        const KElement modified = k_shift(kj, 1) * kj_inv * problem.points[j];
        const BlaschkeResult factor = blaschke(modified, problem.tol);
        product = truncate_series(series_mul(product, factor.b), problem.tol);
    }
    solution.blaschke_product = product;
    for (const KElement& c : problem.points)
        solution.residuals.push_back(k_norm_inf(point_eval(product, c)));
    return solution;
}

}  // namespace treehardy
