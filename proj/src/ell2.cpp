#include "treehardy/ell2.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace treehardy {

namespace {

void check_branch(const FiniteTree& tree, int branch) {
    if (branch < 1 || branch > tree.q())
        throw InvalidParameterError("shift: branch index outside [1,q]");
}

}  // namespace

double max_abs_on_depth_range(const TreeVector& f, int dmin, int dmax) {
    const FiniteTree& tree = *f.tree;
    double best = 0.0;
    for (int d = std::max(dmin, 0); d <= std::min(dmax, tree.depth()); ++d)
        for (int i : tree.level(d)) best = std::max(best, std::abs(f.values[i]));
    return best;
}

TreeOperator TreeOperator::zero(const FiniteTree& tree) {
    return TreeOperator{tree, Sparse(tree.node_count(), tree.node_count())};
}

TreeOperator TreeOperator::identity(const FiniteTree& tree) {
    Sparse mat(tree.node_count(), tree.node_count());
    mat.setIdentity();
    return TreeOperator{tree, std::move(mat)};
}

TreeOperator TreeOperator::from_triplets(
    const FiniteTree& tree, const std::vector<Eigen::Triplet<Complex>>& entries) {
    Sparse mat(tree.node_count(), tree.node_count());
    mat.setFromTriplets(entries.begin(), entries.end());
    return TreeOperator{tree, std::move(mat)};
}

TreeOperator TreeOperator::shift_monomial(const FiniteTree& tree, int n, int m) {
    if (n < 0 || m < 0)
        throw InvalidParameterError("shift_monomial: powers must be >= 0");
    // Entry (t, u) of gammabar^n gamma^m on the infinite tree: the two
    // ancestor walks must land on the same node. Walks that pass the base
    // node continue along the (unique) chain above it, so only the level
    // bookkeeping survives there.
    const double value = std::pow(static_cast<double>(tree.q()), -0.5 * (n + m));
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int t = 0; t < tree.node_count(); ++t) {
        const int dt = tree.node_depth(t);
        for (int u = 0; u < tree.node_count(); ++u) {
            const int du = tree.node_depth(u);
            if (dt - n != du - m) continue;
            if (n < dt) {
                // Both walks end below the base node at the same positive
                // level, so the actual ancestors must coincide.
                if (tree.ancestor_index(t, n) != tree.ancestor_index(u, m)) continue;
            }
            trip.emplace_back(t, u, Complex{value, 0.0});
        }
    }
    return from_triplets(tree, trip);
}

double TreeOperator::max_entry_diff(const TreeOperator& other) const {
    Sparse diff = mat_ - other.mat_;
    double best = 0.0;
    for (int k = 0; k < diff.outerSize(); ++k)
        for (Sparse::InnerIterator it(diff, k); it; ++it)
            best = std::max(best, std::abs(it.value()));
    return best;
}

TreeVector apply_alpha(int branch, const TreeVector& f) {
    const FiniteTree& tree = *f.tree;
    check_branch(tree, branch);
    TreeVector g = TreeVector::zero(tree);
    for (int t = 0; t < tree.node_count(); ++t) {
        const int c = tree.child_index(t, branch);
        if (c >= 0) g.values[t] = f.values[c];
    }
    return g;
}

TreeVector apply_alpha_bar(int branch, const TreeVector& f) {
    const FiniteTree& tree = *f.tree;
    check_branch(tree, branch);
    TreeVector g = TreeVector::zero(tree);
    for (int t = 0; t < tree.node_count(); ++t) {
        const NodeId& node = tree.node(t);
        if (node.depth() > 0 && node.word.back() == branch)
            g.values[t] = f.values[tree.parent_index(t)];
    }
    return g;
}

TreeVector apply_gamma_bar(const TreeVector& f) {
    const FiniteTree& tree = *f.tree;
    const double s = 1.0 / std::sqrt(static_cast<double>(tree.q()));
    TreeVector g = TreeVector::zero(tree);
    for (int t = 0; t < tree.node_count(); ++t) {
        const int p = tree.parent_index(t);
        if (p >= 0) g.values[t] = s * f.values[p];
    }
    return g;
}

TreeVector apply_gamma(const TreeVector& f) {
    const FiniteTree& tree = *f.tree;
    const double s = 1.0 / std::sqrt(static_cast<double>(tree.q()));
    TreeVector g = TreeVector::zero(tree);
    for (int t = 0; t < tree.node_count(); ++t) {
        if (tree.node_depth(t) == tree.depth()) continue;
        Complex sum{};
        for (int b = 1; b <= tree.q(); ++b) sum += f.values[tree.child_index(t, b)];
        g.values[t] = s * sum;
    }
    return g;
}

TreeVector apply_sigma(int m, const TreeVector& f) {
    if (m < 0) throw InvalidParameterError("apply_sigma: m must be >= 0");
    const FiniteTree& tree = *f.tree;
    const double scale = std::pow(static_cast<double>(tree.q()), -m);
    TreeVector g = TreeVector::zero(tree);
    for (int d = 0; d <= tree.depth(); ++d) {
        const int r = std::min(m, d);
        // Sum f over each ancestor group on this level, then broadcast.
        std::unordered_map<int, Complex> group_sum;
        for (int i : tree.level(d)) group_sum[tree.ancestor_index(i, r)] += f.values[i];
        for (int i : tree.level(d))
            g.values[i] = scale * group_sum[tree.ancestor_index(i, r)];
    }
    return g;
}

TreeVector apply_omega(int m, const TreeVector& f) {
    return apply_sigma(m, f) - apply_sigma(m + 1, f);
}

TreeVector apply_constant(const KElement& c, const TreeVector& f) {
    // sum_{m<P} c_m omega_m f + tail sigma_P f; the projection tail
    // telescopes to sigma_P exactly, so no series truncation is involved.
    const int p = c.prefix_size();
    if (p == 0) return c.tail() * f;
    TreeVector acc = TreeVector::zero(*f.tree);
    TreeVector prev = f;  // sigma_m f entering iteration m; sigma_0 = identity
    for (int m = 0; m < p; ++m) {
        TreeVector next = apply_sigma(m + 1, f);
        acc = acc + c.at(m) * (prev - next);
        prev = next;
    }
    return acc + c.tail() * prev;
}

TreeVector apply_series(const HardySeries& s, const TreeVector& f) {
    TreeVector acc = TreeVector::zero(*f.tree);
    for (int k = 0; k <= s.degree(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        TreeVector g = apply_constant(s.coeff(k), f);
        for (int j = 0; j < k; ++j) g = apply_gamma_bar(g);
        acc = acc + g;
    }
    return acc;
}

double CuntzReport::max_residual() const {
    return std::max({box_residual, sum_residual, shift_sum_residual,
                     left_inverse_residual, isometry_residual});
}

CuntzReport cuntz_residuals(const FiniteTree& tree, int interior_depth) {
    if (interior_depth > tree.depth() - 1)
        throw InvalidParameterError("cuntz_residuals: interior_depth must be <= D-1");
    const double s = 1.0 / std::sqrt(static_cast<double>(tree.q()));
    CuntzReport report;
    for (int u = 0; u < tree.node_count(); ++u) {
        if (tree.node_depth(u) > interior_depth) continue;
        const TreeVector f = TreeVector::basis(tree, u);
        std::vector<TreeVector> down(tree.q() + 1, f);
        for (int i = 1; i <= tree.q(); ++i) down[i] = apply_alpha_bar(i, f);

        for (int i = 1; i <= tree.q(); ++i)
            for (int j = 1; j <= tree.q(); ++j) {
                TreeVector r = apply_alpha(i, down[j]);
                if (i == j) r = r - f;
                report.box_residual = std::max(report.box_residual, r.norm());
            }

        // The completeness sum reads the branch index of the support node at
        // its parent, which the root does not have: its validity region
        // starts at depth 1.
        if (tree.node_depth(u) >= 1) {
            TreeVector sum = TreeVector::zero(tree);
            for (int i = 1; i <= tree.q(); ++i)
                sum = sum + apply_alpha_bar(i, apply_alpha(i, f));
            report.sum_residual = std::max(report.sum_residual, (sum - f).norm());
        }

        const TreeVector gb = apply_gamma_bar(f);
        TreeVector via_alpha = TreeVector::zero(tree);
        for (int i = 1; i <= tree.q(); ++i) via_alpha = via_alpha + down[i];
        report.shift_sum_residual =
            std::max(report.shift_sum_residual, (gb - Complex{s, 0.0} * via_alpha).norm());
        report.left_inverse_residual =
            std::max(report.left_inverse_residual, (apply_gamma(gb) - f).norm());
        report.isometry_residual =
            std::max(report.isometry_residual, std::abs(gb.norm() - f.norm()));
    }
    return report;
}

SeriesCoefficients decompose(const TreeOperator& s) {
    const FiniteTree& tree = s.tree();
    SeriesCoefficients coeffs;
    coeffs.tree = &tree;
    const auto& mat = s.matrix();
    for (int u = 0; u < mat.outerSize(); ++u) {
        const NodeId& in = tree.node(u);
        for (TreeOperator::Sparse::InnerIterator it(mat, u); it; ++it) {
            if (it.value() == Complex{}) continue;
            const NodeId& out = tree.node(static_cast<int>(it.row()));
            const NodeId v = tree.meet(out, in);
            WordPair key{
                std::vector<int>(out.word.begin() + v.depth(), out.word.end()),
                std::vector<int>(in.word.begin() + v.depth(), in.word.end())};
            coeffs.diagonals[key][u] = it.value();
        }
    }
    return coeffs;
}

TreeOperator reconstruct(const SeriesCoefficients& coeffs) {
    const FiniteTree& tree = *coeffs.tree;
    std::vector<Eigen::Triplet<Complex>> trip;
    for (const auto& [key, diag] : coeffs.diagonals) {
        const int m = static_cast<int>(key.in_word.size());
        for (const auto& [u, value] : diag) {
            const NodeId& in = tree.node(u);
            if (in.depth() < m ||
                !std::equal(key.in_word.begin(), key.in_word.end(),
                            in.word.end() - m))
                throw InvalidParameterError(
                    "reconstruct: diagonal support off its branch subtree");
            NodeId out{std::vector<int>(in.word.begin(), in.word.end() - m)};
            out.word.insert(out.word.end(), key.out_word.begin(), key.out_word.end());
            if (out.depth() > tree.depth()) continue;  // no home in the truncation
            trip.emplace_back(tree.index_of(out), u, value);
        }
    }
    return TreeOperator::from_triplets(tree, trip);
}

CausalityReport is_causal(const TreeOperator& s, double tol) {
    const SeriesCoefficients coeffs = decompose(s);
    for (const auto& [key, diag] : coeffs.diagonals) {
        if (key.out_word.size() >= key.in_word.size()) continue;
        for (const auto& [u, value] : diag) {
            if (std::abs(value) > tol)
                return CausalityReport{false,
                                       CausalityWitness{key, s.tree().node(u), value}};
        }
    }
    return CausalityReport{};
}

StationarityReport stationarity_classes(const TreeOperator& s, double tol) {
    const FiniteTree& tree = s.tree();
    const Eigen::MatrixXcd dense(s.matrix());
    const int n = tree.node_count();

    std::map<std::pair<int, int>, std::pair<Complex, long>> sums;
    for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u) {
            const NodeId v = tree.meet(tree.node(t), tree.node(u));
            if (v.depth() == 0) continue;
            auto& [sum, count] = sums[{tree.node_depth(t) - v.depth(),
                                       tree.node_depth(u) - v.depth()}];
            sum += dense(t, u);
            ++count;
        }

    std::map<std::pair<int, int>, double> spread;
    for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u) {
            const NodeId v = tree.meet(tree.node(t), tree.node(u));
            if (v.depth() == 0) continue;
            const std::pair<int, int> key{tree.node_depth(t) - v.depth(),
                                          tree.node_depth(u) - v.depth()};
            const auto& [sum, count] = sums[key];
            const Complex mean = sum / static_cast<double>(count);
            spread[key] = std::max(spread[key], std::abs(dense(t, u) - mean));
        }

    StationarityReport report;
    for (const auto& [key, sc] : sums) {
        StationarityClass cls;
        cls.dist_out = key.first;
        cls.dist_in = key.second;
        cls.count = sc.second;
        cls.mean = sc.first / static_cast<double>(sc.second);
        cls.spread = spread[key];
        report.max_spread = std::max(report.max_spread, cls.spread);
        report.classes.push_back(cls);
    }
    report.stationary = report.max_spread < tol;
    return report;
}

TreeOperator series_to_operator(const HardySeries& s, const FiniteTree& tree) {
    return TreeOperator::materialize(
        tree, [&s](const TreeVector& f) { return apply_series(s, f); });
}

HardySeries operator_to_series(const TreeOperator& s, int degree_cap, double tol) {
    const FiniteTree& tree = s.tree();
    const CausalityReport causal = is_causal(s, tol);
    if (!causal.causal)
        throw NotStationaryCausalError("operator_to_series: operator is not causal");

    const int cap = std::min(degree_cap, tree.depth() - 1);
    if (cap < 0)
        throw InvalidParameterError("operator_to_series: tree too shallow");

    std::vector<KElement> coeffs;
    for (int k = 0; k <= cap; ++k) {
        const int n_max = tree.depth() - k - 1;
        std::vector<Complex> components(n_max + 1);
        for (int n = 0; n <= n_max; ++n) {
            Complex sum{};
            long count = 0;
            double max_residual = 0.0;
            std::vector<Complex> lambdas;
            for (int d = n + 1; d <= tree.depth() - k; ++d) {
                for (int t : tree.level(d)) {
                    const TreeVector x = apply_omega(n, TreeVector::basis(tree, t));
                    TreeVector w = apply_omega(n + k, s.apply(x));
                    for (int j = 0; j < k; ++j) w = apply_gamma(w);
                    const double x2 = inner(x, x).real();
                    const Complex lambda = inner(w, x) / x2;
                    max_residual = std::max(
                        max_residual, (w - lambda * x).norm() / std::sqrt(x2));
                    lambdas.push_back(lambda);
                    sum += lambda;
                    ++count;
                }
            }
            const Complex mean = sum / static_cast<double>(count);
            double max_spread = 0.0;
            for (const Complex& l : lambdas)
                max_spread = std::max(max_spread, std::abs(l - mean));
            if (max_residual > tol || max_spread > tol)
                throw NotStationaryCausalError(
                    "operator_to_series: block (" + std::to_string(n + k) + "," +
                    std::to_string(n) + ") is not scalar");
            components[n] = mean;
        }
        const Complex tail = components[n_max];
        components.pop_back();
        coeffs.emplace_back(std::move(components), tail);
    }
    return HardySeries{std::move(coeffs)};
}

double NormIdentityReport::max_residual() const {
    return std::max({coeff_norm_residual, omega_residual, parseval_residual});
}

NormIdentityReport norm_identities(const HardySeries& s, const FiniteTree& tree,
                                   const NodeId& t, int n) {
    if (!s.is_hilbert_schmidt())
        throw DomainKError("norm_identities: coefficient with nonzero tail");
    const int d = t.depth();
    if (n < 0 || d < n + 1)
        throw ValidityRegionError("norm_identities: need depth(t) >= n+1");
    if (d + std::max(s.degree(), 0) > tree.depth())
        throw ValidityRegionError("norm_identities: series reach exceeds truncation");
    for (int k = 0; k <= s.degree(); ++k)
        if (s.coeff(k).prefix_size() > d)
            throw ValidityRegionError("norm_identities: coefficient prefix exceeds depth(t)");

    const double q = static_cast<double>(tree.q());
    NormIdentityReport report;

    const TreeVector x = apply_omega(n, TreeVector::basis(tree, t));
    const TreeVector sx = apply_series(s, x);
    for (int k = 0; k <= s.degree(); ++k)
        report.coeff_sum += std::norm(s.coeff(k).at(n));
    report.scaled_norm = std::pow(q, n + 1) / (q - 1.0) * sx.values.squaredNorm();
    report.coeff_norm_residual = std::abs(report.coeff_sum - report.scaled_norm);

    report.omega_norm = x.values.squaredNorm();
    report.omega_norm_expected = std::pow(q, -n) - std::pow(q, -(n + 1));
    report.omega_residual = std::abs(report.omega_norm - report.omega_norm_expected);

    double hs2 = 0.0;
    for (int k = 0; k <= s.degree(); ++k) {
        const double nk = k2_norm(s.coeff(k));
        hs2 += nk * nk;
    }
    for (int k = 0; k <= d - 1; ++k) {
        const TreeVector xk = apply_omega(k, TreeVector::basis(tree, t));
        report.weighted_sum +=
            std::pow(q, k) * apply_series(s, xk).values.squaredNorm();
    }
    report.hs_norm_scaled = (1.0 - 1.0 / q) * hs2;
    report.parseval_residual = std::abs(report.weighted_sum - report.hs_norm_scaled);
    return report;
}

double operator_norm_estimate(const TreeOperator& s) {
    const Eigen::MatrixXcd dense(s.matrix());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense.adjoint() * dense,
                                                           Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

}  // namespace treehardy
