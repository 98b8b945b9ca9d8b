#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <map>
#include <optional>
#include <vector>

#include "treehardy/hardy.hpp"
#include "treehardy/tree.hpp"

namespace treehardy {

// Element of the finite model of l2(T): one complex amplitude per node.
struct TreeVector {
    const FiniteTree* tree = nullptr;
    Eigen::VectorXcd values;

    static TreeVector zero(const FiniteTree& tree) {
        return TreeVector{&tree, Eigen::VectorXcd::Zero(tree.node_count())};
    }
    static TreeVector basis(const FiniteTree& tree, int node_index) {
        TreeVector f = zero(tree);
        f.values[node_index] = Complex{1.0, 0.0};
        return f;
    }
    static TreeVector basis(const FiniteTree& tree, const NodeId& t) {
        return basis(tree, tree.index_of(t));
    }

    double norm() const { return values.norm(); }
};

inline TreeVector operator+(const TreeVector& a, const TreeVector& b) {
    return TreeVector{a.tree, a.values + b.values};
}
inline TreeVector operator-(const TreeVector& a, const TreeVector& b) {
    return TreeVector{a.tree, a.values - b.values};
}
inline TreeVector operator*(Complex lambda, const TreeVector& f) {
    return TreeVector{f.tree, lambda * f.values};
}
inline Complex inner(const TreeVector& a, const TreeVector& b) {
    // [a, b] = sum_t a(t) conj(b(t))
    return b.values.dot(a.values);
}

// Max amplitude of f on nodes with depth in [dmin, dmax]; residual metric
// restricted to the window where a finite-truncation identity is exact.
double max_abs_on_depth_range(const TreeVector& f, int dmin, int dmax);

// Bounded operator on the finite model, stored sparsely;
// entry (t, u) = [S chi_u, chi_t].
class TreeOperator {
public:
    using Sparse = Eigen::SparseMatrix<Complex>;

    TreeOperator(const FiniteTree& tree, Sparse mat)
        : tree_(&tree), mat_(std::move(mat)) {}

    static TreeOperator zero(const FiniteTree& tree);
    static TreeOperator identity(const FiniteTree& tree);
    static TreeOperator from_triplets(
        const FiniteTree& tree,
        const std::vector<Eigen::Triplet<Complex>>& entries);
    // Materializes a linear map by applying it to every basis vector.
    template <typename F>
    static TreeOperator materialize(const FiniteTree& tree, F&& fn) {
        std::vector<Eigen::Triplet<Complex>> trip;
        for (int u = 0; u < tree.node_count(); ++u) {
            const TreeVector col = fn(TreeVector::basis(tree, u));
            for (int t = 0; t < tree.node_count(); ++t)
                if (col.values[t] != Complex{}) trip.emplace_back(t, u, col.values[t]);
        }
        return from_triplets(tree, trip);
    }
    // Exact compression to the truncation of the upward/downward shift word
    // gammabar^n gamma^m on the infinite tree. Near the root this differs
    // from composing the truncated shift operators, whose intermediate
    // results would need ancestors above the base node.
    static TreeOperator shift_monomial(const FiniteTree& tree, int n, int m);

    const FiniteTree& tree() const { return *tree_; }
    const Sparse& matrix() const { return mat_; }
    Complex entry(int t, int u) const { return mat_.coeff(t, u); }

    TreeVector apply(const TreeVector& f) const {
        return TreeVector{tree_, mat_ * f.values};
    }
    TreeOperator adjoint() const {
        return TreeOperator{*tree_, Sparse(mat_.adjoint())};
    }

    double max_entry_diff(const TreeOperator& other) const;

private:
    const FiniteTree* tree_;
    Sparse mat_;
};

// Primitive shift operators. Contributions that would read a node outside
// the truncation are zero.
TreeVector apply_alpha(int branch, const TreeVector& f);      // f(t alpha_i)
TreeVector apply_alpha_bar(int branch, const TreeVector& f);  // adjoint
TreeVector apply_gamma_bar(const TreeVector& f);  // q^{-1/2} f(t gammabar)
TreeVector apply_gamma(const TreeVector& f);      // adjoint

// Horocycle average sigma_m f(t) = q^{-m} sum_{u ~ t, dist(u,t) <= 2m} f(u);
// exact (equal to the compression of the infinite-tree operator) at every
// node.
TreeVector apply_sigma(int m, const TreeVector& f);
// omega_m = sigma_m - sigma_{m+1}; orthogonal projection onto W_m on the
// region of outputs at depth >= m+1.
TreeVector apply_omega(int m, const TreeVector& f);

// Action of a constant: sum_m c_m omega_m, summed in closed form through
// the prefix+tail structure (exact, no series truncation).
TreeVector apply_constant(const KElement& c, const TreeVector& f);
// Action of a series: sum_k gammabar^k (s_k f).
TreeVector apply_series(const HardySeries& s, const TreeVector& f);

struct CuntzReport {
    double box_residual = 0.0;        // max ||(alpha_i alphabar_j - delta_ij) f||
    double sum_residual = 0.0;        // max ||(sum_i alphabar_i alpha_i - 1) f||
    double shift_sum_residual = 0.0;      // max ||(gammabar - q^{-1/2} sum alphabar_i) f||
    double left_inverse_residual = 0.0;  // max ||gamma gammabar f - f||
    double isometry_residual = 0.0;      // max | ||gammabar f|| - ||f|| |
    double max_residual() const;
};

// Evaluates the shift relations on every basis vector supported at depth
// <= interior_depth (they are exact there; the residuals are float noise).
// The completeness sum needs the parent of the support node, so the root is
// outside its validity region and is skipped for that one relation.
CuntzReport cuntz_residuals(const FiniteTree& tree, int interior_depth);

// Key of a coefficient in the operator series decomposition: the two branch
// words leading from the meet down to the output and input nodes (in word
// order, so the first letters differ whenever both are nonempty).
struct WordPair {
    std::vector<int> out_word;
    std::vector<int> in_word;

    bool operator<(const WordPair& other) const {
        if (out_word != other.out_word) return out_word < other.out_word;
        return in_word < other.in_word;
    }
    bool operator==(const WordPair& other) const {
        return out_word == other.out_word && in_word == other.in_word;
    }
};

// Diagonal coefficients of the shift-word series expansion of an operator,
// bucketed by word pair; each diagonal is stored sparsely on its supporting
// input nodes.
struct SeriesCoefficients {
    const FiniteTree* tree = nullptr;
    std::map<WordPair, std::map<int, Complex>> diagonals;
};

SeriesCoefficients decompose(const TreeOperator& s);
TreeOperator reconstruct(const SeriesCoefficients& coeffs);

struct CausalityWitness {
    WordPair key;
    NodeId input_node;
    Complex value;
};

struct CausalityReport {
    bool causal = true;
    std::optional<CausalityWitness> witness;
};

// Causal iff every decomposition coefficient with |out_word| < |in_word|
// vanishes.
CausalityReport is_causal(const TreeOperator& s, double tol = 1e-12);

struct StationarityClass {
    int dist_out = 0;  // dist(meet, output)
    int dist_in = 0;   // dist(meet, input)
    Complex mean;
    double spread = 0.0;
    long count = 0;
};

struct StationarityReport {
    bool stationary = true;
    double max_spread = 0.0;
    std::vector<StationarityClass> classes;
};

// Groups entries by (dist(meet,t), dist(meet,u)) and measures the per-class
// deviation from the class mean. Pairs whose meet is the root are excluded:
// the truncated root lacks the cousins an infinite horocycle provides.
StationarityReport stationarity_classes(const TreeOperator& s, double tol = 1e-12);

TreeOperator series_to_operator(const HardySeries& s, const FiniteTree& tree);

// Inverse bridge: reads the scalar of gamma^k omega_{n+k} S omega_n over all
// test nodes in the exact window, for k <= degree_cap and n <= D - k - 1.
// Throws NotStationaryCausalError when a block is not scalar (spread or
// residual above tol) or the operator is not causal.
HardySeries operator_to_series(const TreeOperator& s, int degree_cap,
                               double tol = 1e-10);

struct NormIdentityReport {
    double coeff_sum = 0.0;        // sum_k |(s_k)_n|^2
    double scaled_norm = 0.0;      // q^{n+1}/(q-1) ||S omega_n chi_t||^2
    double coeff_norm_residual = 0.0;
    double omega_norm = 0.0;           // ||omega_n chi_t||^2
    double omega_norm_expected = 0.0;  // 1/q^n - 1/q^{n+1}
    double omega_residual = 0.0;
    double weighted_sum = 0.0;     // sum_k q^k ||S omega_k chi_t||^2
    double hs_norm_scaled = 0.0;   // (1 - 1/q) ||S||_2^2
    double parseval_residual = 0.0;
    double max_residual() const;
};

// Verifies the coefficient/vector norm identities of a square-summable
// series at the node t and projection index n. Requires the whole
// computation to fit the exact window: depth(t) >= n+1, depth(t) +
// degree(S) <= D, and every coefficient prefix within depth(t).
NormIdentityReport norm_identities(const HardySeries& s, const FiniteTree& tree,
                                   const NodeId& t, int n);

// Largest singular value of the truncated operator matrix.
double operator_norm_estimate(const TreeOperator& s);

}  // namespace treehardy
