#pragma once

#include <vector>

#include "treehardy/kalgebra.hpp"

namespace treehardy {

// Finitely truncated power series in the upward shift,
//   S = sum_k gammabar^k s_k,   s_k in the constants algebra.
//
// When every coefficient has zero tail the series lies in the
// Hilbert module of square-summable series and carries the norm
// ||S||_2^2 = sum_k ||s_k||_2^2.
//
// Canonical form: trailing all-zero coefficients are trimmed.
class HardySeries {
public:
    HardySeries() = default;
    explicit HardySeries(std::vector<KElement> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    static HardySeries zero() { return HardySeries{}; }
    static HardySeries one() { return HardySeries{{KElement::one()}}; }
    // The series gammabar^n * c.
    static HardySeries monomial(int n, const KElement& c);
    // A constant embedded as a degree-0 series.
    static HardySeries constant(const KElement& c) { return HardySeries{{c}}; }

    // Highest retained power of the shift; -1 for the zero series.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<KElement>& coeffs() const { return coeffs_; }
    // Coefficient s_k, zero beyond the degree.
    const KElement& coeff(int k) const;

    // True when every coefficient has zero tail (square-summable series).
    bool is_hilbert_schmidt() const;

    HardySeries operator+(const HardySeries& other) const;
    HardySeries operator-(const HardySeries& other) const;
    // Right module action by a constant.
    HardySeries operator*(const KElement& p) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<KElement> coeffs_;
};

// Product of two series; the coefficient law
//   (SF)_n = sum_{j<=n} s_{n-j}^(j) f_j
// comes from commuting constants across the shift.
HardySeries series_mul(const HardySeries& s, const HardySeries& f);

// Drops trailing coefficients of sup norm below tol.
HardySeries truncate_series(const HardySeries& s, double tol);

// S(c) = sum_n c^[n] s_n. Always a finite sum here; when c is outside the
// unit disk the caller should surface the in_disk flag alongside the value.
KElement point_eval(const HardySeries& s, const KElement& c);

Complex h2_inner(const HardySeries& f, const HardySeries& g);
double h2_norm(const HardySeries& f);

// sup over coefficients of the componentwise distance; residual metric for
// series identities.
double series_dist(const HardySeries& a, const HardySeries& b);

struct KernelResult {
    HardySeries series;
    int order = 0;  // first n with ||conj(c)^[n]|| < tol
};

// Reproducing kernel K_c = sum_n gammabar^n conj(c)^[n], truncated at the
// first bracket power of sup norm below tol. Requires c in the disk.
KernelResult kernel(const KElement& c, double tol = 1e-12);

// Quotient G with F - F(c) = (gammabar - c) G, given by
//   G_n = sum_k (c^(n+1))^[k] f_{n+k+1}.
HardySeries bezout_div(const HardySeries& f, const KElement& c);

struct BlaschkeResult {
    HardySeries b;   // the Blaschke factor
    KElement l;      // L_a
    KElement kaa;    // K_a(a)
    int order = 0;   // truncation order of the expansion
};

// Blaschke factor B_a = (gammabar - a)(1 - L_a conj(a) gammabar)^{-1} sqrt(L_a),
// the isometric multiplier vanishing at a under point evaluation.
// K_a(a) is computed in closed form (geometric tails summed exactly).
BlaschkeResult blaschke(const KElement& a, double tol = 1e-12,
                        double inv_threshold = 1e-9);

}  // namespace treehardy
