#pragma once

#include <complex>
#include <vector>

#include "treehardy/errors.hpp"

namespace treehardy {

using Complex = std::complex<double>;

// Bounded scalar sequence c_0, c_1, ... that is eventually constant:
// c_m = prefix[m] for m < prefix.size(), c_m = tail otherwise.
//
// This class of sequences is closed under the pointwise algebra
// operations, under the left shift c -> c^(n), under the window products
// c -> c^[n], and under inversion and square roots, so all constants
// produced by the library stay exactly representable.
//
// Canonical form: trailing prefix entries equal to the tail are absorbed,
// making the representation unique.
class KElement {
public:
    KElement() = default;
    explicit KElement(Complex tail) : tail_(tail) {}
    KElement(std::vector<Complex> prefix, Complex tail)
        : prefix_(std::move(prefix)), tail_(tail) {
        canonicalize();
    }

    static KElement zero() { return KElement{}; }
    static KElement one() { return KElement{Complex{1.0, 0.0}}; }
    static KElement constant(Complex v) { return KElement{v}; }
    // Indicator of index k (the sequence of the projection onto the k-th
    // component).
    static KElement indicator(int k);

    // c_m, valid for every m >= 0.
    Complex at(int m) const {
        return m < static_cast<int>(prefix_.size()) ? prefix_[m] : tail_;
    }
    const std::vector<Complex>& prefix() const { return prefix_; }
    Complex tail() const { return tail_; }
    int prefix_size() const { return static_cast<int>(prefix_.size()); }

    bool is_zero() const { return prefix_.empty() && tail_ == Complex{}; }
    // Membership in the square-summable ideal: tail exactly zero.
    bool has_zero_tail() const { return tail_ == Complex{}; }

    KElement operator+(const KElement& other) const;
    KElement operator-(const KElement& other) const;
    KElement operator*(const KElement& other) const;
    KElement operator-() const;

    friend KElement operator*(Complex lambda, const KElement& c);

    bool operator==(const KElement& other) const {
        return prefix_ == other.prefix_ && tail_ == other.tail_;
    }

private:
    void canonicalize() {
        while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
    }

    std::vector<Complex> prefix_;
    Complex tail_{};
};

// Pointwise algebra (k_add / k_mul / k_scale are the operators above).
KElement k_conj(const KElement& c);

// n-fold left shift c^(n): (c^(n))_m = c_{m+n}.
KElement k_shift(const KElement& c, int n);

// Window product c^[n]: (c^[n])_m = c_m * c_{m+1} * ... * c_{m+n-1},
// with c^[0] = 1.
KElement k_bracket(const KElement& c, int n);

// Exact value of limsup ||c^[n]||^(1/n) for this representation class.
double k_rho(const KElement& c);
bool in_disk(const KElement& c);
// Numeric cross-check of k_rho: max_m |c^[n]_m|^{1/n}.
double k_rho_estimate(const KElement& c, int n = 64);

// Pointwise reciprocal; every |c_m| (prefix and tail) must be >= threshold.
KElement k_invert(const KElement& c, double threshold = 1e-9);
// Pointwise principal square root; entries must be real and nonnegative.
KElement k_sqrt(const KElement& c);

double k_norm_inf(const KElement& c);

// Hilbert space operations on the square-summable ideal (zero tail
// required).
double k2_norm(const KElement& c);
Complex k2_inner(const KElement& a, const KElement& b);

// sup_m |a_m - b_m|; the distance the tests measure residuals in.
double k_dist(const KElement& a, const KElement& b);

}  // namespace treehardy
