#include "treehardy/hardy.hpp"

#include <algorithm>
#include <cmath>

namespace treehardy {

namespace {
const KElement kZero{};
constexpr int kMaxExpansionTerms = 100000;
}  // namespace

HardySeries HardySeries::monomial(int n, const KElement& c) {
    if (n < 0) throw InvalidParameterError("monomial: degree must be >= 0");
    std::vector<KElement> coeffs(n + 1);
    coeffs[n] = c;
    return HardySeries{std::move(coeffs)};
}

const KElement& HardySeries::coeff(int k) const {
    if (k < 0) throw InvalidParameterError("coeff: index must be >= 0");
    return k <= degree() ? coeffs_[k] : kZero;
}

bool HardySeries::is_hilbert_schmidt() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const KElement& c) { return c.has_zero_tail(); });
}

HardySeries HardySeries::operator+(const HardySeries& other) const {
    std::vector<KElement> coeffs(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = coeff(static_cast<int>(k)) + other.coeff(static_cast<int>(k));
    return HardySeries{std::move(coeffs)};
}

HardySeries HardySeries::operator-(const HardySeries& other) const {
    std::vector<KElement> coeffs(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = coeff(static_cast<int>(k)) - other.coeff(static_cast<int>(k));
    return HardySeries{std::move(coeffs)};
}

HardySeries HardySeries::operator*(const KElement& p) const {
    std::vector<KElement> coeffs(coeffs_.size());
    for (size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = coeffs_[k] * p;
    return HardySeries{std::move(coeffs)};
}

HardySeries series_mul(const HardySeries& s, const HardySeries& f) {
    if (s.degree() < 0 || f.degree() < 0) return HardySeries::zero();
    std::vector<KElement> coeffs(s.degree() + f.degree() + 1);
    for (int j = 0; j <= f.degree(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        for (int i = 0; i <= s.degree(); ++i)
            coeffs[i + j] = coeffs[i + j] + k_shift(s.coeff(i), j) * f.coeff(j);
    }
    return HardySeries{std::move(coeffs)};
}

HardySeries truncate_series(const HardySeries& s, double tol) {
    std::vector<KElement> coeffs = s.coeffs();
    while (!coeffs.empty() && k_norm_inf(coeffs.back()) < tol) coeffs.pop_back();
    return HardySeries{std::move(coeffs)};
}

KElement point_eval(const HardySeries& s, const KElement& c) {
    KElement acc;
    KElement window = KElement::one();  // c^[n], built incrementally
    for (int n = 0; n <= s.degree(); ++n) {
        acc = acc + window * s.coeff(n);
        if (n < s.degree()) window = window * k_shift(c, n);
    }
    return acc;
}

Complex h2_inner(const HardySeries& f, const HardySeries& g) {
    if (!f.is_hilbert_schmidt() || !g.is_hilbert_schmidt())
        throw DomainKError("h2_inner: coefficient with nonzero tail");
    Complex sum{};
    const int deg = std::min(f.degree(), g.degree());
    for (int k = 0; k <= deg; ++k) sum += k2_inner(f.coeff(k), g.coeff(k));
    return sum;
}

double h2_norm(const HardySeries& f) {
    return std::sqrt(h2_inner(f, f).real());
}

double series_dist(const HardySeries& a, const HardySeries& b) {
    double best = 0.0;
    const int deg = std::max(a.degree(), b.degree());
    for (int k = 0; k <= deg; ++k)
        best = std::max(best, k_dist(a.coeff(k), b.coeff(k)));
    return best;
}

KernelResult kernel(const KElement& c, double tol) {
    if (!in_disk(c))
        throw DivergenceError("kernel: point outside the unit disk");
    const KElement cbar = k_conj(c);
    std::vector<KElement> coeffs;
    KElement window = KElement::one();
    int n = 0;
    while (k_norm_inf(window) >= tol) {
        coeffs.push_back(window);
        window = window * k_shift(cbar, n);
        ++n;
        if (n > kMaxExpansionTerms)
            throw DivergenceError("kernel: expansion did not converge");
    }
    coeffs.push_back(window);
    return KernelResult{HardySeries{std::move(coeffs)}, n};
}

HardySeries bezout_div(const HardySeries& f, const KElement& c) {
    if (!f.is_hilbert_schmidt())
        throw DomainKError("bezout_div: coefficient with nonzero tail");
    const int deg = f.degree();
    if (deg <= 0) return HardySeries::zero();
    std::vector<KElement> coeffs(deg);
    for (int n = 0; n + 1 <= deg; ++n) {
        const KElement cs = k_shift(c, n + 1);
        KElement window = KElement::one();  // (c^(n+1))^[k]
        KElement acc;
        for (int k = 0; n + k + 1 <= deg; ++k) {
            acc = acc + window * f.coeff(n + k + 1);
            window = window * k_shift(cs, k);
        }
        coeffs[n] = acc;
    }
    return HardySeries{std::move(coeffs)};
}

BlaschkeResult blaschke(const KElement& a, double tol, double inv_threshold) {
    if (!in_disk(a))
        throw DivergenceError("blaschke: point outside the unit disk");

    // K_a(a) componentwise: (Kaa)_m = sum_n prod_{j<n} |a_{m+j}|^2.
    // The tail value is the geometric sum 1/(1-|tail|^2); below the prefix
    // boundary the backward recursion (Kaa)_m = 1 + |a_m|^2 (Kaa)_{m+1}
    // is exact.
    const double t2 = std::norm(a.tail());
    const double tail_value = 1.0 / (1.0 - t2);
    const int p = a.prefix_size();
    std::vector<Complex> kaa_prefix(p);
    double next = tail_value;
    for (int m = p - 1; m >= 0; --m) {
        const double cur = 1.0 + std::norm(a.at(m)) * next;
        kaa_prefix[m] = Complex{cur, 0.0};
        next = cur;
    }
    const KElement kaa{std::move(kaa_prefix), Complex{tail_value, 0.0}};

    // Every component of K_a(a) is >= 1, so inversion cannot fail; the
    // threshold is asserted anyway.
    const KElement kaa_inv = k_invert(kaa, inv_threshold);
    const KElement l = k_shift(kaa, 1) * kaa_inv;
    const KElement sqrt_l = k_sqrt(l);

    // Expand (1 - L conj(a) gammabar)^{-1} through (d gammabar)^n =
    // gammabar^n (d^[n])^(1) with d = L conj(a).
    const KElement d = l * k_conj(a);
    std::vector<KElement> coeffs;
    coeffs.push_back(-(a * sqrt_l));
    KElement window = KElement::one();  // d^[n-1] for the degree-n coefficient
    int n = 1;
    while (true) {
        const KElement dn = window * k_shift(d, n - 1);  // d^[n]
        coeffs.push_back(k_shift(window, 1) * sqrt_l -
                         k_shift(a, n) * k_shift(dn, 1) * sqrt_l);
        if (k_norm_inf(dn) < tol) break;
        window = dn;
        ++n;
        if (n > kMaxExpansionTerms)
            throw DivergenceError("blaschke: expansion did not converge");
    }
    return BlaschkeResult{HardySeries{std::move(coeffs)}, l, kaa, n};
}

}  // namespace treehardy
