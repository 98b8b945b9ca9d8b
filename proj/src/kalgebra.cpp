#include "treehardy/kalgebra.hpp"

#include <algorithm>
#include <cmath>

namespace treehardy {

namespace {

template <typename F>
KElement pointwise(const KElement& a, const KElement& b, F&& f) {
    const int n = std::max(a.prefix_size(), b.prefix_size());
    std::vector<Complex> prefix(n);
    for (int m = 0; m < n; ++m) prefix[m] = f(a.at(m), b.at(m));
    return KElement{std::move(prefix), f(a.tail(), b.tail())};
}

template <typename F>
KElement map(const KElement& a, F&& f) {
    std::vector<Complex> prefix(a.prefix().size());
    for (size_t m = 0; m < prefix.size(); ++m) prefix[m] = f(a.prefix()[m]);
    return KElement{std::move(prefix), f(a.tail())};
}

}  // namespace

KElement KElement::indicator(int k) {
    if (k < 0) throw InvalidParameterError("indicator: index must be >= 0");
    std::vector<Complex> prefix(k + 1, Complex{});
    prefix[k] = Complex{1.0, 0.0};
    return KElement{std::move(prefix), Complex{}};
}

KElement KElement::operator+(const KElement& other) const {
    return pointwise(*this, other, [](Complex x, Complex y) { return x + y; });
}

KElement KElement::operator-(const KElement& other) const {
    return pointwise(*this, other, [](Complex x, Complex y) { return x - y; });
}

KElement KElement::operator*(const KElement& other) const {
    return pointwise(*this, other, [](Complex x, Complex y) { return x * y; });
}

KElement KElement::operator-() const {
    return map(*this, [](Complex x) { return -x; });
}

KElement operator*(Complex lambda, const KElement& c) {
    return map(c, [lambda](Complex x) { return lambda * x; });
}

KElement k_conj(const KElement& c) {
    return map(c, [](Complex x) { return std::conj(x); });
}

KElement k_shift(const KElement& c, int n) {
    if (n < 0) throw InvalidParameterError("k_shift: n must be >= 0");
    if (n >= c.prefix_size()) return KElement{c.tail()};
    std::vector<Complex> prefix(c.prefix().begin() + n, c.prefix().end());
    return KElement{std::move(prefix), c.tail()};
}

KElement k_bracket(const KElement& c, int n) {
    if (n < 0) throw InvalidParameterError("k_bracket: n must be >= 0");
    if (n == 0) return KElement::one();
    const int p = c.prefix_size();
    std::vector<Complex> prefix(p);
    for (int m = 0; m < p; ++m) {
        Complex w{1.0, 0.0};
        for (int j = 0; j < n; ++j) w *= c.at(m + j);
        prefix[m] = w;
    }
    Complex tail{1.0, 0.0};
    for (int j = 0; j < n; ++j) tail *= c.tail();
    return KElement{std::move(prefix), tail};
}

double k_rho(const KElement& c) {
    // Window products anchored in the prefix have geometric means that
    // converge to |tail|, so the limsup equals |tail| exactly.
    return std::abs(c.tail());
}

bool in_disk(const KElement& c) { return k_rho(c) < 1.0; }

double k_rho_estimate(const KElement& c, int n) {
    const KElement w = k_bracket(c, n);
    double best = 0.0;
    for (int m = 0; m <= w.prefix_size(); ++m)
        best = std::max(best, std::abs(w.at(m)));
    return best == 0.0 ? 0.0 : std::pow(best, 1.0 / n);
}

KElement k_invert(const KElement& c, double threshold) {
    for (int m = 0; m <= c.prefix_size(); ++m) {
        if (std::abs(c.at(m)) < threshold)
            throw NotInvertibleError("k_invert: entry below threshold at index " +
                                     std::to_string(m));
    }
    return map(c, [](Complex x) { return Complex{1.0, 0.0} / x; });
}

KElement k_sqrt(const KElement& c) {
    auto root = [](Complex x) {
        if (std::abs(x.imag()) > 1e-12 || x.real() < 0.0)
            throw NotPositiveError("k_sqrt: entry not real nonnegative");
        return Complex{std::sqrt(x.real()), 0.0};
    };
    return map(c, root);
}

double k_norm_inf(const KElement& c) {
    double best = std::abs(c.tail());
    for (const Complex& v : c.prefix()) best = std::max(best, std::abs(v));
    return best;
}

double k2_norm(const KElement& c) {
    return std::sqrt(k2_inner(c, c).real());
}

Complex k2_inner(const KElement& a, const KElement& b) {
    if (!a.has_zero_tail() || !b.has_zero_tail())
        throw DomainKError("k2_inner: nonzero tail");
    Complex sum{};
    const int n = std::max(a.prefix_size(), b.prefix_size());
    for (int m = 0; m < n; ++m) sum += a.at(m) * std::conj(b.at(m));
    return sum;
}

double k_dist(const KElement& a, const KElement& b) {
    double best = std::abs(a.tail() - b.tail());
    const int n = std::max(a.prefix_size(), b.prefix_size());
    for (int m = 0; m < n; ++m) best = std::max(best, std::abs(a.at(m) - b.at(m)));
    return best;
}

}  // namespace treehardy
