#include "treehardy/random.hpp"

#include <cmath>
#include <numbers>

namespace treehardy {

double RandomSource::uniform() {
    // 53-bit mantissa; bit-identical across platforms, unlike the
    // distribution adaptors.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int RandomSource::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
}

Complex RandomSource::complex_in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double phi = 2.0 * std::numbers::pi * uniform();
    return Complex{r * std::cos(phi), r * std::sin(phi)};
}

Complex RandomSource::complex_in_annulus(double lo, double hi) {
    const double r = lo + (hi - lo) * uniform();
    const double phi = 2.0 * std::numbers::pi * uniform();
    return Complex{r * std::cos(phi), r * std::sin(phi)};
}

KElement RandomSource::kelement(int max_prefix, double prefix_radius,
                                double tail_radius) {
    const int p = uniform_int(0, max_prefix);
    std::vector<Complex> prefix(p);
    for (Complex& v : prefix) v = complex_in_disk(prefix_radius);
    return KElement{std::move(prefix), complex_in_disk(tail_radius)};
}

KElement RandomSource::k2element(int max_prefix, double prefix_radius) {
    const int p = uniform_int(1, max_prefix);
    std::vector<Complex> prefix(p);
    for (Complex& v : prefix) v = complex_in_disk(prefix_radius);
    return KElement{std::move(prefix), Complex{}};
}

KElement RandomSource::invertible_kelement(int max_prefix) {
    const int p = uniform_int(0, max_prefix);
    std::vector<Complex> prefix(p);
    for (Complex& v : prefix) v = complex_in_annulus(0.3, 0.9);
    return KElement{std::move(prefix), complex_in_annulus(0.3, 0.7)};
}

HardySeries RandomSource::hs_series(int degree, int max_prefix) {
    std::vector<KElement> coeffs(degree + 1);
    for (KElement& c : coeffs) c = k2element(max_prefix);
    return HardySeries{std::move(coeffs)};
}

TreeOperator RandomSource::sparse_operator(const FiniteTree& tree, int entries) {
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(entries);
    for (int e = 0; e < entries; ++e)
        trip.emplace_back(uniform_int(0, tree.node_count() - 1),
                          uniform_int(0, tree.node_count() - 1),
                          complex_in_disk(1.0));
    return TreeOperator::from_triplets(tree, trip);
}

TreeVector RandomSource::dense_vector(const FiniteTree& tree) {
    TreeVector f = TreeVector::zero(tree);
    for (int i = 0; i < tree.node_count(); ++i) f.values[i] = complex_in_disk(1.0);
    return f;
}

}  // namespace treehardy
