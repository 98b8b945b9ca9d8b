#pragma once

#include <random>

#include "treehardy/ell2.hpp"
#include "treehardy/hardy.hpp"

namespace treehardy {

// Deterministic generators shared by the verification suites and the tests.
// Disk points keep |tail| small so everything stays comfortably inside the
// unit disk.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    double uniform();                       // [0, 1)
    int uniform_int(int lo, int hi);        // inclusive
    Complex complex_in_disk(double radius);
    // |z| uniform in [lo, hi]; used where invertibility is required.
    Complex complex_in_annulus(double lo, double hi);

    // Prefix length <= max_prefix, prefix entries in the disk of
    // prefix_radius, tail in the disk of tail_radius.
    KElement kelement(int max_prefix = 4, double prefix_radius = 0.9,
                      double tail_radius = 0.7);
    KElement k2element(int max_prefix = 4, double prefix_radius = 0.9);
    // Entries bounded away from zero, so the element is invertible.
    KElement invertible_kelement(int max_prefix = 4);

    // Square-summable series of the given degree with prefix lengths
    // <= max_prefix.
    HardySeries hs_series(int degree, int max_prefix = 4);

    // Sparse operator with roughly `entries` nonzero unit-disk entries.
    TreeOperator sparse_operator(const FiniteTree& tree, int entries);

    // Dense vector with unit-disk entries at every node.
    TreeVector dense_vector(const FiniteTree& tree);

private:
    std::mt19937_64 engine_;
};

}  // namespace treehardy
