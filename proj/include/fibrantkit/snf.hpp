#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace fibrantkit {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Smith normal form data: rank and the nontrivial elementary divisors
/// d_1 | d_2 | ... (all positive; divisors equal to 1 are kept so that
/// divisors.size() == rank).
struct SmithResult {
    int rank = 0;
    std::vector<Int> divisors;

    /// Elementary divisors > 1 (the torsion coefficients of the cokernel
    /// restricted to the image lattice).
    std::vector<Int> torsion() const {
        std::vector<Int> t;
        for (const auto& d : divisors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

/// Exact Smith normal form over the integers (no floating point anywhere).
SmithResult smith_normal_form(IntMatrix m);

}  // namespace fibrantkit
