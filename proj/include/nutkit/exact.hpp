#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nutkit/errors.hpp"
#include "nutkit/graph.hpp"

namespace nutkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    const Int& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntVector multiply(const IntVector& x) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// 0/1 symmetric adjacency matrix with zero diagonal.
IntMatrix adjacency_matrix(const Graph& g);

/// Exact rank over the rationals (fraction-free Bareiss elimination,
/// pivot of minimal absolute value, ties broken by lowest row index).
int rank(const IntMatrix& m);

/// Basis of the rational nullspace, scaled to primitive integer vectors with
/// positive leading entry and ordered by leading-coordinate position.
/// Deterministic: derived from the (unique) reduced row echelon form.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Determinant of an odd-order matrix supported on the sub/super diagonals
/// and the two corners: the sum of the two cyclic permutation products.
Int cyclic_corner_determinant(const IntMatrix& m);

/// Divide by the gcd and make the first nonzero entry positive.
/// The zero vector is returned unchanged.
IntVector normalize_primitive(IntVector v);

} // namespace nutkit
