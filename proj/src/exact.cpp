#include "nutkit/exact.hpp"

#include <algorithm>

namespace nutkit {

IntVector IntMatrix::multiply(const IntVector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw shape_violation("vector length mismatch");
    IntVector out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Int s = 0;
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !x[static_cast<std::size_t>(c)].is_zero())
                s += at(r, c) * x[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = std::move(s);
    }
    return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.order(), g.order());
    for (const Edge& e : g.edges()) {
        m.at(e.u, e.v) = 1;
        m.at(e.v, e.u) = 1;
    }
    return m;
}

namespace {

/// Bareiss forward elimination. Returns the pivot column list; `work` ends in
/// row echelon form (up to the fraction-free scaling).
std::vector<int> bareiss_echelon(IntMatrix& work) {
    const int rows = work.rows(), cols = work.cols();
    std::vector<int> pivot_cols;
    Int prev_pivot = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // minimal |value| among nonzero candidates, ties to the lowest row
        int best = -1;
        for (int i = r; i < rows; ++i) {
            if (work.at(i, c).is_zero()) continue;
            if (best == -1 || abs(work.at(i, c)) < abs(work.at(best, c))) best = i;
        }
        if (best == -1) continue;
        if (best != r)
            for (int j = 0; j < cols; ++j) std::swap(work.at(r, j), work.at(best, j));
        const Int pivot = work.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            const Int factor = work.at(i, c);
            for (int j = 0; j < cols; ++j) {
                Int t = pivot * work.at(i, j) - factor * work.at(r, j);
                work.at(i, j) = t / prev_pivot; // exact by Bareiss
            }
        }
        prev_pivot = pivot;
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

int rank(const IntMatrix& m) {
    IntMatrix work = m;
    return static_cast<int>(bareiss_echelon(work).size());
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
    IntMatrix work = m;
    const std::vector<int> pivot_cols = bareiss_echelon(work);
    const int rk = static_cast<int>(pivot_cols.size());
    const int cols = m.cols();

    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;

    std::vector<IntVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        // back-substitute x[f] = 1, other free coordinates 0
        std::vector<Rat> x(static_cast<std::size_t>(cols), Rat(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (int r = rk - 1; r >= 0; --r) {
            const int pc = pivot_cols[static_cast<std::size_t>(r)];
            Rat s = 0;
            for (int c = pc + 1; c < cols; ++c)
                if (!work.at(r, c).is_zero() && x[static_cast<std::size_t>(c)] != 0)
                    s += Rat(work.at(r, c)) * x[static_cast<std::size_t>(c)];
            x[static_cast<std::size_t>(pc)] = -s / Rat(work.at(r, pc));
        }
        // clear denominators
        Int lcm = 1;
        for (const Rat& q : x) {
            Int den = denominator(q);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        IntVector v(static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c) {
            const Rat q = x[static_cast<std::size_t>(c)] * Rat(lcm);
            v[static_cast<std::size_t>(c)] = numerator(q);
        }
        basis.push_back(normalize_primitive(std::move(v)));
    }

    auto leading = [](const IntVector& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return i;
        return v.size();
    };
    std::sort(basis.begin(), basis.end(), [&](const IntVector& a, const IntVector& b) {
        std::size_t la = leading(a), lb = leading(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    return basis;
}

Int cyclic_corner_determinant(const IntMatrix& m) {
    const int n = m.rows();
    if (n != m.cols() || n < 3 || n % 2 == 0)
        throw shape_violation("matrix must be square of odd order >= 3");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool allowed = std::abs(i - j) == 1 || (i == 0 && j == n - 1) ||
                                 (i == n - 1 && j == 0);
            if (!allowed && !m.at(i, j).is_zero())
                throw shape_violation("nonzero entry outside the cyclic pattern");
        }
    }
    // a_{2,1} a_{3,2} ... a_{n,n-1} a_{1,n} + a_{1,2} a_{2,3} ... a_{n-1,n} a_{n,1}
    Int down = m.at(0, n - 1), up = m.at(n - 1, 0);
    for (int i = 1; i < n; ++i) {
        down *= m.at(i, i - 1);
        up *= m.at(i - 1, i);
    }
    return down + up;
}

IntVector normalize_primitive(IntVector v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g.is_zero()) return v;
    int sign = 0;
    for (const Int& x : v) {
        if (!x.is_zero()) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    }
    if (sign < 0) g = -g;
    for (Int& x : v) x /= g;
    return v;
}

} // namespace nutkit
