#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nutkit/errors.hpp"

namespace nutkit {

/// A permutation of {0, ..., n-1}, stored as the image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {}

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[static_cast<std::size_t>(v)]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    bool is_bijection() const {
        std::vector<char> seen(img_.size(), 0);
        for (int x : img_) {
            if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = 1;
        }
        return true;
    }

    /// Apply `other` first: (p * q)(v) = p(q(v)).
    Permutation compose(const Permutation& other) const {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            v[i] = img_[static_cast<std::size_t>(other.img_[i])];
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
        return Permutation(std::move(v));
    }

    const std::vector<int>& images() const { return img_; }

    bool operator==(const Permutation& o) const = default;

    /// Length of the longest cycle and the smallest vertex on such a cycle.
    std::pair<int, int> longest_cycle() const {
        std::vector<char> seen(img_.size(), 0);
        int best_len = 0, best_pt = -1;
        for (int s = 0; s < degree(); ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            int len = 0, x = s, mn = s;
            while (!seen[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = 1;
                mn = std::min(mn, x);
                x = img_[static_cast<std::size_t>(x)];
                ++len;
            }
            if (len > best_len) {
                best_len = len;
                best_pt = mn;
            }
        }
        return {best_len, best_pt};
    }

private:
    std::vector<int> img_;
};

inline Permutation operator*(const Permutation& p, const Permutation& q) { return p.compose(q); }

} // namespace nutkit
