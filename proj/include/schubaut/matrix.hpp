// matrix.hpp -- small dense integer matrices for Weyl group elements.
//
// A Weyl element is stored as a rank x rank integer matrix acting on column
// vectors of simple-root coordinates: column j holds the coordinates of
// w(alpha_j). Entries stay tiny (the largest simple-root coefficient in any
// admitted system is 6), so plain int arithmetic is exact throughout.

#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace schubaut {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int n() const { return n_; }

    int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    // Column c as simple-root coordinates (the image of alpha_{c+1}).
    std::vector<int> column(int c) const {
        std::vector<int> v(n_);
        for (int r = 0; r < n_; ++r) v[r] = at(r, c);
        return v;
    }

    std::vector<int> apply(const std::vector<int>& v) const {
        assert(static_cast<int>(v.size()) == n_);
        std::vector<int> out(n_, 0);
        for (int c = 0; c < n_; ++c) {
            if (v[c] == 0) continue;
            for (int r = 0; r < n_; ++r) out[r] += at(r, c) * v[c];
        }
        return out;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        assert(a.n_ == b.n_);
        IntMatrix out(a.n_);
        for (int r = 0; r < a.n_; ++r)
            for (int k = 0; k < a.n_; ++k) {
                const int ark = a.at(r, k);
                if (ark == 0) continue;
                for (int c = 0; c < a.n_; ++c) out.at(r, c) += ark * b.at(k, c);
            }
        return out;
    }

    bool is_identity() const {
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (at(r, c) != (r == c ? 1 : 0)) return false;
        return true;
    }

    // Row-major lexicographic order; used everywhere determinism matters.
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
    friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.a_ <=> b.a_;
    }

    const std::vector<int>& flat() const { return a_; }

private:
    int n_ = 0;
    std::vector<int> a_;
};

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& m) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : m.flat()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace schubaut
