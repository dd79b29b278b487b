#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tenscross/matrix.hpp"
#include "tenscross/rational.hpp"

namespace tenscross {

// Sparse vector: (index, coefficient) pairs sorted by index, no zero coefficients.
using SVec = std::vector<std::pair<int, Rational>>;

/* Accumulates index -> coefficient and emits a canonical SVec. */
class SparseAccumulator {
public:
    void add(std::int64_t i, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = m_.try_emplace(i, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }
    void add(const SVec& v, const Rational& s = Rational(1)) {
        for (const auto& [i, c] : v) add(i, s * c);
    }
    bool empty() const { return m_.empty(); }
    SVec take() {
        SVec out;
        out.reserve(m_.size());
        for (auto& [i, c] : m_) out.emplace_back(static_cast<int>(i), c);
        m_.clear();
        return out;
    }
    const std::map<std::int64_t, Rational>& entries() const { return m_; }

private:
    std::map<std::int64_t, Rational> m_;
};

inline SVec sv_unit(int i) { return SVec{{i, Rational(1)}}; }

inline SVec sv_from_dense(const Vec& v) {
    SVec out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

inline Vec sv_to_dense(const SVec& v, int n) {
    Vec out(n);
    for (const auto& [i, c] : v) out[i] += c;
    return out;
}

inline SVec sv_scale(const Rational& s, const SVec& v) {
    if (s.is_zero()) return {};
    SVec out = v;
    for (auto& e : out) e.second *= s;
    return out;
}

inline SVec sv_add(const SVec& a, const SVec& b) {
    SVec out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Rational s = a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

inline SVec sv_sub(const SVec& a, const SVec& b) { return sv_add(a, sv_scale(Rational(-1), b)); }

inline Rational sv_coeff(const SVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, int k) { return e.first < k; });
    return (it != v.end() && it->first == i) ? it->second : Rational(0);
}

}  // namespace tenscross

namespace tenscross {

/*
 * Incremental Gaussian elimination on sparse rows. Rows are kept with distinct
 * leading columns; kernel() back-substitutes to a basis of the null space.
 */
class SparseEliminator {
public:
    explicit SparseEliminator(int ncols) : ncols_(ncols) {}
    // Returns true when the row was independent of the rows added so far.
    bool add_row(SVec row);
    int rank() const { return static_cast<int>(pivots_.size()); }
    int cols() const { return ncols_; }
    std::vector<Vec> kernel() const;
    // Kernel basis whose restriction to the free columns is the identity.
    Subspace kernel_subspace() const;

private:
    int ncols_;
    std::map<int, SVec> pivots_;  // leading column -> row with leading coefficient 1
};

}  // namespace tenscross
