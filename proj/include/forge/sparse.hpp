// SPDX-License-Identifier: Apache-2.0
/**
 * @file sparse.hpp
 * @brief Sparse vectors over cyclotomic scalars.
 *
 * Structure constants of the algebras built here are extremely sparse (most
 * products of basis elements are a single scaled basis element), so vectors
 * are kept as index-sorted (index, coefficient) pair lists with no zero
 * coefficients.  An Accum helper provides cheap unordered accumulation for
 * code that sums many terms before normalizing once.
 */
#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "forge/cyclotomic.hpp"

namespace forge {

struct SVec {
    std::vector<std::pair<int, Cyc>> t;  // strictly increasing indices, nonzero coeffs

    bool empty() const { return t.empty(); }
    size_t nnz() const { return t.size(); }

    static SVec unit(int i, Cyc coeff) {
        SVec v;
        if (!coeff.is_zero()) v.t.emplace_back(i, std::move(coeff));
        return v;
    }

    Cyc coeff(int i, const FieldPtr& F) const {
        for (const auto& [j, cj] : t)
            if (j == i) return cj;
            else if (j > i) break;
        return Cyc::zero(F);
    }

    SVec scaled(const Cyc& s) const {
        SVec r;
        if (s.is_zero()) return r;
        r.t.reserve(t.size());
        for (const auto& [j, cj] : t) {
            Cyc v = cj * s;
            if (!v.is_zero()) r.t.emplace_back(j, std::move(v));
        }
        return r;
    }
};

/// Unordered accumulator; use when summing many sparse contributions.
class Accum {
  public:
    explicit Accum(FieldPtr field) : F(std::move(field)) {}

    void add(int i, const Cyc& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = m.try_emplace(i, v);
        if (!fresh) it->second += v;
    }

    void axpy(const Cyc& s, const SVec& v) {
        if (s.is_zero()) return;
        for (const auto& [j, cj] : v.t) add(j, cj * s);
    }

    void add(const SVec& v) {
        for (const auto& [j, cj] : v.t) add(j, cj);
    }

    SVec take() {
        SVec r;
        r.t.reserve(m.size());
        for (auto& [j, cj] : m)
            if (!cj.is_zero()) r.t.emplace_back(j, std::move(cj));
        m.clear();
        std::sort(r.t.begin(), r.t.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    }

    const FieldPtr& field() const { return F; }

  private:
    FieldPtr F;
    std::unordered_map<int, Cyc> m;
};

/// dst += s * src via sorted merge (fine for one-shot combinations).
inline void sv_axpy(SVec& dst, const Cyc& s, const SVec& src) {
    if (s.is_zero() || src.empty()) return;
    SVec out;
    out.t.reserve(dst.t.size() + src.t.size());
    size_t i = 0, j = 0;
    while (i < dst.t.size() || j < src.t.size()) {
        if (j == src.t.size() || (i < dst.t.size() && dst.t[i].first < src.t[j].first)) {
            out.t.push_back(dst.t[i++]);
        } else if (i == dst.t.size() || src.t[j].first < dst.t[i].first) {
            Cyc v = src.t[j].second * s;
            if (!v.is_zero()) out.t.emplace_back(src.t[j].first, std::move(v));
            ++j;
        } else {
            Cyc v = dst.t[i].second + src.t[j].second * s;
            if (!v.is_zero()) out.t.emplace_back(dst.t[i].first, std::move(v));
            ++i, ++j;
        }
    }
    dst = std::move(out);
}

inline bool sv_equal(const SVec& a, const SVec& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t k = 0; k < a.t.size(); ++k)
        if (a.t[k].first != b.t[k].first || a.t[k].second != b.t[k].second) return false;
    return true;
}

/// Index of basis tensor e_i (x) e_j inside a tensor square with second factor
/// dimension d2 (row-major pairing).
inline int tensor_index(int i, int j, int d2) { return i * d2 + j; }

}  // namespace forge
