// SPDX-License-Identifier: Apache-2.0

#include "forge/linalg.hpp"

#include <stdexcept>

namespace forge {

// ---------------------------------------------------------------------------
// Exact elimination
// ---------------------------------------------------------------------------

long rref_exact(DMat& A, std::vector<long>* pivots) {
    long rank = 0;
    for (long col = 0; col < A.nc && rank < A.nr; ++col) {
        // Find a pivot, preferring rows whose entry has few nonzero coordinates.
        long piv = -1;
        size_t best = ~size_t(0);
        for (long r = rank; r < A.nr; ++r) {
            const Cyc& v = A.at(r, col);
            if (v.is_zero()) continue;
            size_t w = 0;
            for (const Rat& q : v.c)
                if (sgn(q) != 0) ++w;
            if (w < best) {
                best = w;
                piv = r;
            }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = col; j < A.nc; ++j) std::swap(A.at(piv, j), A.at(rank, j));
        Cyc pinv = A.at(rank, col).inv();
        for (long j = col; j < A.nc; ++j) {
            if (!A.at(rank, j).is_zero()) A.at(rank, j) = A.at(rank, j) * pinv;
        }
        for (long r = 0; r < A.nr; ++r) {
            if (r == rank) continue;
            const Cyc f = A.at(r, col);
            if (f.is_zero()) continue;
            for (long j = col; j < A.nc; ++j) {
                if (!A.at(rank, j).is_zero()) A.at(r, j) -= f * A.at(rank, j);
            }
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

long rank_exact(DMat A) { return rref_exact(A); }

std::vector<std::vector<Cyc>> nullspace_exact(DMat A) {
    std::vector<long> pivots;
    rref_exact(A, &pivots);
    std::vector<char> is_pivot(A.nc, 0);
    for (long c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Cyc>> basis;
    for (long free_col = 0; free_col < A.nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Cyc> v(A.nc, Cyc::zero(A.F));
        v[free_col] = Cyc::one(A.F);
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -A.at((long)r, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_exact(DMat A, std::vector<Cyc> b, std::vector<Cyc>& x) {
    if ((long)b.size() != A.nr) throw std::invalid_argument("solve_exact: size mismatch");
    DMat aug(A.F, A.nr, A.nc + 1);
    for (long r = 0; r < A.nr; ++r) {
        for (long c = 0; c < A.nc; ++c) aug.at(r, c) = std::move(A.at(r, c));
        aug.at(r, A.nc) = std::move(b[r]);
    }
    std::vector<long> pivots;
    long rank = rref_exact(aug, &pivots);
    if (!pivots.empty() && pivots.back() == A.nc) return false;  // row [0..0 | 1]
    x.assign(A.nc, Cyc::zero(A.F));
    for (long r = 0; r < rank; ++r) x[pivots[r]] = aug.at(r, A.nc);
    return true;
}

DMat inverse_exact(const DMat& A) {
    if (A.nr != A.nc) throw std::invalid_argument("inverse_exact: matrix not square");
    DMat aug(A.F, A.nr, 2 * A.nc);
    for (long r = 0; r < A.nr; ++r) {
        for (long c = 0; c < A.nc; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.nc + r) = Cyc::one(A.F);
    }
    long rank = rref_exact(aug);
    if (rank != A.nr) throw std::domain_error("inverse_exact: singular matrix");
    DMat inv(A.F, A.nr, A.nc);
    for (long r = 0; r < A.nr; ++r)
        for (long c = 0; c < A.nc; ++c) inv.at(r, c) = std::move(aug.at(r, A.nc + c));
    return inv;
}

// ---------------------------------------------------------------------------
// Exact sparse echelon
// ---------------------------------------------------------------------------

bool SparseEchelonExact::feed(SVec row) {
    // Stored rows are mutually reduced and sorted by pivot column; one pass in
    // ascending pivot order fully reduces the incoming row.
    for (size_t r = 0; r < rows_.size(); ++r) {
        Cyc f = row.coeff((int)pivot_[r], F_);
        if (f.is_zero()) continue;
        sv_axpy(row, -f, rows_[r]);
    }
    if (row.empty()) return false;
    long p = row.t.front().first;
    Cyc pinv = row.t.front().second.inv();
    if (!(row.t.front().second == Cyc::one(F_))) row = row.scaled(pinv);
    for (auto& er : rows_) {
        Cyc f = er.coeff((int)p, F_);
        if (f.is_zero()) continue;
        sv_axpy(er, -f, row);
    }
    size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivot_.insert(pivot_.begin() + pos, p);
    return true;
}

std::vector<std::vector<Cyc>> SparseEchelonExact::kernel_basis() const {
    std::vector<char> is_pivot(nc_, 0);
    for (long p : pivot_) is_pivot[p] = 1;
    std::vector<std::vector<Cyc>> basis;
    for (long fc = 0; fc < nc_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Cyc> v(nc_, Cyc::zero(F_));
        v[fc] = Cyc::one(F_);
        for (size_t r = 0; r < rows_.size(); ++r) {
            Cyc a = rows_[r].coeff((int)fc, F_);
            if (!a.is_zero()) v[pivot_[r]] = -a;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Modular elimination
// ---------------------------------------------------------------------------

void reduce_row(const ModCtx& ctx, const SVec& v, std::uint64_t* row) {
    for (const auto& [j, cj] : v.t) row[j] = ctx.reduce(cj);
}

long rank_mod(const ModCtx& ctx, ModMat& A) {
    long rank = 0;
    for (long col = 0; col < A.nc && rank < A.nr; ++col) {
        long piv = -1;
        for (long r = rank; r < A.nr; ++r) {
            if (A.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = col; j < A.nc; ++j) std::swap(A.at(piv, j), A.at(rank, j));
        std::uint64_t pinv = ctx.inv(A.at(rank, col));
        for (long j = col; j < A.nc; ++j) A.at(rank, j) = ctx.mul(A.at(rank, j), pinv);
        for (long r = rank + 1; r < A.nr; ++r) {
            std::uint64_t f = A.at(r, col);
            if (f == 0) continue;
            for (long j = col; j < A.nc; ++j)
                A.at(r, j) = ctx.sub(A.at(r, j), ctx.mul(f, A.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

bool ModEchelon::feed(std::vector<std::uint64_t> row) {
    if ((long)row.size() != nc_) throw std::invalid_argument("ModEchelon: row size mismatch");
    // Invariant: stored rows are in *reduced* echelon form (mutually reduced,
    // unit pivots) and sorted by pivot column.  One forward pass in ascending
    // pivot order then fully reduces the incoming row.
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::uint64_t f = row[pivot_[r]];
        if (f == 0) continue;
        const auto& er = rows_[r];
        for (long j = pivot_[r]; j < nc_; ++j)
            if (er[j] != 0) row[j] = ctx_.sub(row[j], ctx_.mul(f, er[j]));
    }
    long p = -1;
    for (long j = 0; j < nc_; ++j) {
        if (row[j] != 0) {
            p = j;
            break;
        }
    }
    if (p < 0) return false;
    std::uint64_t pinv = ctx_.inv(row[p]);
    for (long j = p; j < nc_; ++j) row[j] = ctx_.mul(row[j], pinv);
    // Back-substitute to keep stored rows reduced against the new pivot.
    for (auto& er : rows_) {
        std::uint64_t f = er[p];
        if (f == 0) continue;
        for (long j = p; j < nc_; ++j)
            if (row[j] != 0) er[j] = ctx_.sub(er[j], ctx_.mul(f, row[j]));
    }
    size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivot_.insert(pivot_.begin() + pos, p);
    return true;
}

bool ModEchelon::feed(const SVec& v) {
    std::vector<std::uint64_t> row(nc_, 0);
    reduce_row(ctx_, v, row.data());
    return feed(std::move(row));
}

}  // namespace forge
