// SPDX-License-Identifier: Apache-2.0
/**
 * @file linalg.hpp
 * @brief Exact and modular linear algebra.
 *
 * Two routes are provided and used side by side throughout:
 *
 *  - Exact dense Gaussian elimination over Q(zeta_N), used whenever the
 *    matrices are small enough (a few hundred rows).  Ranks, kernels and
 *    solutions computed here are unconditionally exact.
 *
 *  - Dense elimination over F_p with p = 1 (mod N) (see modp.hpp), used for
 *    large matrices.  Since specialization can only lower rank, a modular
 *    rank equal to the column/row bound certifies full rank exactly, and a
 *    modular nullity is an exact upper bound on the true nullity.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "forge/modp.hpp"
#include "forge/sparse.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Exact dense matrices
// ---------------------------------------------------------------------------

class DMat {
  public:
    FieldPtr F;
    long nr = 0, nc = 0;
    std::vector<Cyc> a;  // row-major

    DMat() = default;
    DMat(FieldPtr field, long rows, long cols)
        : F(std::move(field)), nr(rows), nc(cols), a(rows * cols, Cyc::zero(F)) {}

    Cyc& at(long r, long c) { return a[r * nc + c]; }
    const Cyc& at(long r, long c) const { return a[r * nc + c]; }

    void set_row(long r, const SVec& v) {
        for (const auto& [j, cj] : v.t) at(r, j) = cj;
    }
};

/// Row-reduce in place; returns the rank.  Pivot columns (ascending) are
/// appended to *pivots when given.
long rref_exact(DMat& A, std::vector<long>* pivots = nullptr);

long rank_exact(DMat A);

/// Basis of the right kernel {x : A x = 0}; each entry is one kernel vector.
std::vector<std::vector<Cyc>> nullspace_exact(DMat A);

/// Solve A x = b exactly.  Returns false if inconsistent.
bool solve_exact(DMat A, std::vector<Cyc> b, std::vector<Cyc>& x);

/// Exact matrix inverse (throws std::domain_error if singular).
DMat inverse_exact(const DMat& A);

// ---------------------------------------------------------------------------
// Modular dense matrices
// ---------------------------------------------------------------------------

class ModMat {
  public:
    long nr = 0, nc = 0;
    std::vector<std::uint64_t> a;  // row-major

    ModMat() = default;
    ModMat(long rows, long cols) : nr(rows), nc(cols), a(rows * cols, 0) {}

    std::uint64_t& at(long r, long c) { return a[r * nc + c]; }
    std::uint64_t at(long r, long c) const { return a[r * nc + c]; }
};

/// Reduce an exact sparse row into a modular dense row.
void reduce_row(const ModCtx& ctx, const SVec& v, std::uint64_t* row);

/// Elimination rank over F_p (destroys A).
long rank_mod(const ModCtx& ctx, ModMat& A);

/// Incremental *exact* row-echelon accumulator over sparse rows.  Stored rows
/// are kept mutually reduced with unit pivots, so a kernel basis can be read
/// off directly.  Suited to the very sparse equation systems that arise from
/// structure-constant constraints.
class SparseEchelonExact {
  public:
    SparseEchelonExact(FieldPtr F, long cols) : F_(std::move(F)), nc_(cols) {}

    /// Returns true if the row was independent of those seen so far.
    bool feed(SVec row);

    long rank() const { return (long)rows_.size(); }
    long cols() const { return nc_; }
    const std::vector<SVec>& rows() const { return rows_; }
    const std::vector<long>& pivots() const { return pivot_; }

    /// Basis of {x : R x = 0} for the row space R accumulated so far.
    std::vector<std::vector<Cyc>> kernel_basis() const;

  private:
    FieldPtr F_;
    long nc_;
    std::vector<SVec> rows_;    // reduced echelon rows, unit pivots
    std::vector<long> pivot_;   // sorted ascending
};

/// Incremental row-echelon accumulator over F_p.  Feed rows one at a time;
/// the rank is available at any point.  Memory stays at one dense row per
/// independent row seen so far, so huge equation systems can be streamed.
class ModEchelon {
  public:
    ModEchelon(const ModCtx& ctx, long cols) : ctx_(ctx), nc_(cols) {}

    /// Returns true if the row was independent of the rows seen so far.
    bool feed(std::vector<std::uint64_t> row);
    bool feed(const SVec& v);

    long rank() const { return (long)rows_.size(); }
    long cols() const { return nc_; }

  private:
    const ModCtx& ctx_;
    long nc_;
    std::vector<std::vector<std::uint64_t>> rows_;  // echelon rows, unit pivots
    std::vector<long> pivot_;                       // pivot column per row
};

}  // namespace forge
