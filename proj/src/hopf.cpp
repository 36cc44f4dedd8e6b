// SPDX-License-Identifier: Apache-2.0

#include "forge/hopf.hpp"

#include <random>
#include <stdexcept>

namespace forge {

// ---------------------------------------------------------------------------
// Linear-extension helpers
// ---------------------------------------------------------------------------

SVec mult_vv(const HopfData& H, const SVec& a, const SVec& b) {
    Accum acc(H.F);
    for (const auto& [i, ci] : a.t)
        for (const auto& [j, cj] : b.t) acc.axpy(ci * cj, H.mult(i, j));
    return acc.take();
}

SVec delta_v(const HopfData& H, const SVec& v) {
    Accum acc(H.F);
    for (const auto& [i, ci] : v.t) acc.axpy(ci, H.delta(i));
    return acc.take();
}

Cyc counit_v(const HopfData& H, const SVec& v) {
    Cyc s = Cyc::zero(H.F);
    for (const auto& [i, ci] : v.t) s += ci * H.counit[i];
    return s;
}

SVec antipode_v(const HopfData& H, const SVec& v) {
    Accum acc(H.F);
    for (const auto& [i, ci] : v.t) acc.axpy(ci, H.antipode(i));
    return acc.take();
}

SVec star_v(const HopfData& H, const SVec& v) {
    Accum acc(H.F);
    for (const auto& [i, ci] : v.t) acc.axpy(ci.conj(), H.star(i));
    return acc.take();
}

SVec tensor_mult(const HopfData& H, const SVec& X, const SVec& Y) {
    const long d = H.dim;
    Accum acc(H.F);
    for (const auto& [u, cu] : X.t) {
        const int u1 = u / d, u2 = u % d;
        for (const auto& [v, cv] : Y.t) {
            const int v1 = v / d, v2 = v % d;
            const Cyc c = cu * cv;
            const SVec& r1 = H.mult(u1, v1);
            const SVec& r2 = H.mult(u2, v2);
            for (const auto& [k1, d1] : r1.t) {
                const Cyc cd1 = c * d1;
                for (const auto& [k2, d2] : r2.t)
                    acc.add(tensor_index(k1, k2, d), cd1 * d2);
            }
        }
    }
    return acc.take();
}

SVec tensor_flip(const HopfData& H, const SVec& X) {
    const long d = H.dim;
    Accum acc(H.F);
    for (const auto& [u, cu] : X.t) acc.add(tensor_index(u % d, u / d, d), cu);
    return acc.take();
}

SVec tensor_of(const SVec& a, const SVec& b, long dim2) {
    SVec r;
    r.t.reserve(a.t.size() * b.t.size());
    for (const auto& [i, ci] : a.t)
        for (const auto& [j, cj] : b.t) {
            Cyc c = ci * cj;
            if (!c.is_zero()) r.t.emplace_back(tensor_index(i, j, dim2), std::move(c));
        }
    std::sort(r.t.begin(), r.t.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
}

SVec tensor_map_both(const HopfData& H, const RowMap& m, const SVec& X) {
    const long d = H.dim;
    Accum acc(H.F);
    for (const auto& [u, cu] : X.t) {
        const SVec& r1 = m(u / d);
        const SVec& r2 = m(u % d);
        for (const auto& [k1, d1] : r1.t) {
            const Cyc c1 = cu * d1;
            for (const auto& [k2, d2] : r2.t) acc.add(tensor_index(k1, k2, d), c1 * d2);
        }
    }
    return acc.take();
}

SVec tensor_star_both(const HopfData& H, const SVec& X) {
    const long d = H.dim;
    Accum acc(H.F);
    for (const auto& [u, cu] : X.t) {
        const Cyc cc = cu.conj();
        const SVec& r1 = H.star(u / d);
        const SVec& r2 = H.star(u % d);
        for (const auto& [k1, d1] : r1.t) {
            const Cyc c1 = cc * d1;
            for (const auto& [k2, d2] : r2.t) acc.add(tensor_index(k1, k2, d), c1 * d2);
        }
    }
    return acc.take();
}

// ---------------------------------------------------------------------------
// Functionals
// ---------------------------------------------------------------------------

Cyc eval_f(const Functional& f, const SVec& v, const FieldPtr& F) {
    Cyc s = Cyc::zero(F);
    for (const auto& [i, ci] : v.t) s += f[i] * ci;
    return s;
}

Functional convolve(const HopfData& H, const Functional& f, const Functional& g) {
    Functional out(H.dim, Cyc::zero(H.F));
    for (long i = 0; i < H.dim; ++i) {
        const SVec& row = H.delta((int)i);
        Cyc s = Cyc::zero(H.F);
        for (const auto& [uv, c] : row.t) s += c * f[uv / H.dim] * g[uv % H.dim];
        out[i] = s;
    }
    return out;
}

Functional counit_functional(const HopfData& H) { return H.counit; }

long convolution_order(const HopfData& H, const Functional& f, long bound) {
    Functional acc = f;
    const Functional eps = H.counit;
    auto equal = [&](const Functional& a, const Functional& b) {
        for (long i = 0; i < H.dim; ++i)
            if (!(a[i] == b[i])) return false;
        return true;
    };
    for (long k = 1; k <= bound; ++k) {
        if (equal(acc, eps)) return k;
        if (k < bound) acc = convolve(H, acc, f);
    }
    return 0;
}

bool is_group_like(const HopfData& H, const SVec& v) {
    if (!(counit_v(H, v) == Cyc::one(H.F))) return false;
    return sv_equal(delta_v(H, v), tensor_of(v, v, H.dim));
}

bool is_character(const HopfData& H, const Functional& f) {
    if (!(eval_f(f, H.unit, H.F) == Cyc::one(H.F))) return false;
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            if (!(eval_f(f, H.mult(i, j), H.F) == f[i] * f[j])) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

namespace {

SVec basis_vec(const HopfData& H, int i) { return SVec::unit(i, Cyc::one(H.F)); }

/// Seeded functional with small integer values, for contracted identities.
Functional probe_functional(const HopfData& H, std::mt19937_64& rng) {
    Functional f(H.dim, Cyc::zero(H.F));
    std::uniform_int_distribution<int> val(-3, 3);
    for (long i = 0; i < H.dim; ++i) f[i] = Cyc::integer(H.F, val(rng));
    return f;
}

}  // namespace

Report check_hopf(const HopfData& H, const CheckOptions& opts) {
    Report rep;
    const FieldPtr& F = H.F;
    const long d = H.dim;
    const bool small = d <= opts.exhaustive_limit;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, (int)d - 1);
    const Cyc one = Cyc::one(F);

    // --- constants ---
    rep.count(3);
    if (!(counit_v(H, H.unit) == one)) rep.fail("hopf.counit_unit", "eps(1) != 1");
    if (!sv_equal(delta_v(H, H.unit), tensor_of(H.unit, H.unit, d)))
        rep.fail("hopf.delta_unit", "Delta(1) != 1(x)1");
    if (!sv_equal(antipode_v(H, H.unit), H.unit)) rep.fail("hopf.antipode_unit", "S(1) != 1");

    // --- unit laws ---
    {
        auto one_law = [&](int i) {
            rep.count(2);
            SVec bi = basis_vec(H, i);
            if (!sv_equal(mult_vv(H, H.unit, bi), bi))
                rep.fail("hopf.left_unit", H.label(i));
            if (!sv_equal(mult_vv(H, bi, H.unit), bi))
                rep.fail("hopf.right_unit", H.label(i));
        };
        if (small || (long)d <= 4 * opts.sample_rows) {
            for (int i = 0; i < d; ++i) one_law(i);
        } else {
            for (long s = 0; s < opts.sample_rows; ++s) one_law(pick(rng));
        }
    }

    // --- associativity ---
    {
        auto assoc = [&](int i, int j, int k) {
            rep.count(1);
            SVec lhs = mult_vv(H, H.mult(i, j), basis_vec(H, k));
            SVec rhs = mult_vv(H, basis_vec(H, i), H.mult(j, k));
            if (!sv_equal(lhs, rhs))
                rep.fail("hopf.assoc",
                         H.label(i) + "," + H.label(j) + "," + H.label(k));
        };
        if (small) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k) assoc(i, j, k);
        } else {
            for (long s = 0; s < opts.sample_pairs; ++s)
                assoc(pick(rng), pick(rng), pick(rng));
        }
    }

    // --- counit is an algebra map ---
    {
        auto eps_mult = [&](int i, int j) {
            rep.count(1);
            if (!(counit_v(H, H.mult(i, j)) == H.counit[i] * H.counit[j]))
                rep.fail("hopf.counit_mult", H.label(i) + "," + H.label(j));
        };
        if (small) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) eps_mult(i, j);
        } else {
            for (long s = 0; s < opts.sample_pairs; ++s) eps_mult(pick(rng), pick(rng));
        }
    }

    // --- Delta is an algebra map ---
    {
        auto delta_mult = [&](int i, int j) {
            rep.count(1);
            SVec lhs = delta_v(H, H.mult(i, j));
            SVec rhs = tensor_mult(H, H.delta(i), H.delta(j));
            if (!sv_equal(lhs, rhs))
                rep.fail("hopf.delta_mult", H.label(i) + "," + H.label(j));
        };
        if (small) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) delta_mult(i, j);
        } else {
            for (long s = 0; s < opts.sample_pairs; ++s) delta_mult(pick(rng), pick(rng));
        }
    }

    // --- counit laws (cheap per row; always full) ---
    for (int i = 0; i < d; ++i) {
        rep.count(2);
        const SVec& row = H.delta(i);
        Accum l(F), r(F);
        for (const auto& [uv, c] : row.t) {
            l.add(uv % d, c * H.counit[uv / d]);
            r.add(uv / d, c * H.counit[uv % d]);
        }
        SVec bi = basis_vec(H, i);
        if (!sv_equal(l.take(), bi)) rep.fail("hopf.counit_left", H.label(i));
        if (!sv_equal(r.take(), bi)) rep.fail("hopf.counit_right", H.label(i));
    }

    // --- coassociativity ---
    if (small) {
        for (int i = 0; i < d; ++i) {
            rep.count(1);
            const SVec& row = H.delta(i);
            Accum lhs(F), rhs(F);  // over (r, s, t) packed as (r*d + s)*d + t below
            bool overflow = (double)d * d * d > 2.0e9;
            if (overflow) throw std::logic_error("coassoc: triple index overflow at small dim");
            for (const auto& [uv, c] : row.t) {
                const int u = uv / d, v = uv % d;
                for (const auto& [rs, e] : H.delta(u).t)
                    lhs.add((int)((long)rs * d + v), c * e);
                for (const auto& [st, e] : H.delta(v).t)
                    rhs.add((int)((long)u * d * d + st), c * e);
            }
            if (!sv_equal(lhs.take(), rhs.take()))
                rep.fail("hopf.coassoc", H.label(i));
        }
    } else {
        // Exact contracted scans: (phi (x) psi (x) theta) of both sides agree
        // on every row, for several seeded functionals.
        for (long trip = 0; trip < opts.functional_triples; ++trip) {
            Functional phi = probe_functional(H, rng);
            Functional psi = probe_functional(H, rng);
            Functional theta = probe_functional(H, rng);
            // T[u] = (phi (x) psi)(Delta b_u),  U[v] = (psi (x) theta)(Delta b_v)
            Functional T(d, Cyc::zero(F)), U(d, Cyc::zero(F));
            for (int u = 0; u < d; ++u) {
                const SVec& row = H.delta(u);
                Cyc t = Cyc::zero(F), s = Cyc::zero(F);
                for (const auto& [rs, e] : row.t) {
                    t += e * phi[rs / d] * psi[rs % d];
                    s += e * psi[rs / d] * theta[rs % d];
                }
                T[u] = t;
                U[u] = s;
            }
            for (int i = 0; i < d; ++i) {
                rep.count(1);
                const SVec& row = H.delta(i);
                Cyc lhs = Cyc::zero(F), rhs = Cyc::zero(F);
                for (const auto& [uv, c] : row.t) {
                    lhs += c * T[uv / d] * theta[uv % d];
                    rhs += c * phi[uv / d] * U[uv % d];
                }
                if (!(lhs == rhs))
                    rep.fail("hopf.coassoc_contracted",
                             H.label(i) + " probe " + std::to_string(trip));
            }
        }
        if (opts.modular_full_scan) {
            // Full tensor comparison of both sides over F_p, row by row.
            ModCtx ctx = ModCtx::make(F);
            std::vector<int> rows_to_scan;
            if (d <= opts.modular_row_cap)
                for (int i = 0; i < d; ++i) rows_to_scan.push_back(i);
            else
                for (long s = 0; s < opts.modular_row_cap; ++s)
                    rows_to_scan.push_back(pick(rng));
            // cache modular images of all Delta rows (row-sparse pairs)
            std::vector<std::vector<std::pair<int, std::uint64_t>>> dmod(d);
            for (int u = 0; u < d; ++u) {
                const SVec& row = H.delta(u);
                dmod[u].reserve(row.t.size());
                for (const auto& [rs, e] : row.t) dmod[u].emplace_back(rs, ctx.reduce(e));
            }
            for (int i : rows_to_scan) {
                rep.count(1);
                std::unordered_map<std::int64_t, std::uint64_t> diff;
                diff.reserve(1 << 16);
                for (const auto& [uv, c] : dmod[i]) {
                    const int u = uv / d, v = uv % d;
                    for (const auto& [rs, e] : dmod[u]) {
                        std::int64_t key = (std::int64_t)rs * d + v;
                        auto& slot = diff[key];
                        slot = ctx.add(slot, ctx.mul(c, e));
                    }
                    for (const auto& [st, e] : dmod[v]) {
                        std::int64_t key = (std::int64_t)u * d * d + st;
                        auto& slot = diff[key];
                        slot = ctx.sub(slot, ctx.mul(c, e));
                    }
                }
                bool zero = true;
                for (const auto& [k, vv] : diff)
                    if (vv != 0) {
                        zero = false;
                        break;
                    }
                if (!zero) rep.fail("hopf.coassoc_modular", H.label(i));
            }
        }
    }

    // --- antipode laws ---
    {
        auto anti = [&](int i) {
            rep.count(2);
            const SVec& row = H.delta(i);
            Accum l(F), r(F);
            for (const auto& [uv, c] : row.t) {
                const int u = uv / d, v = uv % d;
                l.axpy(c, mult_vv(H, H.antipode(u), basis_vec(H, v)));
                r.axpy(c, mult_vv(H, basis_vec(H, u), H.antipode(v)));
            }
            SVec want = H.unit.scaled(H.counit[i]);
            if (!sv_equal(l.take(), want)) rep.fail("hopf.antipode_left", H.label(i));
            if (!sv_equal(r.take(), want)) rep.fail("hopf.antipode_right", H.label(i));
        };
        if (small) {
            for (int i = 0; i < d; ++i) anti(i);
        } else {
            for (long s = 0; s < opts.sample_rows; ++s) anti(pick(rng));
        }
    }

    return rep;
}

Report check_star(const HopfData& H, const CheckOptions& opts) {
    Report rep;
    if (!H.has_star()) {
        rep.fail("star.missing", "no star structure present");
        return rep;
    }
    const FieldPtr& F = H.F;
    const long d = H.dim;
    const bool small = d <= opts.exhaustive_limit;
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> pick(0, (int)d - 1);

    // involution and S o * twice = id and coalgebra compatibility: full scans
    for (int i = 0; i < d; ++i) {
        SVec bi = basis_vec(H, i);
        rep.count(1);
        if (!sv_equal(star_v(H, H.star(i)), bi)) rep.fail("star.involution", H.label(i));
        rep.count(1);
        if (!(counit_v(H, H.star(i)) == H.counit[i].conj()))
            rep.fail("star.counit", H.label(i));
        rep.count(1);
        // Delta(a^*) = (* (x) *)(Delta a)
        if (!sv_equal(delta_v(H, H.star(i)), tensor_star_both(H, H.delta(i))))
            rep.fail("star.delta", H.label(i));
        rep.count(1);
        // S o * is an involution:  S((S(a^*))^*) = a
        if (!sv_equal(star_v(H, antipode_v(H, star_v(H, H.antipode(i)))), bi))
            rep.fail("star.antipode_involution", H.label(i));
    }

    // antihomomorphism: (ab)^* = b^* a^*
    {
        auto antih = [&](int i, int j) {
            rep.count(1);
            SVec lhs = star_v(H, H.mult(i, j));
            SVec rhs = mult_vv(H, H.star(j), H.star(i));
            if (!sv_equal(lhs, rhs)) rep.fail("star.antihom", H.label(i) + "," + H.label(j));
        };
        if (small) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) antih(i, j);
        } else {
            for (long s = 0; s < opts.sample_pairs; ++s) antih(pick(rng), pick(rng));
        }
    }
    (void)F;
    return rep;
}

// ---------------------------------------------------------------------------
// Dual Hopf algebra (materialized; small dimensions)
// ---------------------------------------------------------------------------

HopfPtr dual_hopf(const HopfData& H) {
    const long d = H.dim;
    const FieldPtr& F = H.F;
    if (d > 800) throw std::invalid_argument("dual_hopf: dimension too large to materialize");

    auto D = std::make_shared<HopfData>();
    D->F = F;
    D->dim = d;

    // dual multiplication from Delta rows: coeff of (i,j) in Delta(b_w)
    std::vector<std::vector<SVec>> mult_table(d, std::vector<SVec>(d));
    {
        std::vector<Accum> acc;  // per (i,j) flattened would be d^2; scatter instead
        std::vector<std::vector<std::vector<std::pair<int, Cyc>>>> cell(
            d, std::vector<std::vector<std::pair<int, Cyc>>>(d));
        for (int w = 0; w < d; ++w)
            for (const auto& [uv, c] : H.delta(w).t)
                cell[uv / d][uv % d].emplace_back(w, c);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                auto& v = cell[i][j];
                std::sort(v.begin(), v.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                mult_table[i][j].t = std::move(v);
            }
    }
    D->mult = MultMap(std::move(mult_table));

    // dual comultiplication from multiplication rows
    {
        std::vector<SVec> rows(d);
        std::vector<std::vector<std::pair<int, Cyc>>> terms(d);
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v)
                for (const auto& [w, c] : H.mult(u, v).t)
                    terms[w].emplace_back(tensor_index(u, v, d), c);
        for (int w = 0; w < d; ++w) {
            std::sort(terms[w].begin(), terms[w].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows[w].t = std::move(terms[w]);
        }
        D->delta = RowMap(std::move(rows));
    }

    // dual unit = counit of H;  dual counit = evaluation at 1_H
    for (int i = 0; i < d; ++i)
        if (!H.counit[i].is_zero()) D->unit.t.emplace_back(i, H.counit[i]);
    D->counit.assign(d, Cyc::zero(F));
    for (const auto& [i, ci] : H.unit.t) D->counit[i] = ci;

    // dual antipode = transpose of S
    {
        std::vector<std::vector<std::pair<int, Cyc>>> terms(d);
        for (int j = 0; j < d; ++j)
            for (const auto& [i, c] : H.antipode(j).t) terms[i].emplace_back(j, c);
        std::vector<SVec> rows(d);
        for (int i = 0; i < d; ++i) {
            std::sort(terms[i].begin(), terms[i].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows[i].t = std::move(terms[i]);
        }
        D->antipode = RowMap(std::move(rows));
    }

    // dual star:  f^*(h) = conj(f(S(h)^*))   =>   (E_i)^* = sum_j conj(c_ij) E_j
    // with c_ij = coefficient of b_i in (S(b_j))^*.
    if (H.has_star()) {
        std::vector<std::vector<std::pair<int, Cyc>>> terms(d);
        for (int j = 0; j < d; ++j) {
            SVec w = star_v(H, H.antipode(j));
            for (const auto& [i, c] : w.t) terms[i].emplace_back(j, c.conj());
        }
        std::vector<SVec> rows(d);
        for (int i = 0; i < d; ++i) {
            std::sort(terms[i].begin(), terms[i].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows[i].t = std::move(terms[i]);
        }
        D->star = RowMap(std::move(rows));
    }

    D->basis_name.resize(d);
    for (int i = 0; i < d; ++i) D->basis_name[i] = "E[" + H.label(i) + "]";
    return D;
}

// ---------------------------------------------------------------------------
// Integrals
// ---------------------------------------------------------------------------

namespace {

/// Equation rows (over column index = coefficient of the unknown v) imposing
/// g v = eps(g) v for one algebra element g.
std::vector<SVec> integral_equations(const HopfData& H, const SVec& g) {
    const long d = H.dim;
    Cyc eg = counit_v(H, g);
    // operator column j: g * b_j
    std::vector<std::vector<std::pair<int, Cyc>>> rows(d);
    for (int j = 0; j < d; ++j) {
        SVec col = mult_vv(H, g, SVec::unit(j, Cyc::one(H.F)));
        for (const auto& [k, c] : col.t) rows[k].emplace_back(j, c);
    }
    for (int j = 0; j < d; ++j) rows[j].emplace_back(j, -eg);
    std::vector<SVec> out(d);
    for (int k = 0; k < d; ++k) {
        std::sort(rows[k].begin(), rows[k].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Accum acc(H.F);
        for (auto& [j, c] : rows[k]) acc.add(j, c);
        out[k] = acc.take();
    }
    return out;
}

std::vector<SVec> generator_list(const HopfData& H) {
    std::vector<SVec> gens = H.alg_gens;
    if (gens.empty())
        for (int i = 0; i < H.dim; ++i) gens.push_back(SVec::unit(i, Cyc::one(H.F)));
    return gens;
}

}  // namespace

SVec left_integral_exact(const HopfData& H) {
    SparseEchelonExact ech(H.F, H.dim);
    for (const SVec& g : generator_list(H))
        for (SVec& row : integral_equations(H, g)) ech.feed(std::move(row));
    auto ker = ech.kernel_basis();
    if (ker.empty()) return SVec{};
    SVec v;
    for (long i = 0; i < H.dim; ++i)
        if (!ker[0][i].is_zero()) v.t.emplace_back((int)i, ker[0][i]);
    return v;
}

Report check_left_integral(const HopfData& H, const SVec& v) {
    Report rep;
    for (const SVec& g : generator_list(H)) {
        rep.count(1);
        SVec lhs = mult_vv(H, g, v);
        SVec rhs = v.scaled(counit_v(H, g));
        if (!sv_equal(lhs, rhs)) rep.fail("integral.eigen", "generator failed");
    }
    return rep;
}

bool integral_nullity_certificate(const HopfData& H, const std::vector<int>& algebra_gens,
                                  long expected, const ModCtx& ctx) {
    ModEchelon ech(ctx, H.dim);
    for (int gi : algebra_gens) {
        SVec g = SVec::unit(gi, Cyc::one(H.F));
        for (SVec& row : integral_equations(H, g)) ech.feed(row);
    }
    return H.dim - ech.rank() == expected;
}

bool integral_counit_nonzero(const HopfData& H, const SVec& integral) {
    return !counit_v(H, integral).is_zero();
}

std::vector<SVec> filter_group_likes(const HopfData& H, const std::vector<SVec>& cands) {
    std::vector<SVec> out;
    for (const SVec& v : cands)
        if (is_group_like(H, v)) out.push_back(v);
    return out;
}

Functional distinguished_character(const HopfData& H, const SVec& integral) {
    if (integral.empty()) throw std::invalid_argument("distinguished_character: zero integral");
    const int k0 = integral.t.front().first;
    const Cyc pivot_inv = integral.t.front().second.inv();
    Functional alpha(H.dim, Cyc::zero(H.F));
    for (int i = 0; i < H.dim; ++i) {
        SVec w = mult_vv(H, integral, SVec::unit(i, Cyc::one(H.F)));
        Cyc a = w.coeff(k0, H.F) * pivot_inv;
        if (!sv_equal(w, integral.scaled(a)))
            throw std::logic_error("distinguished_character: Lambda H not one-dimensional");
        alpha[i] = a;
    }
    return alpha;
}

bool commutes_with_generators(const HopfData& H, const SVec& z,
                              const std::vector<int>& gens) {
    for (int gi : gens) {
        SVec g = SVec::unit(gi, Cyc::one(H.F));
        if (!sv_equal(mult_vv(H, z, g), mult_vv(H, g, z))) return false;
    }
    return true;
}

}  // namespace forge
