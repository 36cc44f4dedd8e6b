// SPDX-License-Identifier: Apache-2.0

#include "forge/constructors.hpp"

#include <stdexcept>

namespace forge {

// ---------------------------------------------------------------------------
// Cocycle validation
// ---------------------------------------------------------------------------

Report validate_cocycles(const FieldPtr& F, const MatchedPair& mp, const Cocycle3& sigma,
                         const Cocycle3& tau) {
    Report rep;
    const FiniteGroup &G = mp.G, &Fg = mp.F;
    const Cyc one = Cyc::one(F);
    auto ra = [&](int g, int f) { return mp.ract[g][f]; };
    auto la = [&](int g, int f) { return mp.lact[g][f]; };

    // normalization
    for (int g = 0; g < G.n; ++g)
        for (int f = 0; f < Fg.n; ++f) {
            rep.count(4);
            if (!(sigma(g, 0, f) == one)) rep.fail("cocycle.sigma_norm1", G.label(g));
            if (!(sigma(g, f, 0) == one)) rep.fail("cocycle.sigma_norm2", G.label(g));
            if (!(tau(0, g, f) == one)) rep.fail("cocycle.tau_norm1", G.label(g));
            if (!(tau(g, 0, f) == one)) rep.fail("cocycle.tau_norm2", G.label(g));
        }
    for (int f = 0; f < Fg.n; ++f)
        for (int f2 = 0; f2 < Fg.n; ++f2) {
            rep.count(1);
            if (!(sigma(0, f, f2) == one)) rep.fail("cocycle.sigma_norm_g", Fg.label(f));
        }
    for (int g = 0; g < G.n; ++g)
        for (int g2 = 0; g2 < G.n; ++g2) {
            rep.count(1);
            if (!(tau(g, g2, 0) == one)) rep.fail("cocycle.tau_norm_f", G.label(g));
        }

    // unimodularity
    for (int g = 0; g < G.n; ++g)
        for (int f = 0; f < Fg.n; ++f)
            for (int f2 = 0; f2 < Fg.n; ++f2) {
                rep.count(1);
                Cyc s = sigma(g, f, f2);
                if (!(s * s.conj() == one)) rep.fail("cocycle.sigma_unimodular", G.label(g));
            }
    for (int g = 0; g < G.n; ++g)
        for (int g2 = 0; g2 < G.n; ++g2)
            for (int f = 0; f < Fg.n; ++f) {
                rep.count(1);
                Cyc s = tau(g, g2, f);
                if (!(s * s.conj() == one)) rep.fail("cocycle.tau_unimodular", G.label(g));
            }

    // sigma cocycle: sigma(g<|f, f', f'') sigma(g, f, f'f'') = sigma(g,f,f') sigma(g,ff',f'')
    for (int g = 0; g < G.n; ++g)
        for (int f = 0; f < Fg.n; ++f)
            for (int f2 = 0; f2 < Fg.n; ++f2)
                for (int f3 = 0; f3 < Fg.n; ++f3) {
                    rep.count(1);
                    Cyc lhs = sigma(ra(g, f), f2, f3) * sigma(g, f, Fg.op(f2, f3));
                    Cyc rhs = sigma(g, f, f2) * sigma(g, Fg.op(f, f2), f3);
                    if (!(lhs == rhs))
                        rep.fail("cocycle.sigma_cocycle",
                                 G.label(g) + "," + Fg.label(f) + "," + Fg.label(f2) + "," +
                                     Fg.label(f3));
                }

    // tau cocycle: tau(gg',g'',f) tau(g,g',g''|>f) = tau(g',g'',f) tau(g,g'g'',f)
    for (int g = 0; g < G.n; ++g)
        for (int g2 = 0; g2 < G.n; ++g2)
            for (int g3 = 0; g3 < G.n; ++g3)
                for (int f = 0; f < Fg.n; ++f) {
                    rep.count(1);
                    Cyc lhs = tau(G.op(g, g2), g3, f) * tau(g, g2, la(g3, f));
                    Cyc rhs = tau(g2, g3, f) * tau(g, G.op(g2, g3), f);
                    if (!(lhs == rhs))
                        rep.fail("cocycle.tau_cocycle",
                                 G.label(g) + "," + G.label(g2) + "," + G.label(g3) + "," +
                                     Fg.label(f));
                }

    // mixed compatibility:
    // sigma(gg',f,f') tau(g,g',ff')
    //   = sigma(g, g'|>f, (g'<|f)|>f') sigma(g',f,f') tau(g,g',f)
    //     tau(g <| (g'|>f), g'<|f, f')
    for (int g = 0; g < G.n; ++g)
        for (int g2 = 0; g2 < G.n; ++g2)
            for (int f = 0; f < Fg.n; ++f)
                for (int f2 = 0; f2 < Fg.n; ++f2) {
                    rep.count(1);
                    Cyc lhs = sigma(G.op(g, g2), f, f2) * tau(g, g2, Fg.op(f, f2));
                    Cyc rhs = sigma(g, la(g2, f), la(ra(g2, f), f2)) * sigma(g2, f, f2) *
                              tau(g, g2, f) * tau(ra(g, la(g2, f)), ra(g2, f), f2);
                    if (!(lhs == rhs))
                        rep.fail("cocycle.mixed",
                                 G.label(g) + "," + G.label(g2) + "," + Fg.label(f) + "," +
                                     Fg.label(f2));
                }
    return rep;
}

// ---------------------------------------------------------------------------
// Bicrossed product
// ---------------------------------------------------------------------------

HopfPtr bicrossed_product(const FieldPtr& F, const MatchedPair& mp, const Cocycle3& sigma,
                          const Cocycle3& tau, bool with_star) {
    const int nG = mp.G.n, nF = mp.F.n;
    const long dim = (long)nG * nF;
    auto H = std::make_shared<HopfData>();
    H->F = F;
    H->dim = dim;

    const FiniteGroup G = mp.G;
    const FiniteGroup Fg = mp.F;
    const auto ract = mp.ract;
    const auto lact = mp.lact;

    // multiplication (single term or zero per pair)
    {
        std::vector<std::vector<SVec>> table(dim, std::vector<SVec>(dim));
        for (int g = 0; g < nG; ++g)
            for (int f = 0; f < nF; ++f) {
                const int i = g * nF + f;
                const int gf = ract[g][f];
                for (int g2 = 0; g2 < nG; ++g2)
                    for (int f2 = 0; f2 < nF; ++f2) {
                        if (g2 != gf) continue;
                        table[i][g2 * nF + f2] =
                            SVec::unit(g * nF + Fg.op(f, f2), sigma(g, f, f2));
                    }
            }
        H->mult = MultMap(std::move(table));
    }

    // comultiplication
    {
        std::vector<SVec> rows(dim);
        for (int g = 0; g < nG; ++g)
            for (int f = 0; f < nF; ++f) {
                Accum acc(F);
                for (int g1 = 0; g1 < nG; ++g1) {
                    const int g2 = G.op(G.inv[g1], g);
                    acc.add(tensor_index(g1 * nF + lact[g2][f], g2 * nF + f, dim),
                            tau(g1, g2, f));
                }
                rows[g * nF + f] = acc.take();
            }
        H->delta = RowMap(std::move(rows));
    }

    H->counit.assign(dim, Cyc::zero(F));
    for (int f = 0; f < nF; ++f) H->counit[0 * nF + f] = Cyc::one(F);

    for (int g = 0; g < nG; ++g) H->unit.t.emplace_back(g * nF + 0, Cyc::one(F));

    // antipode
    {
        std::vector<SVec> rows(dim);
        for (int g = 0; g < nG; ++g)
            for (int f = 0; f < nF; ++f) {
                const int gi = G.inv[g];
                const int gf = lact[g][f];
                const int gfi = Fg.inv[gf];
                Cyc coeff = sigma(gi, gf, gfi).inv() * tau(gi, g, f).inv();
                rows[g * nF + f] = SVec::unit(G.inv[ract[g][f]] * nF + gfi, coeff);
            }
        H->antipode = RowMap(std::move(rows));
    }

    if (with_star) {
        // (e_g # f)^* = sigma(g, f, f^-1)^-1 e_{g <| f} # f^-1.  The inverse
        // (= conjugate) on the cocycle factor is forced by the
        // antihomomorphism law; the cocycle identity then gives involutivity.
        std::vector<SVec> rows(dim);
        for (int g = 0; g < nG; ++g)
            for (int f = 0; f < nF; ++f) {
                const int fi = Fg.inv[f];
                rows[g * nF + f] = SVec::unit(ract[g][f] * nF + fi, sigma(g, f, fi).inv());
            }
        H->star = RowMap(std::move(rows));
    }

    // names and generators
    H->basis_name.resize(dim);
    for (int g = 0; g < nG; ++g)
        for (int f = 0; f < nF; ++f)
            H->basis_name[g * nF + f] = "e[" + G.label(g) + "]#" + Fg.label(f);
    for (int g = 0; g < nG; ++g) {
        H->alg_gens.push_back(SVec::unit(g * nF + 0, Cyc::one(F)));
        H->gen_name.push_back("e[" + G.label(g) + "]");
    }
    for (int fg : generating_set(Fg)) {
        SVec v;
        for (int g = 0; g < nG; ++g) v.t.emplace_back(g * nF + fg, Cyc::one(F));
        H->alg_gens.push_back(std::move(v));
        H->gen_name.push_back("1#" + Fg.label(fg));
    }
    return H;
}

// ---------------------------------------------------------------------------
// Carry-twisted family
// ---------------------------------------------------------------------------

CarryTwisted carry_twisted(const FieldPtr& F, long p, long q, long t, long twist) {
    if (F->N % q != 0)
        throw std::invalid_argument("carry_twisted: q must divide the conductor");
    CarryTwisted out;
    out.p = p;
    out.q = q;
    out.t = t;
    out.twist = ((twist % q) + q) % q;

    MatchedPair mp;
    mp.G = semidirect_cp_cq(p, q, t);
    mp.F = cyclic_group((int)q);
    mp.ract.assign(mp.G.n, std::vector<int>(mp.F.n));
    mp.lact.assign(mp.G.n, std::vector<int>(mp.F.n));
    // (a^i b^j) <| x^m = a^{i t^m} b^j ; trivial |>
    std::vector<long> tp(q);
    tp[0] = 1;
    for (long m = 1; m < q; ++m) tp[m] = (tp[m - 1] * t) % p;
    for (int g = 0; g < mp.G.n; ++g) {
        const long i = sd_i(p, g), j = sd_j(p, g);
        for (int m = 0; m < (int)q; ++m) {
            mp.ract[g][m] = sd_index(p, (i * tp[m]) % p, j);
            mp.lact[g][m] = m;
        }
    }
    {
        Report rep = validate_matched_pair(mp);
        if (!rep.ok())
            throw std::logic_error("carry_twisted: matched pair validation failed: " +
                                   rep.summary());
    }

    const long N = F->N;
    const long tw = out.twist;
    Cocycle3 sigma = [F, N, q, tw, p](int g, int m, int n) {
        const long j = sd_j(p, g);
        const long carry = (m + n) / q;
        return Cyc::root(F, (N / q) * (j * tw * carry));
    };
    Cocycle3 tau = [F](int, int, int) { return Cyc::one(F); };
    {
        Report rep = validate_cocycles(F, mp, sigma, tau);
        if (!rep.ok())
            throw std::logic_error("carry_twisted: cocycle validation failed: " +
                                   rep.summary());
    }

    out.H = bicrossed_product(F, mp, sigma, tau, /*with_star=*/true);
    out.mp = mp;
    out.b_elt = sd_index(p, 0, 1);
    for (int g = 0; g < mp.G.n; ++g)
        out.x_elt.t.emplace_back(bp_index(mp, g, 1), Cyc::one(F));
    out.chi.assign(out.H->dim, Cyc::zero(F));
    for (int m = 0; m < (int)q; ++m)
        out.chi[bp_index(mp, out.b_elt, m)] = Cyc::root(F, (N / q) * m);
    return out;
}

// ---------------------------------------------------------------------------
// Rank-n Taft algebras
// ---------------------------------------------------------------------------

namespace {

struct TaftShape {
    long l, rank, dim;
    long lr;  // l^rank

    std::pair<std::vector<long>, std::vector<long>> decode(int idx) const {
        std::vector<long> A(rank), T(rank);
        long a = idx % lr, t = idx / lr;
        for (long i = 0; i < rank; ++i) {
            A[i] = a % l;
            a /= l;
            T[i] = t % l;
            t /= l;
        }
        return {A, T};
    }
    int encode(const std::vector<long>& A, const std::vector<long>& T) const {
        long a = 0, t = 0;
        for (long i = rank - 1; i >= 0; --i) {
            a = a * l + (((A[i] % l) + l) % l);
            t = t * l + (((T[i] % l) + l) % l);
        }
        return (int)(a + lr * t);
    }
};

}  // namespace

int Taft::idx(const std::vector<long>& A, const std::vector<long>& T) const {
    TaftShape s{l, rank, 0, 1};
    for (long i = 0; i < rank; ++i) s.lr *= l;
    return s.encode(A, T);
}

int Taft::g_idx(const std::vector<long>& T) const {
    return idx(std::vector<long>(rank, 0), T);
}

int Taft::xi_idx(long i) const {
    std::vector<long> A(rank, 0);
    A[i] = 1;
    return idx(A, std::vector<long>(rank, 0));
}

int Taft::gi_idx(long i) const {
    std::vector<long> T(rank, 0);
    T[i] = 1;
    return idx(std::vector<long>(rank, 0), T);
}

Cyc gauss_binomial(const FieldPtr& F, const Cyc& q, long a, long j) {
    if (j < 0 || j > a) return Cyc::zero(F);
    // [a, j]_q = [a-1, j-1]_q + q^j [a-1, j]_q
    std::vector<Cyc> row(a + 1, Cyc::zero(F));
    row[0] = Cyc::one(F);
    for (long n = 1; n <= a; ++n) {
        std::vector<Cyc> nxt(a + 1, Cyc::zero(F));
        nxt[0] = Cyc::one(F);
        for (long k = 1; k <= n; ++k) nxt[k] = row[k - 1] + q.pow(k) * row[k];
        row = std::move(nxt);
    }
    return row[j];
}

Taft taft(const FieldPtr& F, long l, long rank) {
    if (l < 2 || rank < 1) throw std::invalid_argument("taft: need l >= 2, rank >= 1");
    if (F->N % l != 0) throw std::invalid_argument("taft: l must divide the conductor");

    Taft out;
    out.l = l;
    out.rank = rank;
    out.zeta = Cyc::root(F, F->N / l);

    TaftShape sh;
    sh.l = l;
    sh.rank = rank;
    sh.lr = 1;
    for (long i = 0; i < rank; ++i) sh.lr *= l;
    sh.dim = sh.lr * sh.lr;

    auto H = std::make_shared<HopfData>();
    H->F = F;
    H->dim = sh.dim;
    out.H = H;

    const Cyc zeta = out.zeta;

    // multiplication: (x^A g^T)(x^B g^U) = zeta^E x^{A+B} g^{T+U}, zero if any
    // A_i + B_i >= l; E counts the skew commutations
    //   g_i past x_j : +1 if i >= j else -1;   x_k past x_j (k > j): +1.
    auto mult_provider = [sh, zeta](int u, int v) -> SVec {
        auto [A, T] = sh.decode(u);
        auto [B, U] = sh.decode(v);
        std::vector<long> C(sh.rank), W(sh.rank);
        for (long i = 0; i < sh.rank; ++i) {
            if (A[i] + B[i] >= sh.l) return SVec{};
            C[i] = A[i] + B[i];
            W[i] = (T[i] + U[i]) % sh.l;
        }
        long E = 0;
        for (long i = 0; i < sh.rank; ++i)
            for (long j = 0; j < sh.rank; ++j) E += T[i] * B[j] * (i >= j ? 1 : -1);
        for (long k = 0; k < sh.rank; ++k)
            for (long j = 0; j < k; ++j) E += A[k] * B[j];
        return SVec::unit(sh.encode(C, W), zeta.pow(E));
    };
    H->mult = MultMap(sh.dim, mult_provider, /*cache=*/false);

    H->unit = SVec::unit(0, Cyc::one(F));
    H->counit.assign(sh.dim, Cyc::zero(F));
    for (int u = 0; u < sh.dim; ++u) {
        auto [A, T] = sh.decode(u);
        bool xfree = true;
        for (long a : A) xfree = xfree && a == 0;
        H->counit[u] = xfree ? Cyc::one(F) : Cyc::zero(F);
    }

    // Delta rows by multiplying out Delta(x_i)^{A_i} factors, then the
    // group-like part; uses the finished multiplication above.
    {
        HopfData* raw = H.get();
        auto delta_provider = [sh, raw, F](int u) -> SVec {
            auto [A, T] = sh.decode(u);
            // Delta(x_i) = x_i (x) 1 + g_i (x) x_i
            SVec tens = tensor_of(raw->unit, raw->unit, sh.dim);
            for (long i = 0; i < sh.rank; ++i) {
                if (A[i] == 0) continue;
                SVec dxi;
                {
                    std::vector<long> Ai(sh.rank, 0), Ti(sh.rank, 0);
                    Ai[i] = 1;
                    int xi = sh.encode(Ai, std::vector<long>(sh.rank, 0));
                    Ti[i] = 1;
                    int gi = sh.encode(std::vector<long>(sh.rank, 0), Ti);
                    Accum acc(F);
                    acc.add(tensor_index(xi, 0, sh.dim), Cyc::one(F));
                    acc.add(tensor_index(gi, xi, sh.dim), Cyc::one(F));
                    dxi = acc.take();
                }
                for (long rep = 0; rep < A[i]; ++rep) tens = tensor_mult(*raw, tens, dxi);
            }
            int gT = sh.encode(std::vector<long>(sh.rank, 0), T);
            SVec gg = SVec::unit(tensor_index(gT, gT, sh.dim), Cyc::one(F));
            return tensor_mult(*raw, tens, gg);
        };
        H->delta = RowMap(sh.dim, delta_provider, /*cache=*/true);
    }

    // antipode: S(x^A g^T) = g^{-T} (-g_n^-1 x_n)^{A_n} ... (-g_1^-1 x_1)^{A_1}
    {
        HopfData* raw = H.get();
        auto anti_provider = [sh, raw, F](int u) -> SVec {
            auto [A, T] = sh.decode(u);
            std::vector<long> nT(sh.rank);
            for (long i = 0; i < sh.rank; ++i) nT[i] = (sh.l - T[i]) % sh.l;
            SVec acc = SVec::unit(sh.encode(std::vector<long>(sh.rank, 0), nT), Cyc::one(F));
            for (long i = sh.rank - 1; i >= 0; --i) {
                if (A[i] == 0) continue;
                // -g_i^-1 x_i = -zeta^{-1} x_i g_i^{-1}
                std::vector<long> Ai(sh.rank, 0), Ti(sh.rank, 0);
                Ai[i] = 1;
                Ti[i] = sh.l - 1;
                SVec factor =
                    SVec::unit(sh.encode(Ai, Ti), -Cyc::root(F, F->N - F->N / sh.l));
                for (long rep = 0; rep < A[i]; ++rep) acc = mult_vv(*raw, acc, factor);
            }
            return acc;
        };
        H->antipode = RowMap(sh.dim, anti_provider, /*cache=*/true);
    }

    // names, generators, distinguished elements
    H->basis_name.resize(sh.dim);
    for (int u = 0; u < sh.dim; ++u) {
        auto [A, T] = sh.decode(u);
        std::string nm;
        for (long i = 0; i < sh.rank; ++i)
            if (A[i] > 0)
                nm += "x" + std::to_string(i + 1) +
                      (A[i] > 1 ? "^" + std::to_string(A[i]) : "");
        for (long i = 0; i < sh.rank; ++i)
            if (T[i] > 0)
                nm += "g" + std::to_string(i + 1) +
                      (T[i] > 1 ? "^" + std::to_string(T[i]) : "");
        if (nm.empty()) nm = "1";
        H->basis_name[u] = nm;
    }
    for (long i = 0; i < rank; ++i) {
        H->alg_gens.push_back(SVec::unit(out.xi_idx(i), Cyc::one(F)));
        H->gen_name.push_back("x" + std::to_string(i + 1));
        H->alg_gens.push_back(SVec::unit(out.gi_idx(i), Cyc::one(F)));
        H->gen_name.push_back("g" + std::to_string(i + 1));
    }
    out.x_elt = SVec::unit(out.gi_idx(rank - 1), Cyc::one(F));
    out.chi.assign(sh.dim, Cyc::zero(F));
    for (int u = 0; u < sh.dim; ++u) {
        auto [A, T] = sh.decode(u);
        bool xfree = true;
        for (long a : A) xfree = xfree && a == 0;
        if (!xfree) continue;
        long s = 0;
        for (long v : T) s += v;
        out.chi[u] = zeta.pow(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Group algebras and function algebras
// ---------------------------------------------------------------------------

HopfPtr group_algebra(const FieldPtr& F, const FiniteGroup& G) {
    auto H = std::make_shared<HopfData>();
    H->F = F;
    H->dim = G.n;
    {
        std::vector<std::vector<SVec>> table(G.n, std::vector<SVec>(G.n));
        for (int a = 0; a < G.n; ++a)
            for (int b = 0; b < G.n; ++b) table[a][b] = SVec::unit(G.op(a, b), Cyc::one(F));
        H->mult = MultMap(std::move(table));
    }
    {
        std::vector<SVec> rows(G.n), anti(G.n), star(G.n);
        for (int a = 0; a < G.n; ++a) {
            rows[a] = SVec::unit(tensor_index(a, a, G.n), Cyc::one(F));
            anti[a] = SVec::unit(G.inv[a], Cyc::one(F));
            star[a] = SVec::unit(G.inv[a], Cyc::one(F));
        }
        H->delta = RowMap(std::move(rows));
        H->antipode = RowMap(std::move(anti));
        H->star = RowMap(std::move(star));
    }
    H->counit.assign(G.n, Cyc::one(F));
    H->unit = SVec::unit(0, Cyc::one(F));
    H->basis_name.resize(G.n);
    for (int a = 0; a < G.n; ++a) H->basis_name[a] = G.label(a);
    for (int g : generating_set(G)) {
        H->alg_gens.push_back(SVec::unit(g, Cyc::one(F)));
        H->gen_name.push_back(G.label(g));
    }
    return H;
}

HopfPtr function_algebra(const FieldPtr& F, const FiniteGroup& G) {
    auto H = std::make_shared<HopfData>();
    H->F = F;
    H->dim = G.n;
    {
        std::vector<std::vector<SVec>> table(G.n, std::vector<SVec>(G.n));
        for (int a = 0; a < G.n; ++a)
            table[a][a] = SVec::unit(a, Cyc::one(F));
        H->mult = MultMap(std::move(table));
    }
    {
        std::vector<SVec> rows(G.n), anti(G.n), star(G.n);
        for (int a = 0; a < G.n; ++a) {
            Accum acc(F);
            for (int g1 = 0; g1 < G.n; ++g1)
                acc.add(tensor_index(g1, G.op(G.inv[g1], a), G.n), Cyc::one(F));
            rows[a] = acc.take();
            anti[a] = SVec::unit(G.inv[a], Cyc::one(F));
            star[a] = SVec::unit(a, Cyc::one(F));
        }
        H->delta = RowMap(std::move(rows));
        H->antipode = RowMap(std::move(anti));
        H->star = RowMap(std::move(star));
    }
    H->counit.assign(G.n, Cyc::zero(F));
    H->counit[0] = Cyc::one(F);
    for (int a = 0; a < G.n; ++a) H->unit.t.emplace_back(a, Cyc::one(F));
    H->basis_name.resize(G.n);
    for (int a = 0; a < G.n; ++a) H->basis_name[a] = "e[" + G.label(a) + "]";
    for (int a = 0; a < G.n; ++a) {
        H->alg_gens.push_back(SVec::unit(a, Cyc::one(F)));
        H->gen_name.push_back("e[" + G.label(a) + "]");
    }
    return H;
}

}  // namespace forge
