// SPDX-License-Identifier: Apache-2.0
// Simple modules of the bicrossed-double quotient A(p,q): labels, monomial
// operators, the generator bundle with its presentation certificate, and the
// module certification suite.  See rep.hpp for the overview.

#include "forge/rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "forge/linalg.hpp"
#include "forge/numtheory.hpp"

namespace forge {

namespace {

long mod_norm(long v, long n) { return ((v % n) + n) % n; }

std::string svec_str(const SVec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.t.size() && i < 4; ++i)
        os << (i ? ", " : "") << v.t[i].first << ":" << v.t[i].second.str();
    if (v.t.size() > 4) os << ", ...x" << v.t.size();
    os << "]";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

long ApqParams::tp(long i) const { return tpow[mod_norm(i, q)]; }
long ApqParams::tinv(long i) const { return tpow[mod_norm(-i, q)]; }

long ApqParams::coset_rep(long c, long* shift) const {
    c = mod_norm(c, p);
    if (c == 0) throw std::invalid_argument("coset_rep: zero residue");
    for (long r = 1; r <= m; ++r)
        for (long s = 0; s < q; ++s)
            if (betapow[r] * tpow[s] % p == c) {
                if (shift) *shift = s;
                return betapow[r];
            }
    throw std::logic_error("coset_rep: cosets do not cover (Z/p)^*");
}

int ApqParams::g(long i, long j) const {
    return sd_index(p, mod_norm(i, p), mod_norm(j, q));
}

ApqParams apq_params(long p, long q, long t, long beta) {
    if (p < 3 || q < 3 || !is_prime_u64((std::uint64_t)p) ||
        !is_prime_u64((std::uint64_t)q))
        throw std::invalid_argument("apq_params: p, q must be odd primes");
    if ((p - 1) % q != 0)
        throw std::invalid_argument("apq_params: q must divide p - 1");
    ApqParams P;
    P.p = p;
    P.q = q;
    P.t = mod_norm(t, p);
    P.beta = mod_norm(beta, p);
    P.m = (p - 1) / q;
    P.tpow.assign(q, 1);
    for (long i = 1; i < q; ++i) P.tpow[i] = P.tpow[i - 1] * P.t % p;
    if (P.tpow[q - 1] * P.t % p != 1)
        throw std::invalid_argument("apq_params: t does not have order q mod p");
    for (long i = 1; i < q; ++i)
        if (P.tpow[i] == 1)
            throw std::invalid_argument("apq_params: t does not have order q mod p");
    P.betapow.assign(P.m + 1, 1);
    long acc = 1, ord = 0;
    for (long i = 1; i < p; ++i) {
        acc = acc * P.beta % p;
        if (i <= P.m) P.betapow[i] = acc;
        if (acc == 1 && ord == 0) ord = i;
    }
    if (ord != p - 1)
        throw std::invalid_argument("apq_params: beta does not generate (Z/p)^*");
    if (P.betapow[P.m] != P.t)
        throw std::invalid_argument("apq_params: beta^((p-1)/q) != t");
    return P;
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

std::string SimpleLabel::str() const {
    std::ostringstream os;
    switch (fam) {
        case Family::T: os << "T(" << a << "," << b << ")"; break;
        case Family::U: os << "U(" << a << "," << b << ")"; break;
        case Family::V: os << "V(" << a << "," << b << "," << c << ")"; break;
        case Family::W: os << "W(" << a << "," << b << "," << c << ")"; break;
    }
    return os.str();
}

SimpleLabel canonical_label(const ApqParams& P, SimpleLabel L) {
    switch (L.fam) {
        case Family::T:
            L.a = mod_norm(L.a, P.q);
            L.b = mod_norm(L.b, P.q);
            L.c = 0;
            break;
        case Family::U: {
            L.a = mod_norm(L.a, P.q);
            L.b = P.coset_rep(L.b);
            L.c = 0;
            break;
        }
        case Family::V: {
            long s = 0;
            long rep = P.coset_rep(L.a, &s);
            // Writing the raw first index as rep * t^s, the module is
            // isomorphic to the one labelled (rep, b, c * t^s).
            L.a = rep;
            L.b = mod_norm(L.b, P.q);
            L.c = mod_norm(L.c, P.p) * P.tp(s) % P.p;
            break;
        }
        case Family::W:
            L.a = mod_norm(L.a, P.q);
            L.b = mod_norm(L.b, P.q);
            L.c = mod_norm(L.c, P.q);
            if (L.a == L.b)
                throw std::invalid_argument("canonical_label: W needs a != b");
            break;
    }
    return L;
}

std::vector<SimpleLabel> simple_labels(const ApqParams& P) {
    std::vector<SimpleLabel> out;
    for (long a = 0; a < P.q; ++a)
        for (long b = 0; b < P.q; ++b) out.push_back({Family::T, a, b, 0});
    for (long a = 0; a < P.q; ++a)
        for (long r = 1; r <= P.m; ++r)
            out.push_back({Family::U, a, P.betapow[r], 0});
    for (long r = 1; r <= P.m; ++r)
        for (long b = 0; b < P.q; ++b)
            for (long c = 0; c < P.p; ++c)
                out.push_back({Family::V, P.betapow[r], b, c});
    for (long a = 0; a < P.q; ++a)
        for (long b = 0; b < P.q; ++b) {
            if (a == b) continue;
            for (long c = 0; c < P.q; ++c) out.push_back({Family::W, a, b, c});
        }
    return out;
}

long simple_dim(const ApqParams& P, const SimpleLabel& L) {
    switch (L.fam) {
        case Family::T: return 1;
        case Family::U: return P.q;
        case Family::V: return P.q;
        case Family::W: return P.p;
    }
    return 0;
}

long label_index(const ApqParams& P, const SimpleLabel& raw) {
    SimpleLabel L = canonical_label(P, raw);
    auto rof = [&](long b) -> long {
        for (long r = 1; r <= P.m; ++r)
            if (P.betapow[r] == b) return r;
        throw std::logic_error("label_index: non-canonical coset value");
    };
    const long q = P.q, m = P.m, p = P.p;
    switch (L.fam) {
        case Family::T: return L.a * q + L.b;
        case Family::U: return q * q + L.a * m + (rof(L.b) - 1);
        case Family::V:
            return q * q + q * m + ((rof(L.a) - 1) * q + L.b) * p + L.c;
        case Family::W: {
            long pr = L.a * (q - 1) + (L.b > L.a ? L.b - 1 : L.b);
            return q * q + q * m + m * q * p + pr * q + L.c;
        }
    }
    return -1;
}

// ---------------------------------------------------------------------------
// Monomial operators
// ---------------------------------------------------------------------------

Mono mono_id(long dim) {
    Mono r;
    r.dim = dim;
    r.to.resize(dim);
    r.e.assign(dim, 0);
    for (long c = 0; c < dim; ++c) r.to[c] = (int)c;
    return r;
}

Mono mono_mul(long N, const Mono& a, const Mono& b) {
    if (a.dim != b.dim) throw std::invalid_argument("mono_mul: dimension mismatch");
    Mono r;
    r.dim = a.dim;
    r.to.assign(a.dim, -1);
    r.e.assign(a.dim, 0);
    for (long c = 0; c < b.dim; ++c) {
        int mid = b.to[c];
        if (mid < 0 || a.to[mid] < 0) continue;
        r.to[c] = a.to[mid];
        r.e[c] = (b.e[c] + a.e[mid]) % N;
    }
    return r;
}

Mono mono_pow(long N, const Mono& a, long k) {
    Mono r = mono_id(a.dim);
    for (long i = 0; i < k; ++i) r = mono_mul(N, a, r);
    return r;
}

Mono mono_dagger(long N, const Mono& a) {
    Mono r;
    r.dim = a.dim;
    r.to.assign(a.dim, -1);
    r.e.assign(a.dim, 0);
    for (long c = 0; c < a.dim; ++c) {
        if (a.to[c] < 0) throw std::invalid_argument("mono_dagger: killed column");
        if (r.to[a.to[c]] != -1)
            throw std::invalid_argument("mono_dagger: not a bijection");
        r.to[a.to[c]] = (int)c;
        r.e[a.to[c]] = (N - a.e[c] % N) % N;
    }
    return r;
}

Mono mono_kron(long N, const Mono& a, const Mono& b) {
    Mono r;
    r.dim = a.dim * b.dim;
    r.to.assign(r.dim, -1);
    r.e.assign(r.dim, 0);
    for (long i = 0; i < a.dim; ++i) {
        if (a.to[i] < 0) continue;
        for (long j = 0; j < b.dim; ++j) {
            if (b.to[j] < 0) continue;
            long c = i * b.dim + j;
            r.to[c] = (int)(a.to[i] * b.dim + b.to[j]);
            r.e[c] = (a.e[i] + b.e[j]) % N;
        }
    }
    return r;
}

bool mono_eq(long N, const Mono& a, const Mono& b) {
    if (a.dim != b.dim) return false;
    for (long c = 0; c < a.dim; ++c) {
        if (a.to[c] != b.to[c]) return false;
        if (a.to[c] >= 0 && mod_norm(a.e[c] - b.e[c], N) != 0) return false;
    }
    return true;
}

Mono mono_scale(long N, const Mono& a, long k) {
    Mono r = a;
    for (long c = 0; c < r.dim; ++c)
        if (r.to[c] >= 0) r.e[c] = mod_norm(r.e[c] + k, N);
    return r;
}

Mono mono_filter(const Mono& a, const std::vector<char>& keep) {
    Mono r = a;
    for (long c = 0; c < r.dim; ++c)
        if (r.to[c] >= 0 && !keep[c]) r.to[c] = -1;
    return r;
}

Cyc mono_trace(const FieldPtr& F, const Mono& a, long N) {
    const long stride = F->N / N;
    Cyc s = Cyc::zero(F);
    for (long c = 0; c < a.dim; ++c)
        if (a.to[c] == c) s = s + Cyc::root(F, a.e[c] % N * stride);
    return s;
}

std::vector<Cyc> mono_dense(const FieldPtr& F, const Mono& a, long N) {
    const long stride = F->N / N;
    std::vector<Cyc> d((size_t)(a.dim * a.dim), Cyc::zero(F));
    for (long c = 0; c < a.dim; ++c)
        if (a.to[c] >= 0)
            d[(size_t)(a.to[c] * a.dim + c)] = Cyc::root(F, a.e[c] % N * stride);
    return d;
}

// ---------------------------------------------------------------------------
// Simple modules
// ---------------------------------------------------------------------------

SimpleRep build_simple(const ApqParams& P, const SimpleLabel& L) {
    const long p = P.p, q = P.q, pq = p * q;
    SimpleRep X;
    X.L = L;
    X.dim = simple_dim(P, L);
    X.x = mono_id(X.dim);
    X.y = mono_id(X.dim);
    X.zw.assign(X.dim, 0);
    X.ew.assign(X.dim, 0);
    switch (L.fam) {
        case Family::T:
            // x acts by the q-th root with exponent b; y acts trivially.
            X.x.e[0] = mod_norm(p * L.b, pq);
            X.zw[0] = (int)mod_norm(L.a, q);
            X.ew[0] = P.g(0, L.a);
            break;
        case Family::U:
            // x shifts u_k -> u_{k+1}; y is diagonal with p-th root
            // exponents b t^k; z and e weights are constant.
            for (long k = 0; k < q; ++k) {
                X.x.to[k] = (int)((k + 1) % q);
                X.y.e[k] = mod_norm(q * (L.b * P.tp(k) % p), pq);
                X.zw[k] = (int)mod_norm(L.a, q);
                X.ew[k] = P.g(0, L.a);
            }
            break;
        case Family::V:
            // x shifts u_l -> u_{l-1}; y is diagonal with exponents c t^{-l};
            // the e weight walks the coset a <t> in the first group slot.
            for (long l = 0; l < q; ++l) {
                X.x.to[l] = (int)mod_norm(l - 1, q);
                X.y.e[l] = mod_norm(q * (L.c % p * P.tinv(l) % p), pq);
                X.zw[l] = (int)mod_norm(L.b, q);
                X.ew[l] = P.g(L.a * P.tp(l) % p, L.b);
            }
            break;
        case Family::W:
            // x scales by the q-th root c and permutes l -> t^{-1} l;
            // y shifts v_l -> v_{l+1}; the e weight is injective in l.
            for (long l = 0; l < p; ++l) {
                X.x.to[l] = (int)(P.tinv(1) * l % p);
                X.x.e[l] = mod_norm(p * L.c, pq);
                X.y.to[l] = (int)((l + 1) % p);
                X.zw[l] = (int)mod_norm(L.b, q);
                X.ew[l] = P.g(l * mod_norm(P.tp(L.b) - P.tp(L.a), p) % p, L.a);
            }
            break;
    }
    return X;
}

std::vector<SimpleRep> build_simples(const ApqParams& P) {
    std::vector<SimpleRep> out;
    for (const auto& L : simple_labels(P)) out.push_back(build_simple(P, L));
    return out;
}

SimpleRep tensor_rep(const ApqParams& P, const SimpleRep& a,
                     const SimpleRep& b) {
    const long N = P.p * P.q;
    SimpleRep T;
    T.dim = a.dim * b.dim;
    T.x = mono_kron(N, a.x, b.x);
    // y acts on column (ca, cb) as y^{t^i} (x) y with i = b.zw[cb]: the z-leg
    // of the coproduct of y is diagonal, so exactly one term survives per
    // column and the action stays monomial.
    std::vector<Mono> ypow(P.q);
    for (long i = 0; i < P.q; ++i) ypow[i] = mono_pow(N, a.y, P.tpow[i]);
    T.y.dim = T.dim;
    T.y.to.resize(T.dim);
    T.y.e.resize(T.dim);
    T.zw.resize(T.dim);
    T.ew.resize(T.dim);
    for (long ca = 0; ca < a.dim; ++ca)
        for (long cb = 0; cb < b.dim; ++cb) {
            const long col = ca * b.dim + cb;
            const Mono& ya = ypow[b.zw[cb]];
            T.y.to[col] = ya.to[ca] * (int)b.dim + b.y.to[cb];
            T.y.e[col] = (ya.e[ca] + b.y.e[cb]) % N;
            T.zw[col] = (int)((a.zw[ca] + b.zw[cb]) % P.q);
            // G product of the two e weights: (a^i b^j)(a^k b^l) =
            // a^{i + k t^j} b^{j + l} in sd_index coordinates i + p j.
            const long ia = a.ew[ca] % P.p, ja = a.ew[ca] / P.p;
            const long ib = b.ew[cb] % P.p, jb = b.ew[cb] / P.p;
            T.ew[col] = P.g(ia + ib * P.tp(ja), ja + jb);
        }
    return T;
}

// ---------------------------------------------------------------------------
// The algebra bundle
// ---------------------------------------------------------------------------

struct ApqAlgebra::Memo {
    HopfPtr Hd;  ///< dual of the extension, with cached structure rows
    std::map<std::pair<int, int>, SVec> mrow;
    std::map<int, SVec> drow, srow, strow;
    long fetched = 0;
};

ApqAlgebra::Word ApqAlgebra::word(int r) const {
    const long dh = dd.dim_h(), q = P.q;
    int parent = cq.pt->reps[r];
    int u = parent / (int)dh, v = parent % (int)dh;
    Word w;
    long gU = u / q;
    w.zk = u % q;
    w.yi = gU % P.p;
    w.xj = gU / P.p;
    w.g = v / (int)q;
    w.xd = v % q;
    w.omega_exp = mod_norm(-w.xj * w.zk, q);
    return w;
}

SVec ApqAlgebra::mult(const SVec& u, const SVec& v) {
    Accum acc(F);
    for (const auto& [i, ci] : u.t)
        for (const auto& [j, cj] : v.t) {
            auto key = std::make_pair(i, j);
            auto it = memo_->mrow.find(key);
            if (it == memo_->mrow.end()) {
                SVec row = cq.project(
                    dd.D->mult(cq.pt->reps[i], cq.pt->reps[j]));
                it = memo_->mrow.emplace(key, std::move(row)).first;
                ++memo_->fetched;
            }
            acc.axpy(ci * cj, it->second);
        }
    return acc.take();
}

SVec ApqAlgebra::power(const SVec& u, long k) {
    SVec r = A->unit;
    for (long i = 0; i < k; ++i) r = mult(r, u);
    return r;
}

SVec ApqAlgebra::mult_fun_left(const SVec& f_dual, const SVec& w) {
    const long dh = dd.dim_h();
    Accum acc(F);
    for (const auto& [r, cr] : w.t) {
        int parent = cq.pt->reps[r];
        int u = parent / (int)dh, v = parent % (int)dh;
        for (const auto& [fu, cf] : f_dual.t) {
            SVec conv = memo_->Hd->mult(fu, u);
            for (const auto& [w2, c2] : conv.t) {
                int pidx = dd.pair_index(w2, v);
                int qi = cq.pt->proj_index[pidx];
                if (qi < 0) continue;
                acc.add(qi, cr * cf * c2 * cq.pt->proj_scale[pidx]);
            }
        }
    }
    return acc.take();
}

SVec ApqAlgebra::mult_alg_right(const SVec& w, const SVec& h) {
    const long dh = dd.dim_h();
    Accum acc(F);
    for (const auto& [r, cr] : w.t) {
        int parent = cq.pt->reps[r];
        int u = parent / (int)dh, v = parent % (int)dh;
        for (const auto& [hv, ch] : h.t) {
            SVec prod = ct.H->mult(v, hv);
            for (const auto& [v2, c2] : prod.t) {
                int pidx = dd.pair_index(u, v2);
                int qi = cq.pt->proj_index[pidx];
                if (qi < 0) continue;
                acc.add(qi, cr * ch * c2 * cq.pt->proj_scale[pidx]);
            }
        }
    }
    return acc.take();
}

SVec ApqAlgebra::fun_alg(const SVec& f_dual, const SVec& h) {
    Accum acc(F);
    for (const auto& [u, cu] : f_dual.t)
        for (const auto& [v, cv] : h.t) {
            int pidx = dd.pair_index(u, v);
            int qi = cq.pt->proj_index[pidx];
            if (qi < 0) continue;
            acc.add(qi, cu * cv * cq.pt->proj_scale[pidx]);
        }
    return acc.take();
}

SVec ApqAlgebra::delta(const SVec& v) {
    Accum acc(F);
    for (const auto& [r, cr] : v.t) {
        auto it = memo_->drow.find(r);
        if (it == memo_->drow.end()) {
            it = memo_->drow
                     .emplace(r, cq.project_tensor(dd.D->delta(cq.pt->reps[r])))
                     .first;
        }
        acc.axpy(cr, it->second);
    }
    return acc.take();
}

SVec ApqAlgebra::antipode(const SVec& v) {
    Accum acc(F);
    for (const auto& [r, cr] : v.t) {
        auto it = memo_->srow.find(r);
        if (it == memo_->srow.end())
            it = memo_->srow.emplace(r, cq.project(dd.D->antipode(cq.pt->reps[r])))
                     .first;
        acc.axpy(cr, it->second);
    }
    return acc.take();
}

SVec ApqAlgebra::star(const SVec& v) {
    Accum acc(F);
    for (const auto& [r, cr] : v.t) {
        auto it = memo_->strow.find(r);
        if (it == memo_->strow.end())
            it = memo_->strow.emplace(r, cq.project(dd.D->star(cq.pt->reps[r])))
                     .first;
        acc.axpy(cr.conj(), it->second);
    }
    return acc.take();
}

Cyc ApqAlgebra::counit(const SVec& v) { return counit_v(*A, v); }

long ApqAlgebra::rows_fetched() const { return memo_->fetched; }

ApqAlgebra build_apq(long p, long q, long t, long beta, const FieldPtr& F,
                     const QuotientOptions& qopts) {
    ApqAlgebra R;
    R.P = apq_params(p, q, t, beta);
    R.F = F;
    if (F->N % (p * q) != 0)
        throw std::invalid_argument("build_apq: field lacks pq-th roots of unity");
    R.ct = carry_twisted(F, p, q, t, 0);
    const MatchedPair& mp = R.ct.mp;
    const long npq = p * q;
    const int a1 = sd_index(p, 1, 0);

    R.pd.x = R.ct.x_elt;
    R.pd.chi = R.ct.chi;
    R.pd.n = q;
    for (long gi = 0; gi < npq; ++gi) {
        R.pd.family.push_back(SVec::unit(R.ct.idx((int)gi, 0), Cyc::one(F)));
        R.pd.sigma.push_back(mp.ract[gi][q - 1]);
        R.pd.tau.push_back(mp.G.mul[R.ct.b_elt][gi]);
    }

    {
        Accum acc(F);
        for (long j = 0; j < q; ++j) acc.add(R.ct.idx(a1, (int)j), Cyc::one(F));
        R.Ydual = acc.take();
    }
    for (long i = 0; i < q; ++i)
        R.Zdual.push_back(SVec::unit(R.ct.idx(0, (int)i), Cyc::one(F)));

    DoubleOptions dop;
    dop.dual_gens.push_back(R.Ydual);
    dop.dual_gen_names.push_back("Y");
    for (long i = 0; i < q; ++i) {
        dop.dual_gens.push_back(R.Zdual[i]);
        dop.dual_gen_names.push_back("Z" + std::to_string(i));
    }
    {
        Accum acc(F);
        for (long v = 0; v < (long)R.pd.chi.size(); ++v)
            if (!R.pd.chi[v].is_zero()) acc.add((int)v, R.pd.chi[v]);
        dop.dual_gens.push_back(acc.take());
        dop.dual_gen_names.push_back("chi");
    }
    R.dd = drinfeld_double(R.ct.H, dop);

    SVec z = central_element(R.dd, R.pd);
    R.cq = central_quotient(R.dd.D, z, q, qopts);
    R.A = R.cq.Q;

    R.x = R.cq.project(R.dd.embed_alg(R.ct.x_elt));
    R.chi = R.cq.project(R.dd.embed_fun(R.ct.chi));
    R.y = R.cq.project(R.dd.embed_fun(R.Ydual));
    for (long i = 0; i < q; ++i)
        R.z.push_back(R.cq.project(R.dd.embed_fun(R.Zdual[i])));
    for (long gi = 0; gi < npq; ++gi)
        R.e.push_back(R.cq.project(
            R.dd.embed_alg(SVec::unit(R.ct.idx((int)gi, 0), Cyc::one(F)))));

    R.omega = Cyc::root(F, F->N / q);
    R.eta = Cyc::root(F, F->N / p);

    R.memo_ = std::make_shared<ApqAlgebra::Memo>();
    R.memo_->Hd = dual_hopf(*R.ct.H);
    return R;
}

// ---------------------------------------------------------------------------
// Presentation certificate
// ---------------------------------------------------------------------------

Report verify_presentation(ApqAlgebra& A, ModQuotient* mq,
                           const PresOptions& opts) {
    Report rep;
    const ApqParams& P = A.P;
    const long p = P.p, q = P.q, npq = p * q, dimq = A.dim();
    const FieldPtr& F = A.F;
    const MatchedPair& mp = A.ct.mp;
    const int a1 = sd_index(p, 1, 0);
    HopfPtr Hd = dual_hopf(*A.ct.H);
    const bool use_mod = (mq != nullptr) && !opts.heavy_exact;

    auto chk = [&](const std::string& name, bool okv, const std::string& wit) {
        rep.count();
        if (!okv) rep.fail(name, wit);
    };
    auto eq = [&](const std::string& name, const SVec& lhs, const SVec& rhs,
                  const std::string& wit) {
        chk(name, sv_equal(lhs, rhs),
            wit + " lhs=" + svec_str(lhs) + " rhs=" + svec_str(rhs));
    };

    // Normalized modular row comparison, used for the products whose exact
    // form needs the generic structure rows; the exact tier (heavy_exact)
    // recomputes those products with exact arithmetic instead.
    auto row_norm = [&](ModQuotient::Row r) {
        std::sort(r.begin(), r.end());
        ModQuotient::Row o;
        for (const auto& [i, c] : r) {
            if (!o.empty() && o.back().first == i)
                o.back().second = mq->ctx().add(o.back().second, c);
            else
                o.push_back({i, c});
        }
        ModQuotient::Row out;
        for (const auto& e : o)
            if (e.second) out.push_back(e);
        return out;
    };
    auto eq_mod = [&](const std::string& name, const ModQuotient::Row& lhs,
                      const ModQuotient::Row& rhs, const std::string& wit) {
        chk(name, row_norm(lhs) == row_norm(rhs), wit + " (modular compare)");
    };

    // Convolution product of functionals, in dual coordinates.
    auto conv = [&](const SVec& f, const SVec& g) {
        Accum acc(F);
        for (const auto& [i, ci] : f.t)
            for (const auto& [j, cj] : g.t) acc.axpy(ci * cj, Hd->mult(i, j));
        return acc.take();
    };
    auto fun_to_A = [&](const SVec& f) { return A.cq.project(A.dd.embed_fun(f)); };
    auto alg_to_A = [&](const SVec& h) { return A.cq.project(A.dd.embed_alg(h)); };

    // Power tables.  x powers run through the extension, y powers through the
    // convolution algebra of the dual; both are certified against the generic
    // structure rows by the relations below.
    std::vector<SVec> xpH(q);  // x^k inside the extension
    xpH[0] = A.ct.H->unit;
    for (long k = 1; k < q; ++k) xpH[k] = mult_vv(*A.ct.H, xpH[k - 1], A.ct.x_elt);
    std::vector<SVec> xp(q);  // images in A
    for (long k = 0; k < q; ++k) xp[k] = alg_to_A(xpH[k]);
    std::vector<SVec> ypF(p + 1);  // y^k as functionals (dual coordinates)
    {
        Accum acc(F);
        for (long v = 0; v < A.ct.H->dim; ++v)
            if (!A.ct.H->counit[v].is_zero()) acc.add((int)v, A.ct.H->counit[v]);
        ypF[0] = acc.take();  // counit = unit of the convolution algebra
    }
    for (long k = 1; k <= p; ++k) ypF[k] = conv(ypF[k - 1], A.Ydual);
    std::vector<SVec> yp(p + 1);
    for (long k = 0; k <= p; ++k) yp[k] = fun_to_A(ypF[k]);
    SVec chiF;
    {
        Accum acc(F);
        for (long v = 0; v < (long)A.pd.chi.size(); ++v)
            if (!A.pd.chi[v].is_zero()) acc.add((int)v, A.pd.chi[v]);
        chiF = acc.take();
    }

    chk("apq.x_matches_power_table", sv_equal(A.x, xp[1]), "x vs x^1");
    chk("apq.y_matches_power_table", sv_equal(A.y, yp[1]), "y vs y^1");

    // Modular images of the generators, shared by the heavy relation checks.
    ModQuotient::Row xr, yr;
    std::vector<ModQuotient::Row> zr, er;
    if (use_mod) {
        xr = mq->reduce(A.x);
        yr = mq->reduce(A.y);
        for (long i = 0; i < q; ++i) zr.push_back(mq->reduce(A.z[i]));
        for (long gi = 0; gi < npq; ++gi) er.push_back(mq->reduce(A.e[gi]));
    }

    // --- algebra relations --------------------------------------------------
    {
        SVec lhs = A.mult_fun_left(A.Ydual, A.x);
        if (use_mod)
            eq_mod("apq.rel_yx", mq->reduce(lhs),
                   mq->mult_sparse(xr, mq->reduce(yp[P.t % p])), "y x = x y^t");
        else
            eq("apq.rel_yx", lhs, A.mult(A.x, yp[P.t % p]), "y x = x y^t");
    }
    for (long i = 0; i < q; ++i) {
        SVec lhs = A.mult_fun_left(A.Zdual[i], A.x);
        const std::string wit = "z_" + std::to_string(i) + " x = x z_" +
                                std::to_string(i);
        if (use_mod)
            eq_mod("apq.rel_zx", mq->reduce(lhs), mq->mult_sparse(xr, zr[i]), wit);
        else
            eq("apq.rel_zx", lhs, A.mult(A.x, A.z[i]), wit);
    }
    for (long gi = 0; gi < npq; ++gi) {
        SVec lhs = alg_to_A(mult_vv(*A.ct.H,
                                    SVec::unit(A.ct.idx((int)gi, 0), Cyc::one(F)),
                                    A.ct.x_elt));
        SVec rhs = alg_to_A(mult_vv(*A.ct.H, A.ct.x_elt,
                                    SVec::unit(A.ct.idx(mp.ract[gi][1], 0), Cyc::one(F))));
        eq("apq.rel_ex", lhs, rhs, "e_g x = x e_{g<x} at g=" + std::to_string(gi));
    }
    for (long i = 0; i < q; ++i)
        eq("apq.rel_zy", fun_to_A(conv(A.Zdual[i], A.Ydual)),
           fun_to_A(conv(A.Ydual, A.Zdual[i])),
           "z_i y = y z_i at i=" + std::to_string(i));
    for (long gi = 0; gi < npq; ++gi) {
        Accum acc(F);
        for (long i = 0; i < q; ++i) {
            // h = a^{-t^i} g a
            int aneg = sd_index(p, mod_norm(-P.tpow[i], p), 0);
            int h = mp.G.mul[mp.G.mul[aneg][gi]][a1];
            SVec zi_eh = A.fun_alg(A.Zdual[i],
                                   SVec::unit(A.ct.idx(h, 0), Cyc::one(F)));
            acc.add(A.mult_fun_left(A.Ydual, zi_eh));
        }
        SVec rhs = acc.take();
        const std::string wit =
            "e_g y = y sum_i z_i e_{a^{-t^i} g a} at g=" + std::to_string(gi);
        if (use_mod)
            eq_mod("apq.rel_ey", mq->mult_sparse(er[gi], yr), mq->reduce(rhs), wit);
        else
            eq("apq.rel_ey", A.mult(A.e[gi], A.y), rhs, wit);
    }
    for (long gi = 0; gi < npq; ++gi)
        for (long i = 0; i < q; ++i) {
            SVec rhs = A.fun_alg(A.Zdual[i],
                                 SVec::unit(A.ct.idx((int)gi, 0), Cyc::one(F)));
            const std::string wit = "e_g z_i = z_i e_g at g=" +
                                    std::to_string(gi) + ",i=" + std::to_string(i);
            if (use_mod)
                eq_mod("apq.rel_ez", mq->mult_sparse(er[gi], zr[i]),
                       mq->reduce(rhs), wit);
            else
                eq("apq.rel_ez", A.mult(A.e[gi], A.z[i]), rhs, wit);
        }
    eq("apq.rel_xq", alg_to_A(mult_vv(*A.ct.H, xpH[q - 1], A.ct.x_elt)), A.A->unit,
       "x^q = 1");
    eq("apq.rel_yp", yp[p], A.A->unit, "y^p = 1");
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j)
            eq("apq.rel_zz", fun_to_A(conv(A.Zdual[i], A.Zdual[j])),
               i == j ? A.z[i] : SVec{},
               "z_i z_j at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    {
        Accum acc(F);
        for (long i = 0; i < q; ++i) acc.add(A.z[i]);
        eq("apq.rel_zsum", acc.take(), A.A->unit, "sum_i z_i = 1");
        Accum ae(F);
        for (long gi = 0; gi < npq; ++gi) ae.add(A.e[gi]);
        eq("apq.rel_esum", ae.take(), A.A->unit, "sum_g e_g = 1");
    }
    {
        long bad = 0;
        for (long gi = 0; gi < npq; ++gi)
            for (long hi = 0; hi < npq; ++hi) {
                SVec prod = mult_vv(*A.ct.H,
                                    SVec::unit(A.ct.idx((int)gi, 0), Cyc::one(F)),
                                    SVec::unit(A.ct.idx((int)hi, 0), Cyc::one(F)));
                SVec want = gi == hi ? SVec::unit(A.ct.idx((int)gi, 0), Cyc::one(F))
                                     : SVec{};
                if (!sv_equal(prod, want)) ++bad;
            }
        rep.count(npq * npq);
        chk("apq.rel_ee", bad == 0,
            "e_g e_h = [g=h] e_g (" + std::to_string(bad) + " bad pairs)");
    }
    eq("apq.rel_chi", A.chi, xp[(q - 1) % q], "chi = x^{-1}");
    eq("apq.rel_chix", A.mult_fun_left(chiF, A.x), A.A->unit, "chi x = 1");

    // --- coproducts ---------------------------------------------------------
    std::vector<SVec> yzi(q);
    for (long i = 0; i < q; ++i) yzi[i] = fun_to_A(conv(A.Ydual, A.Zdual[i]));
    eq("apq.coprod_x", A.delta(A.x), tensor_of(A.x, A.x, dimq), "Delta x = x (x) x");
    {
        Accum acc(F);
        for (long i = 0; i < q; ++i)
            acc.add(tensor_of(yp[P.tpow[i] % p], yzi[i], dimq));
        eq("apq.coprod_y", A.delta(A.y), acc.take(),
           "Delta y = sum_i y^{t^i} (x) y z_i");
    }
    for (long i = 0; i < q; ++i) {
        Accum acc(F);
        for (long j = 0; j < q; ++j)
            acc.add(tensor_of(A.z[j], A.z[mod_norm(i - j, q)], dimq));
        eq("apq.coprod_z", A.delta(A.z[i]), acc.take(),
           "Delta z_i at i=" + std::to_string(i));
    }
    for (long gi = 0; gi < npq; ++gi) {
        Accum acc(F);
        for (long hi = 0; hi < npq; ++hi)
            acc.add(tensor_of(A.e[hi], A.e[mp.G.mul[mp.G.inv[hi]][gi]], dimq));
        eq("apq.coprod_e", A.delta(A.e[gi]), acc.take(),
           "Delta e_g at g=" + std::to_string(gi));
    }

    // --- counit -------------------------------------------------------------
    chk("apq.counit_x", (A.counit(A.x) - Cyc::one(F)).is_zero(), "eps(x) = 1");
    chk("apq.counit_y", (A.counit(A.y) - Cyc::one(F)).is_zero(), "eps(y) = 1");
    for (long i = 0; i < q; ++i)
        chk("apq.counit_z",
            (A.counit(A.z[i]) - (i == 0 ? Cyc::one(F) : Cyc::zero(F))).is_zero(),
            "eps(z_i) = [i=0] at i=" + std::to_string(i));
    for (long gi = 0; gi < npq; ++gi)
        chk("apq.counit_e",
            (A.counit(A.e[gi]) - (gi == 0 ? Cyc::one(F) : Cyc::zero(F))).is_zero(),
            "eps(e_g) = [g=1] at g=" + std::to_string(gi));

    // --- antipode -----------------------------------------------------------
    eq("apq.antipode_x", A.antipode(A.x), xp[(q - 1) % q], "S(x) = x^{-1}");
    {
        Accum acc(F);
        for (long i = 0; i < q; ++i)
            acc.add(fun_to_A(conv(ypF[mod_norm(-P.tinv(i), p)], A.Zdual[i])));
        eq("apq.antipode_y", A.antipode(A.y), acc.take(),
           "S(y) = sum_i y^{-t^{-i}} z_i");
    }
    for (long i = 0; i < q; ++i)
        eq("apq.antipode_z", A.antipode(A.z[i]), A.z[mod_norm(-i, q)],
           "S(z_i) = z_{-i} at i=" + std::to_string(i));
    for (long gi = 0; gi < npq; ++gi)
        eq("apq.antipode_e", A.antipode(A.e[gi]), A.e[mp.G.inv[gi]],
           "S(e_g) = e_{g^{-1}} at g=" + std::to_string(gi));

    // --- star ---------------------------------------------------------------
    eq("apq.star_x", A.star(A.x), xp[(q - 1) % q], "x* = x^{-1}");
    eq("apq.star_y", A.star(A.y), yp[p - 1], "y* = y^{-1}");
    for (long i = 0; i < q; ++i)
        eq("apq.star_z", A.star(A.z[i]), A.z[i],
           "z_i* = z_i at i=" + std::to_string(i));
    for (long gi = 0; gi < npq; ++gi)
        eq("apq.star_e", A.star(A.e[gi]), A.e[gi],
           "e_g* = e_g at g=" + std::to_string(gi));

    // --- word identities ----------------------------------------------------
    // Dual side: the embedded dual basis element with index (a^i b^j, x^k)
    // equals omega^{-jk} y^i z_k x^{-j} (z and x powers commute).
    std::vector<std::vector<SVec>> xz(q, std::vector<SVec>(q));
    for (long j = 0; j < q; ++j)
        for (long k = 0; k < q; ++k)
            xz[j][k] = A.mult_fun_left(A.Zdual[k], xp[(q - j) % q]);
    for (long u = 0; u < A.dd.dim_h(); ++u) {
        long gU = u / q, k = u % q;
        long gi = gU % p, gj = gU / p;
        SVec target = fun_to_A(SVec::unit((int)u, Cyc::one(F)));
        Accum acc(F);
        acc.axpy(A.omega.pow(mod_norm(-gj * k, q)),
                 A.mult_fun_left(ypF[gi], xz[gj][k]));
        eq("apq.word_dual", target, acc.take(),
           "dual word at u=" + std::to_string(u));
    }
    // Algebra side: the embedded basis element e_g x^d.
    for (long v = 0; v < A.dd.dim_h(); ++v) {
        long gv = v / q, dv = v % q;
        SVec target = alg_to_A(SVec::unit((int)v, Cyc::one(F)));
        SVec wrd = alg_to_A(mult_vv(*A.ct.H,
                                    SVec::unit(A.ct.idx((int)gv, 0), Cyc::one(F)),
                                    xpH[dv]));
        eq("apq.word_alg", target, wrd, "e_g x^d at v=" + std::to_string(v));
    }
    // Straightening: every quotient basis element is the product of its
    // embedded dual word and its embedded algebra word, so the generator
    // words span all of A.
    {
        long bad = 0;
        const long dh = A.dd.dim_h();
        for (long r = 0; r < dimq; ++r) {
            int parent = A.cq.pt->reps[r];
            int u = parent / (int)dh, v = parent % (int)dh;
            SVec lhs = A.mult_fun_left(SVec::unit(u, Cyc::one(F)),
                                       alg_to_A(SVec::unit(v, Cyc::one(F))));
            if (!sv_equal(lhs, SVec::unit((int)r, Cyc::one(F)))) ++bad;
        }
        rep.count(dimq);
        chk("apq.span", bad == 0,
            "generator words hit every basis element (" +
                std::to_string(dimq - bad) + "/" + std::to_string(dimq) + ")");
    }

    // --- fast paths against the generic rows --------------------------------
    std::mt19937_64 rng(opts.seed);
    for (long s = 0; s < opts.fastpath_samples; ++s) {
        int r = (int)(rng() % (std::uint64_t)dimq);
        SVec br = SVec::unit(r, Cyc::one(F));
        const SVec& f = (s % 3 == 0) ? A.Ydual : (s % 3 == 1 ? A.Zdual[s % q] : chiF);
        const SVec& viaA = (s % 3 == 0) ? A.y : (s % 3 == 1 ? A.z[s % q] : A.chi);
        SVec fast = A.mult_fun_left(f, br);
        if (use_mod)
            eq_mod("apq.fastpath_fun_left", mq->reduce(fast),
                   mq->mult_sparse(mq->reduce(viaA), ModQuotient::Row{{r, 1}}),
                   "sample " + std::to_string(s));
        else
            eq("apq.fastpath_fun_left", fast, A.mult(viaA, br),
               "sample " + std::to_string(s));
        int gi = (int)(rng() % (std::uint64_t)npq);
        SVec hh = SVec::unit(A.ct.idx(gi, (int)(rng() % (std::uint64_t)q)), Cyc::one(F));
        SVec fast2 = A.mult_alg_right(br, hh);
        if (use_mod)
            eq_mod("apq.fastpath_alg_right", mq->reduce(fast2),
                   mq->mult_sparse(ModQuotient::Row{{r, 1}},
                                   mq->reduce(alg_to_A(hh))),
                   "sample " + std::to_string(s));
        else
            eq("apq.fastpath_alg_right", fast2, A.mult(br, alg_to_A(hh)),
               "sample " + std::to_string(s));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Word lift
// ---------------------------------------------------------------------------

RepTables::RepTables(const ApqAlgebra& A, const SimpleRep& X)
    : A_(&A), X_(&X), N_(A.P.p * A.P.q) {
    xpow_.resize(A.P.q);
    ypow_.resize(A.P.p);
    xpow_[0] = mono_id(X.dim);
    for (long k = 1; k < A.P.q; ++k) xpow_[k] = mono_mul(N_, X.x, xpow_[k - 1]);
    ypow_[0] = mono_id(X.dim);
    for (long k = 1; k < A.P.p; ++k) ypow_[k] = mono_mul(N_, X.y, ypow_[k - 1]);
    tr_.assign(A.dim(), std::nullopt);
    trs_.assign(A.dim(), std::nullopt);
}

Mono RepTables::op(int r) const {
    const ApqParams& P = A_->P;
    ApqAlgebra::Word w = A_->word(r);
    Mono m = xpow_[w.xd];
    for (long c = 0; c < m.dim; ++c)
        if (m.to[c] >= 0 && X_->ew[m.to[c]] != w.g) m.to[c] = -1;
    for (long c = 0; c < m.dim; ++c)
        if (m.to[c] >= 0 && X_->zw[m.to[c]] != (int)w.zk) m.to[c] = -1;
    m = mono_mul(N_, xpow_[(P.q - w.xj) % P.q], m);
    m = mono_mul(N_, ypow_[w.yi], m);
    return mono_scale(N_, m, P.p * w.omega_exp);
}

std::vector<Cyc> RepTables::act(const SVec& v) const {
    const FieldPtr& F = A_->F;
    const long stride = F->N / N_;
    std::vector<Cyc> d((size_t)(X_->dim * X_->dim), Cyc::zero(F));
    for (const auto& [r, c] : v.t) {
        Mono m = op(r);
        for (long col = 0; col < m.dim; ++col)
            if (m.to[col] >= 0) {
                size_t at = (size_t)(m.to[col] * m.dim + col);
                d[at] = d[at] + c * Cyc::root(F, m.e[col] % N_ * stride);
            }
    }
    return d;
}

const Cyc& RepTables::trace(int r) {
    if (!tr_[r]) tr_[r] = mono_trace(A_->F, op(r), N_);
    return *tr_[r];
}

const Cyc& RepTables::trace_antipode(ApqAlgebra& A, int r) {
    if (!trs_[r]) {
        SVec srow = A.antipode(SVec::unit(r, Cyc::one(A.F)));
        Cyc s = Cyc::zero(A.F);
        for (const auto& [w, c] : srow.t) s = s + c * trace(w);
        trs_[r] = s;
    }
    return *trs_[r];
}

// ---------------------------------------------------------------------------
// Module certification
// ---------------------------------------------------------------------------

namespace {

// Dense equality of a monomial against an accumulated dense matrix.
bool mono_matches_dense(const FieldPtr& F, long N, const Mono& m,
                        const std::vector<Cyc>& dense) {
    const long stride = F->N / N;
    for (long r = 0; r < m.dim; ++r)
        for (long c = 0; c < m.dim; ++c) {
            const Cyc& have = dense[(size_t)(r * m.dim + c)];
            if (m.to[c] == r) {
                if (!(have - Cyc::root(F, m.e[c] % N * stride)).is_zero())
                    return false;
            } else if (!have.is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace

// Unknowns are the weight-matched entries of the intertwiner (the z and e
// constraints are exactly that matching); rows come from the x and y
// constraints.
long hom_dim(const FieldPtr& F, long N, const SimpleRep& X, const SimpleRep& Y) {
    std::vector<std::pair<int, int>> slots;  // (row in Y, col in X)
    for (long r = 0; r < Y.dim; ++r)
        for (long c = 0; c < X.dim; ++c)
            if (Y.zw[r] == X.zw[c] && Y.ew[r] == X.ew[c])
                slots.push_back({(int)r, (int)c});
    if (slots.empty()) return 0;
    auto slot_of = [&](int r, int c) -> long {
        for (size_t s = 0; s < slots.size(); ++s)
            if (slots[s].first == r && slots[s].second == c) return (long)s;
        return -1;
    };
    const long stride = F->N / N;
    std::vector<std::vector<Cyc>> rows;
    auto add_rows = [&](const Mono& mx, const Mono& my) {
        // Constraint T rho_X(g) = rho_Y(g) T, entry by entry.
        for (long r = 0; r < Y.dim; ++r)
            for (long c = 0; c < X.dim; ++c) {
                std::vector<Cyc> row(slots.size(), Cyc::zero(F));
                bool nontrivial = false;
                if (mx.to[c] >= 0) {
                    long s = slot_of(r, mx.to[c]);
                    if (s >= 0) {
                        row[s] = row[s] + Cyc::root(F, mx.e[c] % N * stride);
                        nontrivial = true;
                    }
                }
                for (long rr = 0; rr < Y.dim; ++rr)
                    if (my.to[rr] == r) {
                        long s = slot_of((int)rr, (int)c);
                        if (s >= 0) {
                            row[s] = row[s] - Cyc::root(F, my.e[rr] % N * stride);
                            nontrivial = true;
                        }
                    }
                if (nontrivial) rows.push_back(std::move(row));
            }
    };
    add_rows(X.x, Y.x);
    add_rows(X.y, Y.y);
    if (rows.empty()) return (long)slots.size();
    DMat M(F, (long)rows.size(), (long)slots.size());
    for (long r = 0; r < (long)rows.size(); ++r)
        for (long c = 0; c < (long)slots.size(); ++c) M.at(r, c) = rows[r][c];
    return (long)slots.size() - rank_exact(M);
}

long hom_dim_mod(const ModCtx& ctx, const FieldPtr& F, long N,
                 const SimpleRep& X, const SimpleRep& Y) {
    std::vector<std::pair<int, int>> slots;  // (row in Y, col in X)
    for (long r = 0; r < Y.dim; ++r)
        for (long c = 0; c < X.dim; ++c)
            if (Y.zw[r] == X.zw[c] && Y.ew[r] == X.ew[c])
                slots.push_back({(int)r, (int)c});
    if (slots.empty()) return 0;
    std::vector<long> slot_at((size_t)(Y.dim * X.dim), -1);
    for (size_t s = 0; s < slots.size(); ++s)
        slot_at[(size_t)(slots[s].first * X.dim + slots[s].second)] = (long)s;
    // Images of the order-N roots of unity in F_p.
    const long stride = F->N / N;
    std::vector<std::uint64_t> zr((size_t)N);
    for (long k = 0; k < N; ++k) zr[(size_t)k] = ctx.reduce(Cyc::root(F, k * stride));
    ModEchelon ech(ctx, (long)slots.size());
    auto add_rows = [&](const Mono& mx, const Mono& my) {
        for (long r = 0; r < Y.dim; ++r)
            for (long c = 0; c < X.dim; ++c) {
                std::vector<std::uint64_t> row(slots.size(), 0);
                bool nontrivial = false;
                if (mx.to[c] >= 0) {
                    long s = slot_at[(size_t)(r * X.dim + mx.to[c])];
                    if (s >= 0) {
                        row[(size_t)s] = ctx.add(row[(size_t)s], zr[(size_t)(mx.e[c] % N)]);
                        nontrivial = true;
                    }
                }
                for (long rr = 0; rr < Y.dim; ++rr)
                    if (my.to[rr] == r) {
                        long s = slot_at[(size_t)(rr * X.dim + c)];
                        if (s >= 0) {
                            row[(size_t)s] = ctx.sub(row[(size_t)s], zr[(size_t)(my.e[rr] % N)]);
                            nontrivial = true;
                        }
                    }
                if (nontrivial) ech.feed(std::move(row));
            }
    };
    add_rows(X.x, Y.x);
    add_rows(X.y, Y.y);
    return (long)slots.size() - ech.rank();
}

Report check_simples(ApqAlgebra& A, std::vector<SimpleRep>& simples,
                     ModQuotient& mq, const SimplesOptions& opts) {
    Report rep;
    const ApqParams& P = A.P;
    const FieldPtr& F = A.F;
    const long p = P.p, q = P.q, N = p * q, dimq = A.dim();
    const MatchedPair& mp = A.ct.mp;
    const int a1 = sd_index(p, 1, 0);

    auto chk = [&](const std::string& name, bool okv, const std::string& wit) {
        rep.count();
        if (!okv) rep.fail(name, wit);
    };

    // --- counts -------------------------------------------------------------
    long nT = 0, nU = 0, nV = 0, nW = 0, sumsq = 0;
    for (const auto& X : simples) {
        switch (X.L.fam) {
            case Family::T: ++nT; break;
            case Family::U: ++nU; break;
            case Family::V: ++nV; break;
            case Family::W: ++nW; break;
        }
        sumsq += X.dim * X.dim;
    }
    chk("simples.count_T", nT == q * q, std::to_string(nT));
    chk("simples.count_U", nU == q * P.m, std::to_string(nU));
    chk("simples.count_V", nV == P.m * q * p, std::to_string(nV));
    chk("simples.count_W", nW == q * q * (q - 1), std::to_string(nW));
    chk("simples.sum_dim_sq", sumsq == dimq,
        std::to_string(sumsq) + " vs dim " + std::to_string(dimq));
    {
        bool canon = true, indexed = true;
        for (size_t i = 0; i < simples.size(); ++i) {
            if (!(canonical_label(P, simples[i].L) == simples[i].L)) canon = false;
            if (label_index(P, simples[i].L) != (long)i) indexed = false;
        }
        chk("simples.labels_canonical", canon, "");
        chk("simples.labels_indexed", indexed, "");
    }

    // --- structural checks on the generator monomials -----------------------
    for (auto& X : simples) {
        const std::string at = " at " + X.L.str();
        chk("simples.x_order", mono_eq(N, mono_pow(N, X.x, q), mono_id(X.dim)),
            "x^q = 1" + at);
        chk("simples.y_order", mono_eq(N, mono_pow(N, X.y, p), mono_id(X.dim)),
            "y^p = 1" + at);
        chk("simples.rel_yx",
            mono_eq(N, mono_mul(N, X.y, X.x),
                    mono_mul(N, X.x, mono_pow(N, X.y, P.t % p))),
            "y x = x y^t" + at);
        // e_g x = x e_{g<x}  <=>  ew[c] = ew[x(c)] < x for every basis line.
        {
            bool okv = true;
            for (long c = 0; c < X.dim && okv; ++c)
                if (X.ew[c] != mp.ract[X.ew[X.x.to[c]]][1]) okv = false;
            chk("simples.rel_ex", okv, "e-weight transport along x" + at);
        }
        // z_l x = x z_l and z_l y = y z_l: z weight constant along x and y.
        {
            bool okv = true;
            for (long c = 0; c < X.dim && okv; ++c)
                if (X.zw[X.x.to[c]] != X.zw[c]) okv = false;
            chk("simples.rel_zx", okv, "z-weight transport along x" + at);
        }
        {
            bool okv = true;
            for (long c = 0; c < X.dim && okv; ++c)
                if (X.zw[X.y.to[c]] != X.zw[c]) okv = false;
            chk("simples.rel_zy", okv, "z-weight transport along y" + at);
        }
        // e_g y = y sum_i z_i e_{a^{-t^i} g a}  <=>
        // ew[y(c)] = a^{t^{zw[c]}} ew[c] a^{-1}.
        {
            bool okv = true;
            for (long c = 0; c < X.dim && okv; ++c) {
                int apos = sd_index(p, P.tpow[X.zw[c]] % p, 0);
                int want = mp.G.mul[mp.G.mul[apos][X.ew[c]]][mp.G.inv[a1]];
                if (X.ew[X.y.to[c]] != want) okv = false;
            }
            chk("simples.rel_ey", okv, "e-weight transport along y" + at);
        }
        {
            bool okv = true;
            for (long c = 0; c < X.dim && okv; ++c)
                if (X.zw[c] < 0 || X.zw[c] >= q || X.ew[c] < 0 || X.ew[c] >= p * q)
                    okv = false;
            chk("simples.weights_in_range", okv, "weight ranges" + at);
        }
        // Unitarity of the generator actions: the adjoint is the inverse
        // power, which is the star image of the generator.
        chk("simples.unitary_x",
            mono_eq(N, mono_dagger(N, X.x), mono_pow(N, X.x, q - 1)),
            "x adjoint" + at);
        chk("simples.unitary_y",
            mono_eq(N, mono_dagger(N, X.y), mono_pow(N, X.y, p - 1)),
            "y adjoint" + at);
    }

    std::vector<RepTables> tabs;
    tabs.reserve(simples.size());
    for (auto& X : simples) tabs.emplace_back(A, X);

    // --- unit row, star rows, exact product samples -------------------------
    for (size_t xi = 0; xi < simples.size(); ++xi) {
        auto& T = tabs[xi];
        std::vector<Cyc> unit_dense = T.act(A.A->unit);
        bool okv = true;
        for (long r = 0; r < T.dim() && okv; ++r)
            for (long c = 0; c < T.dim() && okv; ++c) {
                const Cyc& v = unit_dense[(size_t)(r * T.dim() + c)];
                if (r == c ? !(v - Cyc::one(F)).is_zero() : !v.is_zero()) okv = false;
            }
        chk("simples.unit_row", okv, "rho(1) = id at " + simples[xi].L.str());
    }
    std::mt19937_64 rng(opts.seed);
    for (long s = 0; s < opts.star_samples; ++s) {
        int r = (int)(rng() % (std::uint64_t)dimq);
        SVec srow = A.star(SVec::unit(r, Cyc::one(F)));
        for (size_t xi = 0; xi < simples.size(); ++xi) {
            auto& T = tabs[xi];
            std::vector<Cyc> lhs = T.act(srow);
            Mono mr = T.op(r);
            bool okv = true;
            const long stride = F->N / N;
            for (long rr = 0; rr < T.dim() && okv; ++rr)
                for (long cc = 0; cc < T.dim() && okv; ++cc) {
                    Cyc want = Cyc::zero(F);
                    if (mr.to[rr] == cc)
                        want = Cyc::root(F, mr.e[rr] % N * stride).conj();
                    if (!(lhs[(size_t)(rr * T.dim() + cc)] - want).is_zero())
                        okv = false;
                }
            rep.count();
            if (!okv)
                rep.fail("simples.star_row",
                         "rho(b*) != rho(b) adjoint at basis " + std::to_string(r) +
                             " in " + simples[xi].L.str());
        }
    }
    for (long s = 0; s < opts.exact_pairs; ++s) {
        int i = (int)(rng() % (std::uint64_t)dimq);
        int j = (int)(rng() % (std::uint64_t)dimq);
        SVec row = A.mult(SVec::unit(i, Cyc::one(F)), SVec::unit(j, Cyc::one(F)));
        for (size_t xi = 0; xi < simples.size(); ++xi) {
            auto& T = tabs[xi];
            Mono lhs = mono_mul(N, T.op(i), T.op(j));
            std::vector<Cyc> rhs = T.act(row);
            rep.count();
            if (!mono_matches_dense(F, N, lhs, rhs))
                rep.fail("simples.mult_exact",
                         "pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") in " + simples[xi].L.str());
        }
    }

    // --- compressed full product scan over F_p ------------------------------
    {
        const ModCtx& ctx = mq.ctx();
        const std::uint64_t zeta = ctx.reduce(Cyc::root(F, F->N / N));
        auto zpow = [&](long e2) {
            return ctx.pow(zeta, (std::uint64_t)mod_norm(e2, N));
        };
        const long nreps = (long)simples.size();
        for (long probe = 0; probe < opts.freivalds_probes; ++probe) {
            std::vector<std::vector<std::uint64_t>> wl(nreps), wr(nreps);
            for (long t2 = 0; t2 < nreps; ++t2) {
                wl[t2].resize(simples[t2].dim);
                wr[t2].resize(simples[t2].dim);
                for (long d = 0; d < simples[t2].dim; ++d) {
                    wl[t2][d] = 1 + rng() % (ctx.p - 1);
                    wr[t2][d] = 1 + rng() % (ctx.p - 1);
                }
            }
            // Compressions L[i] = w^T rho(b_i), R[j] = rho(b_j) w',
            // S[k] = w^T rho(b_k) w'; the product check on a pair (i, j) then
            // costs two short dot products per module.
            std::vector<std::vector<std::uint64_t>> L(nreps), R(nreps), S(nreps);
            for (long t2 = 0; t2 < nreps; ++t2) {
                const long d = simples[t2].dim;
                L[t2].assign((size_t)(dimq * d), 0);
                R[t2].assign((size_t)(dimq * d), 0);
                S[t2].assign((size_t)dimq, 0);
                for (long r = 0; r < dimq; ++r) {
                    Mono m = tabs[t2].op((int)r);
                    for (long c = 0; c < d; ++c) {
                        if (m.to[c] < 0) continue;
                        std::uint64_t sc = zpow(m.e[c]);
                        L[t2][(size_t)(r * d + c)] = ctx.mul(wl[t2][m.to[c]], sc);
                        R[t2][(size_t)(r * d + m.to[c])] =
                            ctx.add(R[t2][(size_t)(r * d + m.to[c])],
                                    ctx.mul(sc, wr[t2][c]));
                        S[t2][(size_t)r] =
                            ctx.add(S[t2][(size_t)r],
                                    ctx.mul(wl[t2][m.to[c]],
                                            ctx.mul(sc, wr[t2][c])));
                    }
                }
            }
            long mism = 0, npairs = 0;
            auto run_pair = [&](int i, int j) {
                ModQuotient::Row row = mq.mult_row_nomemo(i, j);
                for (long t2 = 0; t2 < nreps; ++t2) {
                    const long d = simples[t2].dim;
                    std::uint64_t lhs = 0;
                    for (long c = 0; c < d; ++c)
                        lhs = ctx.add(lhs, ctx.mul(L[t2][(size_t)(i * d + c)],
                                                   R[t2][(size_t)(j * d + c)]));
                    std::uint64_t rhs = 0;
                    for (const auto& [k, cv] : row)
                        rhs = ctx.add(rhs, ctx.mul(cv, S[t2][(size_t)k]));
                    if (lhs != rhs) ++mism;
                }
                ++npairs;
            };
            if (opts.freivalds_pairs == 0) {
                for (int i = 0; i < dimq; ++i)
                    for (int j = 0; j < dimq; ++j) run_pair(i, j);
            } else {
                for (long s2 = 0; s2 < opts.freivalds_pairs; ++s2)
                    run_pair((int)(rng() % (std::uint64_t)dimq),
                             (int)(rng() % (std::uint64_t)dimq));
            }
            rep.count(npairs * nreps);
            if (mism)
                rep.fail("simples.mult_modular",
                         std::to_string(mism) + " mismatches over " +
                             std::to_string(npairs) + " pairs (probe " +
                             std::to_string(probe) + ")");
        }
    }

    // --- Schur endomorphisms and pairwise non-isomorphism -------------------
    for (const auto& X : simples)
        chk("simples.end_dim", hom_dim(F, N, X, X) == 1, "End = k at " + X.L.str());
    {
        auto fp = [&](const SimpleRep& X) {
            std::vector<std::pair<int, int>> w;
            for (long c = 0; c < X.dim; ++c) w.push_back({X.zw[c], X.ew[c]});
            std::sort(w.begin(), w.end());
            return w;
        };
        long solved = 0, structural = 0;
        for (size_t i2 = 0; i2 < simples.size(); ++i2)
            for (size_t j2 = i2 + 1; j2 < simples.size(); ++j2) {
                const auto& X = simples[i2];
                const auto& Y = simples[j2];
                if (X.dim != Y.dim || fp(X) != fp(Y)) {
                    // Different weight multisets: Hom = 0 structurally.
                    ++structural;
                    continue;
                }
                ++solved;
                if (hom_dim(F, N, X, Y) != 0)
                    rep.fail("simples.pairwise_noniso",
                             X.L.str() + " ~ " + Y.L.str());
            }
        rep.count(solved + structural);
        chk("simples.noniso_solved", solved > 0,
            "weight-collision pairs separated exactly: " + std::to_string(solved));
    }

    // --- label equivalences via explicit intertwiners -----------------------
    {
        long nequiv = 0;
        auto intertwines = [&](const SimpleRep& C, const SimpleRep& Raw,
                               const Mono& phi) {
            if (!mono_eq(N, mono_mul(N, C.x, phi), mono_mul(N, phi, Raw.x)))
                return false;
            if (!mono_eq(N, mono_mul(N, C.y, phi), mono_mul(N, phi, Raw.y)))
                return false;
            for (long c = 0; c < Raw.dim; ++c) {
                if (C.zw[phi.to[c]] != Raw.zw[c]) return false;
                if (C.ew[phi.to[c]] != Raw.ew[c]) return false;
            }
            return true;
        };
        for (long a = 0; a < q; ++a)
            for (long r = 1; r <= P.m; ++r)
                for (long s = 1; s < q; ++s) {
                    SimpleLabel raw{Family::U, a, P.betapow[r] * P.tpow[s] % p, 0};
                    SimpleRep C = build_simple(P, {Family::U, a, P.betapow[r], 0});
                    SimpleRep Raw = build_simple(P, raw);
                    Mono phi = mono_id(q);
                    for (long c = 0; c < q; ++c) phi.to[c] = (int)((c + s) % q);
                    ++nequiv;
                    if (!intertwines(C, Raw, phi))
                        rep.fail("simples.equiv_U", raw.str());
                    if (!(canonical_label(P, raw) == C.L))
                        rep.fail("simples.equiv_U_canon", raw.str());
                }
        for (long r = 1; r <= P.m; ++r)
            for (long b = 0; b < q; ++b)
                for (long c = 0; c < p; ++c)
                    for (long s = 1; s < q; ++s) {
                        SimpleLabel raw{Family::V, P.betapow[r] * P.tpow[s] % p, b,
                                        c * P.tinv(s) % p};
                        SimpleRep C = build_simple(P, {Family::V, P.betapow[r], b, c});
                        SimpleRep Raw = build_simple(P, raw);
                        Mono phi = mono_id(q);
                        for (long l = 0; l < q; ++l) phi.to[l] = (int)((l + s) % q);
                        ++nequiv;
                        if (!intertwines(C, Raw, phi))
                            rep.fail("simples.equiv_V", raw.str());
                        if (!(canonical_label(P, raw) == C.L))
                            rep.fail("simples.equiv_V_canon", raw.str());
                    }
        rep.count(nequiv);
    }
    return rep;
}

long center_dim_mod(ApqAlgebra& A, ModQuotient& mq) {
    const ModCtx& ctx = mq.ctx();
    const long dimq = A.dim();
    // Commuting with x, y and one separating combination of the commuting
    // projections z_i e_g is equivalent to commuting with every generator:
    // the z_i e_g are orthogonal idempotents, so single-variable polynomial
    // interpolation recovers each of them from any element with pairwise
    // distinct coefficients, and sums then give back the z_i and the e_g.
    // Together with the word span certificate, the commutant of these three
    // elements is exactly the center; the modular nullity bounds its
    // dimension from above.
    std::vector<SVec> gens;
    gens.push_back(A.x);
    gens.push_back(A.y);
    {
        Accum acc(A.F);
        long nu = 1;
        for (long i = 0; i < A.P.q; ++i)
            for (long gi = 0; gi < A.P.p * A.P.q; ++gi, ++nu) {
                // z_i e_g is a single scaled coset: a structural product.
                int pidx = A.dd.pair_index(A.ct.idx(0, (int)i),
                                           A.ct.idx((int)gi, 0));
                int qi = A.cq.pt->proj_index[pidx];
                if (qi < 0) continue;
                acc.add(qi, A.cq.pt->proj_scale[pidx].scaled(Rat(nu)));
            }
        gens.push_back(acc.take());
    }
    std::vector<ModQuotient::Row> grows;
    for (const auto& gv : gens) grows.push_back(mq.reduce(gv));
    ModEchelon ech(ctx, (long)gens.size() * dimq);
    for (int i = 0; i < dimq; ++i) {
        std::vector<std::uint64_t> dense((size_t)gens.size() * dimq, 0);
        ModQuotient::Row bi{{i, 1}};
        for (size_t gi = 0; gi < grows.size(); ++gi) {
            ModQuotient::Row lhs = mq.mult_sparse(grows[gi], bi);
            ModQuotient::Row rhs = mq.mult_sparse(bi, grows[gi]);
            const size_t off = gi * (size_t)dimq;
            for (const auto& [k, c] : lhs)
                dense[off + (size_t)k] = ctx.add(dense[off + (size_t)k], c);
            for (const auto& [k, c] : rhs)
                dense[off + (size_t)k] = ctx.sub(dense[off + (size_t)k], c);
        }
        ech.feed(std::move(dense));
    }
    return dimq - ech.rank();
}

}  // namespace forge
