// SPDX-License-Identifier: Apache-2.0

#include "forge/group.hpp"

#include <stdexcept>

#include "forge/numtheory.hpp"

namespace forge {

int FiniteGroup::pow(int g, long k) const {
    int d = order(g);
    k %= d;
    if (k < 0) k += d;
    int acc = 0;
    for (long s = 0; s < k; ++s) acc = op(acc, g);
    return acc;
}

int FiniteGroup::order(int g) const {
    int acc = g, d = 1;
    while (acc != 0) {
        acc = op(acc, g);
        ++d;
        if (d > n) throw std::logic_error("FiniteGroup::order: table is not a group");
    }
    return d;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

Report validate_group(const FiniteGroup& G) {
    Report rep;
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            int p = G.op(a, b);
            rep.count(1);
            if (p < 0 || p >= G.n)
                rep.fail("group.closure", G.label(a) + "*" + G.label(b));
        }
    for (int a = 0; a < G.n; ++a) {
        rep.count(2);
        if (G.op(0, a) != a || G.op(a, 0) != a) rep.fail("group.identity", G.label(a));
        rep.count(2);
        if (G.op(a, G.inv[a]) != 0 || G.op(G.inv[a], a) != 0)
            rep.fail("group.inverse", G.label(a));
    }
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            for (int c = 0; c < G.n; ++c) {
                rep.count(1);
                if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
                    rep.fail("group.assoc",
                             G.label(a) + "," + G.label(b) + "," + G.label(c));
            }
    return rep;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    FiniteGroup G;
    G.n = n;
    G.mul.assign(n, std::vector<int>(n));
    G.inv.resize(n);
    G.name.resize(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) G.mul[a][b] = (a + b) % n;
        G.inv[a] = (n - a) % n;
        G.name[a] = a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a));
    }
    return G;
}

FiniteGroup semidirect_cp_cq(long p, long q, long t) {
    if (!is_prime_u64(p) || !is_prime_u64(q))
        throw std::invalid_argument("semidirect_cp_cq: p and q must be prime");
    t %= p;
    if (t < 0) t += p;
    // t must have multiplicative order exactly q modulo p
    long acc = 1;
    long ord = 0;
    for (long k = 1; k <= p; ++k) {
        acc = (acc * t) % p;
        if (acc == 1) {
            ord = k;
            break;
        }
    }
    if (ord != q)
        throw std::invalid_argument(
            "semidirect_cp_cq: t must have order exactly q modulo p");

    FiniteGroup G;
    G.n = (int)(p * q);
    G.mul.assign(G.n, std::vector<int>(G.n));
    G.inv.resize(G.n);
    G.name.resize(G.n);
    // powers of t mod p
    std::vector<long> tp(q);
    tp[0] = 1;
    for (long j = 1; j < q; ++j) tp[j] = (tp[j - 1] * t) % p;
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < q; ++j) {
            int g = sd_index(p, i, j);
            for (long k = 0; k < p; ++k)
                for (long l = 0; l < q; ++l) {
                    // (a^i b^j)(a^k b^l) = a^{i + k t^j} b^{j+l}
                    G.mul[g][sd_index(p, k, l)] =
                        sd_index(p, (i + k * tp[j]) % p, (j + l) % q);
                }
            std::string nm;
            if (i == 0 && j == 0) nm = "1";
            if (i > 0) nm += "a" + (i > 1 ? "^" + std::to_string(i) : "");
            if (j > 0) nm += "b" + (j > 1 ? "^" + std::to_string(j) : "");
            G.name[g] = nm;
        }
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h)
            if (G.mul[g][h] == 0) G.inv[g] = h;
    return G;
}

std::vector<int> generating_set(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<char> in(G.n, 0);
    in[0] = 1;
    int covered = 1;
    while (covered < G.n) {
        int pick = -1;
        for (int g = 1; g < G.n; ++g)
            if (!in[g]) {
                pick = g;
                break;
            }
        gens.push_back(pick);
        // close under multiplication
        std::vector<char> seen = in;
        seen[pick] = 1;
        std::vector<int> stack = {pick};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < G.n; ++y) {
                if (!seen[y]) continue;
                for (int z : {G.op(x, y), G.op(y, x)}) {
                    if (!seen[z]) {
                        seen[z] = 1;
                        stack.push_back(z);
                    }
                }
            }
        }
        in = seen;
        covered = 0;
        for (char c : in) covered += c;
    }
    return gens;
}

namespace {

// Propagate exponent assignments on generators to the whole group; returns
// false on any inconsistency.  e is indexed by element, -1 = unassigned.
bool propagate_hom(const FiniteGroup& G, long N, std::vector<long>& e) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < G.n; ++a) {
            if (e[a] < 0) continue;
            for (int b = 0; b < G.n; ++b) {
                if (e[b] < 0) continue;
                long v = (e[a] + e[b]) % N;
                int ab = G.op(a, b);
                if (e[ab] < 0) {
                    e[ab] = v;
                    changed = true;
                } else if (e[ab] != v) {
                    return false;
                }
            }
        }
    }
    return true;
}

void hom_dfs(const FiniteGroup& G, long N, const std::vector<int>& gens, size_t k,
             std::vector<long> e, std::vector<std::vector<long>>& out) {
    if (!propagate_hom(G, N, e)) return;
    // find the next unassigned generator
    while (k < gens.size() && e[gens[k]] >= 0) ++k;
    if (k == gens.size()) {
        for (long v : e)
            if (v < 0) throw std::logic_error("group_homs_to_ZN: generators do not generate");
        out.push_back(e);
        return;
    }
    int g = gens[k];
    long d = G.order(g);
    if (N % d != 0)
        throw std::invalid_argument("group_homs_to_ZN: element order does not divide N");
    for (long s = 0; s < d; ++s) {
        std::vector<long> e2 = e;
        e2[g] = (s * (N / d)) % N;
        hom_dfs(G, N, gens, k + 1, std::move(e2), out);
    }
}

}  // namespace

std::vector<std::vector<long>> group_homs_to_ZN(const FiniteGroup& G, long N) {
    std::vector<int> gens = generating_set(G);
    std::vector<long> e(G.n, -1);
    e[0] = 0;
    std::vector<std::vector<long>> out;
    hom_dfs(G, N, gens, 0, std::move(e), out);
    return out;
}

Report validate_matched_pair(const MatchedPair& mp) {
    Report rep;
    const FiniteGroup &G = mp.G, &F = mp.F;
    auto ra = [&](int g, int f) { return mp.ract[g][f]; };
    auto la = [&](int g, int f) { return mp.lact[g][f]; };

    for (int g = 0; g < G.n; ++g) {
        rep.count(2);
        if (ra(g, 0) != g) rep.fail("mp.ract_unit", G.label(g));
        if (la(g, 0) != 0) rep.fail("mp.lact_unit_r", G.label(g));
    }
    for (int f = 0; f < F.n; ++f) {
        rep.count(2);
        if (ra(0, f) != 0) rep.fail("mp.ract_unit_l", F.label(f));
        if (la(0, f) != f) rep.fail("mp.lact_unit", F.label(f));
    }
    // right action law: g <| (f f') = (g <| f) <| f'
    for (int g = 0; g < G.n; ++g)
        for (int f = 0; f < F.n; ++f)
            for (int f2 = 0; f2 < F.n; ++f2) {
                rep.count(1);
                if (ra(g, F.op(f, f2)) != ra(ra(g, f), f2))
                    rep.fail("mp.ract_action",
                             G.label(g) + "," + F.label(f) + "," + F.label(f2));
            }
    // left action law: (g g') |> f = g |> (g' |> f)
    for (int g = 0; g < G.n; ++g)
        for (int g2 = 0; g2 < G.n; ++g2)
            for (int f = 0; f < F.n; ++f) {
                rep.count(1);
                if (la(G.op(g, g2), f) != la(g, la(g2, f)))
                    rep.fail("mp.lact_action",
                             G.label(g) + "," + G.label(g2) + "," + F.label(f));
            }
    // g |> (f f') = (g |> f) ((g <| f) |> f')
    for (int g = 0; g < G.n; ++g)
        for (int f = 0; f < F.n; ++f)
            for (int f2 = 0; f2 < F.n; ++f2) {
                rep.count(1);
                if (la(g, F.op(f, f2)) != F.op(la(g, f), la(ra(g, f), f2)))
                    rep.fail("mp.compat_l",
                             G.label(g) + "," + F.label(f) + "," + F.label(f2));
            }
    // (g g') <| f = (g <| (g' |> f)) (g' <| f)
    for (int g = 0; g < G.n; ++g)
        for (int g2 = 0; g2 < G.n; ++g2)
            for (int f = 0; f < F.n; ++f) {
                rep.count(1);
                if (ra(G.op(g, g2), f) != G.op(ra(g, la(g2, f)), ra(g2, f)))
                    rep.fail("mp.compat_r",
                             G.label(g) + "," + G.label(g2) + "," + F.label(f));
            }
    return rep;
}

}  // namespace forge
