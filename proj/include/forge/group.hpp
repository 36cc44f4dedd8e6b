// SPDX-License-Identifier: Apache-2.0
/**
 * @file group.hpp
 * @brief Finite groups as explicit multiplication tables, plus the matched
 *        pairs of groups used to build bicrossed-product Hopf algebras.
 *
 * Elements are integers 0..n-1 with 0 the identity.  A matched pair (G, F)
 * carries a right action of F on G (written g <| f) and a left action of G
 * on F (written g |> f) satisfying the compatibilities that make the set
 * G x F a group (equivalently, that make the bicrossed product work):
 *
 *   g |> (f f') = (g |> f) ((g <| f) |> f')
 *   (g g') <| f = (g <| (g' |> f)) (g' <| f)
 *   g |> 1 = 1,   1 <| f = 1,   g <| 1 = g,   1 |> f = f.
 */
#pragma once

#include <string>
#include <vector>

#include "forge/report.hpp"

namespace forge {

struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
    std::vector<int> inv;
    std::vector<std::string> name;  // optional, for messages

    int op(int a, int b) const { return mul[a][b]; }
    int pow(int g, long k) const;
    int order(int g) const;
    bool is_abelian() const;
    std::string label(int g) const {
        return g < (int)name.size() ? name[g] : std::to_string(g);
    }
};

/// Table sanity: closure range, associativity, identity at 0, inverses.
Report validate_group(const FiniteGroup& G);

FiniteGroup cyclic_group(int n);

/// Z_p x| Z_q with generators a (order p), b (order q) and b a b^-1 = a^t.
/// Element a^i b^j has index i + p*j.  Throws std::invalid_argument unless
/// p, q are primes and t has multiplicative order exactly q modulo p.
FiniteGroup semidirect_cp_cq(long p, long q, long t);

/// Index helpers for semidirect_cp_cq.
inline int sd_index(long p, long i, long j) { return (int)(i + p * j); }
inline long sd_i(long p, int g) { return g % p; }
inline long sd_j(long p, int g) { return g / p; }

/// A small generating set found greedily.
std::vector<int> generating_set(const FiniteGroup& G);

/// All group homomorphisms G -> Z/N, returned as exponent arrays e with
/// e[xy] = e[x] + e[y] (mod N).  Requires the order of every element of a
/// generating set to divide N.
std::vector<std::vector<long>> group_homs_to_ZN(const FiniteGroup& G, long N);

struct MatchedPair {
    FiniteGroup G;  // acted on from the right by F
    FiniteGroup F;  // acted on from the left by G
    std::vector<std::vector<int>> ract;  // ract[g][f] = g <| f
    std::vector<std::vector<int>> lact;  // lact[g][f] = g |> f
};

/// Full exhaustive check of both action laws and the mixed compatibilities.
Report validate_matched_pair(const MatchedPair& mp);

}  // namespace forge
