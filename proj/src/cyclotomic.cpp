// SPDX-License-Identifier: Apache-2.0

#include "forge/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "forge/numtheory.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Field contexts
// ---------------------------------------------------------------------------

CycField::CycField(long n) : N(n) {
    if (n < 1) throw std::invalid_argument("CycField: conductor must be >= 1");
    deg = euler_phi(n);
    phi_poly = cyclotomic_polynomial(n);

    // Row for x^deg: since Phi_N is monic, x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1}).
    std::vector<mpz_class> row(deg);
    for (long j = 0; j < deg; ++j) row[j] = -phi_poly[j];
    red.push_back(row);
    // x^{k+1} = x * x^k, folding the overflow coefficient back through the first row.
    for (long k = deg + 1; k <= 2 * deg - 2; ++k) {
        std::vector<mpz_class> nxt(deg);
        const mpz_class& top = row[deg - 1];
        for (long j = 0; j < deg; ++j) {
            nxt[j] = (j > 0 ? row[j - 1] : mpz_class(0)) + top * red[0][j];
        }
        red.push_back(nxt);
        row = std::move(nxt);
    }

    zeta_pow.resize(N);
    std::vector<mpz_class> z(deg);
    z[0] = 1;
    zeta_pow[0] = z;
    for (long k = 1; k < N; ++k) {
        std::vector<mpz_class> nxt(deg);
        const mpz_class& top = z[deg - 1];
        for (long j = 0; j < deg; ++j) {
            nxt[j] = (j > 0 ? z[j - 1] : mpz_class(0)) + top * red[0][j];
        }
        zeta_pow[k] = nxt;
        z = std::move(nxt);
    }
}

std::shared_ptr<const CycField> CycField::get(long N) {
    static std::map<long, std::shared_ptr<const CycField>> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto F = std::shared_ptr<const CycField>(new CycField(N));
    cache.emplace(N, F);
    return F;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

Cyc Cyc::one(const FieldPtr& F) {
    Cyc r(F);
    r.c[0] = 1;
    return r;
}

Cyc Cyc::rational(const FieldPtr& F, const Rat& q) {
    Cyc r(F);
    r.c[0] = q;
    return r;
}

Cyc Cyc::integer(const FieldPtr& F, long v) {
    Cyc r(F);
    r.c[0] = v;
    return r;
}

Cyc Cyc::root(const FieldPtr& F, long k) {
    k %= F->N;
    if (k < 0) k += F->N;
    Cyc r(F);
    const auto& z = F->zeta_pow[k];
    for (long j = 0; j < F->deg; ++j) r.c[j] = z[j];
    return r;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool Cyc::is_zero() const {
    for (const Rat& q : c)
        if (sgn(q) != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t j = 1; j < c.size(); ++j)
        if (sgn(c[j]) != 0) return false;
    return true;
}

static void require_same_field(const Cyc& a, const Cyc& b) {
    if (!a.F || !b.F || a.F->N != b.F->N)
        throw std::invalid_argument("Cyc: mixed conductors (promote first)");
}

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

Cyc Cyc::operator-() const {
    Cyc r(F);
    for (size_t j = 0; j < c.size(); ++j) r.c[j] = -c[j];
    return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
    require_same_field(*this, o);
    Cyc r(F);
    for (size_t j = 0; j < c.size(); ++j) r.c[j] = c[j] + o.c[j];
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    require_same_field(*this, o);
    Cyc r(F);
    for (size_t j = 0; j < c.size(); ++j) r.c[j] = c[j] - o.c[j];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    require_same_field(*this, o);
    for (size_t j = 0; j < c.size(); ++j) c[j] += o.c[j];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    require_same_field(*this, o);
    for (size_t j = 0; j < c.size(); ++j) c[j] -= o.c[j];
    return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
    require_same_field(*this, o);
    const long d = F->deg;
    // Sparse-aware convolution: most products in practice involve scalars
    // with very few nonzero coordinates (roots of unity, integers).
    std::vector<int> ia, ib;
    ia.reserve(8);
    ib.reserve(8);
    for (long j = 0; j < d; ++j)
        if (sgn(c[j]) != 0) ia.push_back((int)j);
    for (long j = 0; j < d; ++j)
        if (sgn(o.c[j]) != 0) ib.push_back((int)j);
    Cyc r(F);
    if (ia.empty() || ib.empty()) return r;

    std::vector<Rat> acc(2 * d - 1);
    Rat tmp;
    for (int i : ia)
        for (int j : ib) {
            tmp = c[i] * o.c[j];
            acc[i + j] += tmp;
        }
    for (long k = 2 * d - 2; k >= d; --k) {
        if (sgn(acc[k]) == 0) continue;
        const auto& row = F->red[k - d];
        for (long j = 0; j < d; ++j) {
            if (sgn(row[j]) != 0) acc[j] += acc[k] * row[j];
        }
    }
    for (long j = 0; j < d; ++j) r.c[j] = std::move(acc[j]);
    return r;
}

bool Cyc::operator==(const Cyc& o) const {
    require_same_field(*this, o);
    for (size_t j = 0; j < c.size(); ++j)
        if (c[j] != o.c[j]) return false;
    return true;
}

Cyc Cyc::scaled(const Rat& q) const {
    Cyc r(F);
    if (sgn(q) == 0) return r;
    for (size_t j = 0; j < c.size(); ++j) r.c[j] = c[j] * q;
    return r;
}

// ---------------------------------------------------------------------------
// Inversion via the extended Euclidean algorithm in Q[x] against Phi_N
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Rat>;  // ascending coefficients, no trailing-zero guarantee

long pdeg(const Poly& p) {
    for (long j = (long)p.size() - 1; j >= 0; --j)
        if (sgn(p[j]) != 0) return j;
    return -1;
}

// r = r - q * x^shift * b  (in place)
void psubmul(Poly& r, const Rat& q, long shift, const Poly& b, long bdeg) {
    for (long j = 0; j <= bdeg; ++j) {
        if (sgn(b[j]) != 0) r[j + shift] -= q * b[j];
    }
}

// Divide a by b: returns quotient, leaves remainder in a.
Poly pdivmod(Poly& a, const Poly& b) {
    long db = pdeg(b);
    if (db < 0) throw std::domain_error("poly division by zero");
    long da = pdeg(a);
    Poly q(std::max<long>(da - db + 1, 1));
    const Rat& lead = b[db];
    while (da >= db) {
        Rat f = a[da] / lead;
        q[da - db] = f;
        psubmul(a, f, da - db, b, db);
        da = pdeg(a);
    }
    return q;
}

// c = a - q * b with result sized to hold everything
Poly plincomb(const Poly& a, const Poly& q, const Poly& b) {
    long dq = pdeg(q), db = pdeg(b);
    long n = std::max<long>((long)a.size(), (dq >= 0 && db >= 0) ? dq + db + 1 : 0);
    Poly r(std::max<long>(n, 1));
    for (size_t j = 0; j < a.size(); ++j) r[j] = a[j];
    if (dq >= 0 && db >= 0) {
        for (long i = 0; i <= dq; ++i) {
            if (sgn(q[i]) == 0) continue;
            for (long j = 0; j <= db; ++j) r[i + j] -= q[i] * b[j];
        }
    }
    return r;
}

}  // namespace

Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("Cyc::inv of zero");
    const long d = F->deg;
    if (is_rational()) {
        Cyc r(F);
        r.c[0] = 1 / c[0];
        return r;
    }
    Poly r0(d + 1), r1(d), t0(1), t1(1);
    for (long j = 0; j <= d; ++j) r0[j] = Rat(F->phi_poly[j]);
    for (long j = 0; j < d; ++j) r1[j] = c[j];
    t0[0] = 0;
    t1[0] = 1;
    while (pdeg(r1) > 0) {
        Poly q = pdivmod(r0, r1);  // r0 becomes the remainder
        std::swap(r0, r1);
        Poly t2 = plincomb(t0, q, t1);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    long dr = pdeg(r1);
    if (dr != 0)
        throw std::domain_error("Cyc::inv: element not invertible (gcd with Phi_N nontrivial)");
    const Rat& unit = r1[0];
    // t1 / unit reduced mod Phi_N gives the inverse; ext-Euclid keeps deg t1 < deg.
    Cyc res(F);
    long dt = pdeg(t1);
    if (dt >= d) {
        Poly phi(d + 1);
        for (long j = 0; j <= d; ++j) phi[j] = Rat(F->phi_poly[j]);
        pdivmod(t1, phi);
        dt = pdeg(t1);
    }
    for (long j = 0; j <= dt; ++j) res.c[j] = t1[j] / unit;
    return res;
}

Cyc Cyc::pow(long e) const {
    if (e == 0) return one(F);
    Cyc base = (e < 0) ? inv() : *this;
    unsigned long k = (e < 0) ? (unsigned long)(-e) : (unsigned long)e;
    Cyc acc = one(F);
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Galois action, conjugation, promotion
// ---------------------------------------------------------------------------

static Cyc substitute_powers(const Cyc& a, long mult, const FieldPtr& target) {
    // a with zeta^k replaced by zeta_target^{k*mult}
    Cyc r(target);
    const long M = target->N;
    for (long k = 0; k < (long)a.c.size(); ++k) {
        if (sgn(a.c[k]) == 0) continue;
        long e = (k * mult) % M;
        if (e < 0) e += M;
        const auto& z = target->zeta_pow[e];
        for (long j = 0; j < target->deg; ++j) {
            if (sgn(z[j]) != 0) r.c[j] += a.c[k] * z[j];
        }
    }
    return r;
}

Cyc Cyc::conj() const { return substitute_powers(*this, F->N - 1, F); }

Cyc Cyc::galois(long t) const {
    long tm = t % F->N;
    if (tm < 0) tm += F->N;
    if (gcd_long(tm, F->N) != 1)
        throw std::invalid_argument("Cyc::galois: exponent not coprime to conductor");
    return substitute_powers(*this, tm, F);
}

Cyc Cyc::promote(const FieldPtr& target) const {
    if (target->N % F->N != 0)
        throw std::invalid_argument("Cyc::promote: old conductor must divide new one");
    return substitute_powers(*this, target->N / F->N, target);
}

long Cyc::order_of(long bound) const {
    if (is_zero()) return 0;
    if (bound < 0) bound = 2 * F->N;
    if (is_rational()) {
        if (c[0] == 1) return 1;
        if (c[0] == -1) return 2;
        return 0;
    }
    Cyc acc = *this;
    Cyc id = one(F);
    for (long k = 1; k <= bound; ++k) {
        if (acc == id) return k;
        if (k < bound) acc = acc * *this;
    }
    return 0;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) == 0) continue;
        if (!first) os << " + ";
        os << c[j].get_str();
        if (j >= 1) os << "*z" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace forge
