#include "ellsurf/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ellsurf {

// ---------------------------------------------------------------------------
// Poly over Q

Poly::Poly(mpq_class constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    normalize();
}

Poly Poly::monomial(int degree, const mpq_class& coeff) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    if (coeff == 0) return Poly();
    std::vector<mpq_class> c(degree + 1, mpq_class(0));
    c[degree] = coeff;
    return Poly(std::move(c));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[i];
}

const mpq_class& Poly::leading() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const mpq_class& s, const Poly& a) {
    if (s == 0) return Poly();
    std::vector<mpq_class> c = a.c_;
    for (auto& q : c) q *= s;
    return Poly(std::move(c));
}

Poly Poly::operator-() const { return mpq_class(-1) * (*this); }

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<mpq_class> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mpq_class(static_cast<long>(i)) * c_[i];
    return Poly(std::move(c));
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly result(mpq_class(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<mpq_class> rem = a.c_;
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<mpq_class> quot(std::max(dq + 1, 0), mpq_class(0));
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        mpq_class factor = rem[i] / b.c_.back();
        quot[i - db] = factor;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.c_[j];
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

Poly Poly::exact_divide(const Poly& b) const {
    Poly q, r;
    divrem(*this, b, q, r);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
}

bool Poly::divides(const Poly& a) const {
    if (is_zero()) return a.is_zero();
    Poly q, r;
    divrem(a, *this, q, r);
    return r.is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return mpq_class(1) / leading() * (*this);
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& q : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& q : c_) {
        mpz_class scaled = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading() < 0) scale = -scale;
    return scale * (*this);
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpq_class v = c_[i];
        if (first) {
            if (v < 0) out << '-';
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        mpq_class a = abs(v);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << '*';
            out << var;
            if (i > 1) out << '^' << i;
        }
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// integer polynomial helpers

namespace {

using ZPoly = std::vector<mpz_class>;  // coefficient i belongs to x^i, trimmed

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    zp_trim(c);
    return c;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    zp_trim(c);
    return c;
}

mpz_class smod(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zp_smod(const ZPoly& a, const mpz_class& m) {
    ZPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = smod(a[i], m);
    zp_trim(c);
    return c;
}

// division by a monic divisor, all over Z
void zp_divrem_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    r = a;
    int db = zp_deg(b);
    q.assign(std::max(zp_deg(a) - db + 1, 0), mpz_class(0));
    for (int i = zp_deg(a); i >= db; --i) {
        if (r[i] == 0) continue;
        mpz_class factor = r[i];
        q[i - db] = factor;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * b[j];
    }
    zp_trim(q);
    zp_trim(r);
}

bool zp_exact_div(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    // b need not be monic; classical trial division over Z
    if (b.empty()) return false;
    ZPoly r = a;
    int db = zp_deg(b);
    q.assign(std::max(zp_deg(a) - db + 1, 0), mpz_class(0));
    for (int i = zp_deg(r); i >= db; i = zp_deg(r)) {
        mpz_class factor, rem;
        mpz_fdiv_qr(factor.get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), b[db].get_mpz_t());
        if (rem != 0) return false;
        q[i - db] = factor;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * b[j];
        zp_trim(r);
        if (r.empty()) break;
    }
    return r.empty();
}

mpz_class zp_content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zp_primitive(const ZPoly& a) {
    if (a.empty()) return a;
    mpz_class g = zp_content(a);
    if (a.back() < 0) g = -g;
    ZPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] / g;
    return c;
}

ZPoly to_zpoly(const Poly& p) {
    Poly prim = p.primitive();
    ZPoly out(prim.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (prim.coeffs()[i].get_den() != 1) throw std::logic_error("primitive() left a denominator");
        out[i] = prim.coeffs()[i].get_num();
    }
    return out;
}

Poly from_zpoly(const ZPoly& a) {
    std::vector<mpq_class> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mpq_class(a[i]);
    return Poly(std::move(c));
}

// ---------------------------------------------------------------------------
// arithmetic mod a word-sized prime

using FpPoly = std::vector<long>;  // coefficients in [0, p)

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

long fp_pow(long base, long exp, long p) {
    long result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = static_cast<long>((__int128)result * base % p);
        base = static_cast<long>((__int128)base * base % p);
        exp >>= 1;
    }
    return result;
}

long fp_inv(long a, long p) { return fp_pow(a, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<long>((c[i + j] + (__int128)a[i] * b[j]) % p);
    }
    fp_trim(c);
    return c;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] - b[i] % p + p) % p;
    fp_trim(c);
    return c;
}

void fp_divrem(const FpPoly& a, const FpPoly& b, long p, FpPoly& q, FpPoly& r) {
    r = a;
    int db = fp_deg(b);
    long inv = fp_inv(b[db], p);
    q.assign(std::max(fp_deg(a) - db + 1, 0), 0);
    for (int i = fp_deg(a); i >= db; --i) {
        if (r[i] == 0) continue;
        long factor = static_cast<long>((__int128)r[i] * inv % p);
        q[i - db] = factor;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = static_cast<long>(((r[i - db + j] - (__int128)factor * b[j]) % p + p) % p);
    }
    fp_trim(q);
    fp_trim(r);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly q, r;
    fp_divrem(a, b, p, q, r);
    return r;
}

FpPoly fp_monic(const FpPoly& a, long p) {
    if (a.empty()) return a;
    long inv = fp_inv(a.back(), p);
    FpPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<long>((__int128)a[i] * inv % p);
    return c;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : fp_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& a, long p) {
    if (fp_deg(a) < 1) return {};
    FpPoly c(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        c[i - 1] = static_cast<long>((__int128)a[i] * (i % p) % p);
    fp_trim(c);
    return c;
}

// s*a + t*b = g (monic gcd), all mod p
void fp_ext_gcd(const FpPoly& a, const FpPoly& b, long p, FpPoly& g, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = {1}, s1 = {};
    FpPoly t0 = {}, t1 = {1};
    fp_trim(r0);
    fp_trim(r1);
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divrem(r0, r1, p, q, r);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    long inv = fp_inv(r0.back(), p);
    auto scale = [&](FpPoly& v) {
        for (auto& x : v) x = static_cast<long>((__int128)x * inv % p);
    };
    scale(r0); scale(s0); scale(t0);
    g = std::move(r0);
    s = std::move(s0);
    t = std::move(t0);
}

FpPoly zp_to_fp(const ZPoly& a, long p) {
    FpPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class r = a[i] % p;
        if (r < 0) r += p;
        c[i] = r.get_si();
    }
    fp_trim(c);
    return c;
}

ZPoly fp_to_zp(const FpPoly& a, long p) {
    ZPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long v = a[i];
        if (2 * v > p) v -= p;
        c[i] = v;
    }
    zp_trim(c);
    return c;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<FpPoly> berlekamp(const FpPoly& f, long p) {
    int n = fp_deg(f);
    if (n <= 1) return {f};

    // Frobenius images x^{p*i} mod f
    FpPoly xp = {0, 1};
    {
        // x^p mod f by square and multiply
        FpPoly result = {1};
        FpPoly base = {0, 1};
        long e = p;
        while (e > 0) {
            if (e & 1) result = fp_mod(fp_mul(result, base, p), f, p);
            base = fp_mod(fp_mul(base, base, p), f, p);
            e >>= 1;
        }
        xp = result;
    }
    std::vector<FpPoly> frob(n);
    frob[0] = {1};
    for (int i = 1; i < n; ++i) frob[i] = fp_mod(fp_mul(frob[i - 1], xp, p), f, p);

    // nullspace of (Frobenius - identity)
    std::vector<std::vector<long>> mat(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < frob[j].size(); ++i) mat[i][j] = frob[j][i];
        mat[j][j] = (mat[j][j] - 1 % p + p) % p;
    }
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row)
            if (mat[row][col] != 0) { sel = row; break; }
        if (sel < 0) continue;
        std::swap(mat[sel], mat[rank]);
        long inv = fp_inv(mat[rank][col], p);
        for (int j = 0; j < n; ++j) mat[rank][j] = static_cast<long>((__int128)mat[rank][j] * inv % p);
        for (int row = 0; row < n; ++row) {
            if (row == rank || mat[row][col] == 0) continue;
            long factor = mat[row][col];
            for (int j = 0; j < n; ++j)
                mat[row][j] = static_cast<long>(((mat[row][j] - (__int128)factor * mat[rank][j]) % p + p) % p);
        }
        pivot_col[rank++] = col;
    }
    std::vector<FpPoly> basis;
    std::vector<char> is_pivot(n, 0);
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = 1;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        FpPoly v(n, 0);
        v[col] = 1;
        for (int i = 0; i < rank; ++i)
            v[pivot_col[i]] = (p - mat[i][col]) % p;
        fp_trim(v);
        basis.push_back(std::move(v));
    }
    std::size_t num_factors = basis.size();  // nullity counts irreducible factors
    std::vector<FpPoly> factors = {f};
    for (const auto& v : basis) {
        if (factors.size() == num_factors) break;
        if (fp_deg(v) < 1) continue;  // the constants give no splitting
        std::vector<FpPoly> next;
        for (auto& u : factors) {
            if (fp_deg(u) == 1) {
                next.push_back(std::move(u));
                continue;
            }
            FpPoly remaining = std::move(u);
            for (long c = 0; c < p && fp_deg(remaining) > 0; ++c) {
                FpPoly shifted = v;
                if (shifted.empty()) shifted = {0};
                shifted[0] = (shifted[0] - c % p + p) % p;
                fp_trim(shifted);
                FpPoly g = fp_gcd(remaining, shifted, p);
                if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(remaining)) {
                    FpPoly q, r;
                    fp_divrem(remaining, g, p, q, r);
                    next.push_back(std::move(g));
                    remaining = std::move(q);
                }
            }
            if (fp_deg(remaining) > 0) next.push_back(std::move(remaining));
        }
        factors = std::move(next);
    }
    return factors;
}

// Quadratic Hensel step (monic setting): from f = g*h (mod m), s*g + t*h = 1
// (mod m) to the same relations mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly e = zp_smod(zp_sub(f, zp_mul(g, h)), m2);
    ZPoly q, r;
    zp_divrem_monic(zp_mul(s, e), h, q, r);
    ZPoly g1 = zp_smod(zp_add(zp_add(g, zp_mul(t, e)), zp_mul(q, g)), m2);
    ZPoly h1 = zp_smod(zp_add(h, r), m2);

    ZPoly b = zp_smod(zp_sub(zp_add(zp_mul(s, g1), zp_mul(t, h1)), ZPoly{1}), m2);
    ZPoly c, d;
    zp_divrem_monic(zp_mul(s, b), h1, c, d);
    ZPoly s1 = zp_smod(zp_sub(s, d), m2);
    ZPoly t1 = zp_smod(zp_sub(zp_sub(t, zp_mul(t, b)), zp_mul(c, g1)), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lifts a monic factorization of f mod p to the modulus target (a power of p).
void hensel_lift_list(const ZPoly& f, const std::vector<FpPoly>& factors_p, long p,
                      const mpz_class& target, std::vector<ZPoly>& out) {
    if (factors_p.size() == 1) {
        out.push_back(zp_smod(f, target));
        return;
    }
    std::size_t half = factors_p.size() / 2;
    std::vector<FpPoly> left(factors_p.begin(), factors_p.begin() + half);
    std::vector<FpPoly> right(factors_p.begin() + half, factors_p.end());
    FpPoly g0 = {1}, h0 = {1};
    for (const auto& u : left) g0 = fp_mul(g0, u, p);
    for (const auto& u : right) h0 = fp_mul(h0, u, p);
    FpPoly ggcd, s0, t0;
    fp_ext_gcd(g0, h0, p, ggcd, s0, t0);
    if (fp_deg(ggcd) != 0) throw std::logic_error("modular factors are not coprime");

    ZPoly g = fp_to_zp(g0, p), h = fp_to_zp(h0, p);
    ZPoly s = fp_to_zp(s0, p), t = fp_to_zp(t0, p);
    mpz_class m = p;
    while (m < target) {
        hensel_step(zp_smod(f, m * m), g, h, s, t, m);
        m *= m;
    }
    hensel_lift_list(zp_smod(g, target), left, p, target, out);
    hensel_lift_list(zp_smod(h, target), right, p, target, out);
}

const long kPrimePool[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                           53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109};

// Factors a primitive squarefree integer polynomial with positive leading
// coefficient into irreducibles over Z.
std::vector<ZPoly> factor_squarefree(const ZPoly& fz) {
    int n = zp_deg(fz);
    if (n <= 1) return {fz};

    // monicize: G(x) = l^{n-1} f(x/l) is monic with integer coefficients
    mpz_class l = fz.back();
    ZPoly G(fz.size());
    {
        mpz_class li = 1;  // l^{n-i}
        for (int i = n; i >= 0; --i) {
            G[i] = fz[i] * li;
            li *= l;
        }
        for (int i = 0; i <= n; ++i) G[i] /= l;
    }

    // choose a prime keeping G squarefree; prefer few modular factors
    std::vector<FpPoly> best_factors;
    long best_p = 0;
    int tried = 0;
    mpz_class probe = kPrimePool[sizeof(kPrimePool) / sizeof(long) - 1];
    for (std::size_t pi = 0; tried < 3 && pi < 4096; ++pi) {
        long p;
        if (pi < sizeof(kPrimePool) / sizeof(long)) {
            p = kPrimePool[pi];
        } else {
            mpz_nextprime(probe.get_mpz_t(), probe.get_mpz_t());
            p = probe.get_si();
        }
        FpPoly fp = zp_to_fp(G, p);
        if (fp_deg(fp) != n) continue;  // cannot happen for monic G, kept for safety
        FpPoly der = fp_derivative(fp, p);
        if (der.empty()) continue;
        if (fp_deg(fp_gcd(fp, der, p)) != 0) continue;
        auto factors = berlekamp(fp_monic(fp, p), p);
        ++tried;
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_factors = std::move(factors);
            best_p = p;
        }
        if (best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("no usable prime found for factorization");
    if (best_factors.size() == 1) return {fz};

    long p = best_p;
    // Mignotte-style bound on coefficients of monic factors of G
    mpz_class maxc = 0;
    for (const auto& c : G) {
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
    }
    mpz_class bound = maxc;
    mpz_class root;
    mpz_class np1 = n + 1;
    mpz_sqrt(root.get_mpz_t(), np1.get_mpz_t());
    root += 1;
    bound *= root;
    bound <<= n;  // * 2^n
    mpz_class target = p;
    while (target <= 2 * bound) target *= p;

    std::vector<ZPoly> lifted;
    hensel_lift_list(zp_smod(G, target), best_factors, p, target, lifted);

    // recombination: subsets of lifted factors whose product divides G over Z
    std::vector<ZPoly> g_factors;
    ZPoly rest = G;
    std::size_t subset_size = 1;
    while (2 * subset_size <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            ZPoly cand = {1};
            for (std::size_t i : idx) cand = zp_smod(zp_mul(cand, lifted[i]), target);
            ZPoly q;
            if (zp_exact_div(rest, cand, q)) {
                g_factors.push_back(cand);
                rest = q;
                std::vector<ZPoly> keep;
                for (std::size_t i = 0, k = 0; i < lifted.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) { ++k; continue; }
                    keep.push_back(std::move(lifted[i]));
                }
                lifted = std::move(keep);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(subset_size) - 1;
            while (pos >= 0 && idx[pos] == lifted.size() - subset_size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t i = pos + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (zp_deg(rest) > 0) g_factors.push_back(rest);

    // map factors of G back to factors of f: h(x) = primitive(H(l*x))
    std::vector<ZPoly> out;
    for (const auto& H : g_factors) {
        ZPoly h(H.size());
        mpz_class li = 1;
        for (std::size_t i = 0; i < H.size(); ++i) {
            h[i] = H[i] * li;
            li *= l;
        }
        out.push_back(zp_primitive(h));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return from_zpoly(zp_primitive(to_zpoly(b)));
    if (b.is_zero()) return from_zpoly(zp_primitive(to_zpoly(a)));
    ZPoly A = to_zpoly(a), B = to_zpoly(b);
    if (zp_deg(A) < zp_deg(B)) std::swap(A, B);
    while (!B.empty()) {
        // pseudo-remainder: scale by lc(B) before each elimination step
        mpz_class lb = B.back();
        int db = zp_deg(B);
        ZPoly R = A;
        while (zp_deg(R) >= db) {
            mpz_class old_lc = R.back();
            int sh = zp_deg(R) - db;
            for (auto& c : R) c *= lb;
            for (int j = 0; j <= db; ++j) R[sh + j] -= old_lc * B[j];
            zp_trim(R);
        }
        A = std::move(B);
        B = R.empty() ? R : zp_primitive(R);
    }
    return from_zpoly(zp_primitive(A));
}

std::vector<PolyFactor> squarefree_decomposition(const Poly& f0) {
    if (f0.is_zero()) throw std::invalid_argument("cannot decompose the zero polynomial");
    Poly f = f0.primitive();
    if (f.degree() == 0) return {};
    Poly g = poly_gcd(f, f.derivative());
    Poly b = f.exact_divide(g);
    Poly d = f.derivative().exact_divide(g) - b.derivative();
    std::vector<PolyFactor> out;
    int i = 1;
    while (b.degree() > 0) {
        Poly a = poly_gcd(b, d);
        if (a.degree() > 0) out.push_back({a.primitive(), i});
        b = b.exact_divide(a);
        d = d.exact_divide(a) - b.derivative();
        ++i;
    }
    return out;
}

std::vector<PolyFactor> factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<PolyFactor> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& irred : factor_squarefree(to_zpoly(part)))
            out.push_back({from_zpoly(irred), mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        for (int i = x.factor.degree(); i >= 0; --i) {
            if (x.factor.coeff(i) != y.factor.coeff(i)) return x.factor.coeff(i) < y.factor.coeff(i);
        }
        return x.multiplicity < y.multiplicity;
    });

    // verification: the product of the factors matches the primitive input
    Poly check(mpq_class(1));
    for (const auto& [h, m] : out) check = check * h.pow(m);
    if (!(check == f.primitive())) throw std::logic_error("factorization verification failed");
    return out;
}

}  // namespace ellsurf
