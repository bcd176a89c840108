#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ellsurf {

/// Dense univariate polynomial over Q. Coefficient i belongs to x^i; trailing
/// zeros are stripped, so degree() is exact (-1 for the zero polynomial).
class Poly {
public:
    Poly() = default;
    explicit Poly(mpq_class constant);
    explicit Poly(std::vector<mpq_class> coeffs);
    static Poly monomial(int degree, const mpq_class& coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;  // 0 beyond the degree
    const mpq_class& leading() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const mpq_class& s, const Poly& a);
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    Poly pow(int e) const;

    /// a = q*b + r with deg r < deg b.
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Exact quotient; throws if the division leaves a remainder.
    Poly exact_divide(const Poly& b) const;
    bool divides(const Poly& a) const;  // *this | a

    Poly monic() const;
    /// Primitive integer multiple with positive leading coefficient.
    Poly primitive() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<mpq_class> c_;
};

/// Primitive-PRS gcd; the result is primitive over Z with positive leading
/// coefficient (1 for coprime inputs, zero polynomial for two zero inputs).
Poly poly_gcd(const Poly& a, const Poly& b);

struct PolyFactor {
    Poly factor;  // primitive over Z, positive leading coefficient
    int multiplicity;
};

/// Yun decomposition: pairwise coprime squarefree parts with multiplicities.
/// The product of factor^multiplicity equals the input up to a rational unit.
std::vector<PolyFactor> squarefree_decomposition(const Poly& f);

/// Irreducible factorization over Q (Berlekamp mod p, Hensel lifting, subset
/// recombination). The rational unit is dropped; factors are primitive over Z
/// with positive leading coefficients, sorted deterministically.
std::vector<PolyFactor> factor(const Poly& f);

}  // namespace ellsurf
