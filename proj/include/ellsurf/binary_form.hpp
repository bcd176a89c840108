#pragma once

#include <string>
#include <vector>

#include "ellsurf/poly.hpp"

namespace ellsurf {

/// Homogeneous binary form in x, y over Q. Coefficient i belongs to
/// x^i y^{degree-i}. The zero form keeps its formal degree.
class BinaryForm {
public:
    BinaryForm() = default;
    static BinaryForm zero(int degree);
    BinaryForm(int degree, std::vector<mpq_class> coeffs);
    /// Homogenization of a univariate polynomial in x to the given degree.
    static BinaryForm homogenize(const Poly& p, int degree);

    int degree() const { return degree_; }
    bool is_zero() const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& coeff(int i) const { return c_[i]; }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const mpq_class& s, const BinaryForm& a);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    BinaryForm dx() const;  // partial derivative in x, degree drops by one
    BinaryForm dy() const;
    BinaryForm pow(int e) const;
    BinaryForm swap_xy() const;

    mpq_class eval(const mpq_class& x, const mpq_class& y) const;

    /// p(x) = form(x, 1); the degree drop records the order of vanishing at [1:0].
    Poly dehomogenize() const;
    /// Order of the place y = 0 (the point [1:0]); degree of the form for zero input... never
    /// called on the zero form.
    int vanishing_at_infinity() const;

    BinaryForm primitive() const;

    std::string to_string() const;

private:
    int degree_ = -1;
    std::vector<mpq_class> c_;
};

/// Largest k with g^k | f; g non-constant, f nonzero.
int form_valuation(const BinaryForm& f, const BinaryForm& g);

/// Exact quotient f / g; throws when g does not divide f.
BinaryForm form_exact_divide(const BinaryForm& f, const BinaryForm& g);

bool form_divides(const BinaryForm& g, const BinaryForm& f);

struct FormFactor {
    BinaryForm place;  // irreducible over Q, primitive integer coefficients
    int multiplicity;
};

/// Irreducible factorization over Q, including the place y (the point [1:0])
/// when the form vanishes there. The rational unit is dropped.
std::vector<FormFactor> factor_form(const BinaryForm& f);

}  // namespace ellsurf
