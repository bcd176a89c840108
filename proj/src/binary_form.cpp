#include "ellsurf/binary_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ellsurf {

BinaryForm BinaryForm::zero(int degree) {
    if (degree < 0) throw std::invalid_argument("form degree must be non-negative");
    BinaryForm f;
    f.degree_ = degree;
    f.c_.assign(degree + 1, mpq_class(0));
    return f;
}

BinaryForm::BinaryForm(int degree, std::vector<mpq_class> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("form degree must be non-negative");
    if (static_cast<int>(c_.size()) != degree + 1)
        throw std::invalid_argument("form needs degree+1 coefficients");
    for (auto& q : c_) q.canonicalize();
}

BinaryForm BinaryForm::homogenize(const Poly& p, int degree) {
    if (p.degree() > degree) throw std::invalid_argument("degree too small to homogenize");
    BinaryForm f = zero(degree);
    for (int i = 0; i <= p.degree(); ++i) f.c_[i] = p.coeff(i);
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("form degree mismatch in sum");
    BinaryForm out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("form degree mismatch in difference");
    BinaryForm out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out = BinaryForm::zero(a.degree_ + b.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
}

BinaryForm operator*(const mpq_class& s, const BinaryForm& a) {
    BinaryForm out = a;
    for (auto& q : out.c_) q *= s;
    return out;
}

BinaryForm BinaryForm::dx() const {
    if (degree_ == 0) throw std::invalid_argument("cannot differentiate a degree-0 form");
    BinaryForm out = zero(degree_ - 1);
    for (int i = 1; i <= degree_; ++i) out.c_[i - 1] = mpq_class(i) * c_[i];
    return out;
}

BinaryForm BinaryForm::dy() const {
    if (degree_ == 0) throw std::invalid_argument("cannot differentiate a degree-0 form");
    BinaryForm out = zero(degree_ - 1);
    for (int i = 0; i < degree_; ++i) out.c_[i] = mpq_class(degree_ - i) * c_[i];
    return out;
}

BinaryForm BinaryForm::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative form power");
    BinaryForm result = zero(0);
    result.c_[0] = 1;
    BinaryForm base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

BinaryForm BinaryForm::swap_xy() const {
    BinaryForm out = *this;
    std::reverse(out.c_.begin(), out.c_.end());
    return out;
}

mpq_class BinaryForm::eval(const mpq_class& x, const mpq_class& y) const {
    mpq_class acc = 0;
    mpq_class xp = 1;
    std::vector<mpq_class> ypow(degree_ + 1);
    ypow[0] = 1;
    for (int i = 1; i <= degree_; ++i) ypow[i] = ypow[i - 1] * y;
    for (int i = 0; i <= degree_; ++i) {
        acc += c_[i] * xp * ypow[degree_ - i];
        xp *= x;
    }
    return acc;
}

Poly BinaryForm::dehomogenize() const { return Poly(c_); }

int BinaryForm::vanishing_at_infinity() const {
    if (is_zero()) throw std::invalid_argument("zero form has no finite vanishing order");
    return degree_ - dehomogenize().degree();
}

BinaryForm BinaryForm::primitive() const {
    if (is_zero()) return *this;
    Poly p = dehomogenize().primitive();
    return homogenize(p, degree_);
}

std::string BinaryForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpq_class v = c_[i];
        if (first) {
            if (v < 0) out << '-';
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        mpq_class a = abs(v);
        int ey = degree_ - i;
        if (a != 1 || (i == 0 && ey == 0)) out << a.get_str();
        bool need_star = a != 1;
        if (i > 0) {
            if (need_star) out << '*';
            out << 'x';
            if (i > 1) out << '^' << i;
            need_star = true;
        }
        if (ey > 0) {
            if (need_star) out << '*';
            out << 'y';
            if (ey > 1) out << '^' << ey;
        }
        first = false;
    }
    return out.str();
}

bool form_divides(const BinaryForm& g, const BinaryForm& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (g.degree() > f.degree()) return false;
    if (g.vanishing_at_infinity() > f.vanishing_at_infinity()) return false;
    return g.dehomogenize().divides(f.dehomogenize());
}

BinaryForm form_exact_divide(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw std::invalid_argument("form division by zero");
    if (f.is_zero()) return BinaryForm::zero(std::max(f.degree() - g.degree(), 0));
    if (!form_divides(g, f)) throw std::invalid_argument("inexact form division");
    Poly q = f.dehomogenize().exact_divide(g.dehomogenize());
    return BinaryForm::homogenize(q, f.degree() - g.degree());
}

int form_valuation(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero()) throw std::invalid_argument("valuation of the zero form is infinite");
    if (g.degree() < 1) throw std::invalid_argument("valuation needs a non-constant place");
    int v = 0;
    BinaryForm rest = f;
    while (form_divides(g, rest)) {
        rest = form_exact_divide(rest, g);
        ++v;
        if (rest.degree() == 0) break;
    }
    return v;
}

std::vector<FormFactor> factor_form(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero form");
    std::vector<FormFactor> out;
    int vy = f.vanishing_at_infinity();
    if (vy > 0) {
        BinaryForm y_place(1, {mpq_class(1), mpq_class(0)});
        out.push_back({y_place, vy});
    }
    Poly u = f.dehomogenize();
    if (u.degree() >= 1) {
        for (const auto& [h, mult] : factor(u))
            out.push_back({BinaryForm::homogenize(h, h.degree()), mult});
    }
    return out;
}

}  // namespace ellsurf
