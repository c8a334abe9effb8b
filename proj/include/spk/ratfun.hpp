#pragma once

#include <string>
#include <utility>

#include "spk/errors.hpp"
#include "spk/laurent.hpp"

namespace spk::exact {

// Quotient of two Laurent polynomials in q.  Kept as a num/den pair; equality
// is by cross multiplication, so no polynomial gcd is required.  Canonical
// form: zero is 0/1, the denominator has lowest exponent 0 and a positive
// lowest coefficient.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const BigRational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const LaurentPoly& num) : num_(num), den_(1) {}
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction q_power(int e) { return RationalFunction(LaurentPoly::q_power(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    BigRational eval(const BigRational& q0) const {
        BigRational d = den_.eval(q0);
        if (d == 0) throw PoleError("denominator vanishes at q=" + spk::exact::to_string(q0));
        return num_.eval(q0) / d;
    }

    // Order of growth as q -> infinity, and the coefficient of that power.
    int degree_at_infinity() const {
        if (is_zero()) throw Error("degree of zero");
        return num_.max_exp() - den_.max_exp();
    }
    BigRational leading_at_infinity() const {
        if (is_zero()) return 0;
        return num_.coeff(num_.max_exp()) / den_.coeff(den_.max_exp());
    }

    std::string to_string() const {
        if (den_ == LaurentPoly(1)) return num_.to_string();
        std::string ns = num_.to_string();
        if (num_.terms().size() > 1) ns = "(" + ns + ")";
        std::string ds = den_.to_string();
        if (den_.terms().size() > 1) ds = "(" + ds + ")";
        return ns + "/" + ds;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw Error("zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        int s = den_.min_exp();
        if (s != 0) {
            den_ = den_.shifted(-s);
            num_ = num_.shifted(-s);
        }
        if (den_.coeff(den_.min_exp()) < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline BigRational ratfun_eval(const RationalFunction& f, const BigRational& q0) {
    return f.eval(q0);
}

} // namespace spk::exact
