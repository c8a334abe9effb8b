#pragma once

#include <map>
#include <string>

#include "spk/errors.hpp"
#include "spk/rational.hpp"

namespace spk::exact {

// Polynomials in q and q^-1 with rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const BigRational& c) {
        if (c != 0) terms_[0] = c;
    }
    LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}

    static LaurentPoly monomial(const BigRational& c, int exp) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }
    static LaurentPoly q_power(int exp) { return monomial(1, exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    int min_exp() const {
        if (is_zero()) throw Error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw Error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    BigRational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    const std::map<int, BigRational>& terms() const { return terms_; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ < b.terms_;
    }

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    BigRational eval(const BigRational& q0) const {
        BigRational acc = 0;
        for (const auto& [e, c] : terms_) {
            if (e >= 0) {
                acc += c * pow_rat(q0, e);
            } else {
                if (q0 == 0) throw PoleError("negative power of q evaluated at q=0");
                acc += c / pow_rat(q0, -e);
            }
        }
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool neg = c < 0;
            BigRational a = neg ? BigRational(-c) : c;
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? "-" : "+";
            }
            if (e == 0) {
                s += spk::exact::to_string(a);
            } else {
                if (a != 1) s += spk::exact::to_string(a) + "*";
                s += e == 1 ? "q" : "q^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    static BigRational pow_rat(const BigRational& x, int e) {
        BigRational r = 1;
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    }

    void add_term(int e, const BigRational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, BigRational> terms_;
};

} // namespace spk::exact
