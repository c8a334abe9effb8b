#pragma once

#include <map>

#include "spk/check.hpp"
#include "spk/permutation.hpp"
#include "spk/ratfun.hpp"

namespace spk::hecke {

using Coeff = exact::RationalFunction;

// Element of H_r(q) in the T_w basis.
class HeckeElement {
public:
    explicit HeckeElement(int r) : r_(r) {}

    static HeckeElement basis(const Perm& w) {
        HeckeElement e(static_cast<int>(w.size()));
        e.terms_[w] = Coeff(1);
        return e;
    }

    int r() const { return r_; }
    const std::map<Perm, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Perm& w, const Coeff& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator*(const Coeff& c, const HeckeElement& a);
    friend bool operator==(const HeckeElement& a, const HeckeElement& b);
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

private:
    int r_;
    std::map<Perm, Coeff> terms_;
};

// T-basis product via the quadratic rule T_w T_s = T_ws (length up) or
// T_ws + (q - q^-1) T_w (length down).  RankMismatch if ranks differ.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

// Right multiplication by T_{s_i}.
HeckeElement hecke_mul_gen(const HeckeElement& a, int i);

// The deformed Eulerian idempotent in H_3(q): coefficients 1/[3] on the
// identity and the longest element, -(1 +- (q - q^-1))/(2[3]) on the
// four remaining permutations, with [3] = q^2 + 1 + q^-2.
HeckeElement eulerian_idempotent_q();

// Its q = 1 limit in the group algebra of S_3.
std::map<Perm, exact::BigRational> eulerian_idempotent_classical();

// Group algebra product (compose permutations, no deformation).
std::map<Perm, exact::BigRational> group_algebra_mul(
    const std::map<Perm, exact::BigRational>& a, const std::map<Perm, exact::BigRational>& b);

// e(q)^2 = e(q) and T_w0 e(q) = e(q) T_w0 = e(q) symbolically; at q = 1 the
// element becomes the classical idempotent and stays idempotent in the group
// algebra.
CheckResult verify_idempotent();

} // namespace spk::hecke
