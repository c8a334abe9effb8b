#include "spk/hecke.hpp"

#include "spk/errors.hpp"

namespace spk::hecke {

using exact::BigRational;
using exact::LaurentPoly;

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (a.r_ != b.r_) throw RankMismatch("adding elements of different rank");
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    if (a.r_ != b.r_) throw RankMismatch("subtracting elements of different rank");
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

HeckeElement operator*(const Coeff& c, const HeckeElement& a) {
    HeckeElement r(a.r_);
    for (const auto& [w, k] : a.terms_) r.add_term(w, c * k);
    return r;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
    if (a.r_ != b.r_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
        if (w != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

HeckeElement hecke_mul_gen(const HeckeElement& a, int i) {
    static const Coeff qdiff(LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
    HeckeElement out(a.r());
    for (const auto& [w, c] : a.terms()) {
        Perm ws = right_gen(w, i);
        if (w[i - 1] < w[i]) {
            out.add_term(ws, c);
        } else {
            out.add_term(ws, c);
            out.add_term(w, c * qdiff);
        }
    }
    return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.r() != b.r()) throw RankMismatch("multiplying elements of different rank");
    HeckeElement out(a.r());
    for (const auto& [v, beta] : b.terms()) {
        HeckeElement cur = beta * a;
        for (int i : reduced_word(v)) cur = hecke_mul_gen(cur, i);
        for (const auto& [w, c] : cur.terms()) out.add_term(w, c);
    }
    return out;
}

HeckeElement eulerian_idempotent_q() {
    LaurentPoly br3 = LaurentPoly::q_power(2) + LaurentPoly(1) + LaurentPoly::q_power(-2);
    LaurentPoly qdiff = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
    LaurentPoly one(1), two(2);

    Coeff c_ext(one, br3);                     // 1/[3]
    Coeff c_cyc(-(one + qdiff), two * br3);    // -(1 + q - q^-1)/(2[3])
    Coeff c_swap(-(one - qdiff), two * br3);   // -(1 - q + q^-1)/(2[3])

    HeckeElement e(3);
    e.add_term({1, 2, 3}, c_ext);
    e.add_term({3, 2, 1}, c_ext);
    e.add_term({2, 3, 1}, c_cyc);
    e.add_term({3, 1, 2}, c_cyc);
    e.add_term({2, 1, 3}, c_swap);
    e.add_term({1, 3, 2}, c_swap);
    return e;
}

std::map<Perm, BigRational> eulerian_idempotent_classical() {
    const HeckeElement eq = eulerian_idempotent_q();
    std::map<Perm, BigRational> e;
    for (const auto& [w, c] : eq.terms()) e[w] = c.eval(1);
    return e;
}

CheckResult verify_idempotent() {
    CheckResult res;
    res.name = "eulerian-idempotent";
    HeckeElement e = eulerian_idempotent_q();
    HeckeElement w0 = HeckeElement::basis(longest_perm(3));

    if (hecke_mul(e, e) != e) {
        res.pass = false;
        res.details = "e(q)^2 != e(q)";
        return res;
    }
    if (hecke_mul(w0, e) != e || hecke_mul(e, w0) != e) {
        res.pass = false;
        res.details = "T_w0 does not fix e(q)";
        return res;
    }

    auto e1 = eulerian_idempotent_classical();
    std::map<Perm, BigRational> classical{
        {{1, 2, 3}, BigRational(1, 3)},  {{3, 2, 1}, BigRational(1, 3)},
        {{2, 3, 1}, BigRational(-1, 6)}, {{3, 1, 2}, BigRational(-1, 6)},
        {{2, 1, 3}, BigRational(-1, 6)}, {{1, 3, 2}, BigRational(-1, 6)},
    };
    if (e1 != classical) {
        res.pass = false;
        res.details = "q=1 limit differs from the classical idempotent";
        return res;
    }
    if (group_algebra_mul(e1, e1) != e1) {
        res.pass = false;
        res.details = "classical limit is not idempotent in the group algebra";
        return res;
    }

    res.pass = true;
    res.details = "e(q)^2 = e(q), fixed by T_w0, and e(1) is the classical idempotent";
    return res;
}

std::map<Perm, BigRational> group_algebra_mul(const std::map<Perm, BigRational>& a,
                                              const std::map<Perm, BigRational>& b) {
    std::map<Perm, BigRational> out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Perm w = compose(u, v);
            auto it = out.find(w);
            if (it == out.end()) {
                if (cu * cv != 0) out[w] = cu * cv;
            } else {
                it->second += cu * cv;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

} // namespace spk::hecke
