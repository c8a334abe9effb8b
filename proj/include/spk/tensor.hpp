#pragma once

#include <map>
#include <vector>

#include "spk/check.hpp"
#include "spk/letters.hpp"
#include "spk/matrix.hpp"
#include "spk/ratfun.hpp"
#include "spk/ssyt.hpp"

namespace spk::freealg {

using Coeff = exact::RationalFunction;

// Element of the free algebra on the signed alphabet, coefficients rational
// functions of q.  Words are monomials; nothing is collapsed.
class TensorElement {
public:
    TensorElement() = default;

    static TensorElement letter(const shapes::SignedLetter& a) {
        TensorElement e;
        e.terms_[{a}] = Coeff(1);
        return e;
    }
    static TensorElement from_word(const shapes::Word& w) {
        TensorElement e;
        e.terms_[w] = Coeff(1);
        return e;
    }

    const std::map<shapes::Word, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const shapes::Word& w, const Coeff& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        TensorElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        TensorElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    friend TensorElement operator*(const Coeff& c, const TensorElement& a) {
        TensorElement r;
        for (const auto& [w, k] : a.terms_) r.add_term(w, c * k);
        return r;
    }
    // Concatenation product.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        TensorElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                shapes::Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [w, c] : a.terms_) {
            if (w != it->first || c != it->second) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    // Z2 degree shared by all words; InhomogeneousError when mixed.
    int parity() const;

    // Coefficient vector over all words of length r, at q = q0.
    std::vector<exact::BigRational> vectorize(int r, int m, int n,
                                              const exact::BigRational& q0) const;

    // The q -> infinity limit after scaling by the inverse leading power:
    // keeps only terms of maximal growth, with their leading rational
    // coefficients.
    std::map<shapes::Word, exact::BigRational> leading_at_infinity() const;

private:
    std::map<shapes::Word, Coeff> terms_;
};

// Deformed bracket [u,v]_c = uv - (-1)^(|u||v|) c vu.
TensorElement qbracket(const TensorElement& u, const TensorElement& v, const Coeff& c);

// Undeformed nested brackets [a_i,[a_j,a_k]] over all letter triples,
// nonzero ones only, in (i,j,k) order.
std::vector<TensorElement> double_bracket_basis(int m, int n);

// One cubic generator per semistandard tableau of shape (2,1).
struct GammaElement {
    int family = 0; // 1,2: three distinct letters; 3..6: repeated-letter patterns
    shapes::Tableau tableau;
    TensorElement element;
};

std::vector<GammaElement> gamma_elements(int m, int n);

// Dimension of the degree-r slice of the two-sided ideal generated by the
// given cubic elements, evaluated at q = q0.
size_t ideal_component_dim(const std::vector<TensorElement>& gens, int r, int m, int n,
                           const exact::BigRational& q0);

size_t quotient_dim(const std::vector<TensorElement>& gens, int r, int m, int n,
                    const exact::BigRational& q0);

// Coefficients 0..rmax of (1+t)^n (1+t^2)^(mn) /
// ((1-t)^m (1-t^2)^(C(m,2)+C(n+1,2))).
std::vector<exact::BigInt> hilbert_series(int m, int n, int rmax);

// Degree-by-degree agreement of: quotient by the Gamma ideal at q = q0,
// quotient by the undeformed double-bracket ideal, the closed-form series,
// tableau counts, and plactic class counts.
CheckResult verify_decomposition(int m, int n, int rmax, const exact::BigRational& q0);

} // namespace spk::freealg
