#include "spk/tensor.hpp"

#include <deque>

#include "spk/errors.hpp"
#include "spk/knuth.hpp"
#include "spk/partition.hpp"

namespace spk::freealg {

using exact::BigInt;
using exact::BigRational;
using shapes::SignedLetter;
using shapes::Tableau;
using shapes::Word;

int TensorElement::parity() const {
    if (terms_.empty()) return 0;
    int p = shapes::word_parity(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (shapes::word_parity(w) != p)
            throw InhomogeneousError("element mixes even and odd words");
    return p;
}

std::vector<BigRational> TensorElement::vectorize(int r, int m, int n,
                                                  const BigRational& q0) const {
    size_t total = 1;
    for (int i = 0; i < r; ++i) total *= static_cast<size_t>(m + n);
    std::vector<BigRational> v(total, 0);
    for (const auto& [w, c] : terms_) {
        if (static_cast<int>(w.size()) != r) throw Error("word length differs from slice degree");
        if (!shapes::in_alphabet(w, m, n)) throw Error("word leaves the (m,n) alphabet");
        v[shapes::word_index(w, m, n)] += c.eval(q0);
    }
    return v;
}

std::map<Word, BigRational> TensorElement::leading_at_infinity() const {
    std::map<Word, BigRational> out;
    bool have = false;
    int top = 0;
    for (const auto& [w, c] : terms_) {
        int d = c.degree_at_infinity();
        if (!have || d > top) {
            top = d;
            have = true;
        }
    }
    for (const auto& [w, c] : terms_)
        if (c.degree_at_infinity() == top) out[w] = c.leading_at_infinity();
    return out;
}

TensorElement qbracket(const TensorElement& u, const TensorElement& v, const Coeff& c) {
    int s = (u.parity() & v.parity()) ? -1 : 1;
    return u * v - (Coeff(s) * c) * (v * u);
}

std::vector<TensorElement> double_bracket_basis(int m, int n) {
    std::vector<TensorElement> out;
    auto letters = shapes::alphabet(m, n);
    for (const auto& ai : letters)
        for (const auto& aj : letters)
            for (const auto& ak : letters) {
                TensorElement e = qbracket(TensorElement::letter(ai),
                                           qbracket(TensorElement::letter(aj),
                                                    TensorElement::letter(ak), Coeff(1)),
                                           Coeff(1));
                if (!e.is_zero()) out.push_back(std::move(e));
            }
    return out;
}

namespace {

TensorElement L(const SignedLetter& a) { return TensorElement::letter(a); }

Coeff qpow(int e) { return Coeff::q_power(e); }

// Three distinct letters i1 < i2 < i3, generator paired with [i1,i3]/[i2].
TensorElement gamma_row_high(const SignedLetter& a1, const SignedLetter& a2,
                             const SignedLetter& a3) {
    TensorElement t1 = qbracket(L(a2), qbracket(L(a3), L(a1), Coeff(1)), qpow(-2));
    TensorElement t2 = qbracket(qbracket(L(a2), L(a3), Coeff(1)), L(a1), Coeff(1));
    return t1 - qpow(-1) * t2;
}

// Three distinct letters, generator paired with [i1,i2]/[i3].
TensorElement gamma_row_low(const SignedLetter& a1, const SignedLetter& a2,
                            const SignedLetter& a3) {
    TensorElement t1 = qbracket(qbracket(L(a3), L(a1), Coeff(1)), L(a2), qpow(-2));
    TensorElement t2 = qbracket(L(a3), qbracket(L(a1), L(a2), Coeff(1)), Coeff(1));
    return t1 - qpow(-1) * t2;
}

} // namespace

std::vector<GammaElement> gamma_elements(int m, int n) {
    std::vector<GammaElement> out;
    for (const auto& t : shapes::enumerate_ssyt({2, 1}, m, n)) {
        const SignedLetter p = t.rows[0][0], q = t.rows[0][1], s = t.rows[1][0];
        GammaElement g;
        g.tableau = t;
        if (q == s) {
            // weight {p, 2q}
            TensorElement inner = qbracket(L(p), L(q), Coeff(1));
            if (q.parity == 1) {
                g.family = 3;
                g.element = qbracket(inner, L(q), qpow(-1));
            } else {
                g.family = 4;
                g.element = qbracket(L(q), inner, qpow(-1));
            }
        } else if (p == s) {
            // odd p repeated down the column, weight {2p, q}
            g.family = 5;
            g.element = qbracket(L(p), qbracket(L(p), L(q), Coeff(1)), qpow(-1));
        } else if (p == q) {
            // even p repeated along the row, weight {2p, s}
            g.family = 6;
            g.element = qbracket(qbracket(L(p), L(s), Coeff(1)), L(p), qpow(-1));
        } else if (s < q) {
            // p < s < q: tableau [i1,i3]/[i2]
            g.family = 1;
            g.element = gamma_row_high(p, s, q);
        } else {
            // p < q < s: tableau [i1,i2]/[i3]
            g.family = 2;
            g.element = gamma_row_low(p, q, s);
        }
        out.push_back(std::move(g));
    }
    return out;
}

size_t ideal_component_dim(const std::vector<TensorElement>& gens, int r, int m, int n,
                           const BigRational& q0) {
    if (r < 3 || gens.empty()) return 0;
    int d = m + n;
    std::vector<std::vector<BigRational>> rows;
    for (int left = 0; left + 3 <= r; ++left) {
        int right = r - 3 - left;
        size_t nl = 1, nr = 1;
        for (int i = 0; i < left; ++i) nl *= d;
        for (int i = 0; i < right; ++i) nr *= d;
        for (size_t li = 0; li < nl; ++li) {
            TensorElement u = TensorElement::from_word(shapes::word_from_index(li, left, m, n));
            for (size_t ri = 0; ri < nr; ++ri) {
                TensorElement v =
                    TensorElement::from_word(shapes::word_from_index(ri, right, m, n));
                for (const auto& g : gens) rows.push_back((u * g * v).vectorize(r, m, n, q0));
            }
        }
    }
    return exact::matrix_rank(rows);
}

size_t quotient_dim(const std::vector<TensorElement>& gens, int r, int m, int n,
                    const BigRational& q0) {
    size_t total = 1;
    for (int i = 0; i < r; ++i) total *= static_cast<size_t>(m + n);
    return total - ideal_component_dim(gens, r, m, n, q0);
}

std::vector<BigInt> hilbert_series(int m, int n, int rmax) {
    std::vector<BigInt> c(rmax + 1, 0);
    c[0] = 1;
    auto mul_one_plus = [&](int k) { // times (1 + t^k)
        for (int i = rmax; i >= k; --i) c[i] += c[i - k];
    };
    auto div_one_minus = [&](int k) { // times 1/(1 - t^k)
        for (int i = k; i <= rmax; ++i) c[i] += c[i - k];
    };
    for (int e = 0; e < n; ++e) mul_one_plus(1);
    for (int e = 0; e < m * n; ++e) mul_one_plus(2);
    for (int e = 0; e < m; ++e) div_one_minus(1);
    int quad = m * (m - 1) / 2 + n * (n + 1) / 2;
    for (int e = 0; e < quad; ++e) div_one_minus(2);
    return c;
}

CheckResult verify_decomposition(int m, int n, int rmax, const BigRational& q0) {
    CheckResult res;
    res.name = "decomposition(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
               ",r<=" + std::to_string(rmax) + ")";
    std::vector<TensorElement> gens_q;
    for (auto& g : gamma_elements(m, n)) gens_q.push_back(g.element);
    std::vector<TensorElement> gens_1 = double_bracket_basis(m, n);
    std::vector<BigInt> series = hilbert_series(m, n, rmax);

    res.pass = true;
    std::string dims;
    for (int r = 0; r <= rmax; ++r) {
        size_t dq = quotient_dim(gens_q, r, m, n, q0);
        size_t d1 = quotient_dim(gens_1, r, m, n, 1);
        size_t tabs = 0;
        for (const auto& lam : shapes::partitions_of(r)) tabs += shapes::count_ssyt(lam, m, n);
        size_t classes = plactic::enumerate_classes(m, n, r).size();
        bool ok = BigInt(dq) == series[r] && dq == d1 && dq == tabs && dq == classes;
        if (!ok) {
            res.pass = false;
            res.details = "degree " + std::to_string(r) + ": quotient(q)=" + std::to_string(dq) +
                          " quotient(1)=" + std::to_string(d1) +
                          " series=" + series[r].str() + " tableaux=" + std::to_string(tabs) +
                          " classes=" + std::to_string(classes);
            return res;
        }
        dims += (r ? "," : "") + std::to_string(dq);
    }
    res.details = "dims " + dims + " agree across quotient(q=q0), quotient(q=1), closed form, "
                  "tableau and class counts";
    return res;
}

} // namespace spk::freealg
