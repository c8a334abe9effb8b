#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "spk/errors.hpp"
#include "spk/rational.hpp"

namespace spk::exact {

// Multivariate polynomials truncated at a total-degree cap.  Terms whose
// total degree exceeds the cap are dropped on construction and after every
// operation, so products of series stay finite.
class TruncatedPoly {
public:
    TruncatedPoly(int nvars, int cap) : nvars_(nvars), cap_(cap) {}

    static TruncatedPoly zero(int nvars, int cap) { return TruncatedPoly(nvars, cap); }
    static TruncatedPoly one(int nvars, int cap) {
        TruncatedPoly p(nvars, cap);
        p.add_term(std::vector<int>(nvars, 0), 1);
        return p;
    }
    static TruncatedPoly monomial(const std::vector<int>& exps, const BigRational& c, int cap) {
        TruncatedPoly p(static_cast<int>(exps.size()), cap);
        p.add_term(exps, c);
        return p;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, BigRational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const BigRational& c) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw VariableMismatch("term has wrong variable count");
        if (c == 0 || total_degree(exps) > cap_) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_[exps] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
        TruncatedPoly r = a.check_compatible(b);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend TruncatedPoly operator-(const TruncatedPoly& a, const TruncatedPoly& b) {
        TruncatedPoly r = a.check_compatible(b);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
        TruncatedPoly r = a.check_compatible(b);
        std::vector<int> e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > r.cap_) continue;
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedPoly& a, const TruncatedPoly& b) { return !(a == b); }

    // Geometric series 1/(1 - c*x^exps) up to the cap.
    static TruncatedPoly geometric(const std::vector<int>& exps, const BigRational& c, int cap) {
        int d = total_degree(exps);
        if (d == 0) throw Error("geometric series needs a positive-degree monomial");
        TruncatedPoly p(static_cast<int>(exps.size()), cap);
        std::vector<int> e(exps.size(), 0);
        BigRational ck = 1;
        for (int k = 0; k * d <= cap; ++k) {
            p.add_term(e, ck);
            for (size_t i = 0; i < e.size(); ++i) e[i] += exps[i];
            ck *= c;
        }
        return p;
    }

    // Same terms under a different cap (terms above the new cap drop).
    TruncatedPoly with_cap(int cap) const {
        TruncatedPoly p(nvars_, cap);
        for (const auto& [e, c] : terms_) p.add_term(e, c);
        return p;
    }

    // Substitute every variable by t; index = degree in t.
    std::vector<BigRational> specialize_to_t() const {
        std::vector<BigRational> out(cap_ + 1, 0);
        for (const auto& [e, c] : terms_) out[total_degree(e)] += c;
        return out;
    }

    std::string to_string(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
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
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                s += spk::exact::to_string(a);
            } else {
                if (a != 1) s += spk::exact::to_string(a) + "*";
                s += mono;
            }
        }
        return s;
    }

private:
    static int total_degree(const std::vector<int>& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

    TruncatedPoly check_compatible(const TruncatedPoly& o) const {
        if (nvars_ != o.nvars_)
            throw VariableMismatch("variable counts differ: " + std::to_string(nvars_) + " vs " +
                                   std::to_string(o.nvars_));
        return TruncatedPoly(nvars_, std::min(cap_, o.cap_));
    }

    int nvars_;
    int cap_;
    std::map<std::vector<int>, BigRational> terms_;
};

inline TruncatedPoly truncated_mul(const TruncatedPoly& a, const TruncatedPoly& b) {
    return a * b;
}

} // namespace spk::exact
