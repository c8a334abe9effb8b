#include "spk/charpoly.hpp"

#include <vector>

#include "spk/errors.hpp"
#include "spk/ssyt.hpp"

namespace spk::symfunc {

using exact::BigRational;
using exact::TruncatedPoly;
using shapes::Partition;

namespace {

struct Cell {
    size_t row;
    long col;
};

// Column-strict fillings of lambda/mu with entries 1..k; each filling
// contributes x_(offset+entry) monomials inside an nvars-variable ring.
void skew_fill_rec(const std::vector<Cell>& cells, size_t pos, const Partition& mu_pad,
                   std::vector<std::vector<int>>& entry, int k, int offset,
                   std::vector<int>& weight, TruncatedPoly& acc) {
    if (pos == cells.size()) {
        acc.add_term(weight, 1);
        return;
    }
    const Cell& c = cells[pos];
    int lo = 1;
    if (c.col > mu_pad[c.row]) lo = entry[c.row][c.col - 1];
    if (c.row > 0 && c.col >= mu_pad[c.row - 1]) lo = std::max(lo, entry[c.row - 1][c.col] + 1);
    for (int v = lo; v <= k; ++v) {
        entry[c.row][c.col] = v;
        weight[offset + v - 1] += 1;
        skew_fill_rec(cells, pos + 1, mu_pad, entry, k, offset, weight, acc);
        weight[offset + v - 1] -= 1;
    }
}

TruncatedPoly skew_schur_impl(const Partition& lambda, const Partition& mu, int k, int offset,
                              int nvars) {
    int cap = static_cast<int>(shapes::partition_size(lambda) - shapes::partition_size(mu));
    TruncatedPoly acc(nvars, cap);
    Partition mu_pad = mu;
    mu_pad.resize(lambda.size(), 0);
    std::vector<Cell> cells;
    std::vector<std::vector<int>> entry;
    for (size_t i = 0; i < lambda.size(); ++i) {
        entry.emplace_back(lambda[i], 0);
        for (long j = mu_pad[i]; j < lambda[i]; ++j) cells.push_back({i, j});
    }
    std::vector<int> weight(nvars, 0);
    skew_fill_rec(cells, 0, mu_pad, entry, k, offset, weight, acc);
    return acc;
}

TruncatedPoly weight_poly(const Partition& lambda, int m, int n, int nvars) {
    TruncatedPoly acc(nvars, static_cast<int>(shapes::partition_size(lambda)));
    for (const auto& t : shapes::enumerate_ssyt(lambda, m, n)) {
        std::vector<int> w = shapes::tableau_weight(t, m, n);
        w.resize(nvars, 0);
        acc.add_term(w, 1);
    }
    return acc;
}

std::vector<int> unit(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return e;
}

std::vector<int> pair_exp(int nvars, int i, int j) {
    std::vector<int> e(nvars, 0);
    e[i] += 1;
    e[j] += 1;
    return e;
}

std::string first_mismatch(const TruncatedPoly& a, const TruncatedPoly& b) {
    for (const auto& [e, c] : a.terms()) {
        auto it = b.terms().find(e);
        if (it == b.terms().end() || it->second != c) {
            std::string s = "exponents (";
            for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
            s += "): product side " + exact::to_string(c) + ", sum side " +
                 (it == b.terms().end() ? std::string("0") : exact::to_string(it->second));
            return s;
        }
    }
    for (const auto& [e, c] : b.terms()) {
        if (a.terms().find(e) == a.terms().end()) {
            std::string s = "exponents (";
            for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
            s += "): product side 0, sum side " + exact::to_string(c);
            return s;
        }
    }
    return "";
}

} // namespace

TruncatedPoly schur(const Partition& lambda, int m) {
    if (!shapes::is_partition(lambda)) throw ShapeError("not a partition");
    return weight_poly(lambda, m, 0, m);
}

TruncatedPoly skew_schur(const Partition& lambda, const Partition& mu, int k) {
    if (!shapes::is_partition(lambda) || !shapes::is_partition(mu))
        throw ShapeError("not a partition");
    if (!shapes::contains(lambda, mu))
        throw ContainmentError(shapes::to_string(mu) + " does not fit inside " +
                               shapes::to_string(lambda));
    return skew_schur_impl(lambda, mu, k, 0, k);
}

TruncatedPoly hook_schur_ssyt(const Partition& lambda, int m, int n) {
    if (!shapes::is_partition(lambda)) throw ShapeError("not a partition");
    return weight_poly(lambda, m, n, m + n);
}

TruncatedPoly hook_schur_factorized(const Partition& lambda, int m, int n) {
    if (!shapes::is_partition(lambda)) throw ShapeError("not a partition");
    int nvars = m + n;
    int cap = static_cast<int>(shapes::partition_size(lambda));
    TruncatedPoly acc(nvars, cap);
    Partition lc = shapes::conjugate(lambda);
    for (const auto& mu : shapes::subpartitions(lambda)) {
        if (static_cast<int>(mu.size()) > m) continue;
        TruncatedPoly even = weight_poly(mu, m, 0, nvars).with_cap(cap);
        if (even.is_zero()) continue;
        TruncatedPoly odd = skew_schur_impl(lc, shapes::conjugate(mu), n, m, nvars).with_cap(cap);
        if (odd.is_zero()) continue;
        acc = acc + even * odd;
    }
    return acc;
}

CheckResult schur_identity_check(int m, int maxdeg) {
    TruncatedPoly lhs = TruncatedPoly::one(m, maxdeg);
    for (int i = 0; i < m; ++i)
        lhs = lhs * TruncatedPoly::geometric(unit(m, i), 1, maxdeg);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            lhs = lhs * TruncatedPoly::geometric(pair_exp(m, i, j), 1, maxdeg);

    TruncatedPoly rhs(m, maxdeg);
    for (long r = 0; r <= maxdeg; ++r)
        for (const auto& lam : shapes::partitions_of(r))
            rhs = rhs + schur(lam, m).with_cap(maxdeg);

    CheckResult res;
    res.name = "schur-identity(m=" + std::to_string(m) + ",deg<=" + std::to_string(maxdeg) + ")";
    res.pass = lhs == rhs;
    res.details = res.pass ? "product and partition sum agree on all monomials"
                           : "mismatch at " + first_mismatch(lhs, rhs);
    return res;
}

CheckResult hook_identity_check(int m, int n, int maxdeg) {
    int d = m + n;
    auto parity = [&](int i) { return i >= m; };
    TruncatedPoly lhs = TruncatedPoly::one(d, maxdeg);
    for (int i = 0; i < d; ++i)
        lhs = lhs * TruncatedPoly::geometric(unit(d, i), 1, maxdeg);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (parity(i) == parity(j)) {
                lhs = lhs * TruncatedPoly::geometric(pair_exp(d, i, j), 1, maxdeg);
            } else {
                TruncatedPoly f = TruncatedPoly::one(d, maxdeg);
                f.add_term(pair_exp(d, i, j), 1);
                lhs = lhs * f;
            }
        }

    TruncatedPoly rhs(d, maxdeg);
    for (long r = 0; r <= maxdeg; ++r)
        for (const auto& lam : shapes::partitions_of(r))
            if (shapes::in_hook(lam, m, n))
                rhs = rhs + hook_schur_ssyt(lam, m, n).with_cap(maxdeg);

    CheckResult res;
    res.name = "hook-identity(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",deg<=" +
               std::to_string(maxdeg) + ")";
    res.pass = lhs == rhs;
    res.details = res.pass ? "product and hook character sum agree on all monomials"
                           : "mismatch at " + first_mismatch(lhs, rhs);
    return res;
}

} // namespace spk::symfunc
