#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "spk/errors.hpp"
#include "spk/rational.hpp"

namespace spk::shapes {

using Partition = std::vector<long>;

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline long partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0L);
}

inline Partition parse_partition(const std::string& text) {
    Partition p;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad partition part: '" + tok + "'");
        long v = std::stol(tok);
        if (v > 0) p.push_back(v);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch != ' ') {
            tok += ch;
        }
    }
    flush();
    if (!is_partition(p)) throw ParseError("parts must be weakly decreasing: '" + text + "'");
    return p;
}

inline std::string to_string(const Partition& p) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

inline Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.resize(p[0], 0);
    for (long part : p)
        for (long j = 0; j < part; ++j) q[j] += 1;
    return q;
}

// (m,n)-hook condition: every row below the m-th has length at most n.
inline bool in_hook(const Partition& p, int m, int n) {
    for (size_t j = m; j < p.size(); ++j)
        if (p[j] > n) return false;
    return true;
}

inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

namespace detail {
inline void partitions_rec(long rest, long maxpart, Partition& cur,
                           std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (long k = std::min(rest, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(rest - k, k, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

// All partitions of r, lexicographically decreasing: (3), (2,1), (1,1,1).
inline std::vector<Partition> partitions_of(long r) {
    std::vector<Partition> out;
    Partition cur;
    detail::partitions_rec(r, r, cur, out);
    return out;
}

// Sub-partitions of outer, every size.
inline std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    for (long r = 0; r <= partition_size(outer); ++r)
        for (const auto& mu : partitions_of(r))
            if (contains(outer, mu)) out.push_back(mu);
    return out;
}

namespace detail {
inline void syt_count_rec(const Partition& shape, Partition& filled, long placed, long total,
                          exact::BigInt& acc) {
    if (placed == total) {
        acc += 1;
        return;
    }
    for (size_t i = 0; i < shape.size(); ++i) {
        if (filled[i] >= shape[i]) continue;
        if (i > 0 && filled[i - 1] <= filled[i]) continue;
        filled[i] += 1;
        syt_count_rec(shape, filled, placed + 1, total, acc);
        filled[i] -= 1;
    }
}
} // namespace detail

inline exact::BigInt count_standard_enumerated(const Partition& shape) {
    exact::BigInt acc = 0;
    Partition filled(shape.size(), 0);
    detail::syt_count_rec(shape, filled, 0, partition_size(shape), acc);
    return acc;
}

inline exact::BigInt count_standard_hook_formula(const Partition& shape) {
    long r = partition_size(shape);
    Partition conj = conjugate(shape);
    exact::BigInt hooks = 1;
    for (size_t i = 0; i < shape.size(); ++i)
        for (long j = 0; j < shape[i]; ++j)
            hooks *= (shape[i] - j) + (conj[j] - static_cast<long>(i)) - 1;
    exact::BigRational f(exact::factorial(static_cast<unsigned>(r)), hooks);
    if (denominator(f) != 1) throw Error("hook length formula gave a non-integer");
    return numerator(f);
}

// Number of standard Young tableaux.  Small shapes are enumerated directly,
// larger ones use the hook length product; the two agree on the overlap.
inline exact::BigInt count_standard(const Partition& shape) {
    if (!is_partition(shape)) throw ShapeError("not a partition: " + to_string(shape));
    if (partition_size(shape) <= 8) return count_standard_enumerated(shape);
    return count_standard_hook_formula(shape);
}

} // namespace spk::shapes
