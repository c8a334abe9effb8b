#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace spk::hecke {

// One-line notation, 1-based images: w[i-1] = w(i).
using Perm = std::vector<int>;

inline Perm identity_perm(int r) {
    Perm w(r);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

inline Perm longest_perm(int r) {
    Perm w(r);
    for (int i = 0; i < r; ++i) w[i] = r - i;
    return w;
}

// (u o v)(i) = u(v(i)).
inline Perm compose(const Perm& u, const Perm& v) {
    Perm w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = u[v[i] - 1];
    return w;
}

// w * s_i swaps the values in positions i, i+1 (1-based i).
inline Perm right_gen(Perm w, int i) {
    std::swap(w[i - 1], w[i]);
    return w;
}

inline int perm_length(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

inline int perm_sign(const Perm& w) { return perm_length(w) % 2 ? -1 : 1; }

// Repeatedly fixes the first descent; the generators collected along the way,
// reversed, multiply out to w.
inline std::vector<int> reduced_word(const Perm& w) {
    Perm v = w;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                word.push_back(static_cast<int>(i) + 1);
                std::swap(v[i], v[i + 1]);
                moved = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

inline std::vector<Perm> all_perms(int r) {
    std::vector<Perm> out;
    Perm w = identity_perm(r);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace spk::hecke
