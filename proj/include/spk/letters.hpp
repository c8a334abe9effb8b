#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "spk/errors.hpp"

namespace spk::shapes {

// One letter of the ordered alphabet 1 < 2 < ... < m < 1' < 2' < ... < n'.
// Unprimed letters are even (parity 0), primed ones odd (parity 1).  Ordering
// by (parity, index) is exactly the alphabet order.
struct SignedLetter {
    int parity = 0;
    int index = 1;
    auto operator<=>(const SignedLetter&) const = default;
};

using Word = std::vector<SignedLetter>;

inline SignedLetter even_letter(int i) { return {0, i}; }
inline SignedLetter odd_letter(int i) { return {1, i}; }

inline std::string to_string(const SignedLetter& a) {
    return std::to_string(a.index) + (a.parity ? "'" : "");
}

inline SignedLetter parse_letter(const std::string& tok) {
    std::string s = tok;
    int parity = 0;
    if (!s.empty() && s.back() == '\'') {
        parity = 1;
        s.pop_back();
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad letter: '" + tok + "'");
    int idx = std::stoi(s);
    if (idx < 1) throw ParseError("letter index must be positive: '" + tok + "'");
    return {parity, idx};
}

inline Word parse_word(const std::string& text) {
    Word w;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) {
            w.push_back(parse_letter(tok));
            tok.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch != ' ') {
            tok += ch;
        }
    }
    flush();
    return w;
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s;
}

inline bool in_alphabet(const SignedLetter& a, int m, int n) {
    return a.index >= 1 && a.index <= (a.parity ? n : m);
}

inline bool in_alphabet(const Word& w, int m, int n) {
    for (const auto& a : w)
        if (!in_alphabet(a, m, n)) return false;
    return true;
}

// 1-based position in the alphabet order.
inline int rank(const SignedLetter& a, int m) { return a.parity ? m + a.index : a.index; }

inline SignedLetter letter_from_rank(int r, int m) {
    return r <= m ? even_letter(r) : odd_letter(r - m);
}

inline std::vector<SignedLetter> alphabet(int m, int n) {
    std::vector<SignedLetter> out;
    for (int i = 1; i <= m; ++i) out.push_back(even_letter(i));
    for (int i = 1; i <= n; ++i) out.push_back(odd_letter(i));
    return out;
}

inline std::vector<int> word_weight(const Word& w, int m, int n) {
    std::vector<int> wt(m + n, 0);
    for (const auto& a : w) wt[rank(a, m) - 1] += 1;
    return wt;
}

inline int word_parity(const Word& w) {
    int p = 0;
    for (const auto& a : w) p ^= a.parity;
    return p;
}

// Index of w among all words of its length over the (m,n) alphabet, in
// lexicographic order.  Used to vectorize tensors.
inline size_t word_index(const Word& w, int m, int n) {
    size_t d = static_cast<size_t>(m + n), idx = 0;
    for (const auto& a : w) idx = idx * d + static_cast<size_t>(rank(a, m) - 1);
    return idx;
}

inline Word word_from_index(size_t idx, int r, int m, int n) {
    size_t d = static_cast<size_t>(m + n);
    Word w(r);
    for (int k = r - 1; k >= 0; --k) {
        w[k] = letter_from_rank(static_cast<int>(idx % d) + 1, m);
        idx /= d;
    }
    return w;
}

} // namespace spk::shapes
