#include "spk/knuth.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "spk/errors.hpp"

namespace spk::plactic {

using shapes::SignedLetter;
using shapes::Tableau;
using shapes::Word;

namespace {

// x z y ~ z x y, middle letter y.
bool r1(const SignedLetter& x, const SignedLetter& y, const SignedLetter& z) {
    if (y.parity == 0) return x <= y && y < z;
    return x < y && y <= z;
}

// y x z ~ y z x, middle letter y in front.
bool r2(const SignedLetter& x, const SignedLetter& y, const SignedLetter& z) {
    if (y.parity == 0) return x < y && y <= z;
    return x <= y && y < z;
}

int move_sign(const SignedLetter& u, const SignedLetter& v) {
    return (u.parity & v.parity) ? -1 : 1;
}

} // namespace

std::vector<std::pair<Word, int>> knuth_neighbors(const Word& w) {
    std::set<std::pair<Word, int>> out;
    for (size_t p = 0; p + 3 <= w.size(); ++p) {
        const SignedLetter &a = w[p], &b = w[p + 1], &c = w[p + 2];
        if (r1(a, c, b) || r1(b, c, a)) {
            Word v = w;
            std::swap(v[p], v[p + 1]);
            out.insert({std::move(v), move_sign(a, b)});
        }
        if (r2(b, a, c) || r2(c, a, b)) {
            Word v = w;
            std::swap(v[p + 1], v[p + 2]);
            out.insert({std::move(v), move_sign(b, c)});
        }
    }
    return {out.begin(), out.end()};
}

Tableau insert(Tableau t, const SignedLetter& a) {
    SignedLetter cur = a;
    for (size_t i = 0;; ++i) {
        if (i == t.rows.size()) {
            t.rows.push_back({cur});
            return t;
        }
        auto& row = t.rows[i];
        size_t j = 0;
        while (j < row.size() && !(row[j] > cur || (row[j] == cur && cur.parity == 1))) ++j;
        if (j == row.size()) {
            row.push_back(cur);
            return t;
        }
        std::swap(row[j], cur);
    }
}

NormalForm normal_form(const Word& w) {
    Tableau t;
    for (const auto& a : w) t = insert(std::move(t), a);
    Word target = shapes::reading_word(t);
    if (target == w) return {1, t};

    std::map<Word, int> sign{{w, 1}};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
        Word u = std::move(queue.front());
        queue.pop_front();
        int su = sign.at(u);
        for (auto& [v, s] : knuth_neighbors(u)) {
            auto [it, fresh] = sign.emplace(v, su * s);
            if (!fresh) {
                if (it->second != su * s)
                    throw InconsistentSign("conflicting signs for word " + shapes::to_string(v));
                continue;
            }
            if (v == target) return {it->second, t};
            queue.push_back(std::move(v));
        }
    }
    throw Error("insertion result not reachable by Knuth moves from " + shapes::to_string(w));
}

NormalForm plactic_product(const Tableau& a, const Tableau& b, int m, int n) {
    if (!shapes::is_valid_ssyt(a, m, n) || !shapes::is_valid_ssyt(b, m, n))
        throw AlphabetMismatch("operand is not semistandard over the (" + std::to_string(m) +
                               "," + std::to_string(n) + ") alphabet");
    Word w = shapes::reading_word(a);
    Word wb = shapes::reading_word(b);
    w.insert(w.end(), wb.begin(), wb.end());
    return normal_form(w);
}

std::vector<std::vector<Word>> enumerate_classes(int m, int n, int r) {
    size_t d = static_cast<size_t>(m + n);
    double total_est = std::pow(static_cast<double>(d), r);
    if (total_est > 1e6)
        throw SizeGuardExceeded("(m+n)^r = " + std::to_string(total_est) + " exceeds 10^6");
    size_t total = 1;
    for (int i = 0; i < r; ++i) total *= d;

    std::vector<std::vector<Word>> classes;
    std::vector<char> seen(total, 0);
    std::vector<int> sign(total, 0);
    for (size_t start = 0; start < total; ++start) {
        if (seen[start]) continue;
        std::vector<Word> cls;
        std::deque<size_t> queue{start};
        seen[start] = 1;
        sign[start] = 1;
        while (!queue.empty()) {
            size_t ui = queue.front();
            queue.pop_front();
            Word u = shapes::word_from_index(ui, r, m, n);
            cls.push_back(u);
            for (auto& [v, s] : knuth_neighbors(u)) {
                size_t vi = shapes::word_index(v, m, n);
                int sv = sign[ui] * s;
                if (seen[vi]) {
                    if (sign[vi] != sv)
                        throw InconsistentSign("conflicting signs for word " +
                                               shapes::to_string(v));
                    continue;
                }
                seen[vi] = 1;
                sign[vi] = sv;
                queue.push_back(vi);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

ClassReport classify(int m, int n, int r) {
    ClassReport rep;
    auto classes = enumerate_classes(m, n, r);
    rep.classes = classes.size();
    rep.sign_consistent = true; // enumerate_classes throws otherwise

    std::map<Word, std::string> readers;
    for (const auto& lam : shapes::partitions_of(r)) {
        for (const auto& t : shapes::enumerate_ssyt(lam, m, n))
            readers[shapes::reading_word(t)] = shapes::to_string(lam);
    }

    rep.bijection = readers.size() == classes.size();
    for (const auto& cls : classes) {
        size_t hits = 0;
        std::string shape;
        for (const auto& w : cls) {
            auto it = readers.find(w);
            if (it != readers.end()) {
                ++hits;
                shape = it->second;
            }
        }
        if (hits != 1) {
            rep.bijection = false;
            continue;
        }
        rep.by_shape[shape] += 1;
        Tableau t = normal_form(cls.front()).tableau;
        if (shapes::to_string(shape_of(t)) != shape) rep.bijection = false;
    }
    return rep;
}

CheckResult verify_class_bijection(int m, int n, int r) {
    CheckResult res;
    res.name = "plactic-classes(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
               ",r=" + std::to_string(r) + ")";
    try {
        ClassReport rep = classify(m, n, r);
        size_t tab_total = 0;
        for (const auto& lam : shapes::partitions_of(r))
            tab_total += shapes::count_ssyt(lam, m, n);
        res.pass = rep.bijection && rep.sign_consistent && rep.classes == tab_total;
        res.details = std::to_string(rep.classes) + " classes, " + std::to_string(tab_total) +
                      " tableaux" + (rep.sign_consistent ? ", signs path independent" : "");
    } catch (const InconsistentSign& e) {
        res.pass = false;
        res.details = e.what();
    }
    return res;
}

} // namespace spk::plactic
