#include "spk/ssyt.hpp"

#include <algorithm>

#include "spk/errors.hpp"

namespace spk::shapes {

Partition shape_of(const Tableau& t) {
    Partition p;
    for (const auto& row : t.rows) p.push_back(static_cast<long>(row.size()));
    if (!is_partition(p)) throw ShapeError("row lengths do not form a partition");
    return p;
}

bool is_valid_ssyt(const Tableau& t, int m, int n) {
    shape_of(t);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        for (size_t j = 0; j < row.size(); ++j) {
            const SignedLetter& a = row[j];
            if (!in_alphabet(a, m, n)) return false;
            if (j > 0) {
                const SignedLetter& left = row[j - 1];
                if (a < left) return false;
                if (a == left && a.parity == 1) return false;
            }
            if (i > 0) {
                const SignedLetter& up = t.rows[i - 1][j];
                if (a < up) return false;
                if (a == up && a.parity == 0) return false;
            }
        }
    }
    return true;
}

namespace {

void fill_rec(const Partition& shape, int m, int n, Tableau& t, size_t i, size_t j,
              std::vector<Tableau>& out) {
    if (i == shape.size()) {
        out.push_back(t);
        return;
    }
    size_t ni = i, nj = j + 1;
    if (static_cast<long>(nj) == shape[i]) {
        ni = i + 1;
        nj = 0;
    }
    for (const SignedLetter& a : alphabet(m, n)) {
        if (j > 0) {
            const SignedLetter& left = t.rows[i][j - 1];
            if (a < left || (a == left && a.parity == 1)) continue;
        }
        if (i > 0) {
            const SignedLetter& up = t.rows[i - 1][j];
            if (a < up || (a == up && a.parity == 0)) continue;
        }
        t.rows[i][j] = a;
        fill_rec(shape, m, n, t, ni, nj, out);
    }
}

} // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int m, int n) {
    if (!is_partition(shape)) throw ShapeError("not a partition: " + to_string(shape));
    std::vector<Tableau> out;
    Tableau t;
    for (long len : shape) t.rows.emplace_back(len);
    if (shape.empty()) {
        out.push_back(t);
    } else {
        fill_rec(shape, m, n, t, 0, 0, out);
    }
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return reading_word(a) < reading_word(b);
    });
    return out;
}

size_t count_ssyt(const Partition& shape, int m, int n) {
    return enumerate_ssyt(shape, m, n).size();
}

Word reading_word(const Tableau& t) {
    Word w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::vector<int> tableau_weight(const Tableau& t, int m, int n) {
    return word_weight(reading_word(t), m, n);
}

std::string to_string(const Tableau& t) {
    if (t.rows.empty()) return "/";
    std::string s;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s += "/";
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j) s += " ";
            s += to_string(t.rows[i][j]);
        }
    }
    return s;
}

} // namespace spk::shapes
