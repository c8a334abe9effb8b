#pragma once

#include <string>
#include <vector>

#include "spk/letters.hpp"
#include "spk/partition.hpp"

namespace spk::shapes {

// Tableau over the signed alphabet, stored as rows of letters.
struct Tableau {
    std::vector<std::vector<SignedLetter>> rows;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows < b.rows; }
};

// Row lengths; ShapeError unless they form a partition.
Partition shape_of(const Tableau& t);

// Semistandard in the signed sense: rows and columns weakly increase, even
// letters repeat only along rows, odd letters repeat only down columns.
bool is_valid_ssyt(const Tableau& t, int m, int n);

// All semistandard tableaux of the given shape over the (m,n) alphabet,
// sorted by reading word.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int m, int n);

size_t count_ssyt(const Partition& shape, int m, int n);

// Rows read bottom to top, each left to right.
Word reading_word(const Tableau& t);

std::vector<int> tableau_weight(const Tableau& t, int m, int n);

// Compact one-line form, rows joined by '/': "1 1'/1'".
std::string to_string(const Tableau& t);

} // namespace spk::shapes
