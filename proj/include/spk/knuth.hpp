#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spk/check.hpp"
#include "spk/ssyt.hpp"

namespace spk::plactic {

// A tableau together with the sign picked up by straightening a word to it.
struct NormalForm {
    int sign = 1;
    shapes::Tableau tableau;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Words one signed Knuth move away, each with the sign of that move.
// Moves swap adjacent letters: the first two of a window (both orders of the
// extremes in front of the middle letter) or the last two (middle letter in
// front).  Whether the middle letter repeats a neighbour decides strict vs
// weak comparisons, through its parity.
std::vector<std::pair<shapes::Word, int>> knuth_neighbors(const shapes::Word& w);

// Row insertion.  The entering letter bumps the leftmost entry that is
// larger, or equal when the letter is odd; even letters may sit next to a
// copy of themselves, odd ones may not.
shapes::Tableau insert(shapes::Tableau t, const shapes::SignedLetter& a);

// Straightens w: inserts letters left to right, then reads the sign off a
// chain of Knuth moves from w to the reading word of the result.
NormalForm normal_form(const shapes::Word& w);

// Product of plactic classes via concatenated reading words.
NormalForm plactic_product(const shapes::Tableau& a, const shapes::Tableau& b, int m, int n);

// Equivalence classes of all length-r words over the (m,n) alphabet.
// SizeGuardExceeded when (m+n)^r > 10^6.
std::vector<std::vector<shapes::Word>> enumerate_classes(int m, int n, int r);

struct ClassReport {
    size_t classes = 0;
    std::map<std::string, size_t> by_shape;
    bool sign_consistent = false;
    bool bijection = false;
};

ClassReport classify(int m, int n, int r);

// Classes of length r are in bijection with semistandard tableaux of size r:
// each class holds exactly one reading word, and signs are path independent.
CheckResult verify_class_bijection(int m, int n, int r);

} // namespace spk::plactic
