#pragma once

#include <vector>

#include "spk/check.hpp"
#include "spk/hecke.hpp"
#include "spk/laurent.hpp"
#include "spk/matrix.hpp"

namespace spk::hecke {

using LMatrix = exact::Matrix<exact::LaurentPoly>;
using QMatrix = exact::Matrix<exact::BigRational>;

// Braiding on V (x) V over the (m,n) alphabet, column convention: the column
// indexed by the word (k,l) holds the image of that basis vector.  Diagonal
// coefficient q on even-even pairs, -q^-1 on odd-odd pairs; crossings pick up
// the sign of swapping two odd letters, and an extra (q - q^-1) straightens
// an increasing pair.
LMatrix rmatrix(int m, int n);

// Action of the i-th braid generator on words of length r.
LMatrix sigma_generator(int m, int n, int r, int s);
QMatrix sigma_generator_at(int m, int n, int r, int s, const exact::BigRational& q0);

// Matrix of T_w, generator matrices composed along a reduced word.
QMatrix sigma_perm_at(int m, int n, int r, const Perm& w, const exact::BigRational& q0);

// Matrix of a full Hecke element at q = q0.
QMatrix sigma_action(int m, int n, int r, const HeckeElement& e, const exact::BigRational& q0);

// Classical action of the matrix unit E_ij on words: replace one letter j by
// i, with the sign of moving an odd generator past the letters to its left.
// i, j are 1-based ranks into the alphabet.
QMatrix rho_action(int i, int j, int m, int n, int r);

// Braid and quadratic relations for the generator matrices, plus the q = 1
// specialization against the signed swap.  corrupt deliberately flips one
// entry first (forced-failure fixture for the exit-code contract).
CheckResult verify_ybe_hecke(int m, int n, bool corrupt = false);

// Supercommutator closure of the rho action, tried with both orders of the
// correction term.
struct GlClosure {
    bool kj = false;
    bool jk = false;
    std::string kj_failure; // first failing (i,j,k,l) when not closing
    std::string jk_failure;
};

GlClosure gl_closure(int m, int n);

// Reports which correction term closes; passes when E_kj does.
CheckResult verify_gl_relations(int m, int n);

// sigma and rho commute on words of length r; for r = 3 also checks the
// dimension of the algebra spanned by the sigma matrices.
CheckResult verify_commutant(int m, int n, int r);

// Nonzero columns of sigma_q(e(q)) at q = q0, as vectors of length (m+n)^3.
std::vector<std::vector<exact::BigRational>> idempotent_image(int m, int n,
                                                              const exact::BigRational& q0);

// The cubic generators span exactly the idempotent image: at q = q0 against
// sigma_q(e(q)), and at q = 1 against both the image and the undeformed
// double brackets.
CheckResult verify_gamma_span(int m, int n, const exact::BigRational& q0);

} // namespace spk::hecke
