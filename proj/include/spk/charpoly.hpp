#pragma once

#include "spk/check.hpp"
#include "spk/partition.hpp"
#include "spk/truncpoly.hpp"

namespace spk::symfunc {

// Classical Schur polynomial in m variables, by column-strict tableaux.
exact::TruncatedPoly schur(const shapes::Partition& lambda, int m);

// Skew Schur polynomial in k variables; ContainmentError unless mu fits
// inside lambda.
exact::TruncatedPoly skew_schur(const shapes::Partition& lambda, const shapes::Partition& mu,
                                int k);

// Character of the signed alphabet, as a weight generating function over
// semistandard tableaux.  Variables x1..xm are the even letters, x(m+1)..
// x(m+n) the odd ones.
exact::TruncatedPoly hook_schur_ssyt(const shapes::Partition& lambda, int m, int n);

// Same character through the factorization sum_{mu inside lambda}
// s_mu(even) * s_{lambda'/mu'}(odd).
exact::TruncatedPoly hook_schur_factorized(const shapes::Partition& lambda, int m, int n);

// Cauchy-type product identity for ordinary Schur polynomials, checked
// degree by degree up to maxdeg.
CheckResult schur_identity_check(int m, int maxdeg);

// Product formula for the signed alphabet against the sum of hook-shape
// characters, up to maxdeg.
CheckResult hook_identity_check(int m, int n, int maxdeg);

} // namespace spk::symfunc
