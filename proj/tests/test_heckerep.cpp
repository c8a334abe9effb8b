#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "spk/action.hpp"
#include "spk/hecke.hpp"
#include "spk/permutation.hpp"

using namespace spk::hecke;
using spk::exact::BigRational;
using spk::exact::LaurentPoly;
using spk::exact::matrix_rank;

namespace {

LaurentPoly lq() { return LaurentPoly::q_power(1); }
LaurentPoly lqinv() { return LaurentPoly::q_power(-1); }
LaurentPoly quantum3() { return LaurentPoly::q_power(2) + LaurentPoly(1) + LaurentPoly::q_power(-2); }
Coeff qdiff() { return Coeff(lq() - lqinv()); }

} // namespace

TEST_CASE("permutation utilities") {
    CHECK(identity_perm(3) == Perm{1, 2, 3});
    CHECK(longest_perm(3) == Perm{3, 2, 1});
    CHECK(compose({2, 1, 3}, {1, 3, 2}) == Perm{2, 3, 1});
    CHECK(right_gen({1, 2, 3}, 2) == Perm{1, 3, 2});
    CHECK(perm_length({1, 2, 3}) == 0);
    CHECK(perm_length({3, 2, 1}) == 3);
    CHECK(perm_length({2, 3, 1}) == 2);
    CHECK(perm_sign({3, 2, 1}) == -1);
    CHECK(perm_sign({2, 3, 1}) == 1);
    CHECK(all_perms(3).size() == 6);
    CHECK(all_perms(3).front() == identity_perm(3));
}

TEST_CASE("reduced words") {
    CHECK(reduced_word(identity_perm(3)).empty());
    CHECK(reduced_word({2, 1, 3}) == std::vector<int>{1});
    for (const Perm& w : all_perms(4)) {
        std::vector<int> word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == perm_length(w));
        Perm acc = identity_perm(4);
        for (int j : word) acc = compose(acc, right_gen(identity_perm(4), j));
        CHECK(acc == w);
    }
}

TEST_CASE("hecke quadratic relation") {
    HeckeElement t1 = HeckeElement::basis({2, 1});
    CHECK(hecke_mul(t1, t1) == HeckeElement::basis({1, 2}) + qdiff() * t1);

    HeckeElement u1 = HeckeElement::basis({2, 1, 3});
    HeckeElement u2 = HeckeElement::basis({1, 3, 2});
    CHECK(hecke_mul(u1, u1) == HeckeElement::basis({1, 2, 3}) + qdiff() * u1);
    // Lengths add on an ascent.
    CHECK(hecke_mul(u1, u2) == HeckeElement::basis({2, 3, 1}));
    CHECK(hecke_mul_gen(u1, 1) == HeckeElement::basis({1, 2, 3}) + qdiff() * u1);
    CHECK(hecke_mul_gen(u2, 1) == HeckeElement::basis({3, 1, 2}));
}

TEST_CASE("hecke multiplication is associative") {
    auto perms = all_perms(3);
    for (const Perm& a : perms)
        for (const Perm& b : perms)
            for (const Perm& c : perms) {
                HeckeElement ta = HeckeElement::basis(a);
                HeckeElement tb = HeckeElement::basis(b);
                HeckeElement tc = HeckeElement::basis(c);
                CHECK(hecke_mul(hecke_mul(ta, tb), tc) == hecke_mul(ta, hecke_mul(tb, tc)));
            }
}

TEST_CASE("rank mismatch is rejected") {
    HeckeElement a = HeckeElement::basis({2, 1});
    HeckeElement b = HeckeElement::basis({2, 1, 3});
    CHECK_THROWS_AS(a + b, spk::RankMismatch);
    CHECK_THROWS_AS(hecke_mul(a, b), spk::RankMismatch);
}

TEST_CASE("eulerian idempotent coefficients") {
    HeckeElement e = eulerian_idempotent_q();
    Coeff ext(LaurentPoly(1), quantum3());
    Coeff cyc(-(LaurentPoly(1) + lq() - lqinv()), LaurentPoly(2) * quantum3());
    Coeff swp(-(LaurentPoly(1) - lq() + lqinv()), LaurentPoly(2) * quantum3());
    CHECK(e.terms() == std::map<Perm, Coeff>{{{1, 2, 3}, ext},
                                             {{3, 2, 1}, ext},
                                             {{2, 3, 1}, cyc},
                                             {{3, 1, 2}, cyc},
                                             {{2, 1, 3}, swp},
                                             {{1, 3, 2}, swp}});
    CHECK(hecke_mul(e, e) == e);

    auto e1 = eulerian_idempotent_classical();
    std::map<Perm, BigRational> expected{
        {{1, 2, 3}, BigRational(1, 3)},  {{3, 2, 1}, BigRational(1, 3)},
        {{2, 3, 1}, BigRational(-1, 6)}, {{3, 1, 2}, BigRational(-1, 6)},
        {{2, 1, 3}, BigRational(-1, 6)}, {{1, 3, 2}, BigRational(-1, 6)}};
    CHECK(e1 == expected);
    CHECK(group_algebra_mul(e1, e1) == e1);
    CHECK(verify_idempotent().pass);
}

TEST_CASE("r-matrix on pure alphabets") {
    LMatrix even = rmatrix(1, 0);
    REQUIRE(even.rows() == 1);
    CHECK(even.at(0, 0) == lq());

    LMatrix odd = rmatrix(0, 1);
    REQUIRE(odd.rows() == 1);
    CHECK(odd.at(0, 0) == -lqinv());
}

TEST_CASE("r-matrix on the mixed alphabet") {
    // Pair basis in row-major order: (1,1), (1,1'), (1',1), (1',1').
    LMatrix r = rmatrix(1, 1);
    REQUIRE(r.rows() == 4);
    LMatrix expected(4, 4);
    expected.at(0, 0) = lq();
    expected.at(1, 1) = lq() - lqinv();
    expected.at(2, 1) = LaurentPoly(1);
    expected.at(1, 2) = LaurentPoly(1);
    expected.at(3, 3) = -lqinv();
    CHECK(r == expected);
    CHECK(sigma_generator(1, 1, 2, 1) == r);
}

TEST_CASE("yang baxter and hecke relations") {
    CHECK(verify_ybe_hecke(1, 1).pass);
    CHECK(verify_ybe_hecke(2, 1).pass);
    CHECK(verify_ybe_hecke(1, 2).pass);
    CHECK_FALSE(verify_ybe_hecke(1, 1, true).pass);
}

TEST_CASE("sigma specializes to the signed swap at q=1") {
    QMatrix s = sigma_generator_at(1, 1, 2, 1, BigRational(1));
    QMatrix expected(4, 4);
    expected.at(0, 0) = 1;
    expected.at(2, 1) = 1;
    expected.at(1, 2) = 1;
    expected.at(3, 3) = -1;
    CHECK(s == expected);

    CHECK(sigma_perm_at(1, 1, 2, {2, 1}, BigRational(1)) == expected);
    CHECK(sigma_perm_at(1, 1, 2, {1, 2}, BigRational(1)) == QMatrix::identity(4));
    // The longest element factors through both generators.
    CHECK(sigma_perm_at(1, 1, 3, {3, 2, 1}, BigRational(1)) ==
          sigma_generator_at(1, 1, 3, 1, BigRational(1)) *
              sigma_generator_at(1, 1, 3, 2, BigRational(1)) *
              sigma_generator_at(1, 1, 3, 1, BigRational(1)));
    CHECK_THROWS_AS(sigma_perm_at(1, 1, 3, {2, 1}, BigRational(1)), spk::RankMismatch);
}

TEST_CASE("sigma of the idempotent is an idempotent matrix") {
    BigRational q0(7, 3);
    QMatrix e = sigma_action(1, 1, 3, eulerian_idempotent_q(), q0);
    CHECK(e * e == e);
    CHECK(matrix_rank(e) == 2);
}

TEST_CASE("gl action on words") {
    QMatrix e12 = rho_action(1, 2, 1, 1, 1);
    QMatrix expected(2, 2);
    expected.at(0, 1) = 1;
    CHECK(e12 == expected);

    // Index order for length 2: (1,1), (1,1'), (1',1), (1',1').
    QMatrix e21 = rho_action(2, 1, 1, 1, 2);
    QMatrix want(4, 4);
    want.at(2, 0) = 1; // first slot raised
    want.at(1, 0) = 1; // second slot raised, even prefix
    want.at(3, 1) = 1;
    want.at(3, 2) = -1; // second slot raised past an odd letter
    CHECK(e21 == want);

    // Both slots odd: the bracket closes onto the diagonal generators.
    QMatrix a = rho_action(1, 2, 1, 1, 2);
    QMatrix b = rho_action(2, 1, 1, 1, 2);
    CHECK(a * b + b * a == rho_action(1, 1, 1, 1, 2) + rho_action(2, 2, 1, 1, 2));
}

TEST_CASE("gl closure picks one correction term") {
    GlClosure c11 = gl_closure(1, 1);
    CHECK(c11.kj);
    CHECK_FALSE(c11.jk);
    CHECK_FALSE(c11.jk_failure.empty());

    GlClosure c21 = gl_closure(2, 1);
    CHECK(c21.kj);
    CHECK_FALSE(c21.jk);

    // A one-letter alphabet cannot tell the two apart.
    GlClosure c10 = gl_closure(1, 0);
    CHECK(c10.kj);
    CHECK(c10.jk);

    spk::CheckResult res = verify_gl_relations(1, 1);
    CHECK(res.pass);
    CHECK(res.details.find("E_kj") != std::string::npos);
}

TEST_CASE("commutant dimensions") {
    spk::CheckResult c = verify_commutant(1, 1, 3);
    CHECK(c.pass);
    CHECK(c.details.find("dimension 6") != std::string::npos);

    spk::CheckResult pure = verify_commutant(1, 0, 3);
    CHECK(pure.pass);
    CHECK(pure.details.find("dimension 1") != std::string::npos);

    spk::CheckResult evens = verify_commutant(2, 0, 3);
    CHECK(evens.pass);
    CHECK(evens.details.find("dimension 5") != std::string::npos);
}

TEST_CASE("idempotent image and gamma span") {
    BigRational q0(7, 3);
    CHECK(matrix_rank(idempotent_image(1, 1, q0)) == 2);
    CHECK(matrix_rank(idempotent_image(2, 1, q0)) == 8);
    CHECK(verify_gamma_span(1, 1, q0).pass);
    CHECK(verify_gamma_span(1, 2, q0).pass);
}
