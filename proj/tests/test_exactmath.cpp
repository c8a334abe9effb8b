#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spk/laurent.hpp"
#include "spk/matrix.hpp"
#include "spk/ratfun.hpp"
#include "spk/rational.hpp"
#include "spk/truncpoly.hpp"

using namespace spk::exact;

namespace {

LaurentPoly q() { return LaurentPoly::q_power(1); }
LaurentPoly qinv() { return LaurentPoly::q_power(-1); }
LaurentPoly quantum3() { return LaurentPoly::q_power(2) + LaurentPoly(1) + LaurentPoly::q_power(-2); }

} // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("7/3") == BigRational(7, 3));
    CHECK(parse_rational("-2") == BigRational(-2));
    CHECK(to_string(BigRational(7, 3)) == "7/3");
    CHECK(to_string(BigRational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("7/"), spk::ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), spk::ParseError);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPoly d = q() - qinv();
    LaurentPoly s = q() + qinv();
    CHECK(d * s == LaurentPoly::q_power(2) - LaurentPoly::q_power(-2));
    CHECK(quantum3() * d == LaurentPoly::q_power(3) - LaurentPoly::q_power(-3));
    CHECK(d - d == LaurentPoly());
    CHECK((d - d).is_zero());
    CHECK(-d == qinv() - q());
    CHECK(LaurentPoly(BigRational(0)).is_zero());
}

TEST_CASE("laurent exponent range and coefficients") {
    LaurentPoly p = quantum3();
    CHECK(p.min_exp() == -2);
    CHECK(p.max_exp() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.shifted(2).min_exp() == 0);
    CHECK(p.shifted(2).coeff(4) == 1);
    CHECK_THROWS_AS(LaurentPoly().min_exp(), spk::Error);
    CHECK_THROWS_AS(LaurentPoly().max_exp(), spk::Error);
}

TEST_CASE("laurent evaluation") {
    LaurentPoly p = quantum3();
    CHECK(p.eval(BigRational(1)) == 3);
    CHECK(p.eval(BigRational(7, 3)) == BigRational(7, 3) * BigRational(7, 3) + 1 +
                                           BigRational(9, 49));
    CHECK((q() - qinv()).eval(BigRational(1)) == 0);
    CHECK_THROWS_AS(qinv().eval(BigRational(0)), spk::PoleError);
    CHECK(LaurentPoly(5).eval(BigRational(0)) == 5);
}

TEST_CASE("laurent formatting") {
    CHECK(quantum3().to_string() == "q^2+1+q^-2");
    CHECK((q() - qinv()).to_string() == "q-q^-1");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly(BigRational(-3, 2)).to_string() == "-3/2");
    CHECK(LaurentPoly::monomial(BigRational(3, 2), 2).to_string() == "3/2*q^2");
    CHECK((LaurentPoly(1) - q()).to_string() == "-q+1");
}

TEST_CASE("rational function normalization and equality") {
    RationalFunction f(q() - qinv(), LaurentPoly(2));
    CHECK(f.to_string() == "(q-q^-1)/2");
    CHECK(f + f == RationalFunction(q() - qinv()));

    // Equal values with different representations compare equal.
    RationalFunction a(LaurentPoly::q_power(2) - LaurentPoly(1), q() + LaurentPoly(1));
    RationalFunction b(q() - LaurentPoly(1));
    CHECK(a == b);

    // Denominators are normalized to start at q^0 with a positive low term.
    RationalFunction c(LaurentPoly(1), q());
    CHECK(c == RationalFunction(qinv()));
    CHECK(c.den() == LaurentPoly(1));
}

TEST_CASE("rational function arithmetic") {
    RationalFunction third(LaurentPoly(1), quantum3());
    RationalFunction one(1);
    CHECK(third * RationalFunction(quantum3()) == one);
    CHECK(one / third == RationalFunction(quantum3()));
    CHECK(third - third == RationalFunction());
    CHECK((third + third) == RationalFunction(LaurentPoly(2), quantum3()));
    CHECK_THROWS_AS(one / RationalFunction(), spk::Error);

    CHECK(third.eval(BigRational(1)) == BigRational(1, 3));
    CHECK_THROWS_AS(RationalFunction(LaurentPoly(1), q() - LaurentPoly(1)).eval(BigRational(1)),
                    spk::PoleError);
}

TEST_CASE("rational function behavior at large q") {
    RationalFunction f(q() - qinv(), LaurentPoly(1));
    CHECK(f.degree_at_infinity() == 1);
    CHECK(f.leading_at_infinity() == 1);
    RationalFunction g(LaurentPoly(1) - q(), LaurentPoly::q_power(2));
    CHECK(g.degree_at_infinity() == -1);
    CHECK(g.leading_at_infinity() == -1);
    RationalFunction h(quantum3(), quantum3());
    CHECK(h.degree_at_infinity() == 0);
}

TEST_CASE("field axioms on random rational functions") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(-3, 3);
    auto sample = [&] {
        LaurentPoly num, den;
        for (int t = 0; t < 3; ++t) num += LaurentPoly::monomial(coeff(rng), expo(rng));
        while (den.is_zero()) den = LaurentPoly::monomial(coeff(rng), expo(rng)) + LaurentPoly(1);
        return RationalFunction(num, den);
    };
    for (int trial = 0; trial < 50; ++trial) {
        RationalFunction a = sample(), b = sample(), c = sample();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalFunction());
        if (!a.is_zero()) CHECK(a / a == RationalFunction(1));
    }
}

TEST_CASE("truncated polynomial basics") {
    TruncatedPoly p = TruncatedPoly::monomial({1, 0}, 1, 3);
    TruncatedPoly x2 = TruncatedPoly::monomial({0, 1}, 1, 3);
    TruncatedPoly s = p + x2;
    CHECK(s.to_string() == "x1+x2");
    CHECK((s * s).to_string() == "x1^2+2*x1*x2+x2^2");
    CHECK(truncated_mul(s, s) == s * s);

    // Terms above the shared cap silently drop.
    TruncatedPoly cube = s * s * s;
    CHECK(cube.terms().size() == 4);
    TruncatedPoly quartic = cube * s;
    CHECK(quartic.is_zero());

    CHECK_THROWS_AS(s + TruncatedPoly::one(3, 3), spk::VariableMismatch);
    CHECK_THROWS_AS(s.add_term({1, 2, 3}, 1), spk::VariableMismatch);
}

TEST_CASE("truncated polynomial cap changes") {
    TruncatedPoly x1 = TruncatedPoly::monomial({1, 0}, 1, 2);
    TruncatedPoly x2 = TruncatedPoly::monomial({0, 1}, 1, 5);
    // Mixed caps shrink to the minimum; recapping restores headroom.
    CHECK((x1 * x2).cap() == 2);
    TruncatedPoly wide = (x1.with_cap(5) * x2);
    CHECK(wide.cap() == 5);
    CHECK((wide * wide).to_string() == "x1^2*x2^2");
    CHECK(wide.with_cap(1).is_zero());
}

TEST_CASE("geometric series") {
    TruncatedPoly g = TruncatedPoly::geometric({1}, 1, 4);
    CHECK(g.to_string() == "x1^4+x1^3+x1^2+x1+1");
    TruncatedPoly alt = TruncatedPoly::geometric({2}, -1, 6);
    CHECK(alt.to_string() == "-x1^6+x1^4-x1^2+1");
    CHECK_THROWS_AS(TruncatedPoly::geometric({0, 0}, 1, 4), spk::Error);
}

TEST_CASE("specialization to one variable") {
    TruncatedPoly s =
        TruncatedPoly::monomial({1, 0}, 1, 3) + TruncatedPoly::monomial({0, 1}, 1, 3);
    std::vector<BigRational> t = (s * s).specialize_to_t();
    CHECK(t == std::vector<BigRational>{0, 0, 4, 0});
}

TEST_CASE("matrix arithmetic") {
    using M = Matrix<BigRational>;
    M a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    CHECK(a * M::identity(2) == a);
    CHECK(a - a == M(2, 2));
    CHECK((a - a).is_zero());
    CHECK(a.transpose().at(0, 1) == 3);
    M sq = a * a;
    CHECK(sq.at(0, 0) == 7);
    CHECK(sq.at(1, 1) == 22);
    CHECK(a.scaled(BigRational(1, 2)).at(1, 1) == 2);
}

TEST_CASE("matrix rank") {
    using M = Matrix<BigRational>;
    M a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    CHECK(a.rank() == 1);
    CHECK(M::identity(3).rank() == 3);
    CHECK(M(3, 3).rank() == 0);

    std::vector<std::vector<BigRational>> rows = {
        {1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {2, 1, 3}};
    CHECK(matrix_rank(rows) == 2);
    CHECK(matrix_rank(std::vector<std::vector<BigRational>>{}) == 0);
}

TEST_CASE("rank over rational functions") {
    using MF = Matrix<RationalFunction>;
    MF m(2, 2);
    m.at(0, 0) = RationalFunction::q_power(1);
    m.at(0, 1) = RationalFunction(1);
    m.at(1, 0) = RationalFunction::q_power(2);
    m.at(1, 1) = RationalFunction::q_power(1);
    CHECK(m.rank() == 1);
    m.at(1, 1) = m.at(1, 1) + RationalFunction(1);
    CHECK(m.rank() == 2);
}
