#include "doctest.h"

#include "deltasq/q_analogues.hpp"
#include "deltasq/qt_rat.hpp"

#include <random>

using namespace deltasq;

namespace {

QTPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coef(-5, 5);
    QTPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += QTPoly::monomial(coef(rng), expd(rng), expd(rng));
    return p;
}

QTRat random_rat(std::mt19937_64& rng) {
    QTPoly den;
    while (den.is_zero()) den = random_poly(rng);
    return QTRat(random_poly(rng), den);
}

}  // namespace

TEST_CASE("q_int basics") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1).is_one());
    CHECK(q_int(3) == QTPoly(1) + QTPoly::q(1) + QTPoly::q(2));
    CHECK(q_int(3).str() == "1 + q + q^2");
}

TEST_CASE("q_binomial basics and conventions") {
    CHECK(q_binomial(2, 3).is_zero());
    CHECK(q_binomial(5, 0).is_one());
    CHECK(q_binomial(2, 1) == QTPoly(1) + QTPoly::q(1));
    CHECK(q_binomial(3, -1).is_zero());
    CHECK(q_binomial(4, 2) == *(q_factorial(4).divided_by(q_factorial(2) * q_factorial(2))));
}

TEST_CASE("q_binomial at q=1 equals integer binomial") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k).eval(1, 1) == Rational(int_binomial(n, k)));
}

TEST_CASE("q_binomial symmetry and Pascal recurrence") {
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) CHECK(q_binomial(n, k) == q_binomial(n, n - k));
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= a; ++b)
            CHECK(QTPoly::q(b) * q_binomial(a - 1, b) + q_binomial(a - 1, b - 1) ==
                  q_binomial(a, b));
}

TEST_CASE("q_multinomial") {
    CHECK(q_multinomial(2, {1, 1}) == q_binomial(2, 1));
    CHECK(q_multinomial(4, {4}).is_one());
    CHECK(q_multinomial(3, {2, 1}) == q_int(3));
    CHECK_THROWS(q_multinomial(3, {2, 2}));
}

TEST_CASE("q_pochhammer") {
    CHECK(q_pochhammer(QTPoly::q(), 0).is_one());
    CHECK(q_pochhammer(QTPoly::q(), 2) ==
          (QTPoly(1) - QTPoly::q(1)) * (QTPoly(1) - QTPoly::q(2)));
    CHECK(q_pochhammer(QTPoly::t(), 1) == QTPoly(1) - QTPoly::t(1));
}

TEST_CASE("rational function arithmetic and normalization") {
    // (1-q^3)/(1-q) is the polynomial 1+q+q^2
    QTRat r(QTPoly(1) - QTPoly::q(3), QTPoly(1) - QTPoly::q(1));
    CHECK(r.is_polynomial());
    CHECK(r.as_polynomial() == q_int(3));

    // ([2]_t/[4]_t) * [4]_t = [2]_t
    QTRat s = QTRat(t_int(2), t_int(4)) * QTRat(t_int(4));
    CHECK(s.is_polynomial());
    CHECK(s.as_polynomial() == t_int(2));

    // swap q<->t on q*t^2
    CHECK(QTRat(QTPoly::monomial(1, 1, 2)).swap_qt().as_polynomial() ==
          QTPoly::monomial(1, 2, 1));

    CHECK_THROWS(QTRat(QTPoly(1), QTPoly()));
    QTRat np(QTPoly(1) + QTPoly::q(1), QTPoly(1) - QTPoly::t(1));
    CHECK(!np.is_polynomial());
    CHECK_THROWS(np.as_polynomial());
}

TEST_CASE("QTRat equality agrees with cross-multiplication") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        QTRat a = random_rat(rng);
        QTRat b = random_rat(rng);
        bool eq = (a == b);
        bool cross = (a.num() * b.den() == b.num() * a.den());
        CHECK(eq == cross);
        // reflexivity under a random common scaling
        QTPoly c;
        while (c.is_zero()) c = random_poly(rng);
        QTRat scaled(a.num() * c, a.den() * c);
        CHECK(scaled == a);
    }
}

TEST_CASE("QTRat substitution and poles") {
    QTRat r(QTPoly(1), QTPoly(1) - QTPoly::q(1));
    CHECK(r.subst_t0() == r);
    CHECK(r.subst_q0() == QTRat(1));
    QTRat pole(QTPoly(1), QTPoly::q(1));
    CHECK_THROWS(pole.subst_q0());
}

TEST_CASE("exact division detects remainders") {
    QTPoly a = q_int(4) * t_int(3);
    CHECK(*a.divided_by(q_int(4)) == t_int(3));
    CHECK(!(q_int(4) + QTPoly(1)).divided_by(q_int(4)).has_value());
}

TEST_CASE("gcd of structured polynomials") {
    QTPoly a = (QTPoly(1) - QTPoly::q(2)) * (QTPoly(1) - QTPoly::t(1));
    QTPoly b = (QTPoly(1) - QTPoly::q(1)) * (QTPoly(1) - QTPoly::t(1)) * QTPoly::t(2);
    QTPoly g = QTPoly::gcd(a, b);
    // gcd is associate to (1-q)(1-t)
    QTPoly expect = (QTPoly(1) - QTPoly::q(1)) * (QTPoly(1) - QTPoly::t(1));
    CHECK(g * expect.terms().back().coeff == expect * g.terms().back().coeff);
    CHECK(a.divided_by(g).has_value());
    CHECK(b.divided_by(g).has_value());
}

TEST_CASE("q-Vandermonde in t") {
    // [L+j-1 ch n-k-1]_t = sum_m t^{(m-n+k+j)(m-1)} [j ch n-k-m]_t [L-1 ch m-1]_t
    for (int j = 1; j <= 6; ++j)
        for (int nk = 1; nk <= 6; ++nk)
            for (int L = 1; L <= 6; ++L) {
                QTPoly lhs = t_binomial(L + j - 1, nk - 1);
                QTPoly rhs;
                for (int m = 1; m <= nk; ++m) {
                    if (nk - m > j) continue;  // t-binomial vanishes
                    int e = (m - nk + j) * (m - 1);
                    REQUIRE(e >= 0);
                    rhs += QTPoly::t(e) * t_binomial(j, nk - m) * t_binomial(L - 1, m - 1);
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("canonical printing") {
    QTPoly p = QTPoly(1) + QTPoly::q(1) + QTPoly::monomial(1, 1, 2);
    CHECK(p.str() == "1 + q + q*t^2");
    CHECK((QTPoly(1) - QTPoly::monomial(2, 3, 0)).str() == "1 - 2*q^3");
    CHECK(QTPoly().str() == "0");
    CHECK(QTPoly::monomial(Rational(1, 2), 1, 0).str() == "1/2*q");
}
