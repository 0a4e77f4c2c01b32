#include "doctest.h"

#include "deltasq/conjectures.hpp"
#include "deltasq/q_analogues.hpp"

using namespace deltasq;

namespace {

bool all_equal(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.equal) {
            MESSAGE(r.statement, " ", r.params, ": ", r.witness);
            return false;
        }
    return true;
}

}  // namespace

TEST_CASE("F base cases and degenerate parameters") {
    CHECK(f_recursive(0, 0, 0, 0, 0).is_one());
    CHECK(f_recursive(0, 1, 0, 0, 0).is_zero());
    CHECK(f_recursive(2, 0, 0, 0, 0).is_zero());
    CHECK(f_recursive(1, 1, 0, 0, 0).is_one());
    // F_{n,n;p}^{(d,l)} with l > 0 vanishes
    CHECK(f_recursive(3, 3, 1, 1, 1).is_zero());
    CHECK(f_recursive(3, 3, 0, 0, 0) == QTPoly::q(3));
    // the stated closed form at k = n
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= 2; ++p)
            for (int d = 0; d <= n + p; ++d) {
                QTPoly expect = QTPoly::q(static_cast<int>(int_binomial(n - d, 2))) *
                                q_binomial(n, n - d) * q_binomial(n + p - 1, p);
                CHECK(f_recursive(n, n, p, d, 0) == expect);
                CHECK(f_direct(n, n, p, d, 0) == expect);
            }
}

TEST_CASE("F triple agreement on a small grid") {
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p <= 1; ++p)
            for (int l = 0; l <= n; ++l)
                for (int d = 0; d <= n + p; ++d)
                    for (int k = 0; k <= n - l; ++k) {
                        QTPoly a = f_direct(n, k, p, d, l);
                        QTPoly b = f_recursive(n, k, p, d, l);
                        CHECK(a == b);
                        if (k >= 1 && n + p > d) CHECK(a == f_via_nabla_enk(n, k, p, d, l));
                    }
}

TEST_CASE("S family") {
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p <= 1; ++p)
            for (int l = 0; l < n; ++l)
                for (int d = 0; d <= n; ++d)
                    for (int k = 1; k <= n - l; ++k)
                        CHECK(s_recursive(n, k, p, d, l) == s_from_f(n, k, p, d, l));
    CHECK(s_recursive(3, 3, 0, 0, 0) == f_recursive(3, 3, 0, 0, 0));
}

TEST_CASE("named symmetric functions") {
    // (0,n,0) is nabla e_n
    for (int n = 1; n <= 4; ++n) CHECK(sf_gen_delta(0, n, 0) == nabla(elementary(n)));
    // (0,n,n-1) of the square side is [n]_q e_n
    for (int n = 1; n <= 4; ++n) {
        SymFunc expect = elementary(n);
        expect.scale(QTRat(q_int(n)));
        CHECK(sf_gen_delta_square(0, n, n - 1) == expect);
    }
}

TEST_CASE("statement registry") {
    CHECK(find_statement("gen-delta") != nullptr);
    CHECK(find_statement("unknown-id") == nullptr);
    CHECK(statement_ids().size() == 10);
}

TEST_CASE("headline conjecture checks at small size") {
    StatementParams P;
    P.m = 0;
    P.n = 3;
    CHECK(all_equal(verify_gen_delta(P)));
    CHECK(all_equal(verify_gen_delta_square(P)));
    P.m = 1;
    P.n = 2;
    CHECK(all_equal(verify_gen_delta(P)));
    CHECK(all_equal(verify_gen_delta_square(P)));
}

TEST_CASE("schroeder three-way at small size") {
    StatementParams P;
    P.p = 1;
    P.n = 2;
    CHECK(all_equal(verify_schroeder(P)));
    P.p = 0;
    P.n = 3;
    CHECK(all_equal(verify_schroeder(P)));
}

TEST_CASE("f-triple and s-sum runners") {
    StatementParams P;
    P.n = 3;
    P.p = 1;
    CHECK(all_equal(verify_f_triple(P)));
    CHECK(all_equal(verify_s_sum(P)));
}

TEST_CASE("main theorem dichotomy") {
    StatementParams P;
    P.n = 4;
    P.m = 1;
    CHECK(all_equal(verify_main_thm(P)));
}

TEST_CASE("involution sums") {
    StatementParams P;
    P.m = 1;
    P.n = 3;
    CHECK(all_equal(verify_invo_sums(P)));
}

TEST_CASE("appendix q=0 identities") {
    StatementParams P;
    P.n = 3;
    CHECK(all_equal(verify_appendix_q0(P)));
}

TEST_CASE("q=0 and t=0 specializations") {
    StatementParams P;
    P.n = 4;
    CHECK(all_equal(verify_q0_delta_square(P)));
    P.m = 2;
    P.n = 3;
    CHECK(all_equal(verify_t0_k0(P)));
}
