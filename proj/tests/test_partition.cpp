#include "doctest.h"

#include "deltasq/partition.hpp"
#include "deltasq/q_analogues.hpp"

using namespace deltasq;

TEST_CASE("enumerate_partitions") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    CHECK(enumerate_partitions(5).size() == 7);
    // canonical order is strictly increasing under compare()
    auto p6 = enumerate_partitions(6);
    for (size_t i = 1; i < p6.size(); ++i) CHECK(Partition::compare(p6[i - 1], p6[i]) < 0);
}

TEST_CASE("cell_stats") {
    Partition one({1});
    CellStats s = one.cell_stats({0, 0});
    CHECK(s.arm == 0);
    CHECK(s.leg == 0);
    CHECK(s.coarm == 0);
    CHECK(s.coleg == 0);

    Partition mu({2, 1});
    s = mu.cell_stats({0, 0});
    CHECK(s.arm == 1);
    CHECK(s.leg == 1);

    Partition row({3});
    s = row.cell_stats({2, 0});
    CHECK(s.arm == 0);
    CHECK(s.leg == 0);
    CHECK(s.coarm == 2);
    CHECK(s.coleg == 0);

    CHECK_THROWS(mu.cell_stats({1, 1}));
}

TEST_CASE("partition scalars") {
    for (int n = 1; n <= 6; ++n) {
        Partition row(std::vector<int>(1, n));
        CHECK(B_mu(row) == q_int(n));
        CHECK(T_mu(row) == QTPoly::q(static_cast<int>(int_binomial(n, 2))));
        // the definition over mu/(1) gives prod_{i=1}^{n-1} (1-q^i);
        // the paper's display for Pi_(n) is off by one from this
        QTPoly pi(1);
        for (int i = 1; i <= n - 1; ++i) pi *= QTPoly(1) - QTPoly::q(i);
        CHECK(Pi_mu(row) == pi);
        // w_(n) = prod_{i=1}^n (1-q^i) * prod_{i=0}^{n-1} (q^i - t)
        QTPoly w(1);
        for (int i = 1; i <= n; ++i) w *= QTPoly(1) - QTPoly::q(i);
        for (int i = 0; i <= n - 1; ++i) w *= QTPoly::q(i) - QTPoly::t();
        CHECK(w_mu(row) == w);
    }
    CHECK(B_mu(Partition({2, 1})) == QTPoly(1) + QTPoly::q() + QTPoly::t());
    CHECK(w_mu(Partition({1})) == M_qt());
    CHECK(Pi_mu(Partition()) == QTPoly(1));
    CHECK(Pi_mu(Partition({1})) == QTPoly(1));
}

TEST_CASE("scalar invariants at small sizes") {
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK(static_cast<int>(mu.cells().size()) == n);
            CHECK(B_mu(mu).eval(1, 1) == Rational(n));
            // T via coarm/coleg matches the product over cells, and conjugation swaps q,t
            CHECK(T_mu(mu.conjugate()) == T_mu(mu).swap_qt());
            CHECK(w_mu(mu.conjugate()) == w_mu(mu).swap_qt());
        }
    }
}

TEST_CASE("appendix stats") {
    CHECK(appendix_stats(Partition({5})).n_stat == 0);
    CHECK(appendix_stats(Partition({2, 1})).n_stat == 1);
    auto st = appendix_stats(Partition({1, 1}));
    CHECK(st.multiplicities[1] == 2);
    CHECK(st.g_stat == -1);
}

TEST_CASE("covers and contained") {
    auto up = covers(Partition({1}), 1);
    REQUIRE(up.size() == 2);
    CHECK(up[0] == Partition({2}));
    CHECK(up[1] == Partition({1, 1}));

    auto down = contained(Partition({2, 1}), 1);
    REQUIRE(down.size() == 2);
    CHECK(down[0] == Partition({2}));
    CHECK(down[1] == Partition({1, 1}));

    auto two = covers(Partition(), 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Partition({2}));
    CHECK(two[1] == Partition({1, 1}));

    // covers/contained are mutually inverse
    for (int n = 0; n <= 5; ++n)
        for (const Partition& nu : enumerate_partitions(n))
            for (int k = 1; k <= 2; ++k)
                for (const Partition& mu : covers(nu, k)) {
                    auto back = contained(mu, k);
                    CHECK(std::count(back.begin(), back.end(), nu) == 1);
                }
}

TEST_CASE("conjugate") {
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    for (const Partition& mu : enumerate_partitions(6)) CHECK(mu.conjugate().conjugate() == mu);
}

TEST_CASE("z_lambda") {
    CHECK(z_lambda(Partition()) == 1);
    CHECK(z_lambda(Partition({1, 1, 1})) == 6);
    CHECK(z_lambda(Partition({2, 1})) == 2);
    CHECK(z_lambda(Partition({2, 2})) == 8);
}
