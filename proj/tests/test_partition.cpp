#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "charstack/partition.hpp"

using namespace charstack;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// brute-force LR oracle through S_n character inner products
Int lr_oracle(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    Rational acc(0);
    for (const Partition& r1 : partitions_of(lambda.size()))
        for (const Partition& r2 : partitions_of(mu.size())) {
            Int c1 = sym_character(lambda, r1);
            if (c1 == 0) continue;
            Int c2 = sym_character(mu, r2);
            if (c2 == 0) continue;
            Partition joined = r1.merged(r2);
            Int c3 = sym_character(nu, joined);
            if (c3 == 0) continue;
            acc += Rational(c1 * c2 * c3, r1.z_stat() * r2.z_stat());
        }
    CHECK(boost::multiprecision::denominator(acc) == 1);
    return boost::multiprecision::numerator(acc);
}

} // namespace

TEST_CASE("conjugation") {
    CHECK(P({2, 1}).conjugate() == P({2, 1}));
    CHECK(P({3}).conjugate() == P({1, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (int n = 0; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n)) {
            CHECK(lam.conjugate().conjugate() == lam);
            CHECK(lam.conjugate().size() == lam.size());
        }
}

TEST_CASE("cell statistics") {
    auto cs1 = P({1}).cell_stats();
    REQUIRE(cs1.size() == 1);
    CHECK(cs1[0].arm == 0);
    CHECK(cs1[0].leg == 0);
    CHECK(cs1[0].hook == 1);

    auto cs = P({2, 1}).cell_stats();
    std::multiset<std::pair<int, int>> al;
    for (const auto& c : cs) al.insert({c.arm, c.leg});
    CHECK(al == std::multiset<std::pair<int, int>>{{1, 1}, {0, 0}, {0, 0}});

    auto cs3 = P({3}).cell_stats();
    std::multiset<std::pair<int, int>> al3;
    for (const auto& c : cs3) al3.insert({c.arm, c.leg});
    CHECK(al3 == std::multiset<std::pair<int, int>>{{2, 0}, {1, 0}, {0, 0}});

    for (int n = 1; n <= 8; ++n) {
        int hooksum = 0;
        for (const auto& c : row_partition(n).cell_stats()) hooksum += c.hook;
        CHECK(hooksum == n * (n + 1) / 2);
    }
}

TEST_CASE("centralizer orders") {
    CHECK(Partition().z_stat() == 1);
    CHECK(P({1, 1}).z_stat() == 2);
    for (int n = 1; n <= 6; ++n) CHECK(row_partition(n).z_stat() == n);
    // sum over classes of n!/z_lambda = n!
    for (int n = 1; n <= 8; ++n) {
        Rational acc(0);
        for (const Partition& lam : partitions_of(n))
            acc += Rational(factorial(n), lam.z_stat());
        CHECK(acc == Rational(factorial(n)));
    }
}

TEST_CASE("n statistic") {
    CHECK(row_partition(5).n_stat() == 0);
    CHECK(P({1, 1}).n_stat() == 1);
    CHECK(P({2, 2}).n_stat() == 2);
    // <lambda,lambda> = 2 n(lambda) + |lambda| with <a,b> = sum a'_i b'_i
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const Partition c = lam.conjugate();
            int ip = 0;
            for (int p : c.parts()) ip += p * p;
            CHECK(ip == 2 * lam.n_stat() + lam.size());
        }
}

TEST_CASE("hook polynomials") {
    RatFun t = RatFun::variable("t");
    CHECK(P({1}).hook_polynomial("t") == RatFun(1) - t);
    RatFun expect = (RatFun(1) - t) * (RatFun(1) - t * t);
    CHECK(P({2}).hook_polynomial("t") == expect);
    CHECK(P({1, 1}).hook_polynomial("t") == expect);
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(lam.hook_polynomial("t") == lam.conjugate().hook_polynomial("t"));
}

TEST_CASE("Littlewood-Richardson basics") {
    CHECK(lr_coefficient(P({2}), P({1}), P({1})) == 1);
    CHECK(lr_coefficient(P({1, 1}), P({1}), P({1})) == 1);
    CHECK(lr_coefficient(P({3}), P({1}), P({1})) == 0); // size mismatch
    CHECK(lr_coefficient(P({2, 1}), P({2}), P({1})) == 1);
    CHECK(lr_coefficient(P({2, 2, 1, 1}), P({2, 1}), P({2, 1})) == 1);
    CHECK(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
}

TEST_CASE("Littlewood-Richardson against the character oracle") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& nu : partitions_of(n))
            for (int a = 1; a < n; ++a)
                for (const Partition& lam : partitions_of(a))
                    for (const Partition& mu : partitions_of(n - a)) {
                        Int direct = lr_coefficient(nu, lam, mu);
                        CHECK(direct == lr_oracle(nu, lam, mu));
                        CHECK(direct == lr_coefficient(nu, mu, lam));
                        CHECK(direct >= 0);
                    }
}

TEST_CASE("Murnaghan-Nakayama sanity") {
    // chi^{(n)} is trivial, chi^{(1^n)} is sign
    for (int n = 1; n <= 6; ++n)
        for (const Partition& rho : partitions_of(n)) {
            CHECK(sym_character(row_partition(n), rho) == 1);
            int sgn = ((n - rho.length()) % 2 == 0) ? 1 : -1;
            CHECK(sym_character(column_partition(n), rho) == sgn);
        }
    // dimension: chi^lambda(1^n) via hook length formula
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n)) {
            Int hooks = 1;
            for (const auto& c : lam.cell_stats()) hooks *= c.hook;
            CHECK(sym_character(lam, column_partition(n)) == factorial(n) / hooks);
        }
}

TEST_CASE("partition enumeration is lexicographic and complete") {
    const auto& p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P({1, 1, 1, 1}));
    CHECK(p4[4] == P({4}));
    for (size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i] < p4[i + 1]);
    CHECK(partitions_of(8).size() == 22);
}
