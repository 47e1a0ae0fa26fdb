#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charstack/hlrv.hpp"

#include <algorithm>
#include <random>

using namespace charstack;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
RatFun Z(int e = 1) { return RatFun::variable("z", e); }
RatFun W(int e = 1) { return RatFun::variable("w", e); }

RatFun at_sqrt_q(const RatFun& H) { return specialize_E(H); }

} // namespace

TEST_CASE("hook function small cases") {
    RatFun d0 = (Z(2) - RatFun(1)) * (RatFun(1) - W(2));
    CHECK(hook_function(P({1}), 0) == RatFun(1) / d0);
    CHECK(hook_function(P({1}), 1) == (Z() - W()).pow(2) / d0);
    RatFun d2 = (Z(4) - RatFun(1)) * (Z(2) - W(2)) * d0;
    CHECK(hook_function(P({2}), 0) == RatFun(1) / d2);
    CHECK_THROWS_AS(hook_function(Partition(), 0), std::invalid_argument);
}

TEST_CASE("omega series low order coefficients") {
    KernelParams prm{0, 1, 1};
    auto omega = omega_series(prm);
    CHECK(omega.coefficient({0}) == one_like(omega.zero_coef()));
    SymFunc c1 = omega.coefficient({1}).converted(Basis::h);
    RatFun d0 = (Z(2) - RatFun(1)) * (RatFun(1) - W(2));
    CHECK(c1.coefficient({P({1})}) == RatFun(1) / d0);

    KernelParams prm0{0, 1, 0};
    auto trivial = omega_series(prm0);
    CHECK(trivial.coefficient({0}) == one_like(trivial.zero_coef()));

    KernelParams prm1{1, 1, 1};
    auto omega1 = omega_series(prm1);
    SymFunc c11 = omega1.coefficient({1}).converted(Basis::h);
    CHECK(c11.coefficient({P({1})}) == (Z() - W()).pow(2) / d0);
}

TEST_CASE("HH examples pinned by the theory") {
    // HH_{((1))} = (z-w)^{2g}
    for (int g = 0; g <= 3; ++g)
        CHECK(hlrv_H({P({1})}, g) == (Z() - W()).pow(2 * g));

    // four punctures, n = 1, genus 0
    MultiPartition ones{P({1}), P({1}), P({1}), P({1})};
    CHECK(hlrv_H(ones, 0) == RatFun(1));

    // the 4-punctured P^1 kernel value
    MultiPartition mu2{P({1, 1}), P({1, 1}), P({1, 1}), P({1, 1})};
    CHECK(hlrv_H(mu2, 0) == Z(2) + W(2) + RatFun(4));

    // three regular semisimple punctures at genus 0: rigid case
    MultiPartition mu3{P({1, 1}), P({1, 1}), P({1, 1})};
    CHECK(hlrv_H(mu3, 0) == RatFun(1));

    // one central puncture at genus 1: forced by the commuting-pair count
    RatFun q = RatFun::variable("q");
    CHECK(at_sqrt_q(hlrv_H({P({2})}, 1)) == (q - RatFun(1)).pow(2) / q);

    CHECK_THROWS_AS(hlrv_H({P({2}), P({1})}, 0), std::invalid_argument);
}

TEST_CASE("HH is symmetric in the puncture components") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pick(0, 1);
    const std::vector<Partition> opts{P({2}), P({1, 1})};
    for (int iter = 0; iter < 3; ++iter) {
        MultiPartition mu{opts[pick(rng)], opts[pick(rng)], opts[pick(rng)]};
        MultiPartition per = mu;
        std::next_permutation(per.begin(), per.end(),
                              [](const Partition& a, const Partition& b) { return a < b; });
        CHECK(hlrv_H(mu, 1) == hlrv_H(per, 1));
    }
}

TEST_CASE("HH is stable under enlarging the truncation cap") {
    // recompute ((1,1)) through a cap-3 kernel and compare with the cached
    // cap-2 value: Plelog coefficients below the cap must not move
    MultiPartition mu{P({1, 1}), P({1, 1})};
    RatFun direct = hlrv_H(mu, 1);
    KernelParams prm{1, 2, 3};
    auto omega = omega_series(prm);
    auto lg = plelog(omega);
    SymFunc v2 = lg.coefficient({2}).converted(Basis::m);
    RatFun over = (Z(2) - RatFun(1)) * (RatFun(1) - W(2)) * v2.coefficient(mu);
    CHECK(direct == over);
}

TEST_CASE("specializations") {
    RatFun q = RatFun::variable("q"), t = RatFun::variable("t");
    CHECK(specialize_E(Z(2) + W(2) + RatFun(4)) == q + RatFun(1) / q + RatFun(4));
    CHECK(specialize_E((Z() - W()).pow(2)) == q - RatFun(2) + RatFun(1) / q);
    CHECK(specialize_E(RatFun(1)) == RatFun(1));
    CHECK_THROWS_WITH_AS(specialize_E(Z()), "not rational in q", std::domain_error);

    RatFun s = RatFun::variable("s");
    CHECK(specialize_mixed(Z(2) + W(2) + RatFun(4)) ==
          s.pow(2) * t.pow(2) + s.pow(-2) + RatFun(4));
    CHECK(specialize_mixed(RatFun(1)) == RatFun(1));
    CHECK(specialize_mixed((Z() - W()).pow(2)) == (t * s - RatFun(1) / s).pow(2));
}

TEST_CASE("E specializations of HH are Laurent in q with integer content") {
    // q * HH(sqrt q, 1/sqrt q) for generic-capable inputs is an integer
    // Laurent polynomial in q; exercised for n <= 2, k <= 4, g <= 1
    RatFun q = RatFun::variable("q");
    for (int g = 0; g <= 1; ++g)
        for (int k = 1; k <= 4; ++k) {
            for (int n = 1; n <= 2; ++n) {
                // regular semisimple multiplicities (1^n) per puncture
                MultiPartition mu(k, column_partition(n));
                if (g == 0 && k * n <= 2) continue; // degenerate surfaces
                if (g == 0 && n == 2 && k == 2) continue;
                RatFun val = q * at_sqrt_q(hlrv_H(mu, g));
                CHECK(val.den().is_constant());
                for (const auto& [e, c] : val.num().terms())
                    CHECK(boost::multiprecision::denominator(c) == 1);
            }
        }
}
