#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charstack/macdonald.hpp"

#include <random>

using namespace charstack;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

SymFunc elt(Basis b, const Partition& lam) {
    return SymFunc::basis_element(1, 0, b, lam);
}

RatFun coeff_of(const SymFunc& f, Basis b, const Partition& lam) {
    return f.converted(b).coefficient({lam});
}

// brute-force Hall pairing: expand both to p and apply <p,p> = z delta
RatFun hall_oracle(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = f.converted(Basis::p);
    SymFunc gp = g.converted(Basis::p);
    RatFun acc;
    for (const auto& [key, c] : fp.terms()) {
        RatFun o = gp.coefficient(key);
        if (o.is_zero()) continue;
        Rational z = 1;
        for (const auto& part : key) z *= Rational(part.z_stat());
        acc += c * o * RatFun(Rational(z));
    }
    return acc;
}

SymFunc random_symfunc(std::mt19937& rng, int k, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-3, 3), pick(0, 10);
    SymFunc f(k, Basis::m);
    for (int t = 0; t < 3; ++t) {
        SymFunc::Key key(k);
        for (int a = 0; a < k; ++a) {
            const auto& parts = partitions_of(deg(rng));
            key[a] = parts[pick(rng) % parts.size()];
        }
        int c = coef(rng);
        if (c == 0) c = 1;
        f.add_term(key, RatFun(Rational(c)));
    }
    return f;
}

} // namespace

TEST_CASE("basis conversion examples") {
    // p_2 = m_2
    CHECK(coeff_of(elt(Basis::p, P({2})), Basis::m, P({2})) == RatFun(1));
    CHECK(coeff_of(elt(Basis::p, P({2})), Basis::m, P({1, 1})) == RatFun());
    // p_1^2 = m_2 + 2 m_11
    SymFunc p11 = elt(Basis::p, P({1, 1}));
    CHECK(coeff_of(p11, Basis::m, P({2})) == RatFun(1));
    CHECK(coeff_of(p11, Basis::m, P({1, 1})) == RatFun(2));
    // h_2 = m_2 + m_11
    SymFunc h2 = elt(Basis::h, P({2}));
    CHECK(coeff_of(h2, Basis::m, P({2})) == RatFun(1));
    CHECK(coeff_of(h2, Basis::m, P({1, 1})) == RatFun(1));
    // s_2 = m_2 + m_11, s_11 = m_11
    CHECK(coeff_of(elt(Basis::s, P({2})), Basis::m, P({1, 1})) == RatFun(1));
    CHECK(coeff_of(elt(Basis::s, P({1, 1})), Basis::m, P({2})) == RatFun());
}

TEST_CASE("conversion round trips") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        SymFunc f = random_symfunc(rng, 1, 5);
        for (Basis b : {Basis::p, Basis::h, Basis::e, Basis::s})
            CHECK(f.converted(b).converted(Basis::m) == f);
    }
    // two alphabets
    for (int iter = 0; iter < 10; ++iter) {
        SymFunc f = random_symfunc(rng, 2, 3);
        CHECK(f.converted(Basis::s).converted(Basis::m) == f);
    }
}

TEST_CASE("unsupported basis tag") {
    CHECK_THROWS_AS(basis_from_char('x'), std::invalid_argument);
}

TEST_CASE("hall pairing") {
    CHECK(hall_pairing(elt(Basis::s, P({2})), elt(Basis::s, P({2}))) == RatFun(1));
    CHECK(hall_pairing(elt(Basis::s, P({2})), elt(Basis::s, P({1, 1}))) == RatFun());
    CHECK(hall_pairing(elt(Basis::p, P({1, 1})), elt(Basis::p, P({1, 1}))) == RatFun(2));
    CHECK(hall_pairing(elt(Basis::h, P({2})), elt(Basis::m, P({2}))) == RatFun(1));
    std::mt19937 rng(17);
    for (int iter = 0; iter < 12; ++iter) {
        SymFunc f = random_symfunc(rng, 1, 5);
        SymFunc g = random_symfunc(rng, 1, 5);
        CHECK(hall_pairing(f, g) == hall_oracle(f, g));
    }
    for (int iter = 0; iter < 6; ++iter) {
        SymFunc f = random_symfunc(rng, 2, 3);
        SymFunc g = random_symfunc(rng, 2, 3);
        CHECK(hall_pairing(f, g) == hall_oracle(f, g));
    }
    CHECK_THROWS_AS(hall_pairing(SymFunc(1), SymFunc(2)), std::invalid_argument);
}

TEST_CASE("bilinearity of the pairing") {
    std::mt19937 rng(29);
    SymFunc f = random_symfunc(rng, 1, 4);
    SymFunc g = random_symfunc(rng, 1, 4);
    SymFunc h = random_symfunc(rng, 1, 4);
    CHECK(hall_pairing(f + g, h) == hall_pairing(f, h) + hall_pairing(g, h));
}

TEST_CASE("Macdonald P: closed forms at low degree") {
    const auto& P1 = qt_gram_schmidt(1);
    CHECK(P1.at(P({1})) == elt(Basis::m, P({1})));
    const auto& P2 = qt_gram_schmidt(2);
    CHECK(P2.at(P({1, 1})) == elt(Basis::m, P({1, 1})));
    RatFun q = RatFun::variable("q"), t = RatFun::variable("t");
    RatFun c = (RatFun(1) + q) * (RatFun(1) - t) / (RatFun(1) - q * t);
    SymFunc expect = elt(Basis::m, P({2})) + elt(Basis::m, P({1, 1})).scaled(c);
    CHECK(P2.at(P({2})) == expect);
}

TEST_CASE("Macdonald P: triangular and orthogonal") {
    for (int n = 2; n <= 4; ++n) {
        const auto& Ps = qt_gram_schmidt(n);
        for (const auto& [mu, Pmu] : Ps) {
            CHECK(Pmu.coefficient({mu}) == RatFun(1));
            for (const auto& [lam, c] : Pmu.terms())
                CHECK(lam[0].dominated_by(mu));
            for (const auto& [nu, Pnu] : Ps)
                if (nu != mu) CHECK(qt_pairing(Pmu, Pnu) == RatFun());
        }
    }
}

TEST_CASE("Macdonald P: linear extension independence") {
    for (int n = 2; n <= 4; ++n) {
        const auto& a = qt_gram_schmidt(n);
        auto b = qt_gram_schmidt_alt_order(n);
        for (const auto& [mu, Pmu] : a) CHECK(b.at(mu) == Pmu);
    }
}

TEST_CASE("modified Macdonald closed forms") {
    RatFun q = RatFun::variable("q"), t = RatFun::variable("t");
    CHECK(modified_macdonald_generic(P({1})) == elt(Basis::s, P({1})));
    SymFunc h2 = elt(Basis::s, P({2})) + elt(Basis::s, P({1, 1})).scaled(q);
    CHECK(modified_macdonald_generic(P({2})) == h2);
    SymFunc h11 = elt(Basis::s, P({2})) + elt(Basis::s, P({1, 1})).scaled(t);
    CHECK(modified_macdonald_generic(P({1, 1})) == h11);
}

TEST_CASE("modified Macdonald invariants") {
    std::map<std::string, RatFun> swap_qt{{"q", RatFun::variable("t")},
                                          {"t", RatFun::variable("q")}};
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : partitions_of(n)) {
            const SymFunc& H = modified_macdonald_generic(mu);
            CHECK(H.coefficient({row_partition(n)}) == RatFun(1));
            // H_mu(q,t) = H_{mu'}(t,q)
            SymFunc other = modified_macdonald_generic(mu.conjugate())
                                .map_coefficients([&](const RatFun& f) {
                                    return f.substituted(swap_qt);
                                });
            CHECK(H == other);
        }
    // H_mu(x; 1, 1) = p_1^n
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            SymFunc at11 = modified_macdonald(mu, RatFun(1), RatFun(1));
            CHECK(at11.converted(Basis::p) ==
                  elt(Basis::p, column_partition(n)));
        }
}

TEST_CASE("argument substitution in modified Macdonald") {
    RatFun z2 = RatFun::variable("z", 2), w2 = RatFun::variable("w", 2);
    SymFunc H = modified_macdonald(P({2}), z2, w2);
    SymFunc expect = elt(Basis::s, P({2})) + elt(Basis::s, P({1, 1})).scaled(z2);
    CHECK(H == expect);
}

TEST_CASE("diagonal plethystic transform") {
    SymFunc p1 = elt(Basis::p, P({1}));
    CHECK(p1.diag_pleth_transform([](int) { return RatFun(1); }) == p1);
    RatFun t = RatFun::variable("t");
    SymFunc p2 = elt(Basis::p, P({2}));
    SymFunc got = p2.diag_pleth_transform(
        [&](int k) { return RatFun(1) / (RatFun(1) - RatFun::variable("t", k)); });
    CHECK(got == p2.scaled(RatFun(1) / (RatFun(1) - t * t)));
    // h_2 = (p_1^2 + p_2)/2 dies under c = 0
    SymFunc h2 = elt(Basis::h, P({2}));
    CHECK(h2.diag_pleth_transform([](int) { return RatFun(); }).is_zero());
}

TEST_CASE("adams on symmetric functions") {
    SymFunc p1 = elt(Basis::p, P({1}));
    CHECK(p1.adams(3) == elt(Basis::p, P({3})));
    std::mt19937 rng(31);
    SymFunc f = random_symfunc(rng, 1, 3);
    CHECK(f.adams(2).adams(3) == f.adams(6));
}
