#include "charstack/macdonald.hpp"

#include <algorithm>
#include <mutex>

namespace charstack {

namespace {

RatFun qv() { return RatFun::variable("q"); }
RatFun tv() { return RatFun::variable("t"); }

RatFun qt_weight(const Partition& lambda) {
    RatFun w{Rational(lambda.z_stat())};
    for (int part : lambda.parts()) {
        RatFun numc = RatFun(1) - RatFun::variable("q", part);
        RatFun denc = RatFun(1) - RatFun::variable("t", part);
        w *= numc / denc;
    }
    return w;
}

// pairing of single-alphabet p-basis functions
RatFun qt_pairing_p(const SymFunc& fp, const SymFunc& gp) {
    RatFun acc;
    for (const auto& [key, c] : fp.terms()) {
        RatFun other = gp.coefficient(key);
        if (other.is_zero()) continue;
        acc += c * other * qt_weight(key[0]);
    }
    return acc;
}

std::map<Partition, SymFunc> gram_schmidt_with_order(const std::vector<Partition>& order) {
    std::map<Partition, SymFunc> P;      // m-basis forms
    std::map<Partition, SymFunc> P_p;    // same, p-basis
    std::map<Partition, RatFun> norms;
    for (const Partition& mu : order) {
        SymFunc cur = SymFunc::basis_element(1, 0, Basis::m, mu);
        SymFunc cur_p = cur.converted(Basis::p);
        for (const auto& [nu, Pv] : P) {
            RatFun proj = qt_pairing_p(cur_p, P_p.at(nu));
            if (proj.is_zero()) continue;
            RatFun coef = proj / norms.at(nu);
            cur -= Pv.scaled(coef);
            cur_p -= P_p.at(nu).scaled(coef);
        }
        norms[mu] = qt_pairing_p(cur_p, cur_p);
        P[mu] = cur;
        P_p[mu] = cur_p;
    }
    return P;
}

std::vector<Partition> lex_order(int n) {
    return partitions_of(n); // increasing lex refines dominance upward
}

std::vector<Partition> length_order(int n) {
    std::vector<Partition> v = partitions_of(n);
    std::stable_sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) {
        return a.length() > b.length();
    });
    return v;
}

} // namespace

RatFun qt_pairing(const SymFunc& f, const SymFunc& g) {
    if (f.alphabets() != 1 || g.alphabets() != 1)
        throw std::invalid_argument("qt_pairing: single alphabet only");
    return qt_pairing_p(f.converted(Basis::p), g.converted(Basis::p));
}

const std::map<Partition, SymFunc>& qt_gram_schmidt(int n) {
    static std::map<int, std::map<Partition, SymFunc>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto P = gram_schmidt_with_order(lex_order(n));
    return cache.emplace(n, std::move(P)).first->second;
}

std::map<Partition, SymFunc> qt_gram_schmidt_alt_order(int n) {
    return gram_schmidt_with_order(length_order(n));
}

const SymFunc& modified_macdonald_generic(const Partition& mu) {
    static std::map<Partition, SymFunc> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;

    int n = mu.size();
    SymFunc P = qt_gram_schmidt(n).at(mu);
    // integral form J_mu = prod_{s in mu} (1 - q^{a(s)} t^{l(s)+1}) P_mu
    RatFun c(1);
    for (const auto& cs : mu.cell_stats()) {
        RatFun term = RatFun(1) -
                      RatFun::variable("q", cs.arm) * RatFun::variable("t", cs.leg + 1);
        c *= term;
    }
    SymFunc J = P.scaled(c).converted(Basis::p);
    // H_mu = J_mu[x/(1-t)]: p_k -> p_k / (1 - t^k)
    SymFunc H = J.diag_pleth_transform([](int k) {
        return RatFun(1) / (RatFun(1) - RatFun::variable("t", k));
    });
    // H-tilde_mu = t^{n(mu)} H_mu(q, 1/t)
    std::map<std::string, RatFun> inv_t{{"t", RatFun::variable("t", -1)}};
    SymFunc Ht = H.map_coefficients([&](const RatFun& f) {
        return f.substituted(inv_t) * RatFun::variable("t", mu.n_stat());
    });
    SymFunc result = Ht.converted(Basis::s);
    return cache.emplace(mu, std::move(result)).first->second;
}

SymFunc modified_macdonald(const Partition& mu, const RatFun& q_arg, const RatFun& t_arg) {
    const SymFunc& generic = modified_macdonald_generic(mu);
    std::map<std::string, RatFun> sub{{"q", q_arg}, {"t", t_arg}};
    return generic.map_coefficients([&](const RatFun& f) { return f.substituted(sub); });
}

} // namespace charstack
