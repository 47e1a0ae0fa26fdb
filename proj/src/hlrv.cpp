#include "charstack/hlrv.hpp"

#include <mutex>

namespace charstack {

namespace {

RatFun zvar(int e = 1) { return RatFun::variable("z", e); }
RatFun wvar(int e = 1) { return RatFun::variable("w", e); }

} // namespace

RatFun hook_function(const Partition& lambda, int genus) {
    if (lambda.empty()) throw std::invalid_argument("hook_function: empty partition");
    RatFun out(1);
    for (const auto& cs : lambda.cell_stats()) {
        RatFun numf = (zvar(2 * cs.arm + 1) - wvar(2 * cs.leg + 1)).pow(2 * genus);
        RatFun den1 = zvar(2 * cs.arm + 2) - wvar(2 * cs.leg);
        RatFun den2 = zvar(2 * cs.arm) - wvar(2 * cs.leg + 2);
        out *= numf / (den1 * den2);
    }
    return out;
}

GradedSeries<SymFunc> omega_series(const KernelParams& params) {
    if (params.punctures < 1) throw std::invalid_argument("omega_series: k >= 1 required");
    const int k = params.punctures;
    const int n = params.degree_cap;
    GradedSeries<SymFunc> omega({n}, SymFunc::zero(k, Basis::s),
                                [](const SymFunc& c, int d) { return c.adams(d); });
    omega.add({0}, one_like(omega.zero_coef()));
    RatFun z2 = RatFun::variable("z", 2);
    RatFun w2 = RatFun::variable("w", 2);
    for (int m = 1; m <= n; ++m) {
        SymFunc coeff = SymFunc::zero(k, Basis::s);
        for (const Partition& lambda : partitions_of(m)) {
            SymFunc single = modified_macdonald(lambda, z2, w2); // 1 alphabet, s basis
            RatFun hook = hook_function(lambda, params.genus);
            // tensor product over the k alphabets
            SymFunc term = SymFunc::constant(k, hook, Basis::s);
            for (int a = 0; a < k; ++a) {
                SymFunc next(k, Basis::s);
                for (const auto& [key, c] : term.terms())
                    for (const auto& [skey, sc] : single.terms()) {
                        SymFunc::Key nk = key;
                        nk[a] = skey[0];
                        next.add_term(nk, c * sc);
                    }
                term = std::move(next);
            }
            coeff += term;
        }
        omega.add({m}, coeff);
    }
    return omega;
}

RatFun hlrv_H(const MultiPartition& mu, int genus) {
    if (mu.empty()) throw std::invalid_argument("hlrv_H: empty multipartition");
    int n = mu[0].size();
    for (const auto& p : mu)
        if (p.size() != n)
            throw std::invalid_argument("hlrv_H: components must have equal size");
    if (n == 0) return RatFun(1);

    static std::map<std::pair<std::vector<std::vector<int>>, int>, RatFun> cache;
    static std::mutex mtx;
    std::vector<std::vector<int>> key;
    for (const auto& p : mu) key.push_back(p.parts());
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({key, genus});
        if (it != cache.end()) return it->second;
    }

    KernelParams params;
    params.genus = genus;
    params.punctures = static_cast<int>(mu.size());
    params.degree_cap = n;
    GradedSeries<SymFunc> omega = omega_series(params);
    GradedSeries<SymFunc> logden = plelog(omega);
    SymFunc vn = logden.coefficient({n});
    // pairing against h_mu = coefficient of m_mu
    SymFunc vm = vn.converted(Basis::m);
    RatFun paired = vm.coefficient(mu);
    RatFun result = (RatFun::variable("z", 2) - RatFun(1)) *
                    (RatFun(1) - RatFun::variable("w", 2)) * paired;
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::make_pair(key, genus), result);
    return result;
}

RatFun specialize_E(const RatFun& H) {
    std::map<std::string, RatFun> sub{
        {"z", RatFun::variable("s")},
        {"w", RatFun::variable("s", -1)},
    };
    RatFun in_s = H.substituted(sub);
    if (!in_s.even_in("s")) throw std::domain_error("not rational in q");
    return in_s.halved_var("s", "q");
}

RatFun specialize_mixed(const RatFun& H) {
    std::map<std::string, RatFun> sub{
        {"z", RatFun::variable("t") * RatFun::variable("s")},
        {"w", RatFun::variable("s", -1)},
    };
    return H.substituted(sub);
}

} // namespace charstack
