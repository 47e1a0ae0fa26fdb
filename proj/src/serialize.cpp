#include "charstack/serialize.hpp"

namespace charstack {

json ratfun_to_json(const RatFun& f) {
    auto [n, d] = f.integer_form();
    auto poly = [](const LaurentPoly& p) {
        json terms = json::array();
        for (const auto& [e, c] : p.terms()) {
            json t = json::array();
            t.push_back(e);
            t.push_back(to_string(boost::multiprecision::numerator(c)));
            terms.push_back(t);
        }
        return terms;
    };
    std::vector<std::string> vars = n.vars();
    for (const auto& v : d.vars())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    LaurentPoly nu = n, du = d;
    if (!vars.empty()) {
        nu = unify_to(n, vars);
        du = unify_to(d, vars);
    }
    json out;
    out["vars"] = vars;
    out["numerator"] = poly(nu);
    out["denominator"] = poly(du);
    return out;
}

RatFun ratfun_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    auto poly = [&vars](const json& terms) {
        LaurentPoly p;
        for (const auto& t : terms) {
            std::vector<int> e = t.at(0).get<std::vector<int>>();
            Rational c{Int(t.at(1).get<std::string>())};
            p += LaurentPoly::monomial(vars, e, c);
        }
        return p;
    };
    return RatFun(poly(j.at("numerator")), poly(j.at("denominator")));
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

json multipartition_to_json(const MultiPartition& mp) {
    json out = json::array();
    for (const auto& p : mp) out.push_back(partition_to_json(p));
    return out;
}

MultiPartition multipartition_from_json(const json& j) {
    MultiPartition mp;
    for (const auto& e : j) mp.push_back(partition_from_json(e));
    return mp;
}

json dimvec_to_json(const StarQuiverData& data, const DimVec& v) {
    json out = json::object();
    for (int i = 0; i < data.nvert(); ++i) out[data.vertex_name(i)] = v[i];
    return out;
}

CharStackConfig config_from_json(const json& j) {
    CharStackConfig cfg;
    cfg.genus = j.at("genus").get<int>();
    const json& g = j.at("eigen_group");
    int rank = g.at("rank").get<int>();
    std::vector<std::vector<Int>> rels;
    for (const auto& r : g.at("relations")) {
        std::vector<Int> row;
        for (const auto& x : r) row.emplace_back(x.get<long long>());
        rels.push_back(std::move(row));
    }
    cfg.group = EigenGroup(rank, std::move(rels));
    for (const auto& p : j.at("punctures")) {
        PunctureSpec spec;
        for (const auto& ev : p.at("eigenvalues")) {
            std::vector<Int> exp;
            for (const auto& x : ev.at("exp")) exp.emplace_back(x.get<long long>());
            spec.eigenvalues.emplace_back(std::move(exp), ev.at("mult").get<int>());
        }
        cfg.punctures.push_back(std::move(spec));
    }
    if (j.contains("options") && j.at("options").contains("allow_empty"))
        cfg.allow_empty = j.at("options").at("allow_empty").get<bool>();
    return cfg;
}

json config_to_json(const CharStackConfig& config) {
    json out;
    out["genus"] = config.genus;
    json g;
    g["rank"] = config.group.rank();
    json rels = json::array();
    for (const auto& r : config.group.relations()) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.convert_to<long long>());
        rels.push_back(row);
    }
    g["relations"] = rels;
    out["eigen_group"] = g;
    json punct = json::array();
    for (const auto& p : config.punctures) {
        json eigs = json::array();
        for (const auto& [exp, mult] : p.eigenvalues) {
            json ev;
            json e = json::array();
            for (const auto& x : exp) e.push_back(x.convert_to<long long>());
            ev["exp"] = e;
            ev["mult"] = mult;
            eigs.push_back(ev);
        }
        json pj;
        pj["eigenvalues"] = eigs;
        punct.push_back(pj);
    }
    out["punctures"] = punct;
    if (config.allow_empty) out["options"] = json{{"allow_empty", true}};
    return out;
}

} // namespace charstack
