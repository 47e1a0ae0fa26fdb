#include "charstack/ffcount.hpp"
#include "charstack/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace charstack;

namespace {

struct CommonOpts {
    std::string input;
    std::string qlist;
    std::string emit = "json";
    int threads = 0;
    bool allow_empty = false;
};

json load_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

long powmod_l(long base, long exp, long q) {
    base %= q;
    if (base < 0) base += q;
    long r = 1;
    while (exp) {
        if (exp & 1) r = r * base % q;
        base = base * base % q;
        exp >>= 1;
    }
    return r;
}

std::vector<long> parse_q_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stol(tok));
    }
    return out;
}

void emit(const json& j, const std::string& mode, const std::string& text_form) {
    if (mode == "text") std::cout << text_form << "\n";
    else std::cout << j.dump(2) << "\n";
}

int run_eseries(const CommonOpts& opts, bool mixed) {
    json cfgj = load_config_json(opts.input);
    CharStackConfig cfg = config_from_json(cfgj);
    if (opts.allow_empty) cfg.allow_empty = true;
    StarQuiverData data = build_star_quiver(cfg);
    auto hs = h_star(data);
    auto gen = is_generic(data);
    RatFun E = eseries(data);
    json out;
    out["config"] = config_to_json(cfg);
    out["alpha"] = dimvec_to_json(data, data.alpha);
    json gj = json::array();
    for (int i = 0; i < data.nvert(); ++i) {
        json row = json::array();
        for (const auto& x : data.gamma[i]) row.push_back(x.convert_to<long long>());
        gj.push_back(row);
    }
    out["gamma_exponents"] = gj;
    json hj = json::array();
    for (const auto& d : hs) hj.push_back(dimvec_to_json(data, d));
    out["h_star"] = hj;
    out["generic"] = gen.generic;
    out["E"] = ratfun_to_json(E);
    std::string text = "E = " + E.str();
    if (mixed) {
        RatFun H = mixed_poincare(data);
        out["H_c"] = ratfun_to_json(H);
        text += "\nH_c = " + H.str();
    }
    emit(out, opts.emit, text);
    return 0;
}

int run_hlrv(const std::string& mu_arg, int genus, const CommonOpts& opts) {
    json mj;
    try {
        mj = json::parse(mu_arg);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
    MultiPartition mu = multipartition_from_json(mj);
    RatFun H = hlrv_H(mu, genus);
    RatFun E = specialize_E(H);
    RatFun M = specialize_mixed(H);
    json out;
    out["mu"] = multipartition_to_json(mu);
    out["genus"] = genus;
    out["H"] = ratfun_to_json(H);
    out["E_spec"] = ratfun_to_json(E);
    out["mixed_spec"] = ratfun_to_json(M);
    emit(out, opts.emit, "H = " + H.str());
    return 0;
}

int run_verify_ff(const CommonOpts& opts) {
    json cfgj = load_config_json(opts.input);
    CharStackConfig cfg = config_from_json(cfgj);
    if (opts.allow_empty) cfg.allow_empty = true;
    StarQuiverData data = build_star_quiver(cfg);
    RatFun E = eseries(data);
    std::vector<long> qs = parse_q_list(opts.qlist);
    if (qs.empty()) throw std::runtime_error("verify-ff requires --q");
    bool all_match = true;
    json rows = json::array();
    std::string text;
    for (long q : qs) {
        json row;
        row["q"] = q;
        auto params = realize(cfg, data, q);
        row["realized"] = bool(params);
        if (params) {
            Int x = count_char_variety(*params, data);
            Rational sc = stack_count(*params, data);
            std::map<std::string, RatFun> at{{"q", RatFun(Rational(q))}};
            Rational ev = E.substituted(at).constant_value();
            bool match = (sc == ev);
            row["X_count"] = to_string(x);
            row["stack_count"] = to_string(sc);
            row["E_at_q"] = to_string(ev);
            row["match"] = match;
            if (!match) all_match = false;
            text += "q=" + std::to_string(q) + " X=" + to_string(x) +
                    " stack=" + to_string(sc) + " E=" + to_string(ev) +
                    (match ? " match\n" : " MISMATCH\n");
        } else {
            text += "q=" + std::to_string(q) + " not realized\n";
        }
        rows.push_back(row);
    }
    json out;
    out["E"] = ratfun_to_json(E);
    out["checks"] = rows;
    emit(out, opts.emit, text);
    return all_match ? 0 : 1;
}

int run_verify_plethystic(const std::string& box_arg, int nvert, const std::string& family_name,
                          int genus, const CommonOpts& opts) {
    DimVec box;
    {
        std::stringstream ss(box_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) box.push_back(std::stoi(tok));
    }
    if (static_cast<int>(box.size()) != nvert)
        throw std::runtime_error("box length must equal vertex count");
    DualLogFamily fam;
    if (family_name == "unit") fam = family_unit(nvert);
    else if (family_name == "genus") fam = family_genus(genus, nvert);
    else if (family_name == "kronecker") fam = family_kronecker();
    else throw std::runtime_error("unknown family: " + family_name);
    auto checks = verify_plethystic_identity(fam, box, [](const DimVec&) { return true; });
    bool all = true;
    json rows = json::array();
    std::string text;
    for (const auto& c : checks) {
        json row;
        row["alpha"] = c.alpha;
        row["lhs"] = ratfun_to_json(c.lhs);
        row["rhs"] = ratfun_to_json(c.rhs);
        row["pass"] = c.pass;
        rows.push_back(row);
        if (!c.pass) all = false;
        std::string av;
        for (size_t i = 0; i < c.alpha.size(); ++i)
            av += (i ? "," : "") + std::to_string(c.alpha[i]);
        text += "alpha=(" + av + ") " + (c.pass ? "pass" : "FAIL") + "\n";
    }
    json out;
    out["family"] = fam.name;
    out["checks"] = rows;
    emit(out, opts.emit, text);
    return all ? 0 : 1;
}

int run_kronecker_check(const std::string& alpha_arg, const CommonOpts& opts) {
    DimVec alpha;
    {
        std::stringstream ss(alpha_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) alpha.push_back(std::stoi(tok));
    }
    if (alpha.size() != 2) throw std::runtime_error("kronecker-check needs alpha = a0,a1");
    std::vector<long> qs = parse_q_list(opts.qlist.empty() ? "2,3" : opts.qlist);
    DualLogFamily fam = family_kronecker();
    bool all = true;
    json rows = json::array();
    std::string text;
    for (long q : qs) {
        for (long e0 = 1; e0 < q; ++e0)
            for (long e1 = 1; e1 < q; ++e1) {
                Rational brute = count_kronecker(q, alpha[0], alpha[1], e0, e1);
                LevelPredicate V = [&](const DimVec& b) {
                    return powmod_l(e0, b[0], q) * powmod_l(e1, b[1], q) % q == 1;
                };
                RatFun F = F_level(fam, alpha, V);
                std::map<std::string, RatFun> at{{"t", RatFun(Rational(q))}};
                Rational val = F.substituted(at).constant_value();
                bool match = brute == val;
                if (!match) all = false;
                json row;
                row["q"] = q;
                row["eta"] = json::array({e0, e1});
                row["brute"] = to_string(brute);
                row["char_sum"] = to_string(val);
                row["match"] = match;
                rows.push_back(row);
                text += "q=" + std::to_string(q) + " eta=(" + std::to_string(e0) + "," +
                        std::to_string(e1) + ") " + (match ? "match" : "MISMATCH") + "\n";
            }
    }
    json out;
    out["alpha"] = alpha;
    out["checks"] = rows;
    emit(out, opts.emit, text);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact E-series and mixed Poincare series of character stacks"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string mu_arg, box_arg = "3", alpha_arg = "2,1", family_name = "unit";
    int genus = 0, nvert = 1;

    const char* env_threads = std::getenv("CHARSTACK_THREADS");
    if (env_threads) opts.threads = std::atoi(env_threads);

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", opts.input, "config JSON path")->required();
        cmd->add_option("--q", opts.qlist, "comma-separated prime list");
        cmd->add_option("--emit", opts.emit, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--threads", opts.threads, "worker threads");
        cmd->add_flag("--allow-empty", opts.allow_empty,
                      "emit E = 0 instead of failing when gamma^alpha != 1");
    };

    auto* c_es = app.add_subcommand("eseries", "E-series of a character stack");
    add_common(c_es, true);
    auto* c_mx = app.add_subcommand("mixed", "mixed Poincare series");
    add_common(c_mx, true);
    auto* c_hl = app.add_subcommand("hlrv", "kernel function HH_mu(z,w)");
    c_hl->add_option("--mu", mu_arg, "multipartition, e.g. [[1,1],[1,1]]")->required();
    c_hl->add_option("--genus", genus, "genus");
    add_common(c_hl, false);
    auto* c_ff = app.add_subcommand("verify-ff", "brute-force finite-field cross-check");
    add_common(c_ff, true);
    auto* c_vp = app.add_subcommand("verify-plethystic", "plethystic identity suite");
    c_vp->add_option("--box", box_arg, "box, e.g. 3 or 2,2");
    c_vp->add_option("--vertices", nvert, "index-set size");
    c_vp->add_option("--family", family_name, "unit|genus|kronecker");
    c_vp->add_option("--genus", genus, "genus for the genus family");
    add_common(c_vp, false);
    auto* c_kr = app.add_subcommand("kronecker-check", "Kronecker moment-map cross-check");
    c_kr->add_option("--alpha", alpha_arg, "dimension vector a0,a1");
    add_common(c_kr, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_es) return run_eseries(opts, false);
        if (*c_mx) return run_eseries(opts, true);
        if (*c_hl) return run_hlrv(mu_arg, genus, opts);
        if (*c_ff) return run_verify_ff(opts);
        if (*c_vp) return run_verify_plethystic(box_arg, nvert, family_name, genus, opts);
        if (*c_kr) return run_kronecker_check(alpha_arg, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
