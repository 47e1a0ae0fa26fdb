#include "charstack/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace charstack {

namespace {

int total_degree(const LaurentPoly::Exps& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

// graded-lex: larger total degree first, ties by lex on exponents.
bool grlex_less(const LaurentPoly::Exps& a, const LaurentPoly::Exps& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

} // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

LaurentPoly LaurentPoly::variable(const std::string& name, int exp) {
    LaurentPoly p;
    p.vars_ = {name};
    if (exp == 0) {
        p.terms_[{}] = 1;
        p.vars_.clear();
    } else {
        p.terms_[{exp}] = 1;
    }
    return p;
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, const Exps& e,
                                  const Rational& c) {
    if (vars.size() != e.size()) throw std::invalid_argument("monomial: size mismatch");
    LaurentPoly p;
    p.vars_ = vars;
    if (c != 0) p.terms_[e] = c;
    p.prune();
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    auto it = terms_.find(Exps(vars_.size(), 0));
    if (terms_.size() != 1 || it == terms_.end())
        throw std::logic_error("constant_value on non-constant");
    return it->second;
}

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) { nv.push_back(vars_[i]); keep.push_back(i); }
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exps ne(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        nt[ne] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

std::vector<std::string> merged_vars(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<std::string> v = a.vars_;
    v.insert(v.end(), b.vars_.begin(), b.vars_.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

LaurentPoly unify_to(const LaurentPoly& p, const std::vector<std::string>& target) {
    if (p.vars_ == target) return p;
    std::vector<int> pos(p.vars_.size());
    for (size_t i = 0; i < p.vars_.size(); ++i) {
        auto it = std::lower_bound(target.begin(), target.end(), p.vars_[i]);
        if (it == target.end() || *it != p.vars_[i])
            throw std::logic_error("unify_to: missing variable");
        pos[i] = static_cast<int>(it - target.begin());
    }
    LaurentPoly q;
    q.vars_ = target;
    for (const auto& [e, c] : p.terms_) {
        LaurentPoly::Exps ne(target.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        q.terms_[ne] = c;
    }
    return q;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    auto mv = merged_vars(*this, o);
    LaurentPoly a = unify_to(*this, mv), b = unify_to(o, mv);
    for (const auto& [e, c] : b.terms_) {
        auto [it, fresh] = a.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    a.prune();
    return a;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    auto mv = merged_vars(*this, o);
    LaurentPoly a = unify_to(*this, mv), b = unify_to(o, mv);
    LaurentPoly r;
    r.vars_ = mv;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exps e(mv.size());
            for (size_t i = 0; i < mv.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.terms_.emplace(std::move(e), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.prune();
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (vars_ != o.vars_) return vars_ < o.vars_;
    return terms_ < o.terms_;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return LaurentPoly();
    LaurentPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly r{Rational(1)};
    LaurentPoly b = *this;
    while (n) {
        if (n & 1) r *= b;
        if (n >>= 1) b *= b;
    }
    return r;
}

std::pair<LaurentPoly::Exps, Rational> LaurentPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

int LaurentPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    size_t idx = it - vars_.begin();
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int LaurentPoly::min_degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    size_t idx = it - vars_.begin();
    int d = terms_.empty() ? 0 : terms_.begin()->first[idx];
    for (const auto& [e, c] : terms_) d = std::min(d, e[idx]);
    return d;
}

bool LaurentPoly::has_var(const std::string& var) const {
    return std::binary_search(vars_.begin(), vars_.end(), var);
}

bool LaurentPoly::is_laurent() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

LaurentPoly LaurentPoly::exponent_scaled(int d) const {
    LaurentPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        for (int& x : ne) x *= d;
        r.terms_[ne] = c;
    }
    return r;
}

LaurentPoly LaurentPoly::negate_var(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    size_t idx = it - vars_.begin();
    LaurentPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_)
        r.terms_[e] = (e[idx] % 2 != 0) ? -c : c;
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::renamed(const std::string& from, const std::string& to) const {
    if (!has_var(from)) return *this;
    if (has_var(to)) throw std::invalid_argument("renamed: target variable present");
    std::vector<std::string> nv = vars_;
    std::replace(nv.begin(), nv.end(), from, to);
    std::vector<size_t> order(nv.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return nv[a] < nv[b]; });
    LaurentPoly r;
    for (size_t i : order) r.vars_.push_back(nv[i]);
    for (const auto& [e, c] : terms_) {
        Exps ne(e.size());
        for (size_t i = 0; i < order.size(); ++i) ne[i] = e[order[i]];
        r.terms_[ne] = c;
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    // descending graded-lex for readability
    std::vector<const std::pair<const Exps, Rational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        Rational c = t->second;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational ac = c < 0 ? Rational(-c) : c;
        bool any_var = total_degree(t->first) != 0 ||
                       std::any_of(t->first.begin(), t->first.end(), [](int x) { return x != 0; });
        if (ac != 1 || !any_var) os << to_string(ac);
        bool star = ac != 1 || !any_var;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << vars_[i];
            if (t->first[i] != 1) os << "^" << t->first[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd machinery
// ---------------------------------------------------------------------------

namespace {

// f viewed as univariate in vars[main_idx]: degree -> coefficient poly in the
// remaining variables.
std::map<int, LaurentPoly> split_main(const LaurentPoly& f, size_t main_idx) {
    std::map<int, LaurentPoly> out;
    const auto& vars = f.vars();
    std::vector<std::string> rest;
    for (size_t i = 0; i < vars.size(); ++i)
        if (i != main_idx) rest.push_back(vars[i]);
    std::map<int, LaurentPoly::TermMap> bucket;
    for (const auto& [e, c] : f.terms()) {
        LaurentPoly::Exps re;
        re.reserve(rest.size());
        for (size_t i = 0; i < e.size(); ++i)
            if (i != main_idx) re.push_back(e[i]);
        bucket[e[main_idx]][re] = c;
    }
    for (auto& [d, tm] : bucket) {
        LaurentPoly p;
        for (auto& [re, c] : tm)
            p += LaurentPoly::monomial(rest, re, c);
        out[d] = p;
    }
    return out;
}

LaurentPoly join_main(const std::map<int, LaurentPoly>& coeffs, const std::string& main_var) {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs)
        r += c * LaurentPoly::variable(main_var, d);
    return r;
}

int deg_of(const std::map<int, LaurentPoly>& f) {
    int d = -1;
    for (const auto& [k, v] : f)
        if (!v.is_zero()) d = std::max(d, k);
    return d;
}

void prune_uni(std::map<int, LaurentPoly>& f) {
    for (auto it = f.begin(); it != f.end();)
        if (it->second.is_zero()) it = f.erase(it);
        else ++it;
}

// deterministic normalization: integer-primitive with positive leading coeff.
LaurentPoly normalize_assoc(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c) < 0
                                                          ? Int(-boost::multiprecision::numerator(c))
                                                          : boost::multiprecision::numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    Rational scale = Rational(den_lcm, num_gcd == 0 ? Int(1) : num_gcd);
    LaurentPoly q = p.scaled(scale);
    if (q.leading_term().second < 0) q = q.scaled(Rational(-1));
    return q;
}

struct ModEval {
    // probabilistic coprimality filter over F_p
    static constexpr uint64_t P = 2305843009213693951ull; // 2^61 - 1
    static uint64_t mulmod(uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((__uint128_t)a * b % P);
    }
    static uint64_t powmod(uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    }
    static uint64_t invmod(uint64_t a) { return powmod(a, P - 2); }
};

// reduce coefficient mod p; returns false if a denominator vanishes mod p
bool rat_mod(const Rational& c, uint64_t& out) {
    Int num = boost::multiprecision::numerator(c);
    Int den = boost::multiprecision::denominator(c);
    Int p(ModEval::P);
    Int nm = num % p;
    if (nm < 0) nm += p;
    Int dm = den % p;
    if (dm == 0) return false;
    uint64_t n64 = nm.convert_to<uint64_t>();
    uint64_t d64 = dm.convert_to<uint64_t>();
    out = ModEval::mulmod(n64, ModEval::invmod(d64));
    return true;
}

// Evaluate all variables except main_idx at the given points, mod p.
// Returns univariate dense coeffs; false on denominator trouble.
bool eval_uni_mod(const LaurentPoly& f, size_t main_idx, const std::vector<uint64_t>& pts,
                  std::vector<uint64_t>& out) {
    int deg = 0;
    for (const auto& [e, c] : f.terms()) deg = std::max(deg, e[main_idx]);
    out.assign(deg + 1, 0);
    for (const auto& [e, c] : f.terms()) {
        uint64_t v;
        if (!rat_mod(c, v)) return false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i == main_idx) continue;
            if (e[i] < 0) return false; // shouldn't happen (true polys)
            v = ModEval::mulmod(v, ModEval::powmod(pts[i], static_cast<uint64_t>(e[i])));
        }
        out[e[main_idx]] = (out[e[main_idx]] + v) % ModEval::P;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return true;
}

int uni_gcd_degree_mod(std::vector<uint64_t> a, std::vector<uint64_t> b) {
    auto deg = [](const std::vector<uint64_t>& f) { return static_cast<int>(f.size()) - 1; };
    while (deg(b) >= 0) {
        // a mod b
        uint64_t inv = ModEval::invmod(b.back());
        while (deg(a) >= deg(b)) {
            uint64_t q = ModEval::mulmod(a.back(), inv);
            int shift = deg(a) - deg(b);
            for (int i = 0; i <= deg(b); ++i) {
                uint64_t sub = ModEval::mulmod(q, b[i]);
                uint64_t& t = a[i + shift];
                t = (t + ModEval::P - sub) % ModEval::P;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return deg(a);
}

// Certified "gcd is constant" test: for every variable, with leading
// coefficients not vanishing at the sample point, a degree-0 evaluated gcd
// bounds the true gcd's degree in that variable by 0.
bool probably_coprime_certified(const LaurentPoly& A, const LaurentPoly& B) {
    const auto& vars = A.vars(); // A,B unified by caller
    if (vars.empty()) return true;
    uint64_t seed = 0x9e3779b97f4a7c15ull;
    for (size_t mi = 0; mi < vars.size(); ++mi) {
        if (A.degree_in(vars[mi]) == 0 && B.degree_in(vars[mi]) == 0) continue;
        bool ok = false;
        for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
            std::vector<uint64_t> pts(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) {
                seed = seed * 6364136223846793005ull + 1442695040888963407ull;
                pts[i] = 2 + (seed >> 33) % 1000003;
            }
            std::vector<uint64_t> ua, ub;
            if (!eval_uni_mod(A, mi, pts, ua) || !eval_uni_mod(B, mi, pts, ub)) continue;
            if (static_cast<int>(ua.size()) - 1 != A.degree_in(vars[mi])) continue; // lc vanished
            if (static_cast<int>(ub.size()) - 1 != B.degree_in(vars[mi])) continue;
            if (ua.empty() || ub.empty()) continue;
            if (uni_gcd_degree_mod(ua, ub) == 0) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

LaurentPoly gcd_impl(const LaurentPoly& A, const LaurentPoly& B);

// content of f w.r.t. main variable = gcd of its coefficient polys
LaurentPoly content_main(const std::map<int, LaurentPoly>& f) {
    LaurentPoly c;
    for (const auto& [d, co] : f) {
        if (co.is_zero()) continue;
        c = c.is_zero() ? normalize_assoc(co) : gcd_impl(c, co);
        if (c.is_constant()) return LaurentPoly(Rational(1));
    }
    return c.is_zero() ? LaurentPoly(Rational(1)) : c;
}

std::map<int, LaurentPoly> divide_coeffs(const std::map<int, LaurentPoly>& f,
                                         const LaurentPoly& d) {
    std::map<int, LaurentPoly> out;
    for (const auto& [k, v] : f)
        if (!v.is_zero()) out[k] = poly_div_exact(v, d);
    return out;
}

std::map<int, LaurentPoly> scale_coeffs(const std::map<int, LaurentPoly>& f,
                                        const LaurentPoly& m) {
    std::map<int, LaurentPoly> out;
    for (const auto& [k, v] : f)
        if (!v.is_zero()) out[k] = v * m;
    return out;
}

// pseudo-remainder of a by b in the main variable
std::map<int, LaurentPoly> prem(std::map<int, LaurentPoly> a,
                                const std::map<int, LaurentPoly>& b) {
    int db = deg_of(b);
    const LaurentPoly& lb = b.at(db);
    int e = deg_of(a) - db + 1;
    while (true) {
        prune_uni(a);
        int da = deg_of(a);
        if (da < db) break;
        const LaurentPoly la = a.at(da);
        std::map<int, LaurentPoly> next = scale_coeffs(a, lb);
        for (const auto& [k, v] : b) {
            LaurentPoly sub = v * la;
            auto it = next.find(k + da - db);
            if (it == next.end()) next[k + da - db] = -sub;
            else it->second -= sub;
        }
        next.erase(da);
        a = std::move(next);
        --e;
    }
    if (e > 0) {
        LaurentPoly m = lb.pow(e);
        a = scale_coeffs(a, m);
    }
    return a;
}

LaurentPoly gcd_univariate(const LaurentPoly& A, const LaurentPoly& B) {
    // monic Euclid over Q
    const std::string var = A.vars().empty() ? B.vars()[0] : A.vars()[0];
    auto to_dense = [&](const LaurentPoly& f) {
        std::vector<Rational> d(f.degree_in(var) + 1, Rational(0));
        for (const auto& [e, c] : f.terms()) d[e.empty() ? 0 : e[0]] = c;
        while (d.size() > 1 && d.back() == 0) d.pop_back();
        return d;
    };
    auto a = to_dense(A), b = to_dense(B);
    auto is_zero = [](const std::vector<Rational>& f) {
        return f.size() == 1 && f[0] == 0;
    };
    while (!is_zero(b)) {
        // a mod b
        while (a.size() >= b.size() && !is_zero(a)) {
            Rational q = a.back() / b.back();
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
            while (a.size() > 1 && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    LaurentPoly g;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) g += LaurentPoly::variable(var, static_cast<int>(i)).scaled(a[i]);
    if (g.is_zero()) return LaurentPoly(Rational(1));
    return normalize_assoc(g);
}

LaurentPoly gcd_impl(const LaurentPoly& A0, const LaurentPoly& B0) {
    if (A0.is_zero()) return normalize_assoc(B0);
    if (B0.is_zero()) return normalize_assoc(A0);
    if (A0.is_constant() || B0.is_constant()) return LaurentPoly(Rational(1));
    auto mv = merged_vars(A0, B0);
    LaurentPoly A = unify_to(A0, mv), B = unify_to(B0, mv);
    if (A == B) return normalize_assoc(A);
    if (mv.size() == 1) return gcd_univariate(A, B);
    if (probably_coprime_certified(A, B)) return LaurentPoly(Rational(1));

    // choose main variable with smallest max degree (cheap PRS)
    size_t main_idx = 0;
    int best = INT32_MAX;
    for (size_t i = 0; i < mv.size(); ++i) {
        int d = std::max(A.degree_in(mv[i]), B.degree_in(mv[i]));
        if (d > 0 && d < best) { best = d; main_idx = i; }
    }
    auto ua = split_main(A, main_idx);
    auto ub = split_main(B, main_idx);
    LaurentPoly ca = content_main(ua), cb = content_main(ub);
    LaurentPoly cg = gcd_impl(ca, cb);
    if (!ca.is_constant()) ua = divide_coeffs(ua, ca);
    if (!cb.is_constant()) ub = divide_coeffs(ub, cb);

    if (deg_of(ua) < deg_of(ub)) std::swap(ua, ub);
    // subresultant PRS
    LaurentPoly g{Rational(1)}, h{Rational(1)};
    while (true) {
        int da = deg_of(ua), db = deg_of(ub);
        int delta = da - db;
        auto r = prem(ua, ub);
        prune_uni(r);
        if (r.empty()) break;
        if (deg_of(r) == 0) {
            // coprime in the main variable
            return normalize_assoc(cg);
        }
        ua = std::move(ub);
        LaurentPoly divisor = g * h.pow(delta);
        ub = divide_coeffs(r, divisor);
        g = ua.at(deg_of(ua));
        if (delta > 0) {
            LaurentPoly gp = g.pow(delta);
            h = (delta == 1) ? gp : poly_div_exact(gp, h.pow(delta - 1));
        }
    }
    // primitive part of ub times content gcd
    LaurentPoly cu = content_main(ub);
    auto pp = cu.is_constant() ? ub : divide_coeffs(ub, cu);
    LaurentPoly result = join_main(pp, mv[main_idx]) * cg;
    return normalize_assoc(result);
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_laurent() || b.is_laurent())
        throw std::invalid_argument("poly_gcd: Laurent input");
    return gcd_impl(a, b);
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_div_exact: zero divisor");
    if (a.is_zero()) return a;
    if (b.is_constant()) return a.scaled(Rational(1) / b.constant_value());
    auto mv = merged_vars(a, b);
    LaurentPoly r = unify_to(a, mv);
    const LaurentPoly bu = unify_to(b, mv);
    auto [lbe, lbc] = bu.leading_term();
    LaurentPoly q;
    q = LaurentPoly();
    while (!r.is_zero()) {
        auto [le, lc] = r.leading_term();
        LaurentPoly::Exps de(le.size());
        for (size_t i = 0; i < le.size(); ++i) {
            de[i] = le[i] - lbe[i];
            if (de[i] < 0) throw std::logic_error("poly_div_exact: not divisible");
        }
        LaurentPoly mono = LaurentPoly::monomial(mv, de, lc / lbc);
        q += mono;
        r -= mono * bu;
    }
    return q;
}

} // namespace charstack
