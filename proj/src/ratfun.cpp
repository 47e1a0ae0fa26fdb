#include "charstack/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace charstack {

namespace {

// Splits a Laurent polynomial into x^shift * P with P a true polynomial
// having min exponent 0 in every variable.
std::pair<LaurentPoly::Exps, LaurentPoly> strip_monomial(const LaurentPoly& f) {
    if (f.is_zero()) return {{}, f};
    const auto& vars = f.vars();
    LaurentPoly::Exps mins(vars.size(), 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) { mins = e; first = false; continue; }
        for (size_t i = 0; i < e.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    }
    LaurentPoly::Exps neg = mins;
    for (int& x : neg) x = -x;
    LaurentPoly shifted = f * LaurentPoly::monomial(vars, neg, Rational(1));
    return {mins, shifted};
}

} // namespace

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    reduce();
}

void RatFun::reduce() {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    auto [sn, pn] = strip_monomial(num_);
    auto [sd, pd] = strip_monomial(den_);
    auto nvars = num_.vars();
    auto dvars = den_.vars();
    if (!pn.is_constant() && !pd.is_constant()) {
        LaurentPoly g = poly_gcd(pn, pd);
        if (!g.is_constant()) {
            pn = poly_div_exact(pn, g);
            pd = poly_div_exact(pd, g);
        }
    }
    // reapply the combined monomial shift to the numerator
    std::vector<std::string> av = nvars;
    av.insert(av.end(), dvars.begin(), dvars.end());
    std::sort(av.begin(), av.end());
    av.erase(std::unique(av.begin(), av.end()), av.end());
    LaurentPoly::Exps shift(av.size(), 0);
    for (size_t i = 0; i < nvars.size(); ++i) {
        size_t k = std::lower_bound(av.begin(), av.end(), nvars[i]) - av.begin();
        shift[k] += sn.size() > i ? sn[i] : 0;
    }
    for (size_t i = 0; i < dvars.size(); ++i) {
        size_t k = std::lower_bound(av.begin(), av.end(), dvars[i]) - av.begin();
        shift[k] -= sd.size() > i ? sd[i] : 0;
    }
    num_ = pn * LaurentPoly::monomial(av, shift, Rational(1));
    den_ = pd;
    Rational lc = den_.leading_term().second;
    if (lc != 1) {
        num_ = num_.scaled(Rational(1) / lc);
        den_ = den_.scaled(Rational(1) / lc);
    }
}

bool RatFun::is_one() const {
    return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

Rational RatFun::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value on non-constant RatFun");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return RatFun();
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::pow(int n) const {
    if (n == 0) return RatFun(1);
    if (n < 0) {
        if (is_zero()) throw std::domain_error("division by zero");
        return RatFun(den_.pow(-n), num_.pow(-n));
    }
    return RatFun(num_.pow(n), den_.pow(n));
}

RatFun RatFun::scaled(const Rational& c) const {
    if (c == 0) return RatFun();
    RatFun r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

namespace {

RatFun eval_poly(const LaurentPoly& p, const std::map<std::string, RatFun>& assignments) {
    const auto& vars = p.vars();
    std::vector<const RatFun*> images(vars.size(), nullptr);
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = assignments.find(vars[i]);
        if (it != assignments.end()) images[i] = &it->second;
    }
    RatFun acc;
    for (const auto& [e, c] : p.terms()) {
        RatFun term{static_cast<Rational>(c)};
        LaurentPoly::Exps kept(e.size(), 0);
        bool any_kept = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (images[i]) {
                if (images[i]->is_zero() && e[i] < 0)
                    throw std::domain_error("pole hit");
                term *= images[i]->pow(e[i]);
            } else {
                kept[i] = e[i];
                any_kept = true;
            }
        }
        if (any_kept)
            term *= RatFun(LaurentPoly::monomial(vars, kept, Rational(1)));
        acc += term;
    }
    return acc;
}

} // namespace

RatFun RatFun::substituted(const std::map<std::string, RatFun>& assignments) const {
    RatFun n = eval_poly(num_, assignments);
    RatFun d = eval_poly(den_, assignments);
    if (d.is_zero()) throw std::domain_error("pole hit");
    return n / d;
}

RatFun RatFun::adams_all_vars(int d) const {
    if (d < 1) throw std::invalid_argument("adams_all_vars: d must be >= 1");
    if (d == 1) return *this;
    RatFun r;
    r.num_ = num_.exponent_scaled(d);
    r.den_ = den_.exponent_scaled(d);
    // coprimality is preserved under x -> x^d; only rescale the leading coeff
    Rational lc = r.den_.leading_term().second;
    if (lc != 1) {
        r.num_ = r.num_.scaled(Rational(1) / lc);
        r.den_ = r.den_.scaled(Rational(1) / lc);
    }
    return r;
}

bool RatFun::even_in(const std::string& var) const {
    RatFun flipped;
    flipped.num_ = num_.negate_var(var);
    flipped.den_ = den_.negate_var(var);
    Rational lc = flipped.den_.leading_term().second;
    if (lc != 1) {
        flipped.num_ = flipped.num_.scaled(Rational(1) / lc);
        flipped.den_ = flipped.den_.scaled(Rational(1) / lc);
    }
    return flipped == *this;
}

namespace {

// true if every exponent of `var` is even
bool all_even(const LaurentPoly& p, const std::string& var) {
    auto idx = std::lower_bound(p.vars().begin(), p.vars().end(), var);
    if (idx == p.vars().end() || *idx != var) return true;
    size_t i = idx - p.vars().begin();
    for (const auto& [e, c] : p.terms())
        if (e[i] % 2 != 0) return false;
    return true;
}

LaurentPoly halve_poly(const LaurentPoly& p, const std::string& from, const std::string& to) {
    auto idx = std::lower_bound(p.vars().begin(), p.vars().end(), from);
    if (idx == p.vars().end() || *idx != from) return p;
    size_t i = idx - p.vars().begin();
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly::Exps ne = e;
        ne[i] /= 2;
        LaurentPoly mono = LaurentPoly::monomial(p.vars(), ne, c);
        out += mono;
    }
    return out.renamed(from, to);
}

} // namespace

RatFun RatFun::halved_var(const std::string& from, const std::string& to) const {
    LaurentPoly n = num_, d = den_;
    if (!all_even(n, from) || !all_even(d, from)) {
        // canonical form may carry the parity in num and den jointly
        LaurentPoly s = LaurentPoly::variable(from);
        n = n * s;
        d = d * s;
        if (!all_even(n, from) || !all_even(d, from))
            throw std::domain_error("not rational in " + to);
    }
    return RatFun(halve_poly(n, from, to), halve_poly(d, from, to));
}

std::pair<LaurentPoly, LaurentPoly> RatFun::integer_form() const {
    Int den_lcm = 1;
    for (const auto& [e, c] : num_.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    for (const auto& [e, c] : den_.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    LaurentPoly n = num_.scaled(Rational(den_lcm));
    LaurentPoly d = den_.scaled(Rational(den_lcm));
    Int content = 0;
    auto acc = [&content](const LaurentPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            Int v = boost::multiprecision::numerator(c);
            if (v < 0) v = -v;
            content = boost::multiprecision::gcd(content, v);
        }
    };
    acc(n);
    acc(d);
    if (content > 1) {
        n = n.scaled(Rational(1, content));
        d = d.scaled(Rational(1, content));
    }
    if (!d.is_zero() && d.leading_term().second < 0) {
        n = n.scaled(Rational(-1));
        d = d.scaled(Rational(-1));
    }
    return {n, d};
}

std::string RatFun::str() const {
    auto [n, d] = integer_form();
    if (d.is_constant() && d.constant_value() == 1) return n.str();
    std::ostringstream os;
    bool nparen = n.terms().size() > 1;
    os << (nparen ? "(" : "") << n.str() << (nparen ? ")" : "") << "/";
    bool dparen = d.terms().size() > 1;
    os << (dparen ? "(" : "") << d.str() << (dparen ? ")" : "");
    return os.str();
}

} // namespace charstack
