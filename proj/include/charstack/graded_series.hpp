#pragma once

#include "charstack/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace charstack {

inline int gcd_nonneg(int a, int b) {
    while (b) { int t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

/// N^I-graded truncated power series with coefficients in C, closed over an
/// explicit box. The Adams action on coefficients is part of the value: it
/// must be a ring map with psi_d . psi_d' = psi_dd'.
template <class C>
class GradedSeries {
public:
    using Key = std::vector<int>;
    using AdamsFn = std::function<C(const C&, int)>;

    GradedSeries(Key box, C zero, AdamsFn coef_adams)
        : box_(std::move(box)), zero_(std::move(zero)), adams_(std::move(coef_adams)) {}

    const Key& box() const { return box_; }
    const std::map<Key, C>& terms() const { return terms_; }
    const C& zero_coef() const { return zero_; }

    bool in_box(const Key& k) const {
        if (k.size() != box_.size()) return false;
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] < 0 || k[i] > box_[i]) return false;
        return true;
    }

    void set(const Key& k, const C& c) {
        if (!in_box(k)) throw std::domain_error("beyond truncation");
        if (c.is_zero()) terms_.erase(k);
        else terms_[k] = c;
    }

    void add(const Key& k, const C& c) {
        if (!in_box(k)) throw std::domain_error("beyond truncation");
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    C coefficient(const Key& k) const {
        if (!in_box(k)) throw std::domain_error("beyond truncation");
        auto it = terms_.find(k);
        return it == terms_.end() ? zero_ : it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    bool augmentation_zero() const {
        return terms_.find(Key(box_.size(), 0)) == terms_.end();
    }

    GradedSeries like() const { return GradedSeries(box_, zero_, adams_); }

    C coef_adams(const C& c, int d) const { return adams_(c, d); }

    GradedSeries operator+(const GradedSeries& o) const {
        GradedSeries r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, c);
        return r;
    }

    GradedSeries operator-(const GradedSeries& o) const {
        GradedSeries r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, -c);
        return r;
    }

    GradedSeries operator*(const GradedSeries& o) const {
        GradedSeries r = like();
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_) {
                Key k(ka.size());
                bool ok = true;
                for (size_t i = 0; i < k.size(); ++i) {
                    k[i] = ka[i] + kb[i];
                    if (k[i] > box_[i]) { ok = false; break; }
                }
                if (ok) r.add(k, ca * cb);
            }
        return r;
    }

    bool operator==(const GradedSeries& o) const {
        return box_ == o.box_ && terms_ == o.terms_;
    }

    GradedSeries scaled(const Rational& q) const {
        GradedSeries r = like();
        if (q == 0) return r;
        for (const auto& [k, c] : terms_) r.add(k, c.scaled(q));
        return r;
    }

    /// psi_d: grading scaled by d, coefficients through the declared action;
    /// keys leaving the box are dropped.
    GradedSeries adams(int d) const {
        if (d < 1) throw std::invalid_argument("adams: d must be >= 1");
        GradedSeries r = like();
        for (const auto& [k, c] : terms_) {
            Key nk(k.size());
            bool ok = true;
            for (size_t i = 0; i < k.size(); ++i) {
                nk[i] = k[i] * d;
                if (nk[i] > box_[i]) { ok = false; break; }
            }
            if (ok) r.add(nk, adams_(c, d));
        }
        return r;
    }

    int total_box_degree() const {
        int s = 0;
        for (int b : box_) s += b;
        return s;
    }

private:
    Key box_;
    C zero_;
    AdamsFn adams_;
    std::map<Key, C> terms_;
};

// one_like(c): multiplicative unit compatible with c's shape; provided per
// coefficient type (see ratfun_series.hpp adapters and SymFunc overload).

template <class C>
GradedSeries<C> series_exp(const GradedSeries<C>& f) {
    if (!f.augmentation_zero()) throw std::domain_error("not in augmentation ideal");
    typename GradedSeries<C>::Key zero_key(f.box().size(), 0);
    C one = one_like(f.zero_coef());
    GradedSeries<C> r = f.like();
    r.add(zero_key, one);
    GradedSeries<C> power = f.like();
    power.add(zero_key, one);
    int n = f.total_box_degree();
    for (int m = 1; m <= n; ++m) {
        power = (power * f).scaled(Rational(1, m));
        if (power.is_zero()) break;
        r = r + power;
    }
    return r;
}

template <class C>
GradedSeries<C> series_log(const GradedSeries<C>& f) {
    typename GradedSeries<C>::Key zero_key(f.box().size(), 0);
    C one = one_like(f.zero_coef());
    C c0 = f.coefficient(zero_key);
    if (!(c0 - one).is_zero()) throw std::domain_error("log requires unit constant term");
    GradedSeries<C> u = f;
    u.add(zero_key, -c0);
    GradedSeries<C> r = f.like();
    GradedSeries<C> power = u;
    int n = f.total_box_degree();
    for (int m = 1; m <= n && !power.is_zero(); ++m) {
        r = r + power.scaled(Rational(m % 2 == 1 ? 1 : -1, m));
        power = power * u;
    }
    return r;
}

/// Plexp(f) = exp(sum_{d>=1} psi_d(f)/d), truncated to the box.
template <class C>
GradedSeries<C> plexp(const GradedSeries<C>& f) {
    if (!f.augmentation_zero()) throw std::domain_error("not in augmentation ideal");
    GradedSeries<C> s = f.like();
    int dmax = 1;
    for (int b : f.box()) dmax = std::max(dmax, b);
    for (int d = 1; d <= dmax; ++d) {
        GradedSeries<C> a = f.adams(d);
        if (a.is_zero()) continue;
        s = s + a.scaled(Rational(1, d));
    }
    return series_exp(s);
}

/// Plelog: V_alpha = (1/gbar) sum_{d | gbar} mu(d) psi_d(U_{alpha/d}) with
/// U_beta = gbar(beta) * [y^beta] log f.
template <class C>
GradedSeries<C> plelog(const GradedSeries<C>& f) {
    GradedSeries<C> L = series_log(f); // throws on bad constant term
    GradedSeries<C> out = f.like();
    std::map<typename GradedSeries<C>::Key, bool> targets;
    for (const auto& [beta, u] : L.terms()) {
        for (int d = 1;; ++d) {
            typename GradedSeries<C>::Key a(beta.size());
            bool ok = true;
            for (size_t i = 0; i < beta.size(); ++i) {
                a[i] = beta[i] * d;
                if (a[i] > f.box()[i]) { ok = false; break; }
            }
            if (!ok) break;
            targets[a] = true;
        }
    }
    for (const auto& [alpha, flag] : targets) {
        (void)flag;
        int gbar = 0;
        for (int x : alpha) gbar = gcd_nonneg(gbar, x);
        if (gbar == 0) continue;
        C acc = f.zero_coef();
        for (int d = 1; d <= gbar; ++d) {
            if (gbar % d != 0) continue;
            int mu = moebius(d);
            if (mu == 0) continue;
            typename GradedSeries<C>::Key sub(alpha.size());
            for (size_t i = 0; i < alpha.size(); ++i) sub[i] = alpha[i] / d;
            auto it = L.terms().find(sub);
            if (it == L.terms().end()) continue;
            C u = it->second.scaled(Rational(gbar / d)); // U_{alpha/d}
            C v = (d == 1) ? u : f.coef_adams(u, d);
            acc = acc + v.scaled(Rational(mu, gbar));
        }
        if (!acc.is_zero()) out.add(alpha, acc);
    }
    return out;
}

} // namespace charstack
