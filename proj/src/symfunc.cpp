#include "charstack/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace charstack {

Basis basis_from_char(char c) {
    switch (c) {
        case 'p': return Basis::p;
        case 'm': return Basis::m;
        case 'h': return Basis::h;
        case 'e': return Basis::e;
        case 's': return Basis::s;
    }
    throw std::invalid_argument("unsupported basis tag");
}

// ---------------------------------------------------------------------------
// transition tables, built by expanding in n variables
// ---------------------------------------------------------------------------

namespace {

// dense-ish polynomial in n variables: exponent vector -> coefficient
using Expansion = std::map<std::vector<int>, Rational>;

Expansion mono_expand(const Partition& lambda, int nvars) {
    Expansion out;
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda.parts()[i];
    std::sort(e.begin(), e.end());
    do {
        out[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

Expansion mul_expand(const Expansion& a, const Expansion& b) {
    Expansion out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

Expansion p_expand(int r, int nvars) {
    Expansion out;
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < nvars; ++i) {
        e[i] = r;
        out[e] = 1;
        e[i] = 0;
    }
    return out;
}

void gen_h(int nvars, int i, int remaining, std::vector<int>& e, Expansion& out) {
    if (i == nvars - 1) {
        e[i] = remaining;
        out[e] += 1;
        e[i] = 0;
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        e[i] = v;
        gen_h(nvars, i + 1, remaining - v, e, out);
    }
    e[i] = 0;
}

Expansion h_expand(int r, int nvars) {
    Expansion out;
    if (r == 0) {
        out[std::vector<int>(nvars, 0)] = 1;
        return out;
    }
    std::vector<int> e(nvars, 0);
    gen_h(nvars, 0, r, e, out);
    return out;
}

Expansion e_expand(int r, int nvars) {
    Expansion out;
    if (r == 0) {
        out[std::vector<int>(nvars, 0)] = 1;
        return out;
    }
    std::vector<int> idx(r);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            std::vector<int> e(nvars, 0);
            for (int j : idx) e[j] = 1;
            out[e] = 1;
            return;
        }
        for (int j = start; j < nvars; ++j) {
            idx[depth] = j;
            rec(j + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// collect coefficients of weakly decreasing exponent vectors -> m-basis
std::map<Partition, Rational> to_m_vector(const Expansion& f) {
    std::map<Partition, Rational> out;
    for (const auto& [e, c] : f) {
        bool sorted_desc = true;
        for (size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) { sorted_desc = false; break; }
        if (!sorted_desc) continue;
        std::vector<int> p;
        for (int x : e)
            if (x > 0) p.push_back(x);
        out[Partition(p)] = c;
    }
    return out;
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    // to_m[b]: column lambda of basis b in the m basis
    std::map<Basis, std::vector<std::vector<Rational>>> to_m;
    // from_m[b]: inverse matrix (m-vector -> b-vector)
    std::map<Basis, std::vector<std::vector<Rational>>> from_m;
};

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Rational>>& M) {
    size_t n = M.size();
    std::vector<std::vector<Rational>> a = M;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const DegreeTables& degree_tables(int n) {
    static std::map<int, DegreeTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.parts = partitions_of(n);
    for (size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = static_cast<int>(i);
    size_t np = t.parts.size();
    int nvars = std::max(n, 1);

    auto expand_basis = [&](Basis b, const Partition& lam) -> Expansion {
        switch (b) {
            case Basis::m: return mono_expand(lam, nvars);
            case Basis::p: {
                Expansion acc = h_expand(0, nvars);
                for (int part : lam.parts()) acc = mul_expand(acc, p_expand(part, nvars));
                return acc;
            }
            case Basis::h: {
                Expansion acc = h_expand(0, nvars);
                for (int part : lam.parts()) acc = mul_expand(acc, h_expand(part, nvars));
                return acc;
            }
            case Basis::e: {
                Expansion acc = h_expand(0, nvars);
                for (int part : lam.parts()) acc = mul_expand(acc, e_expand(part, nvars));
                return acc;
            }
            default: throw std::logic_error("expand_basis");
        }
    };

    for (Basis b : {Basis::m, Basis::p, Basis::h, Basis::e}) {
        std::vector<std::vector<Rational>> M(np, std::vector<Rational>(np, Rational(0)));
        for (size_t col = 0; col < np; ++col) {
            auto mv = to_m_vector(expand_basis(b, t.parts[col]));
            for (const auto& [pp, c] : mv) M[t.index[pp]][col] = c;
        }
        t.to_m[b] = std::move(M);
    }
    // s_lambda = sum_rho chi^lambda(rho)/z_rho p_rho
    {
        std::vector<std::vector<Rational>> M(np, std::vector<Rational>(np, Rational(0)));
        const auto& Pm = t.to_m[Basis::p];
        for (size_t col = 0; col < np; ++col) {
            for (size_t rho = 0; rho < np; ++rho) {
                Int chi = sym_character(t.parts[col], t.parts[rho]);
                if (chi == 0) continue;
                Rational w(chi, t.parts[rho].z_stat());
                for (size_t row = 0; row < np; ++row)
                    M[row][col] += w * Pm[row][rho];
            }
        }
        t.to_m[Basis::s] = std::move(M);
    }
    for (Basis b : {Basis::m, Basis::p, Basis::h, Basis::e, Basis::s})
        t.from_m[b] = invert(t.to_m[b]);

    return cache.emplace(n, std::move(t)).first->second;
}

} // namespace

const std::map<Partition, Rational>& basis_column(Basis from, Basis to,
                                                  const Partition& lambda) {
    static std::map<std::tuple<Basis, Basis, Partition>, std::map<Partition, Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(from, to, lambda);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<Partition, Rational> col;
    if (from == to) {
        col[lambda] = 1;
    } else {
        const auto& t = degree_tables(lambda.size());
        int j = t.index.at(lambda);
        const auto& M = t.to_m.at(from);
        const auto& Inv = t.from_m.at(to);
        size_t np = t.parts.size();
        for (size_t row = 0; row < np; ++row) {
            Rational v(0);
            for (size_t mid = 0; mid < np; ++mid) v += Inv[row][mid] * M[mid][j];
            if (v != 0) col[t.parts[row]] = v;
        }
    }
    return cache.emplace(key, std::move(col)).first->second;
}

// ---------------------------------------------------------------------------
// SymFunc
// ---------------------------------------------------------------------------

SymFunc SymFunc::constant(int alphabets, const RatFun& c, Basis b) {
    SymFunc f(alphabets, b);
    if (!c.is_zero()) f.terms_[Key(alphabets)] = c;
    return f;
}

SymFunc SymFunc::basis_element(int alphabets, int alphabet, Basis b,
                               const Partition& lambda, const RatFun& coef) {
    SymFunc f(alphabets, b);
    Key key(alphabets);
    key[alphabet] = lambda;
    if (!coef.is_zero()) f.terms_[key] = coef;
    return f;
}

void SymFunc::add_term(const Key& key, const RatFun& c) {
    if (static_cast<int>(key.size()) != k_) throw std::invalid_argument("key size mismatch");
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

RatFun SymFunc::coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? RatFun() : it->second;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (k_ != o.k_) throw std::invalid_argument("alphabet mismatch");
    SymFunc rhs = (basis_ == o.basis_) ? o : o.converted(basis_);
    SymFunc r = *this;
    for (const auto& [key, c] : rhs.terms_) r.add_term(key, c);
    return r;
}

SymFunc SymFunc::operator-() const {
    SymFunc r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const SymFunc& o) const {
    if (k_ != o.k_) throw std::invalid_argument("alphabet mismatch");
    // multiply in the p basis: keys merge alphabet-wise
    SymFunc a = converted(Basis::p);
    SymFunc b = o.converted(Basis::p);
    SymFunc r(k_, Basis::p);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Key key(k_);
            for (int i = 0; i < k_; ++i) key[i] = ka[i].merged(kb[i]);
            r.add_term(key, ca * cb);
        }
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (k_ != o.k_) return false;
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return converted(Basis::m).terms_ == o.converted(Basis::m).terms_;
}

SymFunc SymFunc::scaled(const RatFun& c) const {
    SymFunc r(k_, Basis::m);
    r.basis_ = basis_;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [key, v] : r.terms_) v *= c;
    return r;
}

SymFunc SymFunc::scaled(const Rational& c) const { return scaled(RatFun(c)); }

SymFunc SymFunc::converted(const std::vector<Basis>& target) const {
    if (static_cast<int>(target.size()) != k_)
        throw std::invalid_argument("alphabet mismatch");
    SymFunc cur = *this;
    for (int a = 0; a < k_; ++a) {
        if (cur.basis_[a] == target[a]) continue;
        SymFunc next(k_, Basis::m);
        next.basis_ = cur.basis_;
        next.basis_[a] = target[a];
        for (const auto& [key, c] : cur.terms_) {
            const auto& col = basis_column(cur.basis_[a], target[a], key[a]);
            for (const auto& [pp, w] : col) {
                Key nk = key;
                nk[a] = pp;
                next.add_term(nk, c.scaled(w));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

SymFunc SymFunc::converted(Basis target) const {
    return converted(std::vector<Basis>(k_, target));
}

SymFunc SymFunc::adams(int d) const {
    if (d < 1) throw std::invalid_argument("adams: d must be >= 1");
    SymFunc p = converted(Basis::p);
    SymFunc r(k_, Basis::p);
    for (const auto& [key, c] : p.terms_) {
        Key nk(k_);
        for (int i = 0; i < k_; ++i) nk[i] = key[i].stretched(d);
        r.add_term(nk, c);
    }
    return r;
}

SymFunc SymFunc::diag_pleth_transform(const std::function<RatFun(int)>& c) const {
    if (k_ != 1) throw std::invalid_argument("diag_pleth_transform: single alphabet only");
    SymFunc p = converted(Basis::p);
    SymFunc r(1, Basis::p);
    for (const auto& [key, coef] : p.terms_) {
        RatFun v = coef;
        for (int part : key[0].parts()) v *= c(part);
        r.add_term(key, v);
    }
    return r;
}

SymFunc SymFunc::map_coefficients(const std::function<RatFun(const RatFun&)>& f) const {
    SymFunc r(k_, Basis::m);
    r.basis_ = basis_;
    for (const auto& [key, c] : terms_) {
        RatFun v = f(c);
        if (!v.is_zero()) r.terms_[key] = v;
    }
    return r;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < k_; ++i) {
            if (key[i].empty()) continue;
            os << "*" << static_cast<char>(basis_[i]) << "[" << key[i].str() << "]";
            if (k_ > 1) os << "@" << i;
        }
    }
    return os.str();
}

RatFun hall_pairing(const SymFunc& f, const SymFunc& g) {
    if (f.alphabets() != g.alphabets()) throw std::invalid_argument("alphabet mismatch");
    // <h_lambda, m_mu> = delta; an independent p-basis route is used in tests
    SymFunc fh = f.converted(Basis::h);
    SymFunc gm = g.converted(Basis::m);
    RatFun acc;
    for (const auto& [key, c] : fh.terms()) {
        RatFun other = gm.coefficient(key);
        if (!other.is_zero()) acc += c * other;
    }
    return acc;
}

} // namespace charstack
