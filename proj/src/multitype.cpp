#include "charstack/multitype.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace charstack {

DimVec dim_add(const DimVec& a, const DimVec& b) {
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVec dim_scale(const DimVec& a, int d) {
    DimVec r = a;
    for (int& x : r) x *= d;
    return r;
}

bool dim_leq(const DimVec& a, const DimVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool dim_is_zero(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool MultiType::Block::operator<(const Block& o) const {
    if (d != o.d) return d < o.d;
    return lam < o.lam;
}

void MultiType::canonicalize() { std::sort(blocks.begin(), blocks.end()); }

DimVec MultiType::size(int nvert) const {
    DimVec s(nvert, 0);
    for (const auto& b : blocks)
        for (int i = 0; i < nvert; ++i) s[i] += b.d * b.lam[i].size();
    return s;
}

namespace {

template <class B>
Int weight_of(const std::vector<B>& blocks) {
    Int w = 1;
    size_t i = 0;
    while (i < blocks.size()) {
        size_t j = i;
        while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
        int mult = static_cast<int>(j - i);
        w *= int_pow(Int(blocks[i].d), mult) * factorial(mult);
        i = j;
    }
    return w;
}

} // namespace

Int MultiType::weight() const { return weight_of(blocks); }

MultiType MultiType::adams(int d) const {
    MultiType r = *this;
    for (auto& b : r.blocks) b.d *= d;
    r.canonicalize();
    return r;
}

MultiType MultiType::merged(const MultiType& o) const {
    MultiType r = *this;
    r.blocks.insert(r.blocks.end(), o.blocks.begin(), o.blocks.end());
    r.canonicalize();
    return r;
}

std::string MultiType::str() const {
    std::ostringstream os;
    for (const auto& b : blocks) os << "(" << b.d << "," << multipartition_str(b.lam) << ")";
    return os.str();
}

void SemisimpleMultiType::canonicalize() { std::sort(blocks.begin(), blocks.end()); }

DimVec SemisimpleMultiType::size(int nvert) const {
    DimVec s(nvert, 0);
    for (const auto& b : blocks)
        for (int i = 0; i < nvert; ++i) s[i] += b.d * b.beta[i];
    return s;
}

Int SemisimpleMultiType::weight() const { return weight_of(blocks); }

SemisimpleMultiType SemisimpleMultiType::adams(int d) const {
    SemisimpleMultiType r = *this;
    for (auto& b : r.blocks) b.d *= d;
    r.canonicalize();
    return r;
}

SemisimpleMultiType SemisimpleMultiType::merged(const SemisimpleMultiType& o) const {
    SemisimpleMultiType r = *this;
    r.blocks.insert(r.blocks.end(), o.blocks.begin(), o.blocks.end());
    r.canonicalize();
    return r;
}

std::string SemisimpleMultiType::str() const {
    std::ostringstream os;
    for (const auto& b : blocks) {
        os << "(" << b.d << ",[";
        for (size_t i = 0; i < b.beta.size(); ++i) {
            if (i) os << ",";
            os << b.beta[i];
        }
        os << "])";
    }
    return os.str();
}

bool SemisimpleMultiType::of_level(const std::function<bool(const DimVec&)>& V) const {
    for (const auto& b : blocks)
        if (!V(b.beta)) return false;
    return true;
}

SemisimpleMultiType semisimplify(const MultiType& omega) {
    SemisimpleMultiType out;
    for (const auto& b : omega.blocks) {
        SemisimpleMultiType::Block sb;
        sb.d = b.d;
        sb.beta.clear();
        for (const auto& p : b.lam) sb.beta.push_back(p.size());
        out.blocks.push_back(sb);
    }
    out.canonicalize();
    return out;
}

SemisimpleMultiType omega_alpha(const DimVec& alpha) {
    SemisimpleMultiType s;
    s.blocks.push_back({1, alpha});
    return s;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

namespace {

// all multipartitions with |lam| = beta, vertex count = beta.size()
std::vector<MultiPartition> multipartitions_of(const DimVec& beta) {
    std::vector<MultiPartition> out{{}};
    out[0].resize(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) {
        std::vector<MultiPartition> next;
        for (const auto& prefix : out)
            for (const Partition& p : partitions_of(beta[i])) {
                MultiPartition mp = prefix;
                mp[i] = p;
                next.push_back(std::move(mp));
            }
        out = std::move(next);
    }
    return out;
}

// nonzero vectors beta <= cap, ascending lexicographic
std::vector<DimVec> nonzero_boxed(const DimVec& cap) {
    std::vector<DimVec> out;
    DimVec cur(cap.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cap.size()) {
            if (!dim_is_zero(cur)) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= cap[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    return out;
}

template <class Block>
void enumerate_multisets(const std::vector<std::pair<Block, DimVec>>& pool, size_t start,
                         const DimVec& remaining, std::vector<Block>& cur,
                         std::vector<std::vector<Block>>& out) {
    if (dim_is_zero(remaining)) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
        if (!dim_leq(pool[i].second, remaining)) continue;
        cur.push_back(pool[i].first);
        DimVec rest(remaining.size());
        for (size_t j = 0; j < rest.size(); ++j) rest[j] = remaining[j] - pool[i].second[j];
        enumerate_multisets(pool, i, rest, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<MultiType> enumerate_multitypes(const DimVec& alpha) {
    if (dim_is_zero(alpha)) throw std::invalid_argument("enumerate_multitypes: alpha = 0");
    int maxd = *std::max_element(alpha.begin(), alpha.end());
    std::vector<std::pair<MultiType::Block, DimVec>> pool;
    for (int d = 1; d <= maxd; ++d) {
        DimVec cap(alpha.size());
        for (size_t i = 0; i < alpha.size(); ++i) cap[i] = alpha[i] / d;
        for (const DimVec& beta : nonzero_boxed(cap))
            for (const MultiPartition& lam : multipartitions_of(beta))
                pool.push_back({{d, lam}, dim_scale(beta, d)});
    }
    std::sort(pool.begin(), pool.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<MultiType::Block>> raw;
    std::vector<MultiType::Block> cur;
    enumerate_multisets(pool, 0, alpha, cur, raw);
    std::vector<MultiType> out;
    out.reserve(raw.size());
    for (auto& blocks : raw) {
        MultiType m;
        m.blocks = std::move(blocks);
        m.canonicalize();
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SemisimpleMultiType> enumerate_semisimple_multitypes(const DimVec& alpha) {
    if (dim_is_zero(alpha))
        throw std::invalid_argument("enumerate_semisimple_multitypes: alpha = 0");
    int maxd = *std::max_element(alpha.begin(), alpha.end());
    std::vector<std::pair<SemisimpleMultiType::Block, DimVec>> pool;
    for (int d = 1; d <= maxd; ++d) {
        DimVec cap(alpha.size());
        for (size_t i = 0; i < alpha.size(); ++i) cap[i] = alpha[i] / d;
        for (const DimVec& beta : nonzero_boxed(cap))
            pool.push_back({{d, beta}, dim_scale(beta, d)});
    }
    std::sort(pool.begin(), pool.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<SemisimpleMultiType::Block>> raw;
    std::vector<SemisimpleMultiType::Block> cur;
    enumerate_multisets(pool, 0, alpha, cur, raw);
    std::vector<SemisimpleMultiType> out;
    for (auto& blocks : raw) {
        SemisimpleMultiType m;
        m.blocks = std::move(blocks);
        m.canonicalize();
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// scalar invariants
// ---------------------------------------------------------------------------

RatFun P_poly(const SemisimpleMultiType& nu, const std::string& var) {
    RatFun out(1);
    for (const auto& b : nu.blocks)
        out *= RatFun::variable(var, b.d) - RatFun(1);
    return out;
}

Int C_o(const SemisimpleMultiType& nu) {
    if (nu.blocks.empty()) return 1;
    int d = nu.blocks[0].d;
    for (const auto& b : nu.blocks)
        if (b.d != d) return 0;
    int r = static_cast<int>(nu.blocks.size());
    Int val = moebius(d);
    val *= int_pow(Int(d), r - 1);
    if ((r - 1) % 2 != 0) val = -val;
    val *= factorial(r - 1);
    return val;
}

RatFun H_dual(const MultiType& omega, int nvert, const std::string& var) {
    DimVec alpha = omega.size(nvert);
    long exp_num = 0;
    for (int a : alpha) exp_num += static_cast<long>(a) * (a - 1) / 2;
    long n_omega = 0;
    int f = 0;
    RatFun hooks(1);
    for (const auto& b : omega.blocks) {
        n_omega += static_cast<long>(b.d) * multipartition_n_stat(b.lam);
        for (const auto& p : b.lam) {
            f += p.size();
            RatFun hp = p.hook_polynomial(var); // in `var`
            // arguments t^{d_j}
            hooks *= hp.adams_all_vars(b.d);
        }
    }
    RatFun sign((f % 2 == 0) ? Rational(1) : Rational(-1));
    RatFun tpow = RatFun::variable(var, static_cast<int>(exp_num - n_omega));
    return sign / (tpow * hooks);
}

// ---------------------------------------------------------------------------
// mergings
// ---------------------------------------------------------------------------

namespace {

std::vector<int> divisors_of(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

void set_partitions_rec(size_t i, size_t n, std::vector<std::vector<int>>& cur,
                        std::vector<std::vector<std::vector<int>>>& out) {
    if (i == n) {
        out.push_back(cur);
        return;
    }
    for (auto& g : cur) {
        g.push_back(static_cast<int>(i));
        set_partitions_rec(i + 1, n, cur, out);
        g.pop_back();
    }
    cur.push_back({static_cast<int>(i)});
    set_partitions_rec(i + 1, n, cur, out);
    cur.pop_back();
}

} // namespace

std::vector<Merging> enumerate_mergings(const SemisimpleMultiType& nu) {
    size_t t = nu.blocks.size();
    std::vector<std::vector<std::vector<int>>> parts;
    std::vector<std::vector<int>> cur;
    set_partitions_rec(0, t, cur, parts);

    std::vector<Merging> out;
    for (const auto& grouping : parts) {
        // per group: common divisors of the block degrees
        std::vector<std::vector<int>> choices;
        bool feasible = true;
        for (const auto& g : grouping) {
            int gcdd = 0;
            for (int h : g) gcdd = gcd_nonneg(gcdd, nu.blocks[h].d);
            auto divs = divisors_of(gcdd);
            if (divs.empty()) { feasible = false; break; }
            choices.push_back(divs);
        }
        if (!feasible) continue;
        std::vector<size_t> pick(grouping.size(), 0);
        while (true) {
            Merging m;
            m.groups = grouping;
            m.fiber = 1;
            m.moebius = 1;
            bool nonzero = true;
            for (size_t j = 0; j < grouping.size(); ++j) {
                int dj = choices[j][pick[j]];
                m.divisors.push_back(dj);
                DimVec beta(nu.blocks.empty() ? 0 : nu.blocks[0].beta.size(), 0);
                SemisimpleMultiType group_type;
                for (int h : grouping[j]) {
                    int ratio = nu.blocks[h].d / dj;
                    beta = dim_add(beta, dim_scale(nu.blocks[h].beta, ratio));
                    group_type.blocks.push_back({ratio, nu.blocks[h].beta});
                }
                group_type.canonicalize();
                Int co = C_o(group_type);
                if (co == 0) { nonzero = false; break; }
                m.moebius *= co;
                m.fiber *= int_pow(Int(dj), static_cast<int>(grouping[j].size()) - 1);
                m.coarse.blocks.push_back({dj, beta});
            }
            if (nonzero) {
                m.coarse.canonicalize();
                out.push_back(std::move(m));
            }
            // next divisor combination
            size_t j = 0;
            while (j < pick.size()) {
                if (++pick[j] < choices[j].size()) break;
                pick[j] = 0;
                ++j;
            }
            if (j == pick.size()) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

DualLogFamily family_unit(int nvert) {
    DualLogFamily f;
    f.name = "unit";
    f.nvert = nvert;
    f.eval = [](const MultiType&) { return RatFun(1); };
    return f;
}

DualLogFamily family_genus(int g, int nvert) {
    DualLogFamily f;
    f.name = "genus" + std::to_string(g);
    f.nvert = nvert;
    f.eval = [g, nvert](const MultiType& omega) {
        RatFun hv = H_dual(omega, nvert);
        DimVec alpha = omega.size(nvert);
        long sq = 0;
        for (int a : alpha) sq += static_cast<long>(a) * a;
        RatFun tpow = RatFun::variable("t", static_cast<int>((1 - g) * sq));
        return hv.pow(2 - 2 * g) * tpow;
    };
    return f;
}

RatFun kronecker_C(const Partition& lambda, const Partition& mu) {
    if (lambda.size() < mu.size()) return RatFun();
    int nl = lambda.size(), nm = mu.size();
    int pref = nl * nm - nl * nl - nm * nm;
    RatFun acc;
    for (const Partition& nu : partitions_of(nl - nm)) {
        Int c = lr_coefficient(lambda, mu, nu);
        if (c == 0) continue;
        int e = nu.size() * (nu.size() - 1) / 2 - nu.n_stat();
        RatFun term{Rational(c)};
        if (nu.size() % 2 != 0) term = -term;
        term /= RatFun::variable("t", e) * nu.hook_polynomial("t");
        acc += term;
    }
    return acc / RatFun::variable("t", pref);
}

DualLogFamily family_kronecker() {
    DualLogFamily f;
    f.name = "kronecker";
    f.nvert = 2;
    f.eval = [](const MultiType& omega) {
        RatFun out(1);
        for (const auto& b : omega.blocks) {
            if (b.lam.size() != 2)
                throw std::invalid_argument("kronecker family needs two vertices");
            RatFun c = kronecker_C(b.lam[0], b.lam[1]);
            if (c.is_zero()) return RatFun();
            MultiType single;
            single.blocks.push_back({1, b.lam});
            RatFun hv = H_dual(single, 2);
            out *= (c * hv).adams_all_vars(b.d); // arguments t^{d_j}
        }
        return out;
    };
    return f;
}

// ---------------------------------------------------------------------------
// F_{alpha,V} and identity checks
// ---------------------------------------------------------------------------

namespace {

// cache mergings per semisimple type within one F_level evaluation
struct MergingSums {
    // sum over mergings of level V of fiber * P_coarse(t) * moebius
    RatFun level_sum(const SemisimpleMultiType& nu, const LevelPredicate& V) {
        auto it = cache.find(nu);
        if (it == cache.end())
            it = cache.emplace(nu, enumerate_mergings(nu)).first;
        RatFun acc;
        for (const Merging& m : it->second) {
            if (!m.coarse.of_level(V)) continue;
            RatFun term = P_poly(m.coarse);
            term = term.scaled(Rational(m.fiber * m.moebius));
            acc += term;
        }
        return acc;
    }
    std::map<SemisimpleMultiType, std::vector<Merging>> cache;
};

} // namespace

RatFun F_level(const DualLogFamily& family, const DimVec& alpha, const LevelPredicate& V) {
    if (dim_is_zero(alpha)) throw std::invalid_argument("F_level: alpha = 0");
    MergingSums sums;
    std::map<SemisimpleMultiType, RatFun> family_sum; // sum of Ctilde/w per ss class
    for (const MultiType& omega : enumerate_multitypes(alpha)) {
        RatFun c = family.eval(omega);
        if (c.is_zero()) continue;
        c = c.scaled(Rational(1, omega.weight()));
        SemisimpleMultiType ss = semisimplify(omega);
        auto [it, fresh] = family_sum.emplace(ss, c);
        if (!fresh) it->second += c;
    }
    RatFun out;
    for (const auto& [ss, c] : family_sum) {
        RatFun ms = sums.level_sum(ss, V);
        if (!ms.is_zero()) out += c * ms;
    }
    return out;
}

RatFun F_gen(const DualLogFamily& family, const DimVec& alpha) {
    return F_level(family, alpha,
                   [&alpha](const DimVec& b) { return b == alpha; });
}

Rational regular_point_count(const SemisimpleMultiType& nu, long q) {
    Rational acc(0);
    RatFun qv{Rational(q)};
    std::map<std::string, RatFun> at_q{{"t", qv}};
    for (const Merging& m : enumerate_mergings(nu)) {
        RatFun p = P_poly(m.coarse).substituted(at_q);
        acc += p.constant_value() * Rational(m.fiber * m.moebius);
    }
    return acc;
}

std::vector<DimVec> boxed_vectors(const DimVec& box) {
    std::vector<DimVec> out;
    DimVec cur(box.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == box.size()) {
            if (!dim_is_zero(cur)) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= box[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    return out;
}

std::vector<IdentityCheck> verify_plethystic_identity(const DualLogFamily& family,
                                                      const DimVec& box,
                                                      const LevelPredicate& V) {
    GradedSeries<RatFun> inner(box, RatFun(),
                               [](const RatFun& c, int d) { return c.adams_all_vars(d); });
    for (const DimVec& beta : boxed_vectors(box))
        if (V(beta)) inner.add(beta, F_gen(family, beta));
    GradedSeries<RatFun> lhs = plexp(inner);
    std::vector<IdentityCheck> out;
    for (const DimVec& alpha : boxed_vectors(box)) {
        IdentityCheck chk;
        chk.alpha = alpha;
        chk.lhs = lhs.coefficient(alpha);
        chk.rhs = F_level(family, alpha, V);
        chk.pass = chk.lhs == chk.rhs;
        out.push_back(std::move(chk));
    }
    return out;
}

IdentityCheck char_sum_vs_plexp(const DualLogFamily& family, const DimVec& alpha,
                                const std::vector<DimVec>& eta_level) {
    LevelPredicate V = [&eta_level](const DimVec& b) {
        return std::find(eta_level.begin(), eta_level.end(), b) != eta_level.end();
    };
    GradedSeries<RatFun> inner(alpha, RatFun(),
                               [](const RatFun& c, int d) { return c.adams_all_vars(d); });
    for (const DimVec& beta : eta_level)
        if (dim_leq(beta, alpha) && !dim_is_zero(beta))
            inner.add(beta, F_gen(family, beta));
    GradedSeries<RatFun> lhs = plexp(inner);
    IdentityCheck chk;
    chk.alpha = alpha;
    chk.lhs = lhs.coefficient(alpha);
    chk.rhs = F_level(family, alpha, V);
    chk.pass = chk.lhs == chk.rhs;
    return chk;
}

} // namespace charstack
