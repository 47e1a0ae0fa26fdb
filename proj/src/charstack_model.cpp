#include "charstack/charstack_model.hpp"

#include <algorithm>
#include <sstream>

namespace charstack {

// ---------------------------------------------------------------------------
// EigenGroup: integer row echelon over Z for lattice membership
// ---------------------------------------------------------------------------

EigenGroup::EigenGroup(int rank, std::vector<std::vector<Int>> relations)
    : rank_(rank), relations_(std::move(relations)) {
    for (const auto& r : relations_)
        if (static_cast<int>(r.size()) != rank_)
            throw std::invalid_argument("relation vector of wrong length");
    // integer row reduction (Hermite-style): for each column, reduce all rows
    // by gcd combinations until at most one pivot row remains.
    std::vector<std::vector<Int>> rows = relations_;
    int col = 0;
    size_t fixed = 0;
    while (col < rank_ && fixed < rows.size()) {
        // find row with minimal nonzero |entry| in this column
        size_t best = rows.size();
        for (size_t i = fixed; i < rows.size(); ++i)
            if (rows[i][col] != 0 &&
                (best == rows.size() ||
                 abs(rows[i][col]) < abs(rows[best][col])))
                best = i;
        if (best == rows.size()) { ++col; continue; }
        std::swap(rows[fixed], rows[best]);
        bool again = false;
        for (size_t i = fixed + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Int f = rows[i][col] / rows[fixed][col];
            for (int j = 0; j < rank_; ++j) rows[i][j] -= f * rows[fixed][j];
            if (rows[i][col] != 0) again = true;
        }
        if (again) continue; // smaller remainder exists, loop again on same col
        if (rows[fixed][col] < 0)
            for (int j = 0; j < rank_; ++j) rows[fixed][j] = -rows[fixed][j];
        hnf_.push_back(rows[fixed]);
        pivot_.push_back(col);
        ++fixed;
        ++col;
    }
}

bool EigenGroup::is_identity(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != rank_)
        throw std::invalid_argument("group element of wrong length");
    std::vector<Int> w = v;
    for (size_t i = 0; i < hnf_.size(); ++i) {
        int c = pivot_[i];
        if (w[c] == 0) continue;
        if (w[c] % hnf_[i][c] != 0) return false;
        Int f = w[c] / hnf_[i][c];
        for (int j = 0; j < rank_; ++j) w[j] -= f * hnf_[i][j];
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// quiver construction
// ---------------------------------------------------------------------------

int StarQuiverData::vertex_index(int leg, int pos) const {
    for (int i = 0; i < nvert(); ++i)
        if (vertex[i].first == leg && vertex[i].second == pos) return i;
    throw std::out_of_range("vertex_index");
}

std::string StarQuiverData::vertex_name(int idx) const {
    if (idx == 0) return "0";
    std::ostringstream os;
    os << vertex[idx].first << ":" << vertex[idx].second;
    return os.str();
}

bool StarQuiverData::gamma_power_trivial(const DimVec& delta) const {
    std::vector<Int> acc(group.rank(), 0);
    for (int i = 0; i < nvert(); ++i)
        for (int j = 0; j < group.rank(); ++j)
            acc[j] += Int(delta[i]) * gamma[i][j];
    return group.is_identity(acc);
}

StarQuiverData build_star_quiver(const CharStackConfig& config) {
    if (config.punctures.empty())
        throw std::invalid_argument("at least one puncture required (use the identity class for k = 0)");
    StarQuiverData d;
    d.genus = config.genus;
    d.k = static_cast<int>(config.punctures.size());
    d.group = config.group;
    d.allow_empty = config.allow_empty;
    int r = config.group.rank();

    int n = -1;
    for (const auto& p : config.punctures) {
        if (p.eigenvalues.empty())
            throw std::invalid_argument("puncture without eigenvalues");
        int total = 0;
        for (const auto& [exp, mult] : p.eigenvalues) {
            if (static_cast<int>(exp.size()) != r)
                throw std::invalid_argument("eigenvalue exponent of wrong length");
            if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
            total += mult;
        }
        if (n < 0) n = total;
        else if (n != total)
            throw std::invalid_argument("multiplicity sums differ across punctures");
        // pairwise distinct in the group
        for (size_t a = 0; a < p.eigenvalues.size(); ++a)
            for (size_t b = a + 1; b < p.eigenvalues.size(); ++b) {
                std::vector<Int> diff(r);
                for (int j = 0; j < r; ++j)
                    diff[j] = p.eigenvalues[a].first[j] - p.eigenvalues[b].first[j];
                if (config.group.is_identity(diff))
                    throw std::invalid_argument("repeated eigenvalue within a puncture");
            }
    }

    d.vertex.push_back({0, 0});
    for (int i = 0; i < d.k; ++i) {
        int s = static_cast<int>(config.punctures[i].eigenvalues.size()) - 1;
        d.leg_len.push_back(s);
        for (int j = 1; j <= s; ++j) d.vertex.push_back({i + 1, j});
    }

    int nv = d.nvert();
    d.alpha.assign(nv, 0);
    d.gamma.assign(nv, std::vector<Int>(r, 0));
    d.alpha[0] = n;
    // gamma_0 = - sum_i gamma_{i,0}
    for (int i = 0; i < d.k; ++i)
        for (int j = 0; j < r; ++j)
            d.gamma[0][j] -= config.punctures[i].eigenvalues[0].first[j];
    for (int i = 0; i < d.k; ++i) {
        const auto& eig = config.punctures[i].eigenvalues;
        int s = d.leg_len[i];
        for (int j = 1; j <= s; ++j) {
            int idx = d.vertex_index(i + 1, j);
            int tail = 0;
            for (size_t h = j; h < eig.size(); ++h) tail += eig[h].second;
            d.alpha[idx] = tail;
            for (int c = 0; c < r; ++c)
                d.gamma[idx][c] = eig[j - 1].first[c] - eig[j].first[c];
        }
    }
    return d;
}

long euler_form(const StarQuiverData& data, const DimVec& a, const DimVec& b) {
    long acc = 0;
    for (int i = 0; i < data.nvert(); ++i) acc += static_cast<long>(a[i]) * b[i];
    acc -= static_cast<long>(data.genus) * a[0] * b[0];
    for (int leg = 1; leg <= data.k; ++leg)
        for (int pos = 1; pos <= data.leg_len[leg - 1]; ++pos) {
            int tail = data.vertex_index(leg, pos);
            int head = (pos == 1) ? 0 : data.vertex_index(leg, pos - 1);
            acc -= static_cast<long>(a[tail]) * b[head];
        }
    return acc;
}

namespace {

bool leg_monotone(const StarQuiverData& data, const DimVec& delta) {
    for (int leg = 1; leg <= data.k; ++leg) {
        int prev = delta[0];
        for (int pos = 1; pos <= data.leg_len[leg - 1]; ++pos) {
            int cur = delta[data.vertex_index(leg, pos)];
            if (cur > prev) return false;
            prev = cur;
        }
    }
    return true;
}

} // namespace

std::vector<DimVec> h_star(const StarQuiverData& data) {
    if (!data.gamma_power_trivial(data.alpha)) {
        if (!data.allow_empty)
            throw std::domain_error(
                "inconsistent parameters: determinant product of the classes is not 1");
        return {};
    }
    std::vector<DimVec> out;
    for (const DimVec& delta : boxed_vectors(data.alpha)) {
        if (!leg_monotone(data, delta)) continue;
        if (data.gamma_power_trivial(delta)) out.push_back(delta);
    }
    return out;
}

GenericityReport is_generic(const StarQuiverData& data) {
    GenericityReport rep;
    std::vector<DimVec> hs = h_star(data);
    for (const DimVec& d : hs)
        if (d != data.alpha) rep.nontrivial.push_back(d);
    rep.generic = rep.nontrivial.empty() && !hs.empty();
    for (size_t a = 0; a < rep.nontrivial.size() && !rep.complementary_pair; ++a)
        for (size_t b = a; b < rep.nontrivial.size(); ++b) {
            if (dim_add(rep.nontrivial[a], rep.nontrivial[b]) == data.alpha) {
                rep.complementary_pair = {rep.nontrivial[a], rep.nontrivial[b]};
                break;
            }
        }
    return rep;
}

MultiPartition leg_multipartition(const StarQuiverData& data, const DimVec& beta) {
    if (dim_is_zero(beta)) throw std::invalid_argument("leg_multipartition: beta = 0");
    if (!leg_monotone(data, beta))
        throw std::invalid_argument("leg_multipartition: beta not leg-monotone");
    MultiPartition mu;
    for (int leg = 1; leg <= data.k; ++leg) {
        std::vector<int> parts;
        int prev = beta[0];
        for (int pos = 1; pos <= data.leg_len[leg - 1]; ++pos) {
            int cur = beta[data.vertex_index(leg, pos)];
            if (prev - cur > 0) parts.push_back(prev - cur);
            prev = cur;
        }
        if (prev > 0) parts.push_back(prev);
        std::sort(parts.rbegin(), parts.rend());
        mu.emplace_back(parts);
    }
    return mu;
}

RatFun eseries_term(const StarQuiverData& data, const DimVec& beta) {
    MultiPartition mu = leg_multipartition(data, beta);
    RatFun H = hlrv_H(mu, data.genus);
    RatFun Eq = specialize_E(H); // in q, throws on parity violation
    RatFun q = RatFun::variable("q");
    return q * Eq / (q - RatFun(1));
}

RatFun eseries(const StarQuiverData& data) {
    std::vector<DimVec> hs = h_star(data);
    if (hs.empty()) return RatFun(); // allow_empty path
    GradedSeries<RatFun> series(data.alpha, RatFun(),
                                [](const RatFun& c, int d) { return c.adams_all_vars(d); });
    for (const DimVec& beta : hs) series.add(beta, eseries_term(data, beta));
    RatFun coeff = plexp(series).coefficient(data.alpha);
    long e = euler_form(data, data.alpha, data.alpha);
    return RatFun::variable("q", static_cast<int>(-e)) * coeff;
}

namespace {

RatFun mixed_term(const StarQuiverData& data, const DimVec& beta) {
    MultiPartition mu = leg_multipartition(data, beta);
    RatFun H = hlrv_H(mu, data.genus);
    RatFun in_st = specialize_mixed(H); // variables s (s^2 = q) and t
    RatFun qt2 = RatFun::variable("s", 2) * RatFun::variable("t", 2);
    RatFun val = qt2 * in_st / (qt2 - RatFun(1));
    if (!val.even_in("s")) throw std::domain_error("not rational in q");
    return val.halved_var("s", "q");
}

} // namespace

RatFun mixed_poincare(const StarQuiverData& data) {
    std::vector<DimVec> hs = h_star(data);
    if (hs.empty()) return RatFun();
    GradedSeries<RatFun> series(data.alpha, RatFun(),
                                [](const RatFun& c, int d) { return c.adams_all_vars(d); });
    for (const DimVec& beta : hs) series.add(beta, mixed_term(data, beta));
    RatFun coeff = plexp(series).coefficient(data.alpha);
    long e = euler_form(data, data.alpha, data.alpha);
    RatFun qt2 = RatFun::variable("q") * RatFun::variable("t", 2);
    RatFun result = qt2.pow(static_cast<int>(-e)) * coeff;
    // the computed series is H_c(q, -t); flip the sign of t for the paper's
    // H_c(q, t) convention
    std::map<std::string, RatFun> flip{{"t", -RatFun::variable("t")}};
    return result.substituted(flip);
}

} // namespace charstack
