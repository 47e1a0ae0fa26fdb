#include "charstack/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace charstack {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(c);
}

std::vector<CellStats> Partition::cell_stats() const {
    std::vector<CellStats> out;
    Partition conj = conjugate();
    for (int i = 0; i < length(); ++i) {
        for (int j = 0; j < parts_[i]; ++j) {
            CellStats cs;
            cs.arm = parts_[i] - j - 1;
            cs.leg = conj.parts()[j] - i - 1;
            cs.hook = cs.arm + cs.leg + 1;
            out.push_back(cs);
        }
    }
    return out;
}

Int Partition::z_stat() const {
    std::map<int, int> mult;
    for (int p : parts_) mult[p]++;
    Int z = 1;
    for (auto [j, m] : mult) z *= int_pow(Int(j), m) * factorial(m);
    return z;
}

int Partition::n_stat() const {
    int n = 0;
    for (int i = 0; i < length(); ++i) n += i * parts_[i];
    return n;
}

RatFun Partition::hook_polynomial(const std::string& var) const {
    RatFun h(1);
    for (const auto& cs : cell_stats())
        h *= RatFun(1) - RatFun::variable(var, cs.hook);
    return h;
}

Partition Partition::stretched(int d) const {
    std::vector<int> p = parts_;
    for (int& x : p) x *= d;
    return Partition(p);
}

Partition Partition::merged(const Partition& o) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), o.parts_.begin(), o.parts_.end());
    std::sort(p.rbegin(), p.rend());
    return Partition(p);
}

bool Partition::dominated_by(const Partition& o) const {
    int a = 0, b = 0;
    int len = std::max(length(), o.length());
    for (int i = 0; i < len; ++i) {
        a += part(i);
        b += o.part(i);
        if (a > b) return false;
    }
    return true;
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << "+";
        os << parts_[i];
    }
    return os.str();
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        std::vector<int> p = cur;
        std::sort(p.rbegin(), p.rend());
        out.emplace_back(p);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
    } else {
        std::vector<int> cur;
        gen_partitions(n, n, cur, out);
        std::sort(out.begin(), out.end()); // lexicographic
    }
    return cache.emplace(n, std::move(out)).first->second;
}

Partition row_partition(int n) {
    return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition column_partition(int n) {
    return n == 0 ? Partition() : Partition(std::vector<int>(n, 1));
}

namespace {

// expansions of s_lambda * (products of h_r) in the Schur basis
using SchurVec = std::map<Partition, Int>;

// Pieri: s_lambda * h_r = sum over mu obtained by adding a horizontal
// r-strip.
void pieri_row(const Partition& lambda, int r, SchurVec& out, const Int& coef) {
    int rows = lambda.length() + 1;
    std::vector<int> mu(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == rows) {
            if (remaining == 0) {
                std::vector<int> p;
                for (int x : mu)
                    if (x > 0) p.push_back(x);
                out[Partition(p)] += coef;
            }
            return;
        }
        int lo = lambda.part(i);
        int hi = (i == 0) ? lambda.part(0) + remaining
                          : std::min(lambda.part(i - 1), lambda.part(i) + remaining);
        for (int v = lo; v <= hi; ++v) {
            if (i > 0 && v > mu[i - 1]) break;
            mu[i] = v;
            rec(i + 1, remaining - (v - lo));
        }
        mu[i] = lambda.part(i);
    };
    rec(0, r);
}

SchurVec schur_times_h(const SchurVec& f, int r) {
    if (r == 0) return f;
    SchurVec out;
    for (const auto& [lam, c] : f) pieri_row(lam, r, out, c);
    return out;
}

} // namespace

Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    // s_mu = det(h_{mu_i - i + j}) expanded by Leibniz over S_l
    int l = mu.length();
    if (l == 0) return nu == lambda ? Int(1) : Int(0);
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    Int total = 0;
    do {
        int sign = 1;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        bool ok = true;
        std::vector<int> rows(l);
        for (int i = 0; i < l && ok; ++i) {
            rows[i] = mu.parts()[i] - (i + 1) + (perm[i] + 1);
            if (rows[i] < 0) ok = false;
        }
        if (!ok) continue;
        SchurVec acc{{lambda, Int(1)}};
        for (int i = 0; i < l; ++i) acc = schur_times_h(acc, rows[i]);
        auto it = acc.find(nu);
        if (it != acc.end()) total += sign * it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace {

Int mn_rec(std::vector<int> lambda, std::vector<int> rho, size_t ri,
           std::map<std::pair<std::vector<int>, size_t>, Int>* memo,
           const std::vector<int>* rho_full);

} // namespace

Int sym_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("sym_character: size mismatch");
    std::map<std::pair<std::vector<int>, size_t>, Int> memo;
    std::vector<int> rv = rho.parts();
    return mn_rec(lambda.parts(), rv, 0, &memo, &rv);
}

namespace {

// Murnaghan-Nakayama: remove a border strip of length rho[ri] from lambda in
// every possible way.
Int mn_rec(std::vector<int> lambda, std::vector<int> rho, size_t ri,
           std::map<std::pair<std::vector<int>, size_t>, Int>* memo,
           const std::vector<int>* rho_full) {
    if (ri == rho.size()) return lambda.empty() ? Int(1) : Int(0);
    auto key = std::make_pair(lambda, ri);
    auto found = memo->find(key);
    if (found != memo->end()) return found->second;
    int r = rho[ri];
    Int total = 0;
    int rows = static_cast<int>(lambda.size());
    // border strip starting at row i: use beta-number trick
    // lambda_i - i values are distinct; removing a strip of length r means
    // finding i with (lambda_i - i) - r not among the others.
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda[i] - i;
    for (int i = 0; i < rows; ++i) {
        int target = beta[i] - r;
        bool clash = false;
        for (int j = 0; j < rows; ++j)
            if (j != i && beta[j] == target) { clash = true; break; }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        // height of the strip = number of positions i moved past
        int moved = 0;
        for (int j = 0; j < rows; ++j)
            if (j != i && beta[j] > target && beta[j] < beta[i]) moved++;
        std::vector<int> nl;
        for (int j = 0; j < rows; ++j) {
            int part = nb[j] + j;
            if (part > 0) nl.push_back(part);
            else if (part < 0) { nl.clear(); break; }
        }
        bool valid = true;
        for (size_t j = 0; j + 1 < nl.size(); ++j)
            if (nl[j] < nl[j + 1]) { valid = false; break; }
        if (!valid) continue;
        int sum = 0;
        for (int x : nl) sum += x;
        int expect = 0;
        for (int x : lambda) expect += x;
        if (sum != expect - r) continue;
        Int sub = mn_rec(nl, rho, ri + 1, memo, rho_full);
        total += (moved % 2 == 0 ? sub : -sub);
    }
    memo->emplace(key, total);
    return total;
}

} // namespace

int multipartition_n_stat(const MultiPartition& mp) {
    int n = 0;
    for (const auto& p : mp) n += p.n_stat();
    return n;
}

std::string multipartition_str(const MultiPartition& mp) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < mp.size(); ++i) {
        if (i) os << ";";
        os << mp[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace charstack
