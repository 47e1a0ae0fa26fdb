#include "charstack/ffcount.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace charstack {

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Int gl_order(int n, long q) {
    Int qn = int_pow(Int(q), n);
    Int out = 1;
    for (int i = 0; i < n; ++i) out *= qn - int_pow(Int(q), i);
    return out;
}

namespace {

long powmod(long base, long exp, long q) {
    base %= q;
    if (base < 0) base += q;
    long r = 1;
    long e = exp % (q - 1);
    if (e < 0) e += q - 1;
    while (e) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return r;
}

long value_of(const std::vector<long>& gens, const std::vector<Int>& exp, long q) {
    long v = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        long e = (exp[i] % (q - 1)).convert_to<long>();
        v = v * powmod(gens[i], e, q) % q;
    }
    return v;
}

constexpr long kGuard = 100000000L; // elementary-check budget

// n x n matrices over F_q packed as an integer key in base q
struct MatSpace {
    int n;
    long q;
    long count; // q^{n*n}

    MatSpace(int n_, long q_) : n(n_), q(q_) {
        count = 1;
        for (int i = 0; i < n * n; ++i) {
            if (count > kGuard) throw std::domain_error("guard exceeded");
            count *= q;
        }
    }

    std::vector<long> unpack(long key) const {
        std::vector<long> m(n * n);
        for (int i = 0; i < n * n; ++i) {
            m[i] = key % q;
            key /= q;
        }
        return m;
    }

    long pack(const std::vector<long>& m) const {
        long key = 0;
        for (int i = n * n - 1; i >= 0; --i) key = key * q + m[i];
        return key;
    }

    std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> c(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                long av = a[i * n + l];
                if (!av) continue;
                for (int j = 0; j < n; ++j)
                    c[i * n + j] = (c[i * n + j] + av * b[l * n + j]) % q;
            }
        return c;
    }

    long det(const std::vector<long>& m0) const {
        std::vector<long> m = m0;
        long d = 1;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (m[r * n + col] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            if (piv != col) {
                for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
                d = (q - d) % q;
            }
            long inv = powmod(m[col * n + col], q - 2, q);
            d = d * m[col * n + col] % q;
            for (int r = col + 1; r < n; ++r) {
                long f = m[r * n + col] * inv % q;
                if (!f) continue;
                for (int j = col; j < n; ++j)
                    m[r * n + j] = (m[r * n + j] + (q - f) * m[col * n + j]) % q;
            }
        }
        return d;
    }

    std::vector<long> inverse(const std::vector<long>& m0) const {
        std::vector<long> m = m0;
        std::vector<long> inv(n * n, 0);
        for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (m[r * n + col] != 0) { piv = r; break; }
            if (piv < 0) throw std::domain_error("singular matrix");
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(m[piv * n + j], m[col * n + j]);
                    std::swap(inv[piv * n + j], inv[col * n + j]);
                }
            long s = powmod(m[col * n + col], q - 2, q);
            for (int j = 0; j < n; ++j) {
                m[col * n + j] = m[col * n + j] * s % q;
                inv[col * n + j] = inv[col * n + j] * s % q;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                long f = m[r * n + col];
                if (!f) continue;
                for (int j = 0; j < n; ++j) {
                    m[r * n + j] = (m[r * n + j] + (q - f) * m[col * n + j] % q) % q;
                    inv[r * n + j] = (inv[r * n + j] + (q - f) * inv[col * n + j] % q) % q;
                }
            }
        }
        return inv;
    }

    std::vector<long> identity() const {
        std::vector<long> m(n * n, 0);
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        return m;
    }

    std::vector<long> scalar(long c) const {
        std::vector<long> m(n * n, 0);
        c %= q;
        if (c < 0) c += q;
        for (int i = 0; i < n; ++i) m[i * n + i] = c;
        return m;
    }
};

// elementary symmetric functions of the eigenvalue multiset = char poly
std::vector<long> char_poly_of_eigs(const std::vector<long>& eigs, long q) {
    std::vector<long> e(eigs.size() + 1, 0);
    e[0] = 1;
    for (long ev : eigs)
        for (int i = static_cast<int>(eigs.size()); i >= 1; --i)
            e[i] = (e[i] + ev * e[i - 1]) % q;
    return e;
}

std::vector<long> char_poly(const MatSpace& ms, const std::vector<long>& m) {
    // Leverrier/Faddeev is overkill at n <= 3: use traces of exterior powers
    int n = ms.n;
    long q = ms.q;
    std::vector<long> e(n + 1, 0);
    e[0] = 1;
    if (n == 1) {
        e[1] = m[0] % q;
    } else if (n == 2) {
        e[1] = (m[0] + m[3]) % q;
        e[2] = ms.det(m);
    } else if (n == 3) {
        e[1] = (m[0] + m[4] + m[8]) % q;
        long m01 = (m[0] * m[4] - m[1] * m[3]) % q;
        long m02 = (m[0] * m[8] - m[2] * m[6]) % q;
        long m12 = (m[4] * m[8] - m[5] * m[7]) % q;
        e[2] = ((m01 + m02 + m12) % q + q) % q;
        e[3] = ms.det(m);
    } else {
        throw std::domain_error("guard exceeded");
    }
    for (auto& x : e) x = (x % q + q) % q;
    return e;
}

// The realized classes are regular-or-central semisimple with prescribed
// distinct eigenvalues: membership is char-poly equality plus
// diagonalizability. For distinct eigenvalues char poly suffices; for a
// repeated eigenvalue block the minimal polynomial must be squarefree.
struct SemisimpleClass {
    std::vector<long> eigs; // with multiplicity
    std::vector<long> cpoly;
    bool distinct = true;
    std::vector<long> distinct_eigs;

    bool contains(const MatSpace& ms, const std::vector<long>& m) const {
        if (char_poly(ms, m) != cpoly) return false;
        if (distinct) return true;
        // check prod (m - e) = 0 over distinct eigenvalues
        std::vector<long> acc = ms.identity();
        for (long e : distinct_eigs) {
            std::vector<long> shifted = m;
            for (int i = 0; i < ms.n; ++i)
                shifted[i * ms.n + i] = (shifted[i * ms.n + i] + ms.q - e) % ms.q;
            acc = ms.mul(acc, shifted);
        }
        return std::all_of(acc.begin(), acc.end(), [](long x) { return x == 0; });
    }
};

SemisimpleClass make_class(const std::vector<long>& eigs, long q) {
    SemisimpleClass c;
    c.eigs = eigs;
    c.cpoly = char_poly_of_eigs(eigs, q);
    std::vector<long> d = eigs;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    c.distinct = d.size() == eigs.size();
    c.distinct_eigs = d;
    return c;
}

std::vector<long> enumerate_class(const MatSpace& ms, const SemisimpleClass& cls) {
    std::vector<long> out;
    for (long key = 0; key < ms.count; ++key) {
        std::vector<long> m = ms.unpack(key);
        if (cls.contains(ms, m)) out.push_back(key);
    }
    return out;
}

// distribution of commutators [A,B] over GL_n(F_q)^2
std::vector<Int> commutator_distribution(const MatSpace& ms) {
    Int order = gl_order(ms.n, ms.q);
    if (order * order > kGuard) throw std::domain_error("guard exceeded");
    std::vector<long> units;
    for (long key = 0; key < ms.count; ++key)
        if (ms.det(ms.unpack(key)) != 0) units.push_back(key);
    std::vector<Int> dist(ms.count, 0);
    std::vector<std::vector<long>> mats, invs;
    mats.reserve(units.size());
    for (long key : units) {
        mats.push_back(ms.unpack(key));
        invs.push_back(ms.inverse(mats.back()));
    }
    for (size_t a = 0; a < mats.size(); ++a)
        for (size_t b = 0; b < mats.size(); ++b) {
            auto ab = ms.mul(mats[a], mats[b]);
            auto comm = ms.mul(ab, ms.mul(invs[a], invs[b]));
            dist[ms.pack(comm)] += 1;
        }
    return dist;
}

std::vector<Int> convolve(const MatSpace& ms, const std::vector<Int>& a,
                          const std::vector<Int>& b) {
    std::vector<Int> out(ms.count, 0);
    std::vector<long> support_a, support_b;
    for (long k = 0; k < ms.count; ++k) {
        if (a[k] != 0) support_a.push_back(k);
        if (b[k] != 0) support_b.push_back(k);
    }
    if (static_cast<long>(support_a.size()) * static_cast<long>(support_b.size()) > kGuard)
        throw std::domain_error("guard exceeded");
    for (long ka : support_a) {
        auto ma = ms.unpack(ka);
        for (long kb : support_b) {
            auto prod = ms.mul(ma, ms.unpack(kb));
            out[ms.pack(prod)] += a[ka] * b[kb];
        }
    }
    return out;
}

} // namespace

std::optional<RealizedParams> realize(const CharStackConfig& config,
                                      const StarQuiverData& data, long q) {
    if (!is_prime(q)) return std::nullopt;
    if (q > 101) throw std::domain_error("guard exceeded");
    int r = config.group.rank();
    long units = q - 1;
    double space = 1;
    for (int i = 0; i < r; ++i) space *= static_cast<double>(units);
    if (space > 1e7) throw std::domain_error("guard exceeded");

    // precompute the config-side H on the full box
    std::vector<DimVec> box = boxed_vectors(data.alpha);
    std::vector<char> in_h(box.size());
    for (size_t i = 0; i < box.size(); ++i)
        in_h[i] = data.gamma_power_trivial(box[i]) ? 1 : 0;

    std::vector<long> gens(r, 1);
    std::function<std::optional<RealizedParams>(int)> search =
        [&](int idx) -> std::optional<RealizedParams> {
        if (idx == r) {
            // relations must vanish
            for (const auto& rel : config.group.relations())
                if (value_of(gens, rel, q) != 1) return std::nullopt;
            // gamma per vertex
            std::vector<long> gv(data.nvert());
            for (int i = 0; i < data.nvert(); ++i)
                gv[i] = value_of(gens, data.gamma[i], q);
            // box agreement
            for (size_t i = 0; i < box.size(); ++i) {
                long v = 1;
                for (int j = 0; j < data.nvert(); ++j)
                    v = v * powmod(gv[j], box[i][j], q) % q;
                if ((v == 1) != (in_h[i] == 1)) return std::nullopt;
            }
            // within-puncture eigenvalues distinct in F_q^*
            RealizedParams params;
            params.q = q;
            params.generator_values = gens;
            params.gamma_values = gv;
            for (const auto& p : config.punctures) {
                std::vector<long> eigs;
                std::vector<long> uniq;
                for (const auto& [exp, mult] : p.eigenvalues) {
                    long v = value_of(gens, exp, q);
                    if (std::find(uniq.begin(), uniq.end(), v) != uniq.end())
                        return std::nullopt;
                    uniq.push_back(v);
                    for (int m = 0; m < mult; ++m) eigs.push_back(v);
                }
                params.class_eigenvalues.push_back(std::move(eigs));
            }
            return params;
        }
        for (long v = 1; v < q; ++v) {
            gens[idx] = v;
            auto res = search(idx + 1);
            if (res) return res;
        }
        return std::nullopt;
    };
    return search(0);
}

Int count_char_variety(const RealizedParams& params, const StarQuiverData& data) {
    long q = params.q;
    int n = data.alpha[0];
    if (n > 3 || (n == 3 && q > 2)) throw std::domain_error("guard exceeded");
    MatSpace ms(n, q);

    std::vector<Int> dist(ms.count, 0);
    dist[ms.pack(ms.identity())] = 1;
    if (data.genus > 0) {
        std::vector<Int> comm = commutator_distribution(ms);
        for (int i = 0; i < data.genus; ++i) dist = convolve(ms, dist, comm);
    }
    // all classes but the last by convolution, last by membership test
    int k = data.k;
    std::vector<SemisimpleClass> classes;
    for (int i = 0; i < k; ++i) classes.push_back(make_class(params.class_eigenvalues[i], q));
    for (int i = 0; i + 1 < k; ++i) {
        std::vector<Int> cd(ms.count, 0);
        for (long key : enumerate_class(ms, classes[i])) cd[key] = 1;
        dist = convolve(ms, dist, cd);
    }
    Int total = 0;
    const SemisimpleClass& last = classes.back();
    for (long key = 0; key < ms.count; ++key) {
        if (dist[key] == 0) continue;
        auto m = ms.unpack(key);
        if (ms.det(m) == 0) continue;
        auto minv = ms.inverse(m);
        if (last.contains(ms, minv)) total += dist[key];
    }
    return total;
}

Rational stack_count(const RealizedParams& params, const StarQuiverData& data) {
    Int x = count_char_variety(params, data);
    return Rational(x, gl_order(data.alpha[0], params.q));
}

Rational count_kronecker(long q, int alpha0, int alpha1, long eta0, long eta1) {
    if (alpha0 > 3 || alpha1 > 3 || q > 5) throw std::domain_error("guard exceeded");
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    // f: F^{alpha1} -> F^{alpha0} injective, f*: F^{alpha0} -> F^{alpha1}
    long fcount = 1, fscount = 1;
    for (int i = 0; i < alpha0 * alpha1; ++i) {
        fcount *= q;
        fscount *= q;
        if (fcount > kGuard / std::max(fscount, 1L)) throw std::domain_error("guard exceeded");
    }
    long eta1inv = powmod(eta1, q - 2, q);
    Int count = 0;
    std::vector<long> f(alpha0 * alpha1), fs(alpha1 * alpha0);
    for (long fk = 0; fk < fcount; ++fk) {
        long t = fk;
        for (int i = 0; i < alpha0 * alpha1; ++i) { f[i] = t % q; t /= q; }
        // injectivity: rank alpha1 (alpha0 x alpha1 matrix)
        {
            std::vector<long> m = f;
            int rank = 0;
            for (int col = 0; col < alpha1; ++col) {
                int piv = -1;
                for (int r = rank; r < alpha0; ++r)
                    if (m[r * alpha1 + col] != 0) { piv = r; break; }
                if (piv < 0) continue;
                for (int j = 0; j < alpha1; ++j)
                    std::swap(m[piv * alpha1 + j], m[rank * alpha1 + j]);
                long inv = powmod(m[rank * alpha1 + col], q - 2, q);
                for (int r = 0; r < alpha0; ++r) {
                    if (r == rank) continue;
                    long fac = m[r * alpha1 + col] * inv % q;
                    if (!fac) continue;
                    for (int j = 0; j < alpha1; ++j)
                        m[r * alpha1 + j] =
                            (m[r * alpha1 + j] + (q - fac) * m[rank * alpha1 + j]) % q;
                }
                ++rank;
            }
            if (rank != alpha1) continue;
        }
        for (long gk = 0; gk < fscount; ++gk) {
            long u = gk;
            for (int i = 0; i < alpha1 * alpha0; ++i) { fs[i] = u % q; u /= q; }
            // 1 + f f* = eta0 I (alpha0 x alpha0)
            bool ok = true;
            for (int i = 0; i < alpha0 && ok; ++i)
                for (int j = 0; j < alpha0 && ok; ++j) {
                    long v = (i == j) ? 1 : 0;
                    for (int l = 0; l < alpha1; ++l)
                        v = (v + f[i * alpha1 + l] * fs[l * alpha0 + j]) % q;
                    long want = (i == j) ? eta0 % q : 0;
                    if (v != want) ok = false;
                }
            if (!ok) continue;
            // 1 + f* f = eta1^{-1} I (alpha1 x alpha1)
            for (int i = 0; i < alpha1 && ok; ++i)
                for (int j = 0; j < alpha1 && ok; ++j) {
                    long v = (i == j) ? 1 : 0;
                    for (int l = 0; l < alpha0; ++l)
                        v = (v + fs[i * alpha0 + l] * f[l * alpha1 + j]) % q;
                    long want = (i == j) ? eta1inv : 0;
                    if (v != want) ok = false;
                }
            if (ok) count += 1;
        }
    }
    // m_alpha(eta) = count / q^{a0 a1 - a0^2 - a1^2}
    Int scale = int_pow(Int(q), alpha0 * alpha0 + alpha1 * alpha1 - alpha0 * alpha1);
    Rational m = Rational(count) * Rational(scale);
    return m / Rational(gl_order(alpha0, q) * gl_order(alpha1, q));
}

Rational count_star_moment_fiber(const RealizedParams& params, const StarQuiverData& data) {
    long q = params.q;
    int n = data.alpha[0];
    if (n > 3) throw std::domain_error("guard exceeded");
    MatSpace ms(n, q);

    // sigma per vertex from the realized gamma
    // leg vertices must have leg length 1 in this implementation: solutions
    // for deeper legs are enumerated recursively below through pair counts.
    std::vector<Int> dist(ms.count, 0);
    dist[ms.pack(ms.identity())] = 1;

    if (data.genus > 0) {
        // loops contribute (1+ee*)(1+e*e)^{-1} with e invertible
        std::vector<Int> loop(ms.count, 0);
        if (ms.count * ms.count > kGuard) throw std::domain_error("guard exceeded");
        for (long ek = 0; ek < ms.count; ++ek) {
            auto e = ms.unpack(ek);
            if (ms.det(e) == 0) continue;
            for (long sk = 0; sk < ms.count; ++sk) {
                auto es = ms.unpack(sk);
                auto a = ms.mul(e, es);
                auto b = ms.mul(es, e);
                for (int i = 0; i < n; ++i) {
                    a[i * n + i] = (a[i * n + i] + 1) % q;
                    b[i * n + i] = (b[i * n + i] + 1) % q;
                }
                if (ms.det(a) == 0 || ms.det(b) == 0) continue;
                loop[ms.pack(ms.mul(a, ms.inverse(b)))] += 1;
            }
        }
        for (int i = 0; i < data.genus; ++i) dist = convolve(ms, dist, loop);
    }

    Int leg_groups = 1;
    for (int leg = 1; leg <= data.k; ++leg) {
        int s = data.leg_len[leg - 1];
        if (s == 0) continue;
        if (s > 1) throw std::domain_error("guard exceeded"); // deeper legs unsupported
        int idx = data.vertex_index(leg, 1);
        int m1 = data.alpha[idx];
        long sigma = params.gamma_values[idx] % q;
        // x: F^{m1} -> F^n injective, x*: F^n -> F^{m1},
        // (1 + x* x) = sigma^{-1} I, central factor 1 + x x*
        long sigma_inv = powmod(sigma, q - 2, q);
        std::vector<Int> legdist(ms.count, 0);
        long xc = 1, xsc = 1;
        for (int i = 0; i < n * m1; ++i) { xc *= q; xsc *= q; }
        if (xc > kGuard / std::max(xsc, 1L)) throw std::domain_error("guard exceeded");
        std::vector<long> x(n * m1), xs(m1 * n);
        for (long xk = 0; xk < xc; ++xk) {
            long t = xk;
            for (int i = 0; i < n * m1; ++i) { x[i] = t % q; t /= q; }
            // injective
            {
                std::vector<long> m = x;
                int rank = 0;
                for (int col = 0; col < m1; ++col) {
                    int piv = -1;
                    for (int r = rank; r < n; ++r)
                        if (m[r * m1 + col] != 0) { piv = r; break; }
                    if (piv < 0) continue;
                    for (int j = 0; j < m1; ++j)
                        std::swap(m[piv * m1 + j], m[rank * m1 + j]);
                    long inv = powmod(m[rank * m1 + col], q - 2, q);
                    for (int r = 0; r < n; ++r) {
                        if (r == rank) continue;
                        long fac = m[r * m1 + col] * inv % q;
                        if (!fac) continue;
                        for (int j = 0; j < m1; ++j)
                            m[r * m1 + j] = (m[r * m1 + j] + (q - fac) * m[rank * m1 + j]) % q;
                    }
                    ++rank;
                }
                if (rank != m1) continue;
            }
            for (long sk = 0; sk < xsc; ++sk) {
                long u = sk;
                for (int i = 0; i < m1 * n; ++i) { xs[i] = u % q; u /= q; }
                // 1 + x* x = sigma^{-1} I
                bool ok = true;
                for (int i = 0; i < m1 && ok; ++i)
                    for (int j = 0; j < m1 && ok; ++j) {
                        long v = (i == j) ? 1 : 0;
                        for (int l = 0; l < n; ++l)
                            v = (v + xs[i * n + l] * x[l * m1 + j]) % q;
                        long want = (i == j) ? sigma_inv : 0;
                        if (v != want) ok = false;
                    }
                if (!ok) continue;
                std::vector<long> central(n * n, 0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        long v = (i == j) ? 1 : 0;
                        for (int l = 0; l < m1; ++l)
                            v = (v + x[i * m1 + l] * xs[l * n + j]) % q;
                        central[i * n + j] = v;
                    }
                if (ms.det(central) == 0) continue;
                legdist[ms.pack(central)] += 1;
            }
        }
        dist = convolve(ms, dist, legdist);
        leg_groups *= gl_order(m1, q);
    }

    long sigma0 = params.gamma_values[0] % q;
    Int raw = dist[ms.pack(ms.scalar(sigma0))];
    return Rational(raw) / Rational(gl_order(n, q) * leg_groups);
}

} // namespace charstack
