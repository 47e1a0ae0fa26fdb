#pragma once

#include "charstack/partition.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace charstack {

enum class Basis : char { p = 'p', m = 'm', h = 'h', e = 'e', s = 's' };

Basis basis_from_char(char c);

/// Graded symmetric function in k alphabets with RatFun coefficients. Each
/// term is keyed by a k-tuple of partitions, one per alphabet, in that
/// alphabet's declared basis.
class SymFunc {
public:
    using Key = std::vector<Partition>;
    using TermMap = std::map<Key, RatFun>;

    SymFunc() : k_(1), basis_{Basis::m} {}
    explicit SymFunc(int alphabets, Basis b = Basis::m)
        : k_(alphabets), basis_(alphabets, b) {}

    static SymFunc zero(int alphabets, Basis b = Basis::m) { return SymFunc(alphabets, b); }
    static SymFunc constant(int alphabets, const RatFun& c, Basis b = Basis::m);
    /// Single basis element B_lambda placed in one alphabet (others empty).
    static SymFunc basis_element(int alphabets, int alphabet, Basis b,
                                 const Partition& lambda, const RatFun& coef = RatFun(1));

    int alphabets() const { return k_; }
    const std::vector<Basis>& basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& key, const RatFun& c);
    RatFun coefficient(const Key& key) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }
    SymFunc operator-() const;
    bool operator==(const SymFunc& o) const;
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    SymFunc scaled(const RatFun& c) const;
    SymFunc scaled(const Rational& c) const;

    /// Change of basis, value preserving.
    SymFunc converted(const std::vector<Basis>& target) const;
    SymFunc converted(Basis target) const;

    /// psi_d: x -> x^d per alphabet (coefficients untouched).
    SymFunc adams(int d) const;

    /// Algebra map p_r -> c(r) p_r; single-alphabet only.
    SymFunc diag_pleth_transform(const std::function<RatFun(int)>& c) const;

    /// Applies a map to every coefficient.
    SymFunc map_coefficients(const std::function<RatFun(const RatFun&)>& f) const;

    std::string str() const;

private:
    int k_;
    std::vector<Basis> basis_;
    TermMap terms_;
};

/// Hall pairing extended multiplicatively over alphabets; Schur functions
/// orthonormal per alphabet.
RatFun hall_pairing(const SymFunc& f, const SymFunc& g);

/// Transition matrix column: B_lambda expanded in basis `to` at the same
/// degree. Entries are rational constants.
const std::map<Partition, Rational>& basis_column(Basis from, Basis to,
                                                  const Partition& lambda);

inline SymFunc one_like(const SymFunc& s) {
    Basis b = s.basis().empty() ? Basis::m : s.basis()[0];
    return SymFunc::constant(s.alphabets(), RatFun(1), b);
}

} // namespace charstack
