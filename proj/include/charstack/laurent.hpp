#pragma once

#include "charstack/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace charstack {

/// Sparse multivariate Laurent polynomial over Q. Variables are kept as a
/// sorted list of names; exponent vectors (negative entries allowed) are
/// indexed against it. Zero coefficients are never stored and variables with
/// no occurrence are dropped, so equal values compare equal structurally.
class LaurentPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    static LaurentPoly variable(const std::string& name, int exp = 1);
    static LaurentPoly monomial(const std::vector<std::string>& vars, const Exps& e,
                                const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly pow(int n) const; // n >= 0

    /// Leading term under graded lexicographic order (total degree first).
    std::pair<Exps, Rational> leading_term() const;

    int degree_in(const std::string& var) const;
    int min_degree_in(const std::string& var) const;
    bool has_var(const std::string& var) const;
    bool is_laurent() const; // any negative exponent

    /// Sends every variable x to x^d (injective on values for d >= 1).
    LaurentPoly exponent_scaled(int d) const;
    /// Substitutes var -> -var.
    LaurentPoly negate_var(const std::string& var) const;
    /// Renames a variable (target name must not collide).
    LaurentPoly renamed(const std::string& from, const std::string& to) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void prune();
    friend LaurentPoly unify_to(const LaurentPoly& p, const std::vector<std::string>& target);
    friend std::vector<std::string> merged_vars(const LaurentPoly& a, const LaurentPoly& b);
};

std::vector<std::string> merged_vars(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly unify_to(const LaurentPoly& p, const std::vector<std::string>& target);

/// gcd of two polynomials with nonnegative exponents, up to a positive
/// rational scalar; deterministic normalization (primitive over Z, positive
/// graded-lex leading coefficient).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division (throws if not divisible).
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

} // namespace charstack
