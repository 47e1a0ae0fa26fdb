#pragma once

#include "charstack/laurent.hpp"

#include <map>
#include <string>

namespace charstack {

/// Exact rational function num/den in named variables, kept in canonical
/// form: den a true polynomial with graded-lex leading coefficient 1 and
/// gcd(num, den) a unit. Equal values have identical representations.
class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(int c) : num_(Rational(c)), den_(Rational(1)) {}
    explicit RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFun(const LaurentPoly& num, const LaurentPoly& den);
    explicit RatFun(const LaurentPoly& num) : num_(num), den_(Rational(1)) { reduce(); }

    static RatFun variable(const std::string& name, int exp = 1) {
        return RatFun(LaurentPoly::variable(name, exp));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }
    bool operator<(const RatFun& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    RatFun pow(int n) const;
    RatFun scaled(const Rational& c) const;

    /// Composes with the given assignments; unassigned variables persist.
    /// Throws "pole hit" if a denominator vanishes along the way.
    RatFun substituted(const std::map<std::string, RatFun>& assignments) const;

    /// f(x_1^d, ..., x_m^d); cheap exponent scaling.
    RatFun adams_all_vars(int d) const;

    bool even_in(const std::string& var) const;

    /// Rewrites with from^2 -> to (requires evenness in `from`).
    RatFun halved_var(const std::string& from, const std::string& to) const;

    bool has_var(const std::string& var) const {
        return num_.has_var(var) || den_.has_var(var);
    }

    /// Numerator/denominator with integer coefficients (minimal common
    /// scaling, positive denominator leading coefficient).
    std::pair<LaurentPoly, LaurentPoly> integer_form() const;

    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
    void reduce();
};

inline RatFun operator*(const Rational& c, const RatFun& f) { return f.scaled(c); }

inline RatFun one_like(const RatFun&) { return RatFun(1); }

} // namespace charstack
