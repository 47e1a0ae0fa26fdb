#pragma once

#include "charstack/graded_series.hpp"
#include "charstack/partition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace charstack {

using DimVec = std::vector<int>;

DimVec dim_add(const DimVec& a, const DimVec& b);
DimVec dim_scale(const DimVec& a, int d);
bool dim_leq(const DimVec& a, const DimVec& b);
bool dim_is_zero(const DimVec& a);

/// Multitype: finite multiset of pairs (d, multipartition), d >= 1,
/// multipartition nonzero. Blocks kept sorted for canonical form.
struct MultiType {
    struct Block {
        int d = 1;
        MultiPartition lam;
        bool operator==(const Block& o) const { return d == o.d && lam == o.lam; }
        bool operator<(const Block& o) const;
    };
    std::vector<Block> blocks; // sorted, repetitions explicit

    void canonicalize();
    DimVec size(int nvert) const;
    Int weight() const; // w(omega) = prod d^{mult} mult!
    MultiType adams(int d) const;
    MultiType merged(const MultiType& o) const; // the * operation
    bool operator==(const MultiType& o) const { return blocks == o.blocks; }
    bool operator<(const MultiType& o) const { return blocks < o.blocks; }
    std::string str() const;
};

/// Semisimple multitype: blocks (d, beta in N^I), beta nonzero.
struct SemisimpleMultiType {
    struct Block {
        int d = 1;
        DimVec beta;
        bool operator==(const Block& o) const { return d == o.d && beta == o.beta; }
        bool operator<(const Block& o) const {
            if (d != o.d) return d < o.d;
            return beta < o.beta;
        }
    };
    std::vector<Block> blocks; // sorted

    void canonicalize();
    DimVec size(int nvert) const;
    Int weight() const;
    SemisimpleMultiType adams(int d) const;
    SemisimpleMultiType merged(const SemisimpleMultiType& o) const;
    bool operator==(const SemisimpleMultiType& o) const { return blocks == o.blocks; }
    bool operator<(const SemisimpleMultiType& o) const { return blocks < o.blocks; }
    std::string str() const;

    /// true iff every block's beta lies in V
    bool of_level(const std::function<bool(const DimVec&)>& V) const;
};

SemisimpleMultiType semisimplify(const MultiType& omega);
SemisimpleMultiType omega_alpha(const DimVec& alpha); // single block (1, alpha)

/// Complete duplicate-free enumeration of T_alpha in canonical order.
std::vector<MultiType> enumerate_multitypes(const DimVec& alpha);
std::vector<SemisimpleMultiType> enumerate_semisimple_multitypes(const DimVec& alpha);

/// P_omega(t) = prod over blocks (t^{d_j} - 1).
RatFun P_poly(const SemisimpleMultiType& nu, const std::string& var = "t");

/// Hanlon Moebius value: mu(d) d^{r-1} (-1)^{r-1} (r-1)! when all block
/// degrees equal d, else 0.
Int C_o(const SemisimpleMultiType& nu);

/// H^vee_omega(t): (-1)^{f} / ( t^{sum alpha_i(alpha_i-1)/2 - n(omega)}
/// prod_j H_{lam_j}(t^{d_j}) ); equals chi(e)/|Gl_alpha(F_q)| at t = q.
RatFun H_dual(const MultiType& omega, int nvert, const std::string& var = "t");

/// One merging of the blocks of nu: an unordered grouping with a common
/// divisor choice per group.
struct Merging {
    std::vector<std::vector<int>> groups; // indices into nu.blocks
    std::vector<int> divisors;            // d_j | every d'_h in the group
    SemisimpleMultiType coarse;
    Int fiber;   // prod d_j^{|X_j|-1}
    Int moebius; // prod C_o(block multitype of the group)
};

std::vector<Merging> enumerate_mergings(const SemisimpleMultiType& nu);

/// A dual-Log-compatible family, presented by its Ctilde evaluator.
struct DualLogFamily {
    std::string name;
    int nvert = 1;
    std::function<RatFun(const MultiType&)> eval; // Ctilde_omega(t)
};

DualLogFamily family_unit(int nvert);
DualLogFamily family_genus(int g, int nvert);
DualLogFamily family_kronecker(); // nvert == 2

/// C_{lambda,mu}(t) from the Kronecker moment-map computation.
RatFun kronecker_C(const Partition& lambda, const Partition& mu);

using LevelPredicate = std::function<bool(const DimVec&)>;

/// F_{alpha,V}(t) evaluated through mergings with Moebius weights.
RatFun F_level(const DualLogFamily& family, const DimVec& alpha, const LevelPredicate& V);

/// F_{alpha,gen}: V = {alpha}.
RatFun F_gen(const DualLogFamily& family, const DimVec& alpha);

/// Unrestricted merging sum at integer q: |(S_nu^{reg})^F|.
Rational regular_point_count(const SemisimpleMultiType& nu, long q);

struct IdentityCheck {
    DimVec alpha;
    RatFun lhs; // Plexp coefficient
    RatFun rhs; // direct merging sum
    bool pass = false;
};

/// Theorem: Coeff_alpha(Plexp(sum_{beta in V} F_{beta,gen} y^beta)) =
/// F_{alpha,V} for all 0 < alpha <= box, with the t -> t^d Adams action.
std::vector<IdentityCheck> verify_plethystic_identity(const DualLogFamily& family,
                                                      const DimVec& box,
                                                      const LevelPredicate& V);

/// Same check for a single alpha against a finite level set.
IdentityCheck char_sum_vs_plexp(const DualLogFamily& family, const DimVec& alpha,
                                const std::vector<DimVec>& eta_level);

/// All nonzero vectors <= box (graded order not required; lexicographic).
std::vector<DimVec> boxed_vectors(const DimVec& box);

} // namespace charstack
