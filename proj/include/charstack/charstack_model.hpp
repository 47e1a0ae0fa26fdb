#pragma once

#include "charstack/hlrv.hpp"
#include "charstack/multitype.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charstack {

/// Finitely generated abelian group Z^r / L presented by relation vectors,
/// with exact membership testing through a Hermite-style reduction.
class EigenGroup {
public:
    EigenGroup() = default;
    EigenGroup(int rank, std::vector<std::vector<Int>> relations);

    int rank() const { return rank_; }
    const std::vector<std::vector<Int>>& relations() const { return relations_; }
    /// v in the lattice spanned by the relations?
    bool is_identity(const std::vector<Int>& v) const;

private:
    int rank_ = 0;
    std::vector<std::vector<Int>> relations_;
    std::vector<std::vector<Int>> hnf_; // row-style echelon basis of L
    std::vector<int> pivot_;            // pivot column per hnf_ row
};

struct PunctureSpec {
    // (group element exponent vector, multiplicity)
    std::vector<std::pair<std::vector<Int>, int>> eigenvalues;
};

struct CharStackConfig {
    int genus = 0;
    EigenGroup group;
    std::vector<PunctureSpec> punctures;
    bool allow_empty = false; // gamma^alpha != 1 yields E = 0 instead of error
};

/// Star quiver data with the derived multiplicative parameter. Vertices are
/// ordered: center first, then leg by leg.
struct StarQuiverData {
    int genus = 0;
    int k = 0;
    std::vector<int> leg_len;                 // s_1..s_k
    std::vector<std::pair<int, int>> vertex;  // (leg, pos); (0,0) = center
    DimVec alpha;
    std::vector<std::vector<Int>> gamma;      // exponent vectors per vertex
    EigenGroup group;
    bool allow_empty = false;

    int nvert() const { return static_cast<int>(vertex.size()); }
    int vertex_index(int leg, int pos) const; // leg 1-based, pos 1..s_leg
    std::string vertex_name(int idx) const;
    bool gamma_power_trivial(const DimVec& delta) const; // gamma^delta == 1
};

StarQuiverData build_star_quiver(const CharStackConfig& config);

long euler_form(const StarQuiverData& data, const DimVec& a, const DimVec& b);

/// Nonzero leg-monotone delta <= alpha with gamma^delta = 1. Throws on
/// inconsistent parameters unless allow_empty is set.
std::vector<DimVec> h_star(const StarQuiverData& data);

struct GenericityReport {
    bool generic = false;
    std::vector<DimVec> nontrivial;                 // members besides alpha
    std::optional<std::pair<DimVec, DimVec>> complementary_pair;
};

GenericityReport is_generic(const StarQuiverData& data);

/// Partitions mu^j of beta_0 from consecutive leg differences.
MultiPartition leg_multipartition(const StarQuiverData& data, const DimVec& beta);

/// E(M_C, q) as an exact rational function of q.
RatFun eseries(const StarQuiverData& data);

/// H_c(M_C, q, t); specializing t = -1 recovers eseries.
RatFun mixed_poincare(const StarQuiverData& data);

/// The per-beta kernel summand q HH_beta(sqrt q, 1/sqrt q)/(q-1); exposed for
/// the parity checks of the verification suite.
RatFun eseries_term(const StarQuiverData& data, const DimVec& beta);

} // namespace charstack
