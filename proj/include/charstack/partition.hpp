#pragma once

#include "charstack/ratfun.hpp"

#include <map>
#include <vector>

namespace charstack {

struct CellStats {
    int arm = 0;
    int leg = 0;
    int hook = 1;
};

/// Integer partition, parts weakly decreasing and positive; empty = zero
/// partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const; // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based

    Partition conjugate() const;
    std::vector<CellStats> cell_stats() const;
    Int z_stat() const;          // prod j^{m_j} m_j!
    int n_stat() const;          // sum (i-1) lambda_i
    RatFun hook_polynomial(const std::string& var) const; // prod (1 - t^{h(s)})

    /// Every part multiplied by d.
    Partition stretched(int d) const;
    /// Multiset union of parts.
    Partition merged(const Partition& o) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; } // lex
    /// mu dominance-below lambda (same size assumed by caller).
    bool dominated_by(const Partition& o) const;

    std::string str() const;      // "3+2+1", "0" for empty

private:
    std::vector<int> parts_;
};

/// All partitions of n in increasing lexicographic order.
const std::vector<Partition>& partitions_of(int n);

/// One-row and one-column helpers.
Partition row_partition(int n);    // (n)
Partition column_partition(int n); // (1^n)

/// Littlewood-Richardson coefficient c^{nu}_{lambda,mu} via Jacobi-Trudi
/// expansion of s_mu into h's and iterated Pieri multiplication.
Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

/// Irreducible S_n character chi^lambda(rho) by Murnaghan-Nakayama.
Int sym_character(const Partition& lambda, const Partition& rho);

/// Tuple of partitions indexed by an external vertex/alphabet list.
using MultiPartition = std::vector<Partition>;

int multipartition_n_stat(const MultiPartition& mp);
std::string multipartition_str(const MultiPartition& mp);

} // namespace charstack
