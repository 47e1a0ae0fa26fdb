#pragma once

#include "charstack/charstack_model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace charstack {

/// Realization of a config over a prime field: one unit value per group
/// generator such that every relation maps to 1 and the induced H on the box
/// {delta <= alpha} matches the config's H exactly.
struct RealizedParams {
    long q = 0;
    std::vector<long> generator_values;    // in F_q^*
    std::vector<long> gamma_values;        // per vertex
    std::vector<std::vector<long>> class_eigenvalues; // per puncture, with multiplicity
};

bool is_prime(long q);

std::optional<RealizedParams> realize(const CharStackConfig& config,
                                      const StarQuiverData& data, long q);

/// #X_C(F_q): tuples (A_1,B_1,..,A_g,B_g,X_1,..,X_k) with X_j in the realized
/// class and prod [A_i,B_i] prod X_j = 1.
Int count_char_variety(const RealizedParams& params, const StarQuiverData& data);

/// #X_C(F_q) / |Gl_n(F_q)| as an exact rational.
Rational stack_count(const RealizedParams& params, const StarQuiverData& data);

/// Kronecker moment-map count m_alpha(eta)/|Gl_alpha(F_q)|: enumerates
/// injective f and all f*, testing 1 + f f* = eta_0, 1 + f* f = eta_1^{-1}.
Rational count_kronecker(long q, int alpha0, int alpha1, long eta0, long eta1);

/// Star-quiver multiplicative moment-map fiber mass
/// #(Phi*_alpha)^{-1}(sigma)(F_q) / |Gl_alpha(F_q)|.
Rational count_star_moment_fiber(const RealizedParams& params, const StarQuiverData& data);

Int gl_order(int n, long q);

} // namespace charstack
