#pragma once

#include "charstack/graded_series.hpp"
#include "charstack/macdonald.hpp"

namespace charstack {

struct KernelParams {
    int genus = 0;
    int punctures = 1; // k >= 1
    int degree_cap = 1;
};

/// Hook function H_lambda(z,w): product over cells of
/// (z^{2a+1} - w^{2l+1})^{2g} / ((z^{2a+2} - w^{2l})(z^{2a} - w^{2l+2})).
RatFun hook_function(const Partition& lambda, int genus);

/// Omega(z,w) = sum_{|lambda| <= n} H_lambda(z,w) prod_i Htilde_lambda(x_i; z^2, w^2) T^{|lambda|}.
GradedSeries<SymFunc> omega_series(const KernelParams& params);

/// HH_mu(z,w) = (z^2-1)(1-w^2) < Coeff_{T^n}(Plelog Omega), h_mu >.
/// All components of mu must have equal size.
RatFun hlrv_H(const MultiPartition& mu, int genus);

/// z -> s, w -> 1/s with s^2 = q; result rewritten in q (throws
/// "not rational in q" if odd powers of s survive).
RatFun specialize_E(const RatFun& H);

/// z -> t*s, w -> 1/s with s^2 = q; result in (q, t).
RatFun specialize_mixed(const RatFun& H);

/// Adams rule used for Lambda_k[[T]]: x -> x^d, z and w fixed.
inline SymFunc symfunc_alphabet_adams(const SymFunc& c, int d) { return c.adams(d); }

} // namespace charstack
