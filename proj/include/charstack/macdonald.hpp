#pragma once

#include "charstack/symfunc.hpp"

#include <map>

namespace charstack {

/// Macdonald P_mu(x; q, t) for all mu of size n: triangular against the
/// monomial basis under dominance, orthogonal for the (q,t)-pairing
/// <p_lambda, p_lambda> = z_lambda prod (1-q^{lambda_i})/(1-t^{lambda_i}).
/// Returned in the m basis with coefficients in Q(q,t).
const std::map<Partition, SymFunc>& qt_gram_schmidt(int n);

/// Same computation along an alternative linear extension of dominance;
/// results must agree (order independence).
std::map<Partition, SymFunc> qt_gram_schmidt_alt_order(int n);

/// Modified Macdonald polynomial with generic parameters, s basis, single
/// alphabet, coefficients in Q(q,t); coefficient of s_{(n)} is 1.
const SymFunc& modified_macdonald_generic(const Partition& mu);

/// H-tilde_mu with the given arguments substituted for (q, t).
SymFunc modified_macdonald(const Partition& mu, const RatFun& q_arg, const RatFun& t_arg);

/// (q,t)-deformed pairing, arguments converted to the p basis internally.
RatFun qt_pairing(const SymFunc& f, const SymFunc& g);

} // namespace charstack
