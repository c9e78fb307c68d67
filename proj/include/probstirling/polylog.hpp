#pragma once

#include "probstirling/rational.hpp"

namespace probstirling {

// All functions here require 0 < q < 1 and throw std::invalid_argument otherwise.

/// Li_{-n}(q) = sum_{j>=1} j^n q^j, via the finite form
/// sum_r S(n,r) r! q^r / (1-q)^{r+1} (n >= 1) and q/(1-q) for n = 0.
Rational li_neg(unsigned n, const Rational& q);

/// k-fold multinomial convolution
/// sum_{n_1+...+n_k=n} n!/(n_1!...n_k!) Li_{-n_1}(q)...Li_{-n_k}(q),
/// by enumerating weak compositions. k = 0 gives [n == 0].
Rational li_conv_direct(unsigned n, unsigned k, const Rational& q);

/// The same convolution as (q/p)^k E(S_k + k)^n with Y geometric(q), p = 1-q.
Rational li_conv_prob(unsigned n, unsigned k, const Rational& q);

}  // namespace probstirling
