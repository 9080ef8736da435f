#pragma once

#include "h2sl2/bar.hpp"
#include "h2sl2/mat2.hpp"

namespace h2sl2 {

using MatChain = BarChain<Mat2>;

// Theta_a = [H_a|G_a] - [R_a|H_a] + [w^{-1}|wG_a]; d2 = [w^{-1}]+[wG_a]-[R_a].
MatChain theta(const Rat& a);

// ThetaTilde_a = [Ht_a|G_a] - [D(a)|Ht_a] + [w^{-1}|wG_a]; needs a^2 != 0,1.
MatChain theta_tilde(const Rat& a);

// Psi_{x,lambda} with x' = x/(lambda^2-1); d2 = [E12(x)]. lambda != 0, +-1.
MatChain psi(const Rat& x, const Rat& lambda);

// Multi-lambda version: Lambda = {(lambda_i, b_i)} with sum b_i(lambda_i^2-1)=1,
// every b_i != 0; d2 = [E12(x)].
MatChain psi_multi(const Rat& x, const std::vector<std::pair<Rat, Rat>>& Lambda);

// The 2-cycle F(a,b)_lambda representing C(a,b). Rejects a+1/b = 1 (which
// would require Psi_0). Exactly 32 bar terms before merging.
MatChain bigF(const Rat& a, const Rat& b, const Rat& lambda);
size_t bigF_raw_term_count(const Rat& a, const Rat& b, const Rat& lambda);

// The compact variant using D(a) directly; needs a, b, ab not in {0, +-1}.
MatChain bigF_tilde(const Rat& a, const Rat& b, const Rat& lambda);

}  // namespace h2sl2
