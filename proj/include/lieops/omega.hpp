#pragma once

#include "lieops/verma.hpp"

namespace lieops {

// Verma-module avatar of the second-order operator system, defined on all of
// l. Built from the symmetrized quadratic form; the overall normalization is
// pinned by omega2(H_gamma) = 0, the l-equivariance law, and the rank-2
// expansion of omega3 (see tests).
VermaElement omega2(const Context& ctx, const LieElement& Z);

// Leading third-order term: sum over eps in Delta(V+) of
// X_{-eps} * omega2([X_eps, Y]).
VermaElement omega3_tilde(const Context& ctx, const LieElement& Y);

// Correction term Y * X_{-gamma} (x) 1.
VermaElement c3(const Context& ctx, const LieElement& Y);

// omega3_tilde(Y) + t * c3(Y), t the formal coefficient-ring variable.
VermaElement omega3(const Context& ctx, const LieElement& Y);

}  // namespace lieops
