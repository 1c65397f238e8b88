#pragma once

#include "oldroyd/lp/filter_bank.hpp"

namespace oldroyd::para {

using lp::DyadicFilterBank;
using spectral::ScalarField;
using spectral::VectorField;

// Low cutoffs include the mean, dyadic blocks do not, so
// T_f g + T_g f + R(f, g) = fg - mean(f) mean(g) for dealiased inputs.
struct BonySplit {
    ScalarField T_fg;
    ScalarField T_gf;
    ScalarField R_fg;
};

// sum_q S_{q-1} f * Delta_q g
ScalarField paraproduct(const DyadicFilterBank& bank, const ScalarField& f, const ScalarField& g);
// sum_q Delta_q f * (Delta_{q-1} + Delta_q + Delta_{q+1}) g
ScalarField remainder(const DyadicFilterBank& bank, const ScalarField& f, const ScalarField& g);
BonySplit bony(const DyadicFilterBank& bank, const ScalarField& f, const ScalarField& g);

// Lambda^{-1}(S_{q-1}v . grad Delta_q u) - S_{q-1}v . grad(Lambda^{-1} Delta_q u)
ScalarField commutator_lambda_inv(const DyadicFilterBank& bank, const VectorField& v, const ScalarField& u, int q);

}  // namespace oldroyd::para
