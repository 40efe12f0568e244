#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/rational_function.hpp"

namespace cremona {

using RFMatrix = std::vector<std::vector<RationalFunction>>;

/// Entry (i,j) = d fs[i] / d vars[j], by the quotient rule.
RFMatrix jacobian(const std::vector<RationalFunction>& fs, const std::vector<VarId>& vars);

/// Exact rank of M evaluated at a rational point (Gaussian elimination over
/// Q). Error when a denominator vanishes at the point.
int rank_at_point(const RFMatrix& M, const std::map<uint32_t, Rational>& point);

struct RankSampling {
    uint64_t seed = 0;
    int samples = 5;
    int64_t coordinate_bound = 10000;  // coordinates drawn from [-bound, bound]
    int retry_budget = 100;            // redraws allowed per sample on denominator hits
};

/// Maximum of rank_at_point over `samples` random integer points; a certified
/// lower bound for the generic rank and, with overwhelming probability, the
/// generic rank itself. Deterministic for a fixed seed. Error when the retry
/// budget is exhausted by denominator zeros.
int exact_generic_rank(const RFMatrix& M, const std::vector<VarId>& vars,
                       const RankSampling& cfg = {});

int rank_of_rationals(std::vector<std::vector<Rational>> m);

}  // namespace cremona
