#include "cremona/matrix.hpp"

#include <random>

namespace cremona {

RFMatrix jacobian(const std::vector<RationalFunction>& fs, const std::vector<VarId>& vars) {
    RFMatrix m(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) {
        m[i].reserve(vars.size());
        for (VarId v : vars) m[i].push_back(fs[i].derivative(v));
    }
    return m;
}

int rank_of_rationals(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = 1 / m[rank][c];
        for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_at_point(const RFMatrix& M, const std::map<uint32_t, Rational>& point) {
    std::vector<std::vector<Rational>> vals(M.size());
    for (size_t i = 0; i < M.size(); ++i) {
        vals[i].reserve(M[i].size());
        for (auto& f : M[i]) {
            Rational d = f.den().evaluate(point);
            if (d == 0) throw error("rank_at_point: denominator vanishes at the point");
            vals[i].push_back(f.num().evaluate(point) / d);
        }
    }
    return rank_of_rationals(std::move(vals));
}

int exact_generic_rank(const RFMatrix& M, const std::vector<VarId>& vars,
                       const RankSampling& cfg) {
    std::mt19937_64 rng(cfg.seed);
    auto draw = [&]() {
        // Engine output reduced by hand; uniform_int_distribution is not
        // reproducible across standard libraries.
        uint64_t span = static_cast<uint64_t>(2 * cfg.coordinate_bound + 1);
        return static_cast<int64_t>(rng() % span) - cfg.coordinate_bound;
    };
    int best = 0;
    int retries_left = cfg.retry_budget;
    for (int s = 0; s < cfg.samples; ++s) {
        for (;;) {
            std::map<uint32_t, Rational> point;
            for (VarId v : vars) point[v.index] = Rational(static_cast<long>(draw()));
            try {
                best = std::max(best, rank_at_point(M, point));
                break;
            } catch (const error&) {
                if (--retries_left < 0)
                    throw error("exact_generic_rank: retry budget exhausted; every sampled "
                                "point hit a denominator zero");
            }
        }
    }
    return best;
}

}  // namespace cremona
