#ifndef STOKESCLUSTER_COMPARE_HPP
#define STOKESCLUSTER_COMPARE_HPP

#include <random>
#include <vector>

#include "stokescluster/rational.hpp"

namespace sc {

enum class CompareMode { Symbolic, Pointwise };

// Nonzero rational sample points with small numerators and denominators.
class PointSampler {
public:
    explicit PointSampler(unsigned long long seed) : rng_(seed) {}
    mpq_class sample();
    std::map<VarId, mpq_class> point(const std::vector<VarId>& vars);
    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Equality at `points` sampled evaluations; points hitting a pole of either
// side are resampled.
bool rf_equal_at_points(const RationalFunction& a, const RationalFunction& b,
                        const std::vector<VarId>& vars, int points, PointSampler& sampler);

// Symbolic cross-multiplied equality, or sampled equality in pointwise mode.
class Comparer {
public:
    Comparer(CompareMode mode, int points, unsigned long long seed)
        : mode_(mode), points_(points), sampler_(seed) {}
    bool equal(const RationalFunction& a, const RationalFunction& b,
               const std::vector<VarId>& vars);
    CompareMode mode() const { return mode_; }

private:
    CompareMode mode_;
    int points_;
    PointSampler sampler_;
};

} // namespace sc

#endif
