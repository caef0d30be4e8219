#include "stokescluster/compare.hpp"

#include "stokescluster/error.hpp"

namespace sc {

mpq_class PointSampler::sample() {
    std::uniform_int_distribution<long> num(1, 24);
    std::uniform_int_distribution<long> den(1, 6);
    std::uniform_int_distribution<int> sign(0, 1);
    mpq_class q(num(rng_), den(rng_));
    q.canonicalize();
    return sign(rng_) ? q : mpq_class(-q);
}

std::map<VarId, mpq_class> PointSampler::point(const std::vector<VarId>& vars) {
    std::map<VarId, mpq_class> p;
    for (VarId v : vars) p[v] = sample();
    return p;
}

bool rf_equal_at_points(const RationalFunction& a, const RationalFunction& b,
                        const std::vector<VarId>& vars, int points, PointSampler& sampler) {
    int done = 0, attempts = 0;
    while (done < points) {
        if (++attempts > 20 * points + 100)
            throw Error("rf_equal_at_points: could not avoid poles");
        std::map<VarId, mpq_class> p = sampler.point(vars);
        try {
            if (a.eval(p) != b.eval(p)) return false;
        } catch (const PoleAtPoint&) {
            continue;
        }
        ++done;
    }
    return true;
}

bool Comparer::equal(const RationalFunction& a, const RationalFunction& b,
                     const std::vector<VarId>& vars) {
    if (mode_ == CompareMode::Symbolic) return rf_equal(a, b);
    return rf_equal_at_points(a, b, vars, points_, sampler_);
}

} // namespace sc
