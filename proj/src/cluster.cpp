#include "stokescluster/cluster.hpp"

#include <sstream>

namespace sc {

Quiver::Quiver(std::size_t n) : n_(n), b_(n, std::vector<long>(n, 0)) {}

Quiver Quiver::dynkin_a(std::size_t n) {
    Quiver q(n);
    for (std::size_t i = 0; i + 1 < n; ++i) q.set(i, i + 1, 1);
    return q;
}

long Quiver::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw ShapeMismatch("quiver index out of range");
    return b_[i][j];
}

void Quiver::set(std::size_t i, std::size_t j, long v) {
    if (i >= n_ || j >= n_ || i == j) throw ShapeMismatch("quiver entry out of range");
    b_[i][j] = v;
    b_[j][i] = -v;
}

void Quiver::add_arrow(std::size_t from, std::size_t to) {
    set(from, to, at(from, to) + 1);
}

Quiver Quiver::mutate_plain(std::size_t k) const {
    if (k >= n_) throw ShapeMismatch("mutation vertex out of range");
    Quiver r(n_);
    for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) {
            if (s == t) continue;
            if (s == k || t == k) {
                r.b_[s][t] = -b_[s][t];
            } else {
                long add = 0;
                long bsk = b_[s][k], bkt = b_[k][t];
                if (bsk * bkt > 0) add = (bsk > 0 ? 1 : -1) * (bsk * bkt);
                r.b_[s][t] = b_[s][t] + add;
            }
        }
    return r;
}

Quiver Quiver::hatted() const {
    Quiver r(n_);
    for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) {
            long sign = ((s == 0) != (t == 0)) ? -1 : 1;
            r.b_[s][t] = -sign * b_[s][t];
        }
    return r;
}

Quiver Quiver::mutate(std::size_t k) const {
    // sigma (.) sigma is an involution, so transport through it directly.
    Quiver conj(n_);
    for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) {
            long sign = ((s == 0) != (t == 0)) ? -1 : 1;
            conj.b_[s][t] = sign * b_[s][t];
        }
    Quiver m = conj.mutate_plain(k);
    Quiver r(n_);
    for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) {
            long sign = ((s == 0) != (t == 0)) ? -1 : 1;
            r.b_[s][t] = sign * m.b_[s][t];
        }
    return r;
}

bool Quiver::is_dynkin_a() const { return *this == dynkin_a(n_); }

std::string Quiver::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) os << ", ";
            os << b_[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

YSeed y_seed_mutation(const YSeed& s, std::size_t k) {
    std::size_t n = s.quiver.size();
    if (s.y.size() != n) throw ShapeMismatch("seed coefficient count");
    if (k >= n) throw ShapeMismatch("mutation vertex out of range");
    YSeed r{s.quiver.mutate_plain(k), std::vector<RationalFunction>(n)};
    const RationalFunction& yk = s.y[k];
    RationalFunction one_plus = RationalFunction::one() + yk;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) {
            r.y[i] = yk.inverse();
            continue;
        }
        long b = s.quiver.at(i, k);
        RationalFunction v = s.y[i];
        if (b > 0) v *= yk.pow(b);
        if (b != 0) v *= one_plus.pow(-b);
        r.y[i] = v;
    }
    return r;
}

} // namespace sc
