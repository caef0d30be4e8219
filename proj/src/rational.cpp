#include "stokescluster/rational.hpp"

#include <algorithm>
#include <sstream>

namespace sc {

VarRegistry& VarRegistry::instance() {
    static VarRegistry reg;
    return reg;
}

VarId VarRegistry::intern(const std::string& name, int exponent_scale) {
    if (exponent_scale != 1 && exponent_scale != 2)
        throw Error("exponent_scale must be 1 or 2 for " + name);
    auto it = index_.find(name);
    if (it != index_.end()) {
        if (scales_[it->second] != exponent_scale)
            throw Error("variable " + name + " re-registered with different exponent scale");
        return it->second;
    }
    VarId v = static_cast<VarId>(names_.size());
    names_.push_back(name);
    scales_.push_back(exponent_scale);
    index_.emplace(name, v);
    return v;
}

VarId VarRegistry::id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownVariable(name);
    return it->second;
}

bool VarRegistry::contains(const std::string& name) const {
    return index_.count(name) != 0;
}

const std::string& VarRegistry::name(VarId v) const {
    if (v >= names_.size()) throw UnknownVariable("id " + std::to_string(v));
    return names_[v];
}

int VarRegistry::exponent_scale(VarId v) const {
    if (v >= scales_.size()) throw UnknownVariable("id " + std::to_string(v));
    return scales_[v];
}

std::size_t VarRegistry::size() const { return names_.size(); }

mpq_class mpq_frac(long num, long den) {
    if (den == 0) throw DivisionByZero("mpq_frac denominator");
    mpq_class q(num);
    q /= mpq_class(den);
    return q;
}

std::string mpq_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class mpq_pow(const mpq_class& base, long exp) {
    if (exp == 0) return mpq_class(1);
    if (base == 0) {
        if (exp < 0) throw DivisionByZero("0 raised to a negative power");
        return mpq_class(0);
    }
    bool neg = exp < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    if (neg) r = 1 / r;
    return r;
}

// ---------------------------------------------------------------- Monomial

void Monomial::prune() {
    f_.erase(std::remove_if(f_.begin(), f_.end(),
                            [](const auto& p) { return p.second == 0; }),
             f_.end());
}

Monomial Monomial::variable(VarId v, std::int64_t exp) {
    Monomial m;
    if (exp != 0) m.f_.push_back({v, exp});
    return m;
}

std::int64_t Monomial::exponent(VarId v) const {
    for (const auto& p : f_)
        if (p.first == v) return p.second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].first < o.f_[j].first) r.f_.push_back(f_[i++]);
        else if (f_[i].first > o.f_[j].first) r.f_.push_back(o.f_[j++]);
        else {
            std::int64_t e = f_[i].second + o.f_[j].second;
            if (e != 0) r.f_.push_back({f_[i].first, e});
            ++i; ++j;
        }
    }
    while (i < f_.size()) r.f_.push_back(f_[i++]);
    while (j < o.f_.size()) r.f_.push_back(o.f_[j++]);
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& p : r.f_) p.second = -p.second;
    return r;
}

Monomial Monomial::pow(std::int64_t e) const {
    Monomial r;
    if (e == 0) return r;
    r = *this;
    for (auto& p : r.f_) p.second *= e;
    return r;
}

std::string Monomial::to_string() const {
    if (f_.empty()) return "1";
    const VarRegistry& reg = VarRegistry::instance();
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : f_) {
        if (!first) os << "*";
        first = false;
        os << reg.name(v);
        int s = reg.exponent_scale(v);
        if (e % s == 0) {
            std::int64_t d = e / s;
            if (d != 1) os << "^" << d;
        } else {
            os << "^(" << e << "/" << s << ")";
        }
    }
    return os.str();
}

// -------------------------------------------------------------- Polynomial

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Polynomial Polynomial::constant(const mpq_class& c) {
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(VarId v, std::int64_t exp) {
    Polynomial p;
    p.add_term(Monomial::variable(v, exp), 1);
    return p;
}

Polynomial Polynomial::term(const mpq_class& c, const Monomial& m) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::mul_term(const mpq_class& c, const Monomial& m) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m1, c1] : t_) r.t_.emplace(m1 * m, c1 * c);
    return r;
}

Polynomial Polynomial::derivative(VarId v) const {
    Polynomial r;
    for (const auto& [m, c] : t_) {
        std::int64_t e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m * Monomial::variable(v, -1), c * mpq_class(static_cast<long>(e)));
    }
    return r;
}

mpq_class Polynomial::eval(const std::map<VarId, mpq_class>& point) const {
    mpq_class acc(0);
    for (const auto& [m, c] : t_) {
        mpq_class v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw UnknownVariable(VarRegistry::instance().name(var) + " missing from evaluation point");
            if (it->second == 0 && e < 0)
                throw PoleAtPoint("negative power of " + VarRegistry::instance().name(var) + " at zero");
            v *= mpq_pow(it->second, e);
        }
        acc += v;
    }
    return acc;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.factors()) {
            (void)e; (void)c;
            if (!std::binary_search(vs.begin(), vs.end(), v)) {
                vs.insert(std::upper_bound(vs.begin(), vs.end(), v), v);
            }
        }
    return vs;
}

std::int64_t Polynomial::min_exponent(VarId v) const {
    bool seen = false;
    std::int64_t m = 0;
    for (const auto& [mon, c] : t_) {
        (void)c;
        std::int64_t e = mon.exponent(v);
        if (!seen || e < m) m = e;
        seen = true;
    }
    return seen ? m : 0;
}

bool Polynomial::even_in(VarId v) const {
    for (const auto& [m, c] : t_) {
        (void)c;
        if (m.exponent(v) % 2 != 0) return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        bool neg = c < 0;
        mpq_class a = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << mpq_to_string(a);
        } else {
            if (a != 1) os << mpq_to_string(a) << "*";
            os << m.to_string();
        }
    }
    return os.str();
}

// -------------------------------------------------------- RationalFunction

namespace {

// Exact division in the Laurent polynomial ring: true and q with f = q * g.
// Graded-lex order on dense exponent vectors is translation invariant, so
// cancelling the leading term strictly decreases it; a step cap bounds the
// cost of inexact inputs, which simply stay unreduced.
bool exact_divide(const Polynomial& f, const Polynomial& g, Polynomial& q) {
    if (g.is_zero() || f.is_zero()) return false;
    if (g.terms().size() > 64 || f.terms().size() > 4096) return false;
    std::vector<VarId> vars;
    for (VarId v : f.variables()) vars.push_back(v);
    for (VarId v : g.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    auto ranges = [&](const Polynomial& p) {
        std::map<VarId, std::pair<std::int64_t, std::int64_t>> r;
        for (VarId v : vars) r[v] = {0, 0};
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            for (VarId v : vars) {
                std::int64_t e = m.exponent(v);
                if (first) {
                    r[v] = {e, e};
                } else {
                    r[v].first = std::min(r[v].first, e);
                    r[v].second = std::max(r[v].second, e);
                }
            }
            first = false;
        }
        return r;
    };
    auto fr = ranges(f), gr = ranges(g);
    for (VarId v : vars)
        if (gr[v].second - gr[v].first > fr[v].second - fr[v].first) return false;
    std::size_t nv = vars.size();
    auto key = [&](const Monomial& m) {
        std::vector<std::int64_t> k(nv + 1, 0);
        for (std::size_t i = 0; i < nv; ++i) {
            k[i + 1] = m.exponent(vars[i]);
            k[0] += k[i + 1];
        }
        return k;
    };
    std::map<std::vector<std::int64_t>, std::pair<Monomial, mpq_class>> rem;
    for (const auto& [m, c] : f.terms()) rem[key(m)] = {m, c};
    Monomial glead;
    mpq_class gc;
    std::vector<std::int64_t> gk;
    for (const auto& [m, c] : g.terms()) {
        auto k = key(m);
        if (gk.empty() || k > gk) {
            gk = k;
            glead = m;
            gc = c;
        }
    }
    Polynomial quot;
    std::size_t cap = 4 * f.terms().size() + 16;
    while (!rem.empty()) {
        if (quot.terms().size() >= cap) return false;
        auto it = std::prev(rem.end());
        Monomial tm = it->second.first * glead.inverse();
        mpq_class tc = it->second.second / gc;
        quot = quot + Polynomial::constant(tc).mul_term(1, tm);
        for (const auto& [m, c] : g.terms()) {
            Monomial pm = tm * m;
            auto k = key(pm);
            auto jt = rem.find(k);
            mpq_class nc = (jt == rem.end() ? mpq_class(0) : jt->second.second) - tc * c;
            if (nc == 0) {
                if (jt != rem.end()) rem.erase(jt);
            } else {
                rem[k] = {pm, nc};
            }
        }
    }
    q = quot;
    return true;
}

} // namespace

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    if (den_.is_monomial()) {
        const auto& [m, c] = *den_.terms().begin();
        num_ = num_.mul_term(1 / c, m.inverse());
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial q;
    if (exact_divide(num_, den_, q)) {
        num_ = q;
        den_ = Polynomial::constant(1);
        return;
    }
    if (exact_divide(den_, num_, q)) {
        // num / den = 1 / q; keep a monomial numerator when q allows it.
        den_ = q;
        num_ = Polynomial::constant(1);
        if (den_.is_monomial()) {
            const auto& [m, c] = *den_.terms().begin();
            num_ = num_.mul_term(1 / c, m.inverse());
            den_ = Polynomial::constant(1);
            return;
        }
    }
    // Shift so every variable has min exponent 0 in the denominator.
    Monomial shift;
    for (VarId v : den_.variables()) {
        std::int64_t e = den_.min_exponent(v);
        if (e != 0) shift = shift * Monomial::variable(v, -e);
    }
    if (!shift.empty()) {
        num_ = num_.mul_term(1, shift);
        den_ = den_.mul_term(1, shift);
    }
    // Make the denominator integer-primitive with positive leading coefficient.
    mpz_class lcm_den(1);
    for (const auto& [m, c] : den_.terms()) {
        (void)m;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpz_class gcd_num(0);
    for (const auto& [m, c] : den_.terms()) {
        (void)m;
        mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    mpq_class scale(lcm_den);
    scale /= mpq_class(gcd_num);
    if (den_.terms().begin()->second * scale < 0) scale = -scale;
    if (scale != 1) {
        num_ = num_.mul_term(scale, Monomial());
        den_ = den_.mul_term(scale, Monomial());
    }
}

RationalFunction RationalFunction::constant(const mpq_class& c) {
    RationalFunction r;
    r.num_ = Polynomial::constant(c);
    return r;
}

RationalFunction RationalFunction::from_long(long c) { return constant(mpq_class(c)); }

RationalFunction RationalFunction::variable(VarId v, std::int64_t exp) {
    RationalFunction r;
    r.num_ = Polynomial::variable(v, exp);
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
    if (e == 0) return one();
    if (e < 0) return inverse().pow(-e);
    RationalFunction base = *this, acc = one();
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

bool RationalFunction::is_one() const { return num_ == den_; }

bool RationalFunction::is_constant() const {
    return num_.is_constant() && den_.is_constant();
}

bool RationalFunction::is_laurent_polynomial() const {
    return den_ == Polynomial::constant(1);
}

bool RationalFunction::is_monomial() const {
    return is_laurent_polynomial() && num_.is_monomial();
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::derivative(VarId v) const {
    Polynomial n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RationalFunction(n, den_ * den_);
}

RationalFunction RationalFunction::log_derivative(VarId v) const {
    RationalFunction d = derivative(v) * variable(v);
    int s = VarRegistry::instance().exponent_scale(v);
    if (s != 1) d = d * constant(mpq_frac(1, s));
    return d;
}

namespace {
RationalFunction substitute_poly(const Polynomial& p,
                                 const std::map<VarId, RationalFunction>& images) {
    RationalFunction acc = RationalFunction::zero();
    for (const auto& [m, c] : p.terms()) {
        RationalFunction t = RationalFunction::constant(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = images.find(v);
            RationalFunction img = (it != images.end()) ? it->second
                                                        : RationalFunction::variable(v);
            if (img.is_zero() && e < 0)
                throw SubstitutionSingular("negative power of vanishing image for " +
                                           VarRegistry::instance().name(v));
            t *= img.pow(e);
        }
        acc += t;
    }
    return acc;
}
} // namespace

RationalFunction RationalFunction::substitute(
    const std::map<VarId, RationalFunction>& images) const {
    RationalFunction n = substitute_poly(num_, images);
    RationalFunction d = substitute_poly(den_, images);
    if (d.is_zero()) throw SubstitutionSingular("denominator vanishes after substitution");
    return n / d;
}

mpq_class RationalFunction::eval(const std::map<VarId, mpq_class>& point) const {
    mpq_class d = den_.eval(point);
    if (d == 0) throw PoleAtPoint("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::vector<VarId> RationalFunction::variables() const {
    std::vector<VarId> a = num_.variables();
    for (VarId v : den_.variables())
        if (!std::binary_search(a.begin(), a.end(), v))
            a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    return a;
}

bool RationalFunction::even_in(VarId v) const {
    return num_.even_in(v) && den_.even_in(v);
}

std::string RationalFunction::to_string() const {
    if (is_laurent_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.equals(b);
}

namespace {

// 0 when v has even exponent in every term, 1 when odd in every term.
int uniform_parity(const Polynomial& p, VarId v) {
    int parity = -1;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        int e = static_cast<int>(((m.exponent(v) % 2) + 2) % 2);
        if (parity == -1)
            parity = e;
        else if (parity != e)
            throw Error("substitute_squares: mixed exponent parity of " +
                        VarRegistry::instance().name(v));
    }
    return parity == -1 ? 0 : parity;
}

RationalFunction substitute_half_poly(const Polynomial& p,
                                      const std::map<VarId, RationalFunction>& images) {
    RationalFunction acc = RationalFunction::zero();
    for (const auto& [m, c] : p.terms()) {
        RationalFunction t = RationalFunction::constant(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = images.find(v);
            if (it == images.end()) {
                t *= RationalFunction::variable(v, e);
                continue;
            }
            if (e % 2 != 0)
                throw Error("substitute_squares: odd exponent of " +
                            VarRegistry::instance().name(v));
            if (it->second.is_zero() && e < 0)
                throw SubstitutionSingular("negative power of vanishing image for " +
                                           VarRegistry::instance().name(v));
            t *= it->second.pow(e / 2);
        }
        acc += t;
    }
    return acc;
}

} // namespace

RationalFunction substitute_squares(const RationalFunction& f,
                                    const std::map<VarId, RationalFunction>& images) {
    Polynomial n = f.num();
    Polynomial d = f.den();
    for (const auto& [v, img] : images) {
        (void)img;
        int pn = uniform_parity(n, v);
        int pd = uniform_parity(d, v);
        if (pn != pd)
            throw Error("substitute_squares: numerator and denominator parity differ for " +
                        VarRegistry::instance().name(v));
        if (pn == 1) {
            n = n * Polynomial::variable(v);
            d = d * Polynomial::variable(v);
        }
    }
    RationalFunction nn = substitute_half_poly(n, images);
    RationalFunction dd = substitute_half_poly(d, images);
    if (dd.is_zero()) throw SubstitutionSingular("denominator vanishes after substitution");
    return nn / dd;
}

} // namespace sc
