#ifndef STOKESCLUSTER_RATIONAL_HPP
#define STOKESCLUSTER_RATIONAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "stokescluster/error.hpp"

namespace sc {

using VarId = std::uint32_t;

// Append-only variable table. Insertion order is the canonical variable
// order used by all serializations, so a fixed command sequence yields
// byte-identical output. exponent_scale = 2 marks variables stored in
// half-units: the internal symbol is the square root of the exposed one,
// so an exposed power p is stored as exponent 2p and printing divides by 2.
class VarRegistry {
public:
    static VarRegistry& instance();

    VarId intern(const std::string& name, int exponent_scale = 1);
    VarId id(const std::string& name) const; // throws UnknownVariable
    bool contains(const std::string& name) const;
    const std::string& name(VarId v) const;
    int exponent_scale(VarId v) const;
    std::size_t size() const;

private:
    VarRegistry() = default;
    std::vector<std::string> names_;
    std::vector<int> scales_;
    std::map<std::string, VarId> index_;
};

mpq_class mpq_frac(long num, long den);
std::string mpq_to_string(const mpq_class& q);
mpq_class mpq_pow(const mpq_class& base, long exp); // throws DivisionByZero on 0^negative

// Sorted (VarId, exponent) pairs, exponents nonzero; negative exponents allowed.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(VarId v, std::int64_t exp = 1);

    const std::vector<std::pair<VarId, std::int64_t>>& factors() const { return f_; }
    bool empty() const { return f_.empty(); }
    std::int64_t exponent(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(std::int64_t e) const;

    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator<(const Monomial& o) const { return f_ < o.f_; }

    std::string to_string() const; // without coefficient; "1" if empty

private:
    std::vector<std::pair<VarId, std::int64_t>> f_;
    void prune();
    friend class Polynomial;
};

// Laurent polynomial with exact rational coefficients.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(const mpq_class& c);
    static Polynomial variable(VarId v, std::int64_t exp = 1);
    static Polynomial term(const mpq_class& c, const Monomial& m);

    const std::map<Monomial, mpq_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t term_count() const { return t_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial mul_term(const mpq_class& c, const Monomial& m) const;
    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

    Polynomial derivative(VarId v) const;         // plain d/dv on the stored symbol
    mpq_class eval(const std::map<VarId, mpq_class>& point) const;
    std::vector<VarId> variables() const;
    std::int64_t min_exponent(VarId v) const;     // 0 if v absent
    bool even_in(VarId v) const;                  // every exponent of v even

    std::string to_string() const;

private:
    std::map<Monomial, mpq_class> t_;
    void add_term(const Monomial& m, const mpq_class& c);
    friend class RationalFunction;
};

// Quotient of Laurent polynomials, normalized so that:
//  - zero is 0/1;
//  - a single-term denominator is folded into the numerator (den = 1);
//  - otherwise the denominator is a genuine polynomial (min exponent 0 in
//    each variable) with coprime integer coefficients and positive leading
//    coefficient in canonical term order.
// Equality is decided by cross-multiplication, so the absence of full
// multivariate gcd reduction never affects results.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);
    static RationalFunction constant(const mpq_class& c);
    static RationalFunction from_long(long c);
    static RationalFunction variable(VarId v, std::int64_t exp = 1);
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return constant(1); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;
    RationalFunction pow(std::int64_t e) const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_laurent_polynomial() const;   // den == 1
    bool is_monomial() const;             // single term over den 1
    bool equals(const RationalFunction& o) const;

    RationalFunction derivative(VarId v) const;
    RationalFunction log_derivative(VarId v) const; // (v d/dv)/exponent_scale(v)
    RationalFunction substitute(const std::map<VarId, RationalFunction>& images) const;
    mpq_class eval(const std::map<VarId, mpq_class>& point) const; // PoleAtPoint if den vanishes
    std::vector<VarId> variables() const;
    bool even_in(VarId v) const;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
    void normalize();
};

bool rf_equal(const RationalFunction& a, const RationalFunction& b);

// Substitution into the squares of the mapped variables: v^e becomes
// images[v]^(e/2). A uniformly odd exponent parity of v in numerator and
// denominator is corrected by multiplying both by v; mixed parity throws.
// Unmapped variables are left untouched.
RationalFunction substitute_squares(const RationalFunction& f,
                                    const std::map<VarId, RationalFunction>& images);

} // namespace sc

#endif
