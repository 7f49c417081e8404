#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sblom/errors.hpp"
#include "sblom/rng.hpp"

namespace sblom {

// Public group parameters: prime modulus p for the base ring Z_p and the
// cached exponent modulus p-1 for the exponent ring Z_{p-1}. All exponents
// live mod p-1 (Fermat), all group elements mod p.
struct FieldParams {
    mpz_class p;
    mpz_class exp_modulus; // p - 1
    unsigned bit_length = 0;
    bool safe_prime = false;

    // Validates primality (Miller-Rabin, 40 rounds, plus trial division) and,
    // when mark_safe is set, that (p-1)/2 is prime too. mark_safe also turns
    // on the quadratic-residue discipline for public points; passing false
    // for a prime that happens to be safe is the documented way to run the
    // small worked fixtures with that rule disabled.
    static FieldParams from_prime(const mpz_class& p, bool mark_safe = false);

    nlohmann::json to_json() const; // {"p": hex, "safe_prime": bool}
    static FieldParams from_json(const nlohmann::json& j);

    bool operator==(const FieldParams& o) const {
        return p == o.p && safe_prime == o.safe_prime;
    }
};

// Residue in the base ring Z_p. Distinct from ExpElem so that accidentally
// feeding a group element where an exponent belongs is a type error.
class BaseElem {
public:
    BaseElem() = default;

    static BaseElem reduce(const mpz_class& v, const FieldParams& fp);

    const mpz_class& value() const { return v_; }

    bool operator==(const BaseElem& o) const { return v_ == o.v_; }
    bool operator!=(const BaseElem& o) const { return v_ != o.v_; }

private:
    explicit BaseElem(mpz_class v) : v_(std::move(v)) {}
    mpz_class v_;

    friend BaseElem mod_pow(const BaseElem&, const mpz_class&, const FieldParams&);
    friend BaseElem base_mul(const BaseElem&, const BaseElem&, const FieldParams&);
};

// Residue in the exponent ring Z_{p-1}.
class ExpElem {
public:
    ExpElem() = default;

    static ExpElem reduce(const mpz_class& v, const FieldParams& fp);

    const mpz_class& value() const { return v_; }

    bool operator==(const ExpElem& o) const { return v_ == o.v_; }
    bool operator!=(const ExpElem& o) const { return v_ != o.v_; }

private:
    explicit ExpElem(mpz_class v) : v_(std::move(v)) {}
    mpz_class v_;
};

// The two coercions of a public point r: the scheme uses r both as a group
// element (base of a power) and as a polynomial argument (an exponent-ring
// value). Keeping both reductions explicit and named is what prevents the
// classic mixing bug.
BaseElem point_as_base(const mpz_class& r, const FieldParams& fp);
ExpElem point_as_exponent(const mpz_class& r, const FieldParams& fp);

// Univariate polynomial with coefficients reduced modulo `modulus`,
// lowest degree first. Trailing zero coefficients are stripped on
// construction; the zero polynomial is stored as a single 0.
class Poly {
public:
    Poly() : coeffs_{0}, modulus_(0) {}
    Poly(std::vector<mpz_class> coeffs, mpz_class modulus);

    static Poly constant(const mpz_class& c, const mpz_class& modulus);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& modulus() const { return modulus_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }

    bool operator==(const Poly& o) const {
        return coeffs_ == o.coeffs_ && modulus_ == o.modulus_;
    }

private:
    std::vector<mpz_class> coeffs_;
    mpz_class modulus_;
};

// v mod m normalized into [0, m).
mpz_class mod_reduce(const mpz_class& v, const mpz_class& m);

// base^exp mod m by square-and-multiply; exp must be >= 0. 0^0 = 1 by
// convention.
mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m);

BaseElem mod_pow(const BaseElem& base, const mpz_class& exp, const FieldParams& fp);
BaseElem mod_pow(const BaseElem& base, const ExpElem& exp, const FieldParams& fp);
BaseElem base_mul(const BaseElem& a, const BaseElem& b, const FieldParams& fp);

// a^{-1} mod m via extended Euclid. Throws NotInvertible (detail carries the
// gcd) when gcd(a, m) != 1 -- routine in Z_{p-1}, which is composite for
// every p > 3.
mpz_class mod_inv(const mpz_class& a, const mpz_class& m);

// The gcd that made the last NotInvertible failure; exposed through the
// exception type instead.
class NotInvertibleError : public Error {
public:
    NotInvertibleError(const mpz_class& value, const mpz_class& gcd);
    const mpz_class& offending_value() const { return value_; }
    const mpz_class& gcd() const { return gcd_; }

private:
    mpz_class value_;
    mpz_class gcd_;
};

// Miller-Rabin with deterministic trial division below 10^4 first. Exact for
// n < 10^8, probabilistic (error < 4^-rounds) above.
bool is_probable_prime(const mpz_class& n, Rng& rng, int rounds = 40);

// Random prime of exactly `bits` bits (safe prime p = 2q+1 when `safe`).
// Deterministic under a seeded rng. Throws Timeout when the attempt budget
// runs out.
FieldParams gen_prime(unsigned bits, bool safe, Rng& rng,
                      unsigned long max_attempts = 4'000'000);

// Horner evaluation; x is reduced into the polynomial's ring first.
mpz_class poly_eval(const Poly& h, const mpz_class& x);

// Unique polynomial of degree < n through n points with pairwise-distinct
// x-values. Over a prime modulus this always succeeds; over a composite
// modulus (Z_{p-1}) it throws NotInvertible when a node difference shares a
// factor with the modulus.
Poly lagrange_interpolate(const std::vector<std::pair<mpz_class, mpz_class>>& points,
                          const mpz_class& modulus);

} // namespace sblom
