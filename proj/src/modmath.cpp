#include "sblom/modmath.hpp"

#include <algorithm>

#include "sblom/encoding.hpp"

namespace sblom {

namespace {

// Primes below 10^4 for deterministic trial division.
const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> table = [] {
        const unsigned long limit = 10'000;
        std::vector<bool> sieve(limit, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i < limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j < limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return table;
}

enum class TrialResult { Composite, Prime, Unknown };

TrialResult trial_division(const mpz_class& n) {
    for (unsigned long d : small_primes()) {
        mpz_class dd = static_cast<unsigned long>(d);
        if (dd * dd > n) return TrialResult::Prime;
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            return n == dd ? TrialResult::Prime : TrialResult::Composite;
        }
    }
    return TrialResult::Unknown; // n >= 10^8 with no small factor
}

bool miller_rabin_round(const mpz_class& n, const mpz_class& witness,
                        const mpz_class& d, unsigned long s) {
    mpz_class x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

} // namespace

mpz_class mod_reduce(const mpz_class& v, const mpz_class& m) {
    if (sgn(m) <= 0) fail("InvalidArgument", "modulus must be positive");
    mpz_class r = v % m;
    if (sgn(r) < 0) r += m;
    return r;
}

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
    if (sgn(exp) < 0) fail("InvalidArgument", "negative exponent");
    if (sgn(m) <= 0) fail("InvalidArgument", "modulus must be positive");
    if (m == 1) return 0;
    mpz_class acc = 1;
    mpz_class cur = mod_reduce(base, m);
    mpz_class e = exp;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * cur % m;
        e >>= 1;
        if (sgn(e) > 0) cur = cur * cur % m;
    }
    return acc;
}

FieldParams FieldParams::from_prime(const mpz_class& p, bool mark_safe) {
    if (p < 5) fail("InvalidArgument", "p must be at least 5");
    Rng rng(0x5b10bULL); // fixed witnesses; primality checking is stateless
    if (!is_probable_prime(p, rng)) fail("InvalidArgument", "p is not prime");
    if (mark_safe && !is_probable_prime((p - 1) / 2, rng))
        fail("InvalidArgument", "(p-1)/2 is not prime");
    FieldParams fp;
    fp.p = p;
    fp.exp_modulus = p - 1;
    fp.bit_length = static_cast<unsigned>(mpz_sizeinbase(p.get_mpz_t(), 2));
    fp.safe_prime = mark_safe;
    return fp;
}

nlohmann::json FieldParams::to_json() const {
    return {{"p", to_hex(p)}, {"safe_prime", safe_prime}};
}

FieldParams FieldParams::from_json(const nlohmann::json& j) {
    return from_prime(from_hex(j.at("p").get<std::string>()),
                      j.at("safe_prime").get<bool>());
}

BaseElem BaseElem::reduce(const mpz_class& v, const FieldParams& fp) {
    return BaseElem(mod_reduce(v, fp.p));
}

ExpElem ExpElem::reduce(const mpz_class& v, const FieldParams& fp) {
    return ExpElem(mod_reduce(v, fp.exp_modulus));
}

BaseElem point_as_base(const mpz_class& r, const FieldParams& fp) {
    return BaseElem::reduce(r, fp);
}

ExpElem point_as_exponent(const mpz_class& r, const FieldParams& fp) {
    return ExpElem::reduce(r, fp);
}

Poly::Poly(std::vector<mpz_class> coeffs, mpz_class modulus)
    : coeffs_(std::move(coeffs)), modulus_(std::move(modulus)) {
    if (sgn(modulus_) <= 0) fail("InvalidArgument", "polynomial modulus must be positive");
    if (coeffs_.empty()) coeffs_.push_back(0);
    for (auto& c : coeffs_) c = mod_reduce(c, modulus_);
    while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::constant(const mpz_class& c, const mpz_class& modulus) {
    return Poly({c}, modulus);
}

BaseElem mod_pow(const BaseElem& base, const mpz_class& exp, const FieldParams& fp) {
    return BaseElem(pow_mod(base.value(), exp, fp.p));
}

BaseElem mod_pow(const BaseElem& base, const ExpElem& exp, const FieldParams& fp) {
    return mod_pow(base, exp.value(), fp);
}

BaseElem base_mul(const BaseElem& a, const BaseElem& b, const FieldParams& fp) {
    return BaseElem(a.value() * b.value() % fp.p);
}

NotInvertibleError::NotInvertibleError(const mpz_class& value, const mpz_class& gcd)
    : Error("NotInvertible", "gcd(" + to_hex(value) + ", m) = " + to_hex(gcd)),
      value_(value), gcd_(gcd) {}

mpz_class mod_inv(const mpz_class& a, const mpz_class& m) {
    if (sgn(m) <= 0) fail("InvalidArgument", "modulus must be positive");
    mpz_class ar = mod_reduce(a, m);
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
               ar.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw NotInvertibleError(a, g);
    return mod_reduce(s, m);
}

bool is_probable_prime(const mpz_class& n, Rng& rng, int rounds) {
    if (n < 2) return false;
    switch (trial_division(n)) {
        case TrialResult::Prime: return true;
        case TrialResult::Composite: return false;
        case TrialResult::Unknown: break;
    }
    // n is odd and >= 10^8 here. Write n-1 = d * 2^s.
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (int i = 0; i < rounds; ++i) {
        mpz_class witness = rng.range(2, n - 2);
        if (!miller_rabin_round(n, witness, d, s)) return false;
    }
    return true;
}

FieldParams gen_prime(unsigned bits, bool safe, Rng& rng, unsigned long max_attempts) {
    if (bits < 3) fail("InvalidArgument", "bits must be at least 3");
    for (unsigned long attempt = 0; attempt < max_attempts; ++attempt) {
        // Top bit forces the exact width, low bit forces odd.
        mpz_class p = rng.bits(bits - 1);
        mpz_setbit(p.get_mpz_t(), bits - 1);
        mpz_setbit(p.get_mpz_t(), 0);
        if (p < 5) continue;
        if (trial_division(p) == TrialResult::Composite) continue;
        if (safe) {
            mpz_class q = (p - 1) / 2;
            if (trial_division(q) == TrialResult::Composite) continue;
            if (!is_probable_prime(q, rng)) continue;
        }
        if (!is_probable_prime(p, rng)) continue;
        return FieldParams::from_prime(p, safe);
    }
    fail("Timeout", "no " + std::to_string(bits) + "-bit prime within " +
                        std::to_string(max_attempts) + " attempts");
}

mpz_class poly_eval(const Poly& h, const mpz_class& x) {
    const mpz_class& m = h.modulus();
    mpz_class xr = mod_reduce(x, m);
    mpz_class acc = 0;
    for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it) {
        acc = (acc * xr + *it) % m;
    }
    return acc;
}

Poly lagrange_interpolate(const std::vector<std::pair<mpz_class, mpz_class>>& points,
                          const mpz_class& modulus) {
    if (points.empty()) fail("InvalidArgument", "no interpolation points");
    const std::size_t n = points.size();
    std::vector<mpz_class> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = mod_reduce(points[i].first, modulus);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) fail("InvalidArgument", "duplicate interpolation node");

    std::vector<mpz_class> result(n, 0);
    std::vector<mpz_class> basis; // coefficients of prod (x - x_j), built per i
    for (std::size_t i = 0; i < n; ++i) {
        basis.assign(1, mpz_class(1));
        mpz_class denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // basis *= (x - x_j)
            std::vector<mpz_class> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = (next[k + 1] + basis[k]) % modulus;
                next[k] = mod_reduce(next[k] - basis[k] * xs[j], modulus);
            }
            basis = std::move(next);
            // Invert each node difference separately so the failure reports
            // the difference that shares a factor with the modulus.
            mpz_class diff = mod_reduce(xs[i] - xs[j], modulus);
            denom = denom * mod_inv(diff, modulus) % modulus;
        }
        mpz_class scale = mod_reduce(points[i].second, modulus) * denom % modulus;
        for (std::size_t k = 0; k < basis.size(); ++k)
            result[k] = (result[k] + basis[k] * scale) % modulus;
    }
    return Poly(std::move(result), modulus);
}

} // namespace sblom
