#include "toricreg/field.hpp"

#include "toricreg/error.hpp"

#include <string>

namespace toricreg {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

/// Remainder of f modulo a nonzero polynomial d over GF(p).
Poly poly_mod(Poly f, const Poly& d, std::uint32_t p) {
    trim(f);
    const std::size_t dd = d.size() - 1;
    const std::uint32_t lead_inv = inverse_mod(d.back(), p);
    while (f.size() >= d.size()) {
        const std::uint64_t factor = std::uint64_t{f.back()} * lead_inv % p;
        const std::size_t shift = f.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - factor * d[i] % p) % p);
        }
        trim(f);
    }
    return f;
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `code`.
Poly monic_from_code(std::uint64_t code, std::uint32_t deg, std::uint32_t p) {
    Poly f(deg + 1, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    f[deg] = 1;
    return f;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// All monic irreducible polynomials of degree 1..max_deg, by trial division.
std::vector<Poly> monic_irreducibles_up_to(std::uint32_t max_deg, std::uint32_t p) {
    std::vector<Poly> found;
    for (std::uint32_t deg = 1; deg <= max_deg; ++deg) {
        const std::uint64_t count = ipow(p, deg);
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly f = monic_from_code(code, deg, p);
            bool irreducible = true;
            for (const Poly& d : found) {
                if (2 * (d.size() - 1) > deg) break;
                if (poly_mod(f, d, p).empty()) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) found.push_back(std::move(f));
        }
    }
    return found;
}

/// Multiplies the integer-form element by x modulo the monic polynomial `f`.
std::uint32_t times_x(std::uint32_t code, const Poly& f, std::uint32_t p, std::uint32_t k) {
    std::uint32_t digits[32];
    for (std::uint32_t i = 0; i < k; ++i) {
        digits[i] = code % p;
        code /= p;
    }
    const std::uint64_t top = digits[k - 1];
    std::uint32_t out = 0;
    for (std::uint32_t i = k; i-- > 0;) {
        const std::uint64_t shifted = i == 0 ? 0 : digits[i - 1];
        const std::uint32_t d = static_cast<std::uint32_t>((shifted + p - top * f[i] % p) % p);
        out = out * p + d;
    }
    return out;
}

std::uint32_t add_int(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k) {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

/// Fills `antilog` with the powers of x mod f; false if x does not have order q - 1.
bool powers_of_root(const Poly& f, std::uint32_t p, std::uint32_t k, std::uint32_t q,
                    std::vector<std::uint32_t>& antilog) {
    antilog.assign(q - 1, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t e = 0; e + 1 < q; ++e) {
        if (e > 0 && cur == 1) return false;
        antilog[e] = cur;
        cur = times_x(cur, f, p, k);
    }
    return cur == 1;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

Field::Field(std::uint64_t q, std::uint64_t table_cap) {
    if (q < 2 || !is_prime_power(q)) {
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    if (q > table_cap) {
        throw Error(ErrorKind::Overflow, "field size " + std::to_string(q) + " exceeds table cap " +
                                             std::to_string(table_cap));
    }
    q_ = static_cast<std::uint32_t>(q);
    p_ = 2;
    while (q_ % p_ != 0) ++p_;
    k_ = 0;
    for (std::uint32_t r = q_; r > 1; r /= p_) ++k_;

    bool found = false;
    if (k_ == 1) {
        // x - g for the smallest primitive root g.
        for (std::uint32_t g = (p_ == 2 ? 1 : 2); g < p_ && !found; ++g) {
            Poly f{(p_ - g) % p_, 1};
            if (powers_of_root(f, p_, 1, q_, antilog_)) {
                poly_ = std::move(f);
                found = true;
            }
        }
    } else {
        const auto divisors = monic_irreducibles_up_to(k_ / 2, p_);
        const std::uint64_t count = ipow(p_, k_);
        for (std::uint64_t code = 0; code < count && !found; ++code) {
            Poly f = monic_from_code(code, k_, p_);
            if (f[0] == 0) continue;
            bool irreducible = true;
            for (const Poly& d : divisors) {
                if (poly_mod(f, d, p_).empty()) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible && powers_of_root(f, p_, k_, q_, antilog_)) {
                poly_ = std::move(f);
                found = true;
            }
        }
    }
    if (!found) throw Error(ErrorKind::Internal, "no primitive polynomial found");

    log_.assign(q_, FieldElem::kZeroRepr);
    for (std::uint32_t e = 0; e + 1 < q_; ++e) log_[antilog_[e]] = e;

    zech_.assign(q_ - 1, FieldElem::kZeroRepr);
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        zech_[i] = log_[add_int(1, antilog_[i], p_, k_)];
    }
    minus_one_ = (p_ == 2) ? 0 : (q_ - 1) / 2;
}

FieldElem Field::power_of_generator(std::int64_t e) const {
    const std::int64_t m = order();
    std::int64_t r = e % m;
    if (r < 0) r += m;
    return FieldElem::from_exponent(static_cast<std::uint32_t>(r));
}

FieldElem Field::add(FieldElem x, FieldElem y) const {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const std::uint32_t m = order();
    const std::uint32_t a = x.exponent();
    const std::uint32_t b = y.exponent();
    const std::uint32_t diff = b >= a ? b - a : b + m - a;
    const std::uint32_t z = zech_[diff];
    if (z == FieldElem::kZeroRepr) return FieldElem::zero();
    const std::uint32_t e = a + z;
    return FieldElem::from_exponent(e >= m ? e - m : e);
}

FieldElem Field::neg(FieldElem x) const {
    if (x.is_zero()) return x;
    const std::uint32_t e = x.exponent() + minus_one_;
    return FieldElem::from_exponent(e >= order() ? e - order() : e);
}

FieldElem Field::mul(FieldElem x, FieldElem y) const {
    if (x.is_zero() || y.is_zero()) return FieldElem::zero();
    const std::uint32_t e = x.exponent() + y.exponent();
    return FieldElem::from_exponent(e >= order() ? e - order() : e);
}

FieldElem Field::inv(FieldElem x) const {
    if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return FieldElem::from_exponent(x.exponent() == 0 ? 0 : order() - x.exponent());
}

FieldElem Field::pow(FieldElem x, std::int64_t e) const {
    if (x.is_zero()) {
        if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t m = order();
    std::int64_t r = (static_cast<std::int64_t>(x.exponent()) * (e % m)) % m;
    if (r < 0) r += m;
    return FieldElem::from_exponent(static_cast<std::uint32_t>(r));
}

FieldElem Field::from_int(std::uint32_t v) const {
    if (v >= q_) throw Error(ErrorKind::IndexOutOfRange, "integer form outside [0, q)");
    const std::uint32_t e = log_[v];
    return e == FieldElem::kZeroRepr ? FieldElem::zero() : FieldElem::from_exponent(e);
}

}  // namespace toricreg
