#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace toricreg {

/// An element of GF(q) in discrete-log form: either zero or g^e with e in [0, q-2].
class FieldElem {
public:
    static constexpr std::uint32_t kZeroRepr = 0xFFFFFFFFu;

    constexpr FieldElem() = default;

    static constexpr FieldElem zero() { return FieldElem(); }
    /// g^e; `e` must already be reduced into [0, q-2].
    static constexpr FieldElem from_exponent(std::uint32_t e) { return FieldElem(e); }

    constexpr bool is_zero() const { return repr_ == kZeroRepr; }
    /// Discrete log; only meaningful when !is_zero().
    constexpr std::uint32_t exponent() const { return repr_; }
    constexpr std::uint32_t repr() const { return repr_; }

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

private:
    constexpr explicit FieldElem(std::uint32_t e) : repr_(e) {}

    std::uint32_t repr_ = kZeroRepr;
};

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// GF(q), q = p^k <= table cap, built from the smallest primitive polynomial over GF(p).
///
/// Elements also have an integer form: the base-p number whose digits are the coefficients
/// of the polynomial in the generator's residue class (for prime q, the residue itself).
/// Immutable after construction.
class Field {
public:
    static constexpr std::uint32_t kDefaultTableCap = 1u << 16;

    explicit Field(std::uint64_t q, std::uint64_t table_cap = kDefaultTableCap);

    std::uint32_t q() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return k_; }
    /// Order of the multiplicative group, q - 1.
    std::uint32_t order() const { return q_ - 1; }
    bool is_prime_field() const { return k_ == 1; }

    /// Coefficients c_0..c_k (c_k = 1) of the defining primitive polynomial.
    const std::vector<std::uint32_t>& primitive_poly() const { return poly_; }

    /// zech(i) is the exponent of 1 + g^i, or FieldElem::kZeroRepr when 1 + g^i = 0.
    std::uint32_t zech(std::uint32_t i) const { return zech_[i]; }

    FieldElem zero() const { return FieldElem::zero(); }
    FieldElem one() const { return FieldElem::from_exponent(0); }
    FieldElem generator() const { return FieldElem::from_exponent(q_ == 2 ? 0 : 1); }
    /// g^e for any integer e (reduced mod q - 1).
    FieldElem power_of_generator(std::int64_t e) const;

    FieldElem add(FieldElem x, FieldElem y) const;
    FieldElem neg(FieldElem x) const;
    FieldElem sub(FieldElem x, FieldElem y) const { return add(x, neg(y)); }
    FieldElem mul(FieldElem x, FieldElem y) const;
    FieldElem inv(FieldElem x) const;
    FieldElem div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }
    /// x^e; negative e requires x != 0. 0^0 = 1.
    FieldElem pow(FieldElem x, std::int64_t e) const;

    std::uint32_t to_int(FieldElem x) const { return x.is_zero() ? 0 : antilog_[x.exponent()]; }
    FieldElem from_int(std::uint32_t v) const;

    /// Exponent of -1 (0 in characteristic 2).
    std::uint32_t minus_one_exponent() const { return minus_one_; }

private:
    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t minus_one_ = 0;
    std::vector<std::uint32_t> poly_;
    std::vector<std::uint32_t> antilog_;  // exponent -> integer form
    std::vector<std::uint32_t> log_;      // integer form -> exponent (kZeroRepr at 0)
    std::vector<std::uint32_t> zech_;
};

}  // namespace toricreg
