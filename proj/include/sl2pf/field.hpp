#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sl2pf/bigint.hpp"
#include "sl2pf/errors.hpp"

namespace sl2pf {

// Index of a field element: value sum c_i * p^i for the coefficient vector
// (c_0, ..., c_{n-1}) of its reduced representative. 0 and 1 are the ring
// zero and one in every field.
using Fq = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_q, q = p^n with p an odd prime. Arithmetic is table-driven, so q is
// capped at kMaxQ; the pipeline only ever needs desk-scale fields.
class Field {
  public:
    static constexpr long kMaxQ = 4096;

    // n > 1 without a modulus picks the lexicographically smallest monic
    // irreducible of degree n over F_p (coefficient vector read as a base-p
    // counter, constant term least significant).
    static FieldPtr make(long p, int n = 1);
    static FieldPtr make(long p, int n, const std::vector<long>& modulus_coeffs);

    long p() const { return p_; }
    int n() const { return n_; }
    long q() const { return q_; }
    // Modulus coefficients over F_p, length n+1, monic; empty when n = 1.
    const std::vector<long>& modulus() const { return modulus_; }

    Fq zero() const { return 0; }
    Fq one() const { return 1; }

    Fq add(Fq a, Fq b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq inv(Fq a) const {
        require(a != 0, Errc::DivisionByZero, "field inverse of zero");
        return inv_[a];
    }
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    Fq pow(Fq a, const BigInt& e) const;

    // Smallest square root by element index, if one exists.
    std::optional<Fq> sqrt(Fq a) const {
        Fq r = sqrt_[a];
        if (r == kNoSqrt) return std::nullopt;
        return r;
    }

    // Element from an integer (reduced mod p); only the prime subfield is
    // reachable this way.
    Fq from_int(long v) const;
    // Element from base-field coefficients (c_0, ..., c_{n-1}), reduced mod p.
    Fq from_coeffs(const std::vector<long>& c) const;
    std::vector<long> coeffs(Fq a) const;

    std::string elem_to_string(Fq a) const;
    Fq elem_from_string(const std::string& s) const;

    bool same(const Field& other) const {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

  private:
    Field() = default;
    void build_tables();

    static constexpr Fq kNoSqrt = 0xffff;

    long p_ = 0;
    int n_ = 1;
    long q_ = 0;
    std::vector<long> modulus_;  // empty for n = 1
    std::vector<Fq> add_, mul_, neg_, inv_, sqrt_;
};

inline void require_same_field(const Field& a, const Field& b) {
    require(a.same(b), Errc::FieldMismatch, "operands live in different fields");
}

}  // namespace sl2pf
