#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sl2pf/bigint.hpp"
#include "sl2pf/errors.hpp"
#include "sl2pf/field.hpp"
#include "sl2pf/rng.hpp"

namespace sl2pf {

// Element of A = F_q[T]: dense coefficient vector, coeffs_[i] the coefficient
// of T^i, no trailing zeros. The zero polynomial has an empty vector and
// degree kNegInfDeg.
class Poly {
  public:
    static constexpr int kNegInfDeg = -1;

    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Fq> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly one(FieldPtr f) { return constant(std::move(f), 1); }
    static Poly constant(FieldPtr f, Fq c);
    static Poly from_int(FieldPtr f, long v);
    // c * T^k
    static Poly monomial(FieldPtr f, int k, Fq c = 1);
    static Poly t(FieldPtr f) { return monomial(std::move(f), 1); }

    const FieldPtr& field_ptr() const { return f_; }
    const Field& field() const { return *f_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_unit() const { return c_.size() == 1; }

    Fq coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0;
    }
    Fq lc() const {
        require(!c_.empty(), Errc::DivisionByZero, "leading coefficient of zero");
        return c_.back();
    }
    const std::vector<Fq>& coeffs() const { return c_; }

    // The unique c in F_q with *this = c; NotConstant otherwise.
    Fq constant_part() const {
        require(is_constant(), Errc::NotConstant, "polynomial has positive degree");
        return c_.empty() ? 0 : c_[0];
    }

    Fq eval(Fq x) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly mul_scalar(Fq s) const;
    Poly shifted(int k) const;  // * T^k, k >= 0

    bool operator==(const Poly& o) const { return f_->same(*o.f_) && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;

    // Total order used for canonical choices: by degree, then coefficient
    // indices from T^0 upward.
    static int cmp(const Poly& a, const Poly& b);

    std::string to_string() const;
    static Poly parse(FieldPtr f, const std::string& text);

    static Poly random_exact_degree(FieldPtr f, int deg, Rng& rng);
    static Poly random_at_most(FieldPtr f, int deg, Rng& rng);  // zero allowed

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr f_;
    std::vector<Fq> c_;
};

// Quadratic schoolbook product, single-threaded. Kept as the reference
// implementation the fast path is tested against.
Poly poly_mul_reference(const Poly& a, const Poly& b);

// f = quo*g + rem with deg rem < deg g; g != 0.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
// Division that must be exact; a nonzero remainder signals a pipeline bug.
Poly exact_div(const Poly& f, const Poly& g);

// Monic gcd; (0, 0) is rejected.
Poly poly_gcd(const Poly& f, const Poly& g);
// (d, s, t) with d monic, d = s*f + t*g.
struct XgcdResult {
    Poly d, s, t;
};
XgcdResult poly_xgcd(const Poly& f, const Poly& g);

// Repeated reduction against one modulus: caches the Newton inverse of the
// reversed modulus so each reduction is two multiplications.
class ModCtx {
  public:
    explicit ModCtx(Poly modulus);

    const Poly& modulus() const { return m_; }
    Poly reduce(const Poly& f) const;
    Poly mulmod(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly powmod(const Poly& base, const BigInt& exp) const;

  private:
    Poly m_;
    Poly minv_;  // inverse of rev(m) mod T^(deg m)
};

// base^exp mod modulus; binary exponentiation, exp arbitrary-size.
Poly powmod(const Poly& base, const BigInt& exp, const Poly& modulus);

// Unreduced power in A; degree = exp * deg(base).
Poly poly_pow(const Poly& base, unsigned long exp);
// Guarded variant for big exponents: refuses once the result degree would
// exceed degree_cap.
Poly poly_pow_guarded(const Poly& base, const BigInt& exp, long degree_cap);

bool is_constant(const Poly& f);
Fq constant_part(const Poly& f);

// Square root in A: r with r*r = f, computed coefficientwise top-down.
std::optional<Poly> poly_sqrt(const Poly& f);

}  // namespace sl2pf
