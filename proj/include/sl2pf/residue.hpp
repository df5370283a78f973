#pragma once

#include <optional>

#include "sl2pf/poly.hpp"

namespace sl2pf {

// f irreducible over F_q iff T^{q^d} = T mod f and gcd(T^{q^{d/l}} - T, f) = 1
// for every prime l | d (Rabin). Small-degree factors are screened first so
// most composites exit early.
bool is_irreducible(const Poly& f);

// Monic irreducible with a re-checkable certificate.
class PrimePoly {
  public:
    explicit PrimePoly(Poly p) : poly_(std::move(p)) {
        require(poly_.is_monic() && poly_.degree() >= 1 && is_irreducible(poly_),
                Errc::NotPrimePoly, "polynomial is not a monic prime");
    }

    const Poly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }

  private:
    Poly poly_;
};

// Degree constraint for prime searches.
struct DegreePredicate {
    // d = exact, or d ≡ residue (mod modulus) with d > min_deg_exclusive
    static DegreePredicate exact(int d) { return {true, d, 0, 0}; }
    static DegreePredicate congruent(int residue, int modulus, int min_deg_exclusive) {
        return {false, 0, residue % modulus, min_deg_exclusive, modulus};
    }

    bool is_exact = false;
    int exact_deg = 0;
    int residue = 0;
    int min_deg_exclusive = -1;
    int modulus = 1;

    bool admits(int d) const {
        if (is_exact) return d == exact_deg;
        return d > min_deg_exclusive && (d % modulus) == residue;
    }
};

struct DirichletResult {
    Poly m;          // prime = residue + m * step
    PrimePoly prime;
};

// Monic prime in the progression residue + step*A with the degree predicate;
// randomized at the smallest admissible degree, exhaustive fallback at the
// two smallest, then SearchExhausted. retry_cap 0 means 64 * degree.
DirichletResult dirichlet_search(const Poly& step, const Poly& residue, const DegreePredicate& pred,
                                 Rng& rng, long retry_cap = 0,
                                 long* trial_counter = nullptr);

struct CoprimePair {
    Poly u, v;
    PrimePoly p1, p2;
};

// u, v with p1 = a*u + b and p2 = a*v + c monic primes of coprime degrees.
// Degree pairs are scanned in increasing total size; within a pair the
// orientation is chosen to minimize the Cayley-Hamilton exponent e1*h1 the
// caller will incur.
CoprimePair coprime_degree_pair_search(const Poly& a, const Poly& b, const Poly& c, Rng& rng,
                                       long retry_cap = 0, long* trial_counter = nullptr);

// d-th power residue symbol: 0 if prime | m, else the unique unit congruent
// to m^((q^deg - 1)/d) mod prime. Requires d | q - 1.
Fq power_residue_symbol(const Poly& m, const PrimePoly& prime, long d);

// r-th root of c mod prime (r | q^deg - 1), Adleman-Manders-Miller per prime
// factor of r. Deterministic canonical choice: the root with the smallest
// coefficient sequence.
Poly amm_root(const Poly& c, const PrimePoly& prime, long r, Rng& rng);

}  // namespace sl2pf
