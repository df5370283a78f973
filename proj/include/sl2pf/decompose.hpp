#pragma once

#include <array>
#include <optional>

#include "sl2pf/certificate.hpp"
#include "sl2pf/residue.hpp"

namespace sl2pf {

inline constexpr std::uint64_t kDefaultSeed = 0x51325046u;  // reproducible by default

struct DecomposeOptions {
    std::uint64_t seed = kDefaultSeed;
    bool checked = false;       // re-verify every stage postcondition by evaluation
    long retry_cap = 0;         // prime-search trials per degree; 0 = 64 * degree
    long degree_cap = 100000;   // max intermediate polynomial degree
};

// Per-stage intermediate symbols, recorded for diagnostics and the bench CSV.
struct Lemma31Trace {
    Poly m, n, prime, a1, d1;
    Fq eps = 1;
};

struct Lemma32Trace {
    Poly u, v, u1, u2, v1, v2, w1, w2;
    std::vector<Poly> t;  // t1..t10
    Fq eps1 = 1, eps2 = 1, eps = 1;
};

struct DecompositionTrace {
    bool case1 = false;
    std::optional<Poly> shift_u, shift_v;      // Case-2 elementary shifts
    std::optional<Poly> prime1, prime2;        // au + b, av + c
    BigInt e1 = 0, e2 = 0, h1 = 0, h2 = 0;
    std::vector<Lemma31Trace> lemma31_calls;
    std::vector<Lemma32Trace> lemma32_calls;
    std::vector<std::array<Poly, 3>> lemma33_tails;  // (w2, t11, t12) per call
    long prime_search_trials = 0;
    long exact_divisions = 0;
    long checks_passed = 0;
    int max_intermediate_degree = 0;
};

// Stage results. Quintuples are the Lambda / Lambda^T parameters of the
// corresponding M_Lambda factors.
struct Lemma31Result {
    Poly m, n;
    Fq eps;
    Quintuple beta;
    Poly prime;
    Mat2 result;
};

struct Lemma32Result {
    std::array<Poly, 10> t;
    Fq eps;
    Quintuple beta;   // Lambda
    Quintuple gamma;  // Lambda^T
    Mat2 alpha_r;
    Mat2 result;
};

struct Lemma33Result {
    std::array<Poly, 12> t;
    Quintuple beta;   // Lambda
    Quintuple gamma;  // Lambda^T
    Mat2 alpha_r;
};

struct Corollary34Result {
    Word chi5;            // G5
    Quintuple gamma_lt;   // Lambda^T
    Word chi4;            // G4
    Quintuple beta_l;     // Lambda
    Word chi3;            // F3
    Fq eps;
    Mat2 alpha_r;
};

struct Corollary35Result {
    Word chi9;             // G9
    Quintuple gamma_lt;    // Lambda^T
    Word chi4;             // G4
    Quintuple beta_l;      // Lambda
    Word chi3;             // F3
    Word chi9_h;           // F9
    Quintuple gamma_h;     // Lambda
    Word chi4_h;           // F4
    Quintuple beta_h;      // Lambda^T
    Word chi3_h;           // G3
};

// Shared state threaded through one decomposition.
class PipelineCtx {
  public:
    PipelineCtx(const DecomposeOptions& opts, FieldPtr field)
        : opts_(opts), rng_(opts.seed), field_(std::move(field)) {}

    const DecomposeOptions& opts() const { return opts_; }
    Rng& rng() { return rng_; }
    const FieldPtr& field_ptr() const { return field_; }
    DecompositionTrace& trace() { return trace_; }
    DecompositionTrace take_trace() { return std::move(trace_); }

    Poly exact(const Poly& f, const Poly& g) {
        ++trace_.exact_divisions;
        return exact_div(f, g);
    }
    void note(const Poly& p) {
        if (p.degree() > trace_.max_intermediate_degree)
            trace_.max_intermediate_degree = p.degree();
    }
    void note(const Mat2& m) {
        note(m.a); note(m.b); note(m.c); note(m.d);
    }
    // Stage postcondition in checked mode; failures are pipeline bugs.
    void check(bool ok, const char* what) {
        if (!opts_.checked) return;
        require(ok, Errc::InternalCheck, what);
        ++trace_.checks_passed;
    }
    void guard_degree(const BigInt& deg, const char* what) {
        require(deg <= opts_.degree_cap, Errc::DegreeCapExceeded,
                std::string(what) + ": intermediate degree " + deg.str() + " exceeds cap " +
                    std::to_string(opts_.degree_cap));
    }

  private:
    DecomposeOptions opts_;
    Rng rng_;
    FieldPtr field_;
    DecompositionTrace trace_;
};

// Cayley-Hamilton coefficients of x^r modulo x^2 - trace*x + 1: the unique
// (u, v) with alpha^r = u*alpha + v*I for alpha in SL2 with the given trace.
std::pair<Poly, Poly> cayley_hamilton_pair(const Poly& trace, const BigInt& r, long degree_cap);

// alpha with top row (1 + a*u, b*u): returns m, n, eps, beta, prime with
// alpha (um)_{1,2} n_{2,1} (-prime*u)_{1,2} Lambda(beta)
//       (-eps^{-1}un)_{1,2} (-eps*m)_{2,1} = [[*, *], [eps*b, 1 + a*u]].
Lemma31Result lemma31(PipelineCtx& ctx, const Mat2& alpha, const Poly& a, const Poly& b,
                      const Poly& u);

// alpha^r t1_{1,2} t2_{2,1} t3_{1,2} Lambda(beta) t4_{1,2} t5_{2,1} t6_{1,2}
// t7_{2,1} Lambda^T(gamma) t8_{2,1} t9_{1,2} t10_{2,1} = [[a^r, eps*b], [*, *]].
Lemma32Result lemma32(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r);

// Under a^r = eps (mod b): the twelve-parameter word carrying alpha^r to
// diag(eps, eps^{-1}).
Lemma33Result lemma33(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r, Fq eps);

// alpha^r = diag(eps, eps^{-1}) chi5 Lambda^T(gamma) chi4 Lambda(beta) chi3.
Corollary34Result corollary34(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r, Fq eps);

// gcd(r, s) = 1, a^r = eps1 (mod b), a^s = eps2 (mod c): the ten-factor
// product reconstructing alpha.
Corollary35Result corollary35(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r, const BigInt& s,
                              Fq eps1, Fq eps2);

struct DecomposeResult {
    Certificate certificate;
    DecompositionTrace trace;
};

// Full pipeline: omega_eval(certificate) equals alpha exactly.
DecomposeResult decompose(const Mat2& alpha, const DecomposeOptions& opts = {});

// Unimodular (a, b) completed to SL2 by xgcd, then decomposed; the returned
// 52 parameters evaluate to a matrix with top row (a, b).
std::vector<Poly> um2_parametrize(const Poly& a, const Poly& b, const DecomposeOptions& opts = {});

}  // namespace sl2pf
