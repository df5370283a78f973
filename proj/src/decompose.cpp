#include "sl2pf/decompose.hpp"

namespace sl2pf {

namespace {

// (u1 x + v1)(u2 x + v2) mod (x^2 - t x + 1)
std::pair<Poly, Poly> ch_mul(const Poly& t, const std::pair<Poly, Poly>& a,
                             const std::pair<Poly, Poly>& b) {
    Poly uu = a.first * b.first;
    return {uu * t + a.first * b.second + a.second * b.first, a.second * b.second - uu};
}

Mat2 mat_pow(const Mat2& alpha, const BigInt& r) {
    Mat2 acc = Mat2::identity(alpha.field_ptr());
    Mat2 base = alpha;
    BigInt e = r;
    while (e > 0) {
        if ((e & 1) != 0) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

Word g1_word(const Poly& v) { return Word::from_family(WordFamily::G, v.field_ptr(), {v}); }

Word upper_factor(const Poly& literal) {
    return Word::raw(literal.field_ptr(), {{Side::Upper, literal}});
}

}  // namespace

std::pair<Poly, Poly> cayley_hamilton_pair(const Poly& trace, const BigInt& r, long degree_cap) {
    require(r >= 1, Errc::PreconditionViolated, "exponent must be positive");
    FieldPtr f = trace.field_ptr();
    if (trace.degree() >= 1) {
        BigInt worst = (r - 1) * trace.degree();
        require(worst <= degree_cap, Errc::DegreeCapExceeded,
                "Cayley-Hamilton coefficients of degree " + worst.str() + " exceed cap " +
                    std::to_string(degree_cap));
    }
    // left-to-right binary powering of x modulo x^2 - trace*x + 1
    std::pair<Poly, Poly> x{Poly::one(f), Poly::zero(f)};
    std::pair<Poly, Poly> acc = x;
    long bits = static_cast<long>(boost::multiprecision::msb(r));
    for (long i = bits - 1; i >= 0; --i) {
        acc = ch_mul(trace, acc, acc);
        if (boost::multiprecision::bit_test(r, static_cast<unsigned>(i))) acc = ch_mul(trace, acc, x);
    }
    return acc;
}

Lemma31Result lemma31(PipelineCtx& ctx, const Mat2& alpha, const Poly& a, const Poly& b,
                      const Poly& u) {
    FieldPtr f = alpha.field_ptr();
    const Field& F = *f;
    const Poly one = Poly::one(f);
    const Poly one_plus_au = one + a * u;
    require(alpha.a == one_plus_au && alpha.b == b * u, Errc::PreconditionShape,
            "top row is not (1 + a*u, b*u)");
    require_sl2(alpha, "lemma31");

    Lemma31Trace rec{Poly::zero(f), Poly::zero(f), Poly::zero(f), Poly::zero(f), Poly::zero(f), 1};

    Poly m = Poly::zero(f), n = Poly::zero(f), prime = Poly::zero(f), a1 = Poly::zero(f);
    Fq eps = 1;
    Quintuple beta = Quintuple::zeros(f);
    Mat2 result = alpha;

    if (one_plus_au.is_zero()) {
        // det forces b*u to be a unit; the closed-form branch solves the
        // postcondition directly with the identity Lambda factor.
        const Poly bu = alpha.b;
        require(bu.is_unit(), Errc::InternalCheck, "degenerate lemma31 without unit b*u");
        n = Poly::constant(f, F.inv(bu.constant_part()));
        m = b * (alpha.d - one - b * b * u);
        prime = b;
        eps = 1;
        result.rmul_upper(u * m);
        result.rmul_lower(n);
        result.rmul_upper(-(prime * u));
        result.rmul_upper(-(u * n));
        result.rmul_lower(-m);
    } else {
        const long q = F.q();
        auto pred = DegreePredicate::congruent(static_cast<int>(q - 2), static_cast<int>(q - 1),
                                               b.degree());
        Rng search_rng = ctx.rng().fork();
        auto found = dirichlet_search(one_plus_au, b, pred, search_rng, ctx.opts().retry_cap,
                                      &ctx.trace().prime_search_trials);
        m = found.m;
        prime = found.prime.poly();
        ctx.note(prime);

        if (divrem(a, prime).second.is_zero()) {
            a1 = Poly::zero(f);
            eps = 1;
        } else {
            Fq eps1 = power_residue_symbol(a, found.prime, q - 1);
            Poly target = divrem(a.mul_scalar(eps1), prime).second;
            Rng root_rng = ctx.rng().fork();
            a1 = amm_root(target, found.prime, q - 1, root_rng);
            eps = F.inv(eps1);
        }

        const unsigned long qm1 = static_cast<unsigned long>(q - 1);
        Poly a1_qm1 = poly_pow(a1, qm1);
        ctx.guard_degree(a1_qm1.degree(), "lemma31 residue power");
        ctx.note(a1_qm1);
        n = ctx.exact(a1_qm1.mul_scalar(eps) - a, prime);

        Mat2 lam = alpha;
        lam.rmul_upper(u * m);
        lam.rmul_lower(n);
        lam.rmul_upper(-(prime * u));
        ctx.note(lam);
        ctx.check(lam.a == one + (u * a1_qm1).mul_scalar(eps), "lemma31: lambda top-left");
        ctx.check(lam.b == -(prime * u * u * a1_qm1).mul_scalar(eps), "lemma31: lambda top-right");

        Poly a1_q1 = poly_pow(a1, qm1 / 2);
        Poly e = u * a1_q1;
        Poly d1 = Poly::zero(f);
        if (e.is_zero()) {
            ctx.check(lam.d.is_one(), "lemma31: lambda bottom-right at e = 0");
        } else {
            d1 = ctx.exact(lam.d - one, e);
        }
        beta = Quintuple{d1, prime.mul_scalar(eps), -lam.c, a1_q1.mul_scalar(eps), e};
        require_quintuple(beta, "lemma31 beta");
        ctx.check(lambda_m1(beta) == mat_inv(lam), "lemma31: M1(beta) = lambda^{-1}");

        result = lambda_m2(beta);  // rho = lambda * Lambda(beta)
        result.rmul_upper(-(u * n).mul_scalar(F.inv(eps)));
        result.rmul_lower((-m).mul_scalar(eps));
    }

    ctx.note(result);
    ctx.check(result.c == b.mul_scalar(eps) && result.d == one_plus_au,
              "lemma31: bottom row is (eps*b, 1 + a*u)");
    if (ctx.opts().checked) {
        Mat2 replay = alpha;
        replay.rmul_upper(u * m);
        replay.rmul_lower(n);
        replay.rmul_upper(-(prime * u));
        replay = replay * lambda_eval(beta);
        replay.rmul_upper(-(u * n).mul_scalar(F.inv(eps)));
        replay.rmul_lower((-m).mul_scalar(eps));
        ctx.check(replay == result, "lemma31: word replay matches result");
    }

    rec.m = m;
    rec.n = n;
    rec.prime = prime;
    rec.eps = eps;
    rec.a1 = a1;
    rec.d1 = beta.a;
    ctx.trace().lemma31_calls.push_back(rec);
    return Lemma31Result{m, n, eps, beta, prime, result};
}

Lemma32Result lemma32(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r) {
    require_sl2(alpha, "lemma32");
    FieldPtr f = alpha.field_ptr();
    const Field& F = *f;
    const Poly one = Poly::one(f);
    const Poly zero = Poly::zero(f);

    auto [u, v] = cayley_hamilton_pair(alpha.a + alpha.d, r, ctx.opts().degree_cap);
    ctx.note(u);
    ctx.note(v);
    Mat2 alpha_r(alpha.a * u + v, alpha.b * u, alpha.c * u, alpha.d * u + v);
    ctx.note(alpha_r);
    if (ctx.opts().checked) ctx.check(mat_pow(alpha, r) == alpha_r, "lemma32: alpha^r = u*alpha + v");

    Poly u1 = zero, u2 = zero;
    if (u.is_zero()) {
        // alpha^r = v*I with v^2 = det = 1
        if (v.is_one()) {
            u1 = zero;
            u2 = one;
        } else {
            require(v == -one, Errc::InternalCheck, "u = 0 with v != +-1");
            u1 = one;
            u2 = zero;
        }
    } else {
        Poly v_minus = v - one;
        u1 = v_minus.is_zero() ? u.monic() : poly_gcd(u, v_minus);
        u2 = ctx.exact(u, u1);
    }
    // u2 divides v + 1 because gcd(v - 1, v + 1) divides 2, a unit here
    if (!u2.is_zero())
        require(divrem(v + one, u2).second.is_zero(), Errc::InternalCheck, "u2 does not divide v + 1");
    Poly v1 = u1.is_zero() ? zero : ctx.exact(v - one, u1);
    Poly v2 = u2.is_zero() ? zero : ctx.exact(v + one, u2);

    // first reduction: bottom row becomes (eps1 * u2 * b, v + u*a)
    auto first = lemma31(ctx, alpha_r, v1 + u2 * alpha.a, u2 * alpha.b, u1);
    const Fq eps1 = first.eps;
    Poly t1 = u1 * first.m;
    Poly t2 = first.n;
    Poly t3 = -(first.prime * u1);
    Poly t4 = -(u1 * first.n).mul_scalar(F.inv(eps1));
    Poly w1 = -first.m.mul_scalar(eps1);
    Mat2 rho = first.result;

    Mat2 chi(-rho.d, rho.c, rho.b, -rho.a);  // -J rho J^{-1}
    auto second = lemma31(ctx, chi, -(v2 + u1 * alpha.a), alpha.b.mul_scalar(eps1), u2);
    const Fq eps2 = second.eps;
    Poly w2 = u2 * second.m;
    Poly t6 = -second.n;
    Poly t7 = second.prime * u2;
    Poly t8 = (u2 * second.n).mul_scalar(F.inv(eps2));
    Poly t9 = second.m.mul_scalar(eps2);
    Poly t5 = w1 - w2;

    const Fq eps = F.mul(eps1, eps2);
    Poly a_pow = poly_pow_guarded(alpha.a, r, ctx.opts().degree_cap);
    ctx.note(a_pow);
    Poly t10 = zero;
    if (alpha.b.is_zero()) {
        ctx.check(a_pow == alpha.a * u + v, "lemma32: a^r = a*u + v when b = 0");
    } else {
        t10 = ctx.exact(a_pow - alpha.a * u - v, alpha.b.mul_scalar(eps));
    }

    Mat2 result = rho;
    result.rmul_lower(-w2);
    result.rmul_upper(t6);
    result.rmul_lower(t7);
    result = result * lambda_t_eval(second.beta);
    result.rmul_lower(t8);
    result.rmul_upper(t9);
    result.rmul_lower(t10);
    ctx.note(result);
    ctx.check(result.a == a_pow && result.b == alpha.b.mul_scalar(eps),
              "lemma32: top row is (a^r, eps*b)");

    Lemma32Result out{{t1, t2, t3, t4, t5, t6, t7, t8, t9, t10},
                      eps,
                      first.beta,
                      second.beta,
                      alpha_r,
                      result};

    if (ctx.opts().checked) {
        Mat2 replay = alpha_r;
        replay.rmul_upper(out.t[0]);
        replay.rmul_lower(out.t[1]);
        replay.rmul_upper(out.t[2]);
        replay = replay * lambda_eval(out.beta);
        replay.rmul_upper(out.t[3]);
        replay.rmul_lower(out.t[4]);
        replay.rmul_upper(out.t[5]);
        replay.rmul_lower(out.t[6]);
        replay = replay * lambda_t_eval(out.gamma);
        replay.rmul_lower(out.t[7]);
        replay.rmul_upper(out.t[8]);
        replay.rmul_lower(out.t[9]);
        ctx.check(replay == result, "lemma32: word replay matches result");
    }

    Lemma32Trace rec{u,  v,  u1, u2, v1, v2, w1, w2, {out.t.begin(), out.t.end()},
                     eps1, eps2, eps};
    ctx.trace().lemma32_calls.push_back(rec);
    return out;
}

Lemma33Result lemma33(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r, Fq eps) {
    require_sl2(alpha, "lemma33");
    FieldPtr f = alpha.field_ptr();
    const Field& F = *f;
    require(eps != 0, Errc::ZeroUnit, "lemma33 unit must be nonzero");

    Poly a_pow = poly_pow_guarded(alpha.a, r, ctx.opts().degree_cap);
    Poly eps_poly = Poly::constant(f, eps);
    if (alpha.b.is_zero()) {
        require(a_pow == eps_poly, Errc::PreconditionViolated,
                "lemma33 with b = 0 needs a^r = eps exactly");
    } else {
        require(divrem(a_pow - eps_poly, alpha.b).second.is_zero(), Errc::PreconditionViolated,
                "lemma33 needs a^r = eps (mod b)");
    }

    auto l32 = lemma32(ctx, alpha, r);
    const Fq eps1 = l32.eps;
    Poly w1 = l32.t[9];
    Poly w2 = alpha.b.is_zero()
                  ? Poly::zero(f)
                  : ctx.exact(eps_poly - a_pow, alpha.b.mul_scalar(eps1));
    Poly t10 = w1 + w2;

    Mat2 sigma = l32.result;
    sigma.rmul_lower(w2);
    ctx.check(sigma.a == eps_poly && sigma.b == alpha.b.mul_scalar(eps1),
              "lemma33: top row is (eps, eps1*b)");

    Poly t11 = -alpha.b.mul_scalar(F.mul(eps1, F.inv(eps)));
    sigma.rmul_upper(t11);
    ctx.check(sigma.b.is_zero() && sigma.d == Poly::constant(f, F.inv(eps)),
              "lemma33: column cleared to diag shape");

    Poly t12 = -sigma.c.mul_scalar(eps);
    sigma.rmul_lower(t12);
    ctx.check(sigma == Mat2::diag(eps_poly, Poly::constant(f, F.inv(eps))),
              "lemma33: final diagonal");

    ctx.trace().lemma33_tails.push_back({w2, t11, t12});

    return Lemma33Result{{l32.t[0], l32.t[1], l32.t[2], l32.t[3], l32.t[4], l32.t[5], l32.t[6],
                          l32.t[7], l32.t[8], t10, t11, t12},
                         l32.beta,
                         l32.gamma,
                         l32.alpha_r};
}

Corollary34Result corollary34(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r, Fq eps) {
    FieldPtr f = alpha.field_ptr();
    auto l33 = lemma33(ctx, alpha, r, eps);
    const auto& t = l33.t;

    Word chi5 = Word::from_family(WordFamily::G, f, {t[11], t[10], t[9], t[8], t[7]});
    Quintuple gamma_lt = quintuple_inverse(l33.gamma);
    Word chi4 = Word::from_family(WordFamily::G, f, {t[6], t[5], t[4], t[3]});
    Quintuple beta_l = quintuple_inverse(l33.beta);
    Word chi3 = Word::from_family(WordFamily::F, f, {-t[2], -t[1], -t[0]});

    if (ctx.opts().checked) {
        const Field& F = *f;
        Mat2 prod = Mat2::diag(Poly::constant(f, eps), Poly::constant(f, F.inv(eps)));
        prod = prod * word_eval(chi5);
        prod = prod * lambda_t_eval(gamma_lt);
        prod = prod * word_eval(chi4);
        prod = prod * lambda_eval(beta_l);
        prod = prod * word_eval(chi3);
        ctx.check(prod == l33.alpha_r, "corollary34: five-factor product equals alpha^r");
    }
    return Corollary34Result{chi5, gamma_lt, chi4, beta_l, chi3, eps, l33.alpha_r};
}

Corollary35Result corollary35(PipelineCtx& ctx, const Mat2& alpha, const BigInt& r, const BigInt& s,
                              Fq eps1, Fq eps2) {
    require(big_gcd(r, s) == 1, Errc::NotCoprimeExponents, "gcd(r, s) != 1");
    FieldPtr f = alpha.field_ptr();
    const Field& F = *f;

    // minimal positive h1 with r*h1 - s*h2 = 1, h2 >= 1
    BigInt h1, h2;
    if (s == 1) {
        h1 = (r == 1) ? 2 : 1;
        h2 = r * h1 - 1;
    } else {
        h1 = big_modinv(r % s, s);
        h2 = (r * h1 - 1) / s;
        if (h2 == 0) {
            h1 += s;
            h2 = (r * h1 - 1) / s;
        }
    }
    ctx.trace().h1 = h1;
    ctx.trace().h2 = h2;

    Fq unit1 = F.pow(eps1, h1);
    Fq unit2 = F.pow(eps2, h2);
    auto part1 = corollary34(ctx, alpha, r * h1, unit1);
    auto part2 = corollary34(ctx, mat_transpose(alpha), s * h2, unit2);

    // conjugate the transpose-side factors back by J
    Word chi5_d = word_j_conjugate(part2.chi5);  // F5
    Word chi4_h = word_j_conjugate(part2.chi4);  // F4
    Word chi3_h = word_j_conjugate(part2.chi3);  // G3

    Word chi9 = word_compose(epsilon_diag_word(f, unit1, WordFamily::G), part1.chi5);
    Word chi9_h = word_compose(epsilon_diag_word(f, F.inv(unit2), WordFamily::F), chi5_d);
    require(chi9.arity() == 9 && chi9_h.arity() == 9, Errc::InternalCheck,
            "epsilon prefix absorption changed arity");

    Corollary35Result out{chi9,         part1.gamma_lt, part1.chi4, part1.beta_l, part1.chi3,
                          chi9_h,       part2.gamma_lt, chi4_h,     part2.beta_l, chi3_h};

    if (ctx.opts().checked) {
        Mat2 prod = word_eval(out.chi9);
        prod = prod * lambda_t_eval(out.gamma_lt);
        prod = prod * word_eval(out.chi4);
        prod = prod * lambda_eval(out.beta_l);
        prod = prod * word_eval(out.chi3);
        prod = prod * word_eval(out.chi9_h);
        prod = prod * lambda_eval(out.gamma_h);
        prod = prod * word_eval(out.chi4_h);
        prod = prod * lambda_t_eval(out.beta_h);
        prod = prod * word_eval(out.chi3_h);
        ctx.check(prod == alpha, "corollary35: ten-factor product equals alpha");
    }
    return out;
}

DecomposeResult decompose(const Mat2& alpha, const DecomposeOptions& opts) {
    require_sl2(alpha, "decompose");
    FieldPtr f = alpha.field_ptr();
    const Field& F = *f;
    PipelineCtx ctx(opts, f);
    ctx.note(alpha);

    Certificate cert = Certificate::identity(f);

    if (alpha.a.is_zero()) {
        // b and c are forced units: b = -eps, c = eps^{-1}
        ctx.trace().case1 = true;
        require(alpha.b.is_unit(), Errc::InternalCheck, "case 1 with non-unit b");
        Fq eps = F.neg(alpha.b.constant_part());
        Word head = word_compose(antidiag_word(f, eps, WordFamily::G),
                                 upper_factor(alpha.d.mul_scalar(eps)));
        cert.g9 = word_pad(head, 9);
    } else {
        Rng pair_rng = ctx.rng().fork();
        auto pair = coprime_degree_pair_search(alpha.a, alpha.b, alpha.c, pair_rng, opts.retry_cap,
                                               &ctx.trace().prime_search_trials);
        const long q = F.q();
        BigInt e1 = (big_pow(q, pair.p1.degree()) - 1) / (q - 1);
        BigInt e2 = (big_pow(q, pair.p2.degree()) - 1) / (q - 1);
        require(big_gcd(e1, e2) == 1, Errc::InternalCheck, "e1, e2 not coprime");
        Fq eps1 = power_residue_symbol(alpha.a, pair.p1, q - 1);
        Fq eps2 = power_residue_symbol(alpha.a, pair.p2, q - 1);
        require(eps1 != 0 && eps2 != 0, Errc::InternalCheck, "residue symbol vanished");

        Mat2 shifted = alpha;
        shifted.lmul_lower(pair.v);
        shifted.rmul_upper(pair.u);
        require(shifted.b == pair.p1.poly() && shifted.c == pair.p2.poly(), Errc::InternalCheck,
                "shifted matrix does not expose the primes");

        auto c35 = corollary35(ctx, shifted, e1, e2, eps1, eps2);

        cert.g9 = word_compose(g1_word(pair.v), c35.chi9);
        cert.lambda_t_front = c35.gamma_lt;
        cert.g4_front = c35.chi4;
        cert.lambda_front = c35.beta_l;
        cert.f11 = word_compose(c35.chi3, c35.chi9_h);
        cert.lambda_back = c35.gamma_h;
        cert.f4 = c35.chi4_h;
        cert.lambda_t_back = c35.beta_h;
        cert.g4_back = word_compose(c35.chi3_h, upper_factor(-pair.u));

        ctx.trace().shift_u = pair.u;
        ctx.trace().shift_v = pair.v;
        ctx.trace().prime1 = pair.p1.poly();
        ctx.trace().prime2 = pair.p2.poly();
        ctx.trace().e1 = e1;
        ctx.trace().e2 = e2;
    }

    validate_certificate(cert);
    for (const Poly& p : flatten(cert)) ctx.note(p);
    if (opts.checked) ctx.check(omega_eval(cert) == alpha, "decompose: omega round-trip");
    return DecomposeResult{cert, ctx.take_trace()};
}

std::vector<Poly> um2_parametrize(const Poly& a, const Poly& b, const DecomposeOptions& opts) {
    require(!(a.is_zero() && b.is_zero()), Errc::NotUnimodular, "(0, 0) is not unimodular");
    auto xg = poly_xgcd(a, b);
    require(xg.d.is_one(), Errc::NotUnimodular, "gcd(a, b) is not a unit");
    // a*s + b*t = 1, so [[a, b], [-t, s]] lies in SL2
    Mat2 alpha(a, b, -xg.t, xg.s);
    return flatten(decompose(alpha, opts).certificate);
}

}  // namespace sl2pf
