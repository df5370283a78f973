#include "sl2pf/residue.hpp"

#include <algorithm>

namespace sl2pf {

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<long> prime_divisors_long(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    require(!f.is_zero() && f.degree() >= 1, Errc::ZeroOrConstant,
            "irreducibility is defined for positive degree");
    const Poly fm = f.is_monic() ? f : f.monic();
    const int d = fm.degree();
    if (d == 1) return true;
    const Field& F = fm.field();
    FieldPtr fp = fm.field_ptr();

    // no roots in F_q
    for (long c = 0; c < F.q(); ++c)
        if (fm.eval(static_cast<Fq>(c)) == 0) return false;
    if (d == 2 || d == 3) return true;

    ModCtx ctx(fm);
    const Poly t = Poly::t(fp);
    const BigInt q = F.q();
    Poly x = ctx.reduce(t);

    std::vector<int> checkpoints;
    for (int l : prime_divisors(d)) checkpoints.push_back(d / l);
    std::sort(checkpoints.begin(), checkpoints.end());

    const int screen_to = std::min(8, d / 2);
    std::size_t next_cp = 0;
    for (int k = 1; k <= d; ++k) {
        x = ctx.powmod(x, q);  // x = T^{q^k} mod f
        bool need_gcd = k <= screen_to;
        while (next_cp < checkpoints.size() && checkpoints[next_cp] < k) ++next_cp;
        if (next_cp < checkpoints.size() && checkpoints[next_cp] == k) need_gcd = true;
        if (k < d && need_gcd) {
            if (!poly_gcd(x - t, fm).is_one()) return false;
        }
    }
    return x == ctx.reduce(t);
}

namespace {

// Monic degree-d members of the class r0 + step*A (deg r0 < deg step): the
// singleton r0 itself when d < deg(step), otherwise r0 + w*step with
// deg w = d - deg(step) and the leading coefficient of w forced.
BigInt candidate_count(const Poly& step, const Poly& r0, int d) {
    if (d < step.degree()) return (r0.degree() == d && r0.is_monic()) ? 1 : 0;
    return big_pow(step.field().q(), d - step.degree());
}

std::optional<Poly> candidate_w(const Poly& step, const Poly& r0, int d, Rng& rng,
                                const BigInt& index, bool random_draw) {
    FieldPtr f = step.field_ptr();
    const Field& F = *f;
    if (d < step.degree()) {
        if (r0.degree() == d && r0.is_monic() && index == 0) return Poly::zero(f);
        return std::nullopt;
    }
    const int deg_w = d - step.degree();
    std::vector<Fq> c(static_cast<std::size_t>(deg_w) + 1, 0);
    if (random_draw) {
        for (int i = 0; i < deg_w; ++i)
            c[static_cast<std::size_t>(i)] = static_cast<Fq>(rng.below(static_cast<std::uint64_t>(F.q())));
    } else {
        BigInt v = index;
        for (int i = 0; i < deg_w; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<Fq>(static_cast<long>(v % F.q()));
            v /= F.q();
        }
        if (v != 0) return std::nullopt;
    }
    c[static_cast<std::size_t>(deg_w)] = F.inv(step.lc());
    return Poly(f, std::move(c));
}

}  // namespace

DirichletResult dirichlet_search(const Poly& step, const Poly& residue, const DegreePredicate& pred,
                                 Rng& rng, long retry_cap, long* trial_counter) {
    require(!step.is_zero(), Errc::NotCoprime, "progression step must be nonzero");
    require_same_field(step.field(), residue.field());
    require(poly_gcd(step, residue).is_one(), Errc::NotCoprime,
            "progression is not primitive: gcd(step, residue) != 1");

    auto [quo, r0] = divrem(residue, step);

    // The smallest admissible degrees can have tiny forced-leading-coefficient
    // candidate spaces with no prime in them, so the scan walks upward:
    // exhaustive below the retry cap, randomized above it.
    std::vector<int> degrees;
    if (pred.is_exact) {
        if (pred.exact_deg >= 1 && candidate_count(step, r0, pred.exact_deg) > 0)
            degrees.push_back(pred.exact_deg);
    } else {
        for (int d = 1; static_cast<int>(degrees.size()) < 12 && d < (1 << 20); ++d) {
            if (pred.admits(d) && candidate_count(step, r0, d) > 0) degrees.push_back(d);
        }
    }
    require(!degrees.empty(), Errc::SearchExhausted, "degree predicate admits no candidates");

    long trials = 0;
    auto try_candidate = [&](const Poly& w) -> std::optional<DirichletResult> {
        Poly cand = r0 + w * step;
        ++trials;
        if (trial_counter) ++*trial_counter;
        if (cand.degree() >= 1 && cand.is_monic() && is_irreducible(cand))
            return DirichletResult{w - quo, PrimePoly(cand)};
        return std::nullopt;
    };

    for (int d : degrees) {
        const long cap = retry_cap > 0 ? retry_cap : 64L * std::max(1, d);
        BigInt space = candidate_count(step, r0, d);
        if (space <= cap) {
            for (BigInt i = 0; i < space; ++i) {
                auto w = candidate_w(step, r0, d, rng, i, false);
                if (!w) break;
                if (auto hit = try_candidate(*w)) return *hit;
            }
        } else {
            for (long i = 0; i < cap; ++i) {
                auto w = candidate_w(step, r0, d, rng, 0, true);
                if (!w) break;
                if (auto hit = try_candidate(*w)) return *hit;
            }
        }
    }
    fail(Errc::SearchExhausted,
         "no prime found in the progression after " + std::to_string(trials) + " trials");
}

namespace {

// Cayley-Hamilton exponent r*h1 the caller pays if the b-side prime has
// degree db and the c-side prime degree dc.
BigInt orientation_cost(long q, int db, int dc) {
    BigInt e1 = (big_pow(q, db) - 1) / (q - 1);
    BigInt e2 = (big_pow(q, dc) - 1) / (q - 1);
    if (e2 == 1) return e1 < 2 ? BigInt(2) : e1;  // h1 = 1 (or r=s=1: h1=2)
    BigInt h1 = big_modinv(e1 % e2, e2);
    if (e1 * h1 == 1) h1 += e2;  // need h2 >= 1
    return e1 * h1;
}

std::optional<PrimePoly> search_at_degree(const Poly& a, const Poly& off, int d, Rng& rng,
                                          long retry_cap, long* trial_counter, Poly* m_out) {
    // prime = a*m + off of degree exactly d, monic
    try {
        auto res = dirichlet_search(a, off, DegreePredicate::exact(d), rng, retry_cap, trial_counter);
        *m_out = res.m;
        return res.prime;
    } catch (const Error& e) {
        if (e.code() == Errc::SearchExhausted) return std::nullopt;
        throw;
    }
}

}  // namespace

CoprimePair coprime_degree_pair_search(const Poly& a, const Poly& b, const Poly& c, Rng& rng,
                                       long retry_cap, long* trial_counter) {
    require(!a.is_zero(), Errc::NotCoprime, "pair search needs a != 0");
    require(poly_gcd(a, b).is_one(), Errc::NotCoprime, "gcd(a, b) != 1");
    require(poly_gcd(a, c).is_one(), Errc::NotCoprime, "gcd(a, c) != 1");

    const long q = a.field().q();
    const int base = std::max(1, a.degree());

    const Poly rb = divrem(b, a).second;
    const Poly rc = divrem(c, a).second;
    auto feasible = [&](const Poly& r0, int d) { return candidate_count(a, r0, d) > 0; };

    // The caller's dominant cost is the Cayley-Hamilton exponent r*h1, which
    // depends on which prime degree lands on the b side, so all feasible
    // ordered pairs in the window are tried in increasing exponent cost.
    struct Attempt {
        int db, dc;
        BigInt cost;
    };
    const int span = 12;
    std::vector<Attempt> attempts;
    for (int total = 2; total <= 2 * base + span; ++total) {
        for (int db = 1; db < total; ++db) {
            int dc = total - db;
            if (std::gcd(db, dc) != 1) continue;
            if (!feasible(rb, db) || !feasible(rc, dc)) continue;
            attempts.push_back({db, dc, orientation_cost(q, db, dc)});
        }
    }
    std::sort(attempts.begin(), attempts.end(), [](const Attempt& x, const Attempt& y) {
        if (x.cost != y.cost) return x.cost < y.cost;
        if (x.db + x.dc != y.db + y.dc) return x.db + x.dc < y.db + y.dc;
        return x.db < y.db;
    });
    for (const auto& at : attempts) {
        Poly u = Poly::zero(a.field_ptr()), v = Poly::zero(a.field_ptr());
        auto p1 = search_at_degree(a, b, at.db, rng, retry_cap, trial_counter, &u);
        if (!p1) continue;
        auto p2 = search_at_degree(a, c, at.dc, rng, retry_cap, trial_counter, &v);
        if (!p2) continue;
        return CoprimePair{u, v, *p1, *p2};
    }
    fail(Errc::SearchExhausted, "no coprime-degree prime pair found");
}

Fq power_residue_symbol(const Poly& m, const PrimePoly& prime, long d) {
    const Field& F = m.field();
    require(d >= 1 && (F.q() - 1) % d == 0, Errc::InvalidD, "d must divide q - 1");
    Poly reduced = divrem(m, prime.poly()).second;
    if (reduced.is_zero()) return 0;
    BigInt e = (big_pow(F.q(), prime.degree()) - 1) / d;
    Poly r = powmod(reduced, e, prime.poly());
    require(r.is_constant(), Errc::NonConstantResidue,
            "residue power did not reduce to a constant");
    return r.constant_part();
}

namespace {

// l-th root in (A/prime)^x via AMM / Pohlig-Hellman on the l-Sylow subgroup.
Poly ell_th_root(const ModCtx& ctx, const Poly& b, long ell, const BigInt& group_order, Rng& rng) {
    FieldPtr f = b.field_ptr();
    const Poly one = Poly::one(f);
    BigInt t = group_order;
    long s = 0;
    while (t % ell == 0) {
        t /= ell;
        ++s;
    }
    require(s >= 1, Errc::InvalidD, "l does not divide the group order");
    require(ctx.powmod(b, group_order / ell) == one, Errc::NotAnRthPower,
            "element is not an l-th power residue");

    // alpha*l + beta*t = 1
    BigInt alpha = t == 1 ? BigInt(0) : big_modinv(BigInt(ell) % t, t);
    BigInt beta = (1 - alpha * ell) / t;

    Poly big = ctx.powmod(b, t);
    Poly root_of_big = one;
    if (big != one) {
        // nonresidue search (seeded, deterministic)
        Poly rho = one;
        for (;;) {
            rho = Poly::random_at_most(f, ctx.modulus().degree() - 1, rng);
            if (rho.is_zero()) continue;
            if (ctx.powmod(rho, group_order / ell) != one) break;
        }
        Poly g = ctx.powmod(rho, t);
        Poly omega = ctx.powmod(g, big_pow(ell, s - 1));
        std::vector<Poly> omega_pows{one};
        for (long i = 1; i < ell; ++i) omega_pows.push_back(ctx.mulmod(omega_pows.back(), omega));

        BigInt e_dlog = 0;
        Poly cur = big;
        for (long i = 0; i < s; ++i) {
            Poly probe = ctx.powmod(cur, big_pow(ell, s - 1 - i));
            long digit = -1;
            for (long dcand = 0; dcand < ell; ++dcand) {
                if (probe == omega_pows[static_cast<std::size_t>(dcand)]) {
                    digit = dcand;
                    break;
                }
            }
            require(digit >= 0, Errc::NotAnRthPower, "discrete log digit not found");
            if (digit != 0) {
                BigInt shift = BigInt(digit) * big_pow(ell, i);
                e_dlog += shift;
                Poly adj = ctx.powmod(g, group_order - shift);  // g^{-shift}
                cur = ctx.mulmod(cur, adj);
            }
        }
        require(e_dlog % ell == 0, Errc::NotAnRthPower, "dlog not divisible by l");
        root_of_big = ctx.powmod(g, e_dlog / ell);
    }

    BigInt beta_mod = beta % group_order;
    if (beta_mod < 0) beta_mod += group_order;
    Poly x = ctx.mulmod(ctx.powmod(b, alpha), ctx.powmod(root_of_big, beta_mod));
    // verify x^l = b
    require(ctx.powmod(x, ell) == ctx.reduce(b), Errc::NotAnRthPower, "root verification failed");
    return x;
}

}  // namespace

Poly amm_root(const Poly& c, const PrimePoly& prime, long r, Rng& rng) {
    FieldPtr f = c.field_ptr();
    ModCtx ctx(prime.poly());
    Poly reduced = ctx.reduce(divrem(c, prime.poly()).second);
    if (reduced.is_zero()) return reduced;
    BigInt n = big_pow(f->q(), prime.degree()) - 1;
    require(r >= 1 && n % r == 0, Errc::InvalidD, "r must divide q^deg - 1");

    Poly x = reduced;
    for (long ell : prime_divisors_long(r)) {
        long rr = r;
        while (rr % ell == 0) {
            x = ell_th_root(ctx, x, ell, n, rng);
            rr /= ell;
        }
    }

    // canonicalize over the r-th roots of unity
    if (r > 1) {
        Poly zeta = Poly::one(f);
        auto ells = prime_divisors_long(r);
        for (;;) {
            Poly rho = Poly::random_at_most(f, prime.degree() - 1, rng);
            if (rho.is_zero()) continue;
            Poly cand = ctx.powmod(rho, n / r);
            bool full_order = true;
            for (long ell : ells)
                if (ctx.powmod(cand, r / ell) == Poly::one(f)) {
                    full_order = false;
                    break;
                }
            if (full_order) {
                zeta = cand;
                break;
            }
        }
        Poly best = x;
        Poly cur = x;
        for (long i = 1; i < r; ++i) {
            cur = ctx.mulmod(cur, zeta);
            if (Poly::cmp(cur, best) < 0) best = cur;
        }
        x = best;
    }

    require(ctx.powmod(x, r) == reduced, Errc::NotAnRthPower, "round-trip check failed");
    return x;
}

}  // namespace sl2pf
