// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 1's draws are reused by criteria 7 (checked re-run) and
// 8 (byte-identical re-run).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <vector>

#include "sl2pf/decompose.hpp"
#include "sl2pf/io.hpp"
#include "sl2pf/parallel.hpp"
#include "sl2pf/random_sl2.hpp"
#include "sl2pf/residue.hpp"

using namespace sl2pf;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail) {
    std::printf("criterion %d %-4s %s (%s)\n", criterion, ok ? "PASS" : "FAIL", name,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Draw {
    Mat2 matrix;
    std::uint64_t seed;
};

std::vector<Draw> make_draws(FieldPtr f, int n, int max_budget, std::uint64_t base_seed) {
    std::vector<Draw> out;
    Rng rng(base_seed);
    for (int i = 0; i < n; ++i) {
        RandomSl2Options gen;
        gen.max_factors = 8;
        gen.max_param_degree = 3;
        gen.degree_budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_budget) + 1));
        Mat2 m = random_sl2(f, rng, gen).matrix;
        out.push_back({m, rng.next()});
    }
    return out;
}

struct RoundTripOutcome {
    bool ok = true;
    std::string first_error;
    std::vector<std::string> certs;  // serialized, for determinism comparison
    long checks = 0;
};

RoundTripOutcome run_round_trips(const std::vector<Draw>& draws, bool checked) {
    RoundTripOutcome out;
    out.certs.resize(draws.size());
    std::vector<std::string> errors(draws.size());
    std::vector<long> checks(draws.size(), 0);
    par::for_each_index(draws.size(), [&](std::size_t i) {
        DecomposeOptions o;
        o.seed = draws[i].seed;
        o.checked = checked;
        try {
            auto res = decompose(draws[i].matrix, o);
            if (flatten(res.certificate).size() != 52) {
                errors[i] = "flatten size != 52";
                return;
            }
            if (omega_eval(res.certificate) != draws[i].matrix) {
                errors[i] = "omega_eval mismatch";
                return;
            }
            checks[i] = res.trace.checks_passed;
            out.certs[i] = certificate_to_json(res.certificate);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < draws.size(); ++i) {
        out.checks += checks[i];
        if (!errors[i].empty() && out.ok) {
            out.ok = false;
            out.first_error = "case " + std::to_string(i) + ": " + errors[i];
        }
    }
    return out;
}

std::vector<Mat2> constant_sl2(FieldPtr f) {
    std::vector<Mat2> out;
    const Field& F = *f;
    for (long a = 0; a < F.q(); ++a)
        for (long b = 0; b < F.q(); ++b)
            for (long c = 0; c < F.q(); ++c)
                for (long d = 0; d < F.q(); ++d) {
                    Fq det = F.sub(F.mul(static_cast<Fq>(a), static_cast<Fq>(d)),
                                   F.mul(static_cast<Fq>(b), static_cast<Fq>(c)));
                    if (det == 1)
                        out.push_back(Mat2(Poly::constant(f, static_cast<Fq>(a)),
                                           Poly::constant(f, static_cast<Fq>(b)),
                                           Poly::constant(f, static_cast<Fq>(c)),
                                           Poly::constant(f, static_cast<Fq>(d))));
                }
    return out;
}

Quintuple random_valid_quintuple(FieldPtr f, Rng& rng, int deg) {
    const Field& F = *f;
    switch (rng.below(3)) {
        case 0:
            return Quintuple{Poly::random_at_most(f, deg, rng), Poly::random_at_most(f, deg, rng),
                             Poly::random_at_most(f, deg, rng), Poly::random_at_most(f, deg, rng),
                             Poly::zero(f)};
        case 1: {
            Fq bu = static_cast<Fq>(1 + rng.below(static_cast<std::uint64_t>(F.q() - 1)));
            Poly a = Poly::random_at_most(f, deg, rng);
            Poly e = Poly::random_at_most(f, deg, rng);
            Poly k = Poly::random_at_most(f, deg, rng);
            Poly d = e * k - a;
            return Quintuple{a, Poly::constant(f, bu), (k + a * d).mul_scalar(F.inv(bu)), d, e};
        }
        default: {
            Fq cu = static_cast<Fq>(1 + rng.below(static_cast<std::uint64_t>(F.q() - 1)));
            Poly a = Poly::random_at_most(f, deg, rng);
            Poly e = Poly::random_at_most(f, deg, rng);
            Poly k = Poly::random_at_most(f, deg, rng);
            Poly d = e * k - a;
            return Quintuple{a, (k + a * d).mul_scalar(F.inv(cu)), Poly::constant(f, cu), d, e};
        }
    }
}

bool oracle_irreducible(const Poly& f) {
    FieldPtr fp = f.field_ptr();
    const long q = f.field().q();
    const int d = f.degree();
    for (int k = 1; k <= d / 2; ++k) {
        long count = 1;
        for (int i = 0; i < k; ++i) count *= q;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<Fq> c(static_cast<std::size_t>(k) + 1, 0);
            long v = idx;
            for (int i = 0; i < k; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<Fq>(v % q);
                v /= q;
            }
            c[static_cast<std::size_t>(k)] = 1;
            if (divrem(f, Poly(fp, c)).second.is_zero()) return false;
        }
    }
    return true;
}

void exhaustive_monics(FieldPtr f, int deg, const std::function<void(const Poly&)>& fn) {
    const long q = f->q();
    long count = 1;
    for (int i = 0; i < deg; ++i) count *= q;
    for (long idx = 0; idx < count; ++idx) {
        std::vector<Fq> c(static_cast<std::size_t>(deg) + 1, 0);
        long v = idx;
        for (int i = 0; i < deg; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<Fq>(v % q);
            v /= q;
        }
        c[static_cast<std::size_t>(deg)] = 1;
        fn(Poly(f, c));
    }
}

Word random_word(FieldPtr f, Rng& rng, WordFamily fam, int arity, int deg) {
    std::vector<Poly> params;
    for (int i = 0; i < arity; ++i) params.push_back(Poly::random_at_most(f, deg, rng));
    return Word::from_family(fam, std::move(f), std::move(params));
}

}  // namespace

int main() {
    FieldPtr F3 = Field::make(3, 1);
    FieldPtr F5 = Field::make(5, 1);
    FieldPtr F9 = Field::make(3, 2);

    // ---- criterion 1: 52-parameter round-trip at scale -------------------
    auto draws3 = make_draws(F3, 200, 2, 0x5132504601ull);
    auto draws5 = make_draws(F5, 50, 2, 0x5132504605ull);
    auto draws9 = make_draws(F9, 50, 1, 0x5132504609ull);

    auto t0 = std::chrono::steady_clock::now();
    auto rt3 = run_round_trips(draws3, false);
    double t3 = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto rt5 = run_round_trips(draws5, false);
    auto rt9 = run_round_trips(draws9, false);
    double t59 = seconds_since(t0);

    {
        bool ok = rt3.ok && rt5.ok && rt9.ok && t3 <= 120.0;
        std::string detail = "200xF3 in " + std::to_string(t3) + "s (target 120s), 50xF5+50xF9 in " +
                             std::to_string(t59) + "s";
        if (!rt3.ok) detail += "; F3: " + rt3.first_error;
        if (!rt5.ok) detail += "; F5: " + rt5.first_error;
        if (!rt9.ok) detail += "; F9: " + rt9.first_error;
        report(1, "52-parameter round-trip", ok, detail);
    }

    // ---- criterion 2: exhaustive SL2(F3) ---------------------------------
    {
        auto all = constant_sl2(F3);
        bool ok = all.size() == 24;
        int case1 = 0;
        std::string err;
        Rng rng(2024);
        for (std::size_t i = 0; i < all.size() && ok; ++i) {
            DecomposeOptions o;
            o.seed = rng.next();
            try {
                auto res = decompose(all[i], o);
                if (res.trace.case1) ++case1;
                if (omega_eval(res.certificate) != all[i]) {
                    ok = false;
                    err = "round-trip failed on element " + std::to_string(i);
                }
            } catch (const std::exception& e) {
                ok = false;
                err = e.what();
            }
        }
        ok = ok && case1 >= 6;
        report(2, "exhaustive SL2(F3) round-trip", ok,
               ok ? ("24 elements, " + std::to_string(case1) + " via case 1") : err);
    }

    // ---- criterion 3: Gamma / Lambda identity oracles --------------------
    {
        bool ok = true;
        auto all = constant_sl2(F3);
        for (const auto& alpha : all) {
            auto g = gamma_factor(alpha);
            ok = ok && gamma_eval(g[0], g[1], g[2], g[3]) == alpha * mat_transpose(alpha);
        }
        Rng rng(33);
        int done = 0;
        while (done < 1000) {
            auto r = random_sl2(F3, rng, {8, 3, 9});
            if (r.matrix.a.degree() > 3 || r.matrix.b.degree() > 3 || r.matrix.c.degree() > 3 ||
                r.matrix.d.degree() > 3)
                continue;
            ++done;
            auto g = gamma_factor(r.matrix);
            ok = ok && gamma_eval(g[0], g[1], g[2], g[3]) == r.matrix * mat_transpose(r.matrix);
        }
        for (auto f : {F3, F5}) {
            for (int i = 0; i < 1000; ++i) {
                Quintuple t = random_valid_quintuple(f, rng, 2);
                ok = ok && lambda_eval(t) == lambda_m1(t) * lambda_m2(t) &&
                     lambda_eval(t).det().is_one();
            }
        }
        report(3, "Gamma/Lambda identity oracles", ok, "24 + 1000 Gamma, 2x1000 Lambda");
    }

    // ---- criterion 4: residue arithmetic ---------------------------------
    {
        bool irr_ok = true;
        for (int d = 1; d <= 6 && irr_ok; ++d)
            exhaustive_monics(F3, d, [&](const Poly& f) {
                if (is_irreducible(f) != oracle_irreducible(f)) irr_ok = false;
            });
        for (int d = 1; d <= 4 && irr_ok; ++d)
            exhaustive_monics(F5, d, [&](const Poly& f) {
                if (is_irreducible(f) != oracle_irreducible(f)) irr_ok = false;
            });

        bool sym_ok = true;
        Rng rng(44);
        int done = 0;
        while (done < 1000) {
            FieldPtr f = (done % 2 == 0) ? F3 : F5;
            const long q = f->q();
            Poly cand = Poly::random_exact_degree(f, 1 + static_cast<int>(rng.below(3)), rng).monic();
            if (!is_irreducible(cand)) continue;
            PrimePoly p(cand);
            long d = (done % 4 < 2) ? 2 : q - 1;
            Poly m = Poly::random_at_most(f, 4, rng);
            Poly n = Poly::random_at_most(f, 4, rng);
            Fq sm = power_residue_symbol(m, p, d);
            Fq sn = power_residue_symbol(n, p, d);
            sym_ok = sym_ok && power_residue_symbol(m * n, p, d) == f->mul(sm, sn);
            if (sm != 0) {
                BigInt e = (big_pow(q, p.degree()) - 1) / d;
                sym_ok = sym_ok && powmod(m, e, p.poly()) == Poly::constant(f, sm);
            }
            ++done;
        }

        bool amm_ok = true;
        done = 0;
        while (done < 1000) {
            FieldPtr f = (done % 3 == 0) ? F9 : ((done % 3 == 1) ? F5 : F3);
            const long q = f->q();
            Poly cand = Poly::random_exact_degree(f, 1 + static_cast<int>(rng.below(2)), rng).monic();
            if (!is_irreducible(cand)) continue;
            PrimePoly p(cand);
            Poly x = Poly::random_at_most(f, p.degree() - 1, rng);
            if (divrem(x, p.poly()).second.is_zero()) continue;
            long r = 1 + static_cast<long>(rng.below(2)) * ((q - 1) / 2);  // 1 or q1... keep r | q-1
            if ((q - 1) % r != 0) r = q - 1;
            Poly c = powmod(x, r, p.poly());
            Poly root = amm_root(c, p, r, rng);
            amm_ok = amm_ok && powmod(root, r, p.poly()) == c;
            ++done;
        }
        report(4, "residue arithmetic", irr_ok && sym_ok && amm_ok,
               std::string("irreducibility ") + (irr_ok ? "ok" : "FAIL") + ", symbols " +
                   (sym_ok ? "ok" : "FAIL") + ", roots " + (amm_ok ? "ok" : "FAIL"));
    }

    // ---- criterion 5: explicit unit-matrix identities --------------------
    {
        bool ok = true;
        for (auto f : {F3, F5, F9}) {
            const Field& FF = *f;
            for (Fq eps = 1; eps < FF.q(); ++eps) {
                Mat2 want_diag = Mat2::diag(Poly::constant(f, eps), Poly::constant(f, FF.inv(eps)));
                Mat2 want_anti(Poly::zero(f), -Poly::constant(f, eps),
                               Poly::constant(f, FF.inv(eps)), Poly::zero(f));
                for (WordFamily fam : {WordFamily::F, WordFamily::G}) {
                    ok = ok && word_eval(epsilon_diag_word(f, eps, fam)) == want_diag;
                    ok = ok && word_eval(antidiag_word(f, eps, fam)) == want_anti;
                }
            }
        }
        report(5, "unit-matrix word identities", ok, "all eps in F3*, F5*, F9*");
    }

    // ---- criterion 6: word-algebra laws + integer identity ---------------
    {
        bool ok = true;
        Rng rng(66);
        int done = 0;
        while (done < 1000) {
            FieldPtr f = (done % 3 == 0) ? F9 : ((done % 3 == 1) ? F5 : F3);
            WordFamily fam = rng.coin() ? WordFamily::F : WordFamily::G;
            Word x = random_word(f, rng, fam, 1 + static_cast<int>(rng.below(7)), 2);
            Word y = random_word(f, rng, fam, 1 + static_cast<int>(rng.below(7)), 2);
            ok = ok && word_eval(word_compose(x, y)) == word_eval(x) * word_eval(y);
            ok = ok && word_eval(word_pad(x, x.arity() + 1 + static_cast<int>(rng.below(3)))) ==
                           word_eval(x);
            ok = ok && word_eval(word_invert(x)) == mat_inv(word_eval(x));
            ok = ok && word_eval(word_j_conjugate(x)) == j_conjugate(word_eval(x));
            ++done;
        }
        bool int_ok = true;
        for (long q : {3L, 5L, 9L})
            for (long d1 = 1; d1 <= 8; ++d1)
                for (long d2 = 1; d2 <= 8; ++d2)
                    int_ok = int_ok && big_gcd(big_pow(q, d1) - 1, big_pow(q, d2) - 1) ==
                                           big_pow(q, std::gcd(d1, d2)) - 1;
        report(6, "word-algebra laws and gcd identity", ok && int_ok,
               "1000 word samples, 3x8x8 integer identity");
    }

    // ---- criterion 7: checked-mode stage verification --------------------
    {
        auto c3 = run_round_trips(draws3, true);
        auto c5 = run_round_trips(draws5, true);
        auto c9 = run_round_trips(draws9, true);
        bool ok = c3.ok && c5.ok && c9.ok;
        long checks = c3.checks + c5.checks + c9.checks;
        std::string detail = std::to_string(checks) + " stage checks, zero failures";
        if (!ok)
            detail = c3.ok ? (c5.ok ? c9.first_error : c5.first_error) : c3.first_error;
        report(7, "checked-mode stage verification", ok && checks > 0, detail);
    }

    // ---- criterion 8: determinism ----------------------------------------
    {
        auto again3 = run_round_trips(draws3, false);
        auto again5 = run_round_trips(draws5, false);
        auto again9 = run_round_trips(draws9, false);
        bool ok = again3.ok && again5.ok && again9.ok && again3.certs == rt3.certs &&
                  again5.certs == rt5.certs && again9.certs == rt9.certs;
        report(8, "determinism (byte-identical certificates)", ok,
               ok ? "re-run reproduced all 300 certificates" : "re-run diverged");
    }

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
