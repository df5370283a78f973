#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sl2pf/decompose.hpp"
#include "sl2pf/io.hpp"
#include "sl2pf/parallel.hpp"
#include "sl2pf/random_sl2.hpp"

using namespace sl2pf;

namespace {

struct RunConfig {
    std::string field_spec = "3";
    std::uint64_t seed = kDefaultSeed;
    long degree_cap = 100000;
    long retry_cap = 0;
    bool checked = false;
    std::string in_path = "-";
    std::string out_path = "-";
    long count = 10;
};

FieldPtr parse_field_spec(const std::string& spec) {
    std::istringstream is(spec);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(is, tok, ',')) parts.push_back(tok);
    require(!parts.empty() && parts.size() <= 3, Errc::ParseError,
            "--field expects p[,n[,modulus]]");
    long p = std::stol(parts[0]);
    int n = parts.size() >= 2 ? std::stoi(parts[1]) : 1;
    if (parts.size() == 3) {
        FieldPtr base = Field::make(p, 1);
        Poly m = Poly::parse(base, parts[2]);
        std::vector<long> coeffs;
        for (int i = 0; i <= m.degree(); ++i) coeffs.push_back(m.coeff(i));
        return Field::make(p, n, coeffs);
    }
    return Field::make(p, n);
}

DecomposeOptions to_options(const RunConfig& cfg) {
    DecomposeOptions o;
    o.seed = cfg.seed;
    o.checked = cfg.checked;
    o.retry_cap = cfg.retry_cap;
    o.degree_cap = cfg.degree_cap;
    return o;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::ParseError:
        case Errc::FieldMismatch:
        case Errc::BadLength:
        case Errc::ArityMismatch:
        case Errc::NotPrime:
        case Errc::EvenCharacteristic:
        case Errc::ReducibleModulus:
            return 2;
        case Errc::NotSL2:
            return 3;
        case Errc::SearchExhausted:
        case Errc::DegreeCapExceeded:
            return 4;
        case Errc::QuintupleNotSL2:
            return 5;
        default:
            return 1;
    }
}

int max_param_degree(const Certificate& cert) {
    int deg = -1;
    for (const Poly& p : flatten(cert)) deg = std::max(deg, p.degree());
    return deg;
}

int cmd_decompose(const RunConfig& cfg) {
    Mat2 alpha = matrix_from_json_text(read_input(cfg.in_path));
    auto res = decompose(alpha, to_options(cfg));
    write_output(cfg.out_path, certificate_to_json(res.certificate) + "\n");

    std::ostringstream sum;
    sum << "slots=9,5,4,5,11,5,4,5,4 max_param_deg=" << max_param_degree(res.certificate);
    if (res.trace.case1) {
        sum << " case=1";
    } else {
        sum << " case=2 prime_degs=" << res.trace.prime1->degree() << ","
            << res.trace.prime2->degree();
        for (const auto& l31 : res.trace.lemma31_calls) sum << "," << l31.prime.degree();
        sum << " e1=" << res.trace.e1 << " e2=" << res.trace.e2 << " h1=" << res.trace.h1
            << " h2=" << res.trace.h2;
    }
    sum << " trials=" << res.trace.prime_search_trials
        << " max_deg=" << res.trace.max_intermediate_degree;
    std::cerr << sum.str() << "\n";
    return 0;
}

int cmd_evaluate(const RunConfig& cfg) {
    Certificate cert = certificate_from_json_text(read_input(cfg.in_path));
    Mat2 m = omega_eval(cert);
    write_output(cfg.out_path, matrix_to_json(m) + "\n");
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& matrix_path,
               const std::string& cert_path) {
    Mat2 alpha = matrix_from_json_text(read_input(matrix_path));
    Certificate cert = certificate_from_json_text(read_input(cert_path));
    require(alpha.field().same(*cert.field_ptr()), Errc::FieldMismatch,
            "matrix and certificate use different fields");
    Mat2 got = omega_eval(cert);
    if (got == alpha) {
        std::cout << "ok\n";
        return 0;
    }
    const char* entry = "a";
    Poly want = alpha.a, have = got.a;
    if (got.a != alpha.a) {
        entry = "a"; want = alpha.a; have = got.a;
    } else if (got.b != alpha.b) {
        entry = "b"; want = alpha.b; have = got.b;
    } else if (got.c != alpha.c) {
        entry = "c"; want = alpha.c; have = got.c;
    } else {
        entry = "d"; want = alpha.d; have = got.d;
    }
    std::cout << "mismatch\n";
    std::cerr << "first differing entry " << entry << ": expected " << want.to_string() << ", got "
              << have.to_string() << "\n";
    return 1;
}

int cmd_random(const RunConfig& cfg) {
    FieldPtr f = parse_field_spec(cfg.field_spec);
    Rng rng(cfg.seed);
    RandomSl2Options opts;
    opts.degree_budget = static_cast<int>(std::min<long>(cfg.degree_cap, 24));
    auto r = random_sl2(f, rng, opts);
    write_output(cfg.out_path, matrix_to_json(r.matrix) + "\n");
    return 0;
}

int cmd_bench(const RunConfig& cfg) {
    FieldPtr f = parse_field_spec(cfg.field_spec);
    std::ostringstream csv;
    csv << "q,deg,seed,ms,max_deg,trials\n";
    for (long i = 0; i < cfg.count; ++i) {
        std::uint64_t case_seed = cfg.seed + static_cast<std::uint64_t>(i);
        Rng rng(case_seed);
        RandomSl2Options gen;
        gen.degree_budget = static_cast<int>(std::min<long>(cfg.degree_cap, 24));
        auto r = random_sl2(f, rng, gen);
        int in_deg = std::max(std::max(r.matrix.a.degree(), r.matrix.b.degree()),
                              std::max(r.matrix.c.degree(), r.matrix.d.degree()));
        DecomposeOptions o = to_options(cfg);
        o.seed = case_seed;
        o.degree_cap = 100000;
        auto t0 = std::chrono::steady_clock::now();
        auto res = decompose(r.matrix, o);
        auto t1 = std::chrono::steady_clock::now();
        require(omega_eval(res.certificate) == r.matrix, Errc::InternalCheck,
                "bench round-trip failed");
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        csv << f->q() << "," << in_deg << "," << case_seed << "," << ms << ","
            << res.trace.max_intermediate_degree << "," << res.trace.prime_search_trials << "\n";
    }
    write_output(cfg.out_path, csv.str());
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    FieldPtr f = parse_field_spec(cfg.field_spec);
    const Field& F = *f;
    long failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    Rng rng(cfg.seed);
    {
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            Poly a = Poly::random_at_most(f, 5, rng);
            Poly b = Poly::random_at_most(f, 5, rng);
            Poly c = Poly::random_at_most(f, 5, rng);
            ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
        }
        report("ring axioms", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            Poly a = Poly::random_at_most(f, 8, rng);
            Poly g = Poly::random_exact_degree(f, 1 + static_cast<int>(rng.below(4)), rng);
            auto [q, r] = divrem(a, g);
            ok = a == q * g + r && r.degree() < g.degree();
        }
        report("division round-trip", ok);
    }
    {
        bool ok = true;
        for (Fq eps = 1; eps < F.q() && ok; ++eps) {
            ok = word_eval(epsilon_diag_word(f, eps, WordFamily::G)) ==
                     Mat2::diag(Poly::constant(f, eps), Poly::constant(f, F.inv(eps))) &&
                 word_eval(antidiag_word(f, eps, WordFamily::F)) ==
                     Mat2(Poly::zero(f), -Poly::constant(f, eps), Poly::constant(f, F.inv(eps)),
                          Poly::zero(f));
        }
        report("unit matrix identities", ok);
    }
    {
        bool ok = true;
        int n = static_cast<int>(cfg.count);
        std::vector<Mat2> inputs;
        std::vector<std::uint64_t> seeds;
        for (int i = 0; i < n; ++i) {
            RandomSl2Options gen;
            gen.degree_budget = static_cast<int>(std::min<long>(cfg.degree_cap, 24));
            inputs.push_back(random_sl2(f, rng, gen).matrix);
            seeds.push_back(rng.next());
        }
        std::vector<char> good(static_cast<std::size_t>(n), 0);
        par::for_each_index(static_cast<std::size_t>(n), [&](std::size_t i) {
            DecomposeOptions o = to_options(cfg);
            o.seed = seeds[i];
            o.checked = true;
            try {
                auto res = decompose(inputs[i], o);
                good[i] = omega_eval(res.certificate) == inputs[i] &&
                          flatten(res.certificate).size() == 52;
            } catch (const std::exception&) {
                good[i] = 0;
            }
        });
        for (char g : good) ok = ok && g;
        report("decompose round-trip (checked)", ok);
    }
    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL2(F_q[T]) 52-parameter decomposition toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("SL2PF_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field_spec, "field spec p[,n[,modulus]]");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--degree-cap", cfg.degree_cap,
                        "decompose: max intermediate degree; random/bench: input degree budget");
        sub->add_option("--retry-cap", cfg.retry_cap, "prime search trials per degree (0 = auto)");
        sub->add_flag("--checked", cfg.checked, "re-verify every pipeline stage");
        sub->add_option("--in", cfg.in_path, "input path ('-' = stdin)");
        sub->add_option("--out", cfg.out_path, "output path ('-' = stdout)");
        sub->add_option("--count", cfg.count, "number of cases (bench/selftest)");
    };

    CLI::App* dec = app.add_subcommand("decompose", "matrix JSON -> certificate JSON");
    CLI::App* eval = app.add_subcommand("evaluate", "certificate JSON -> matrix JSON");
    CLI::App* ver = app.add_subcommand("verify", "check a certificate against a matrix");
    std::string ver_matrix = "-", ver_cert = "-";
    ver->add_option("matrix", ver_matrix, "matrix JSON path")->required();
    ver->add_option("certificate", ver_cert, "certificate JSON path")->required();
    CLI::App* self = app.add_subcommand("selftest", "run the built-in suites");
    CLI::App* bench = app.add_subcommand("bench", "decompose timing CSV");
    CLI::App* rand = app.add_subcommand("random", "emit a seeded random SL2 matrix");
    for (CLI::App* sub : {dec, eval, ver, self, bench, rand}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) return cmd_decompose(cfg);
        if (eval->parsed()) return cmd_evaluate(cfg);
        if (ver->parsed()) return cmd_verify(cfg, ver_matrix, ver_cert);
        if (self->parsed()) return cmd_selftest(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
        if (rand->parsed()) return cmd_random(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
