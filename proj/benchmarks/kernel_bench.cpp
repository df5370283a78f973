// Compares the production kernels against their serial references:
//   - polynomial multiplication: schoolbook reference vs Karatsuba (+ OpenMP
//     tasks above the size threshold)
//   - batch decomposition: sequential loop vs the OpenMP worker pool
// Outputs one table row per configuration; results are checked for equality
// while timing.

#include <chrono>
#include <cstdio>
#include <vector>

#include "sl2pf/decompose.hpp"
#include "sl2pf/parallel.hpp"
#include "sl2pf/random_sl2.hpp"

using namespace sl2pf;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <class Fn>
double timed(Fn&& fn) {
    double t0 = now_ms();
    fn();
    return now_ms() - t0;
}

}  // namespace

int main() {
    std::printf("threads=%d\n\n", par::max_threads());

    std::printf("polynomial multiplication (F3), ms per product\n");
    std::printf("%10s %14s %14s %10s\n", "degree", "schoolbook", "karatsuba", "speedup");
    FieldPtr f = Field::make(3, 1);
    Rng rng(1);
    for (int deg : {256, 1024, 4096, 16384, 65536}) {
        Poly a = Poly::random_exact_degree(f, deg, rng);
        Poly b = Poly::random_exact_degree(f, deg, rng);
        Poly ref = Poly::zero(f), fast = Poly::zero(f);
        int reps = deg <= 4096 ? 5 : 1;
        double t_ref = timed([&] {
            for (int i = 0; i < reps; ++i) ref = poly_mul_reference(a, b);
        }) / reps;
        double t_fast = timed([&] {
            for (int i = 0; i < reps; ++i) fast = a * b;
        }) / reps;
        if (ref != fast) {
            std::printf("MISMATCH at degree %d\n", deg);
            return 1;
        }
        std::printf("%10d %14.3f %14.3f %9.2fx\n", deg, t_ref, t_fast, t_ref / t_fast);
    }

    std::printf("\nbatch decomposition (F3, 32 matrices)\n");
    std::vector<Mat2> batch;
    std::vector<std::uint64_t> seeds;
    Rng gen(7);
    for (int i = 0; i < 32; ++i) {
        batch.push_back(random_sl2(f, gen, {8, 3, 2}).matrix);
        seeds.push_back(gen.next());
    }
    auto run_batch = [&](bool parallel) {
        std::vector<Certificate> certs(batch.size(), Certificate::identity(f));
        par::for_each_index(
            batch.size(),
            [&](std::size_t i) {
                DecomposeOptions o;
                o.seed = seeds[i];
                certs[i] = decompose(batch[i], o).certificate;
            },
            parallel);
        return certs;
    };
    std::vector<Certificate> serial_certs, parallel_certs;
    double t_serial = timed([&] { serial_certs = run_batch(false); });
    double t_parallel = timed([&] { parallel_certs = run_batch(true); });
    bool same = true;
    for (std::size_t i = 0; i < serial_certs.size(); ++i)
        same = same && serial_certs[i] == parallel_certs[i];
    if (!same) {
        std::printf("MISMATCH between serial and parallel batch results\n");
        return 1;
    }
    std::printf("%10s %14.1f ms\n%10s %14.1f ms  (speedup %.2fx, results identical)\n", "serial",
                t_serial, "parallel", t_parallel, t_serial / t_parallel);
    return 0;
}
