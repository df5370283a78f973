#pragma once

#include <cstdint>
#include <random>

namespace sl2pf {

// Deterministic seeded randomness. mt19937_64 raw output is pinned by the
// standard, and the helpers below avoid std distributions (whose output is
// implementation-defined), so identical seeds give identical streams on any
// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool coin() { return (next() & 1u) != 0; }

    // Independent child stream; advances this stream by one draw.
    Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ull); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace sl2pf
