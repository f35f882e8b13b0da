#pragma once

#include <charconv>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <system_error>

namespace ddp {

// Thrown when input data fails a structural or range check.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a file or stream cannot be decoded.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive routine is asked for more work than it can
// finish in reasonable time (the limits are documented per function).
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a problem has no feasible answer at all.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finalizer of the splitmix64 generator.  Used as a cheap, well-mixed hash
// when deriving per-instance / per-run seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for (instance, run) inside an experiment keyed by master_seed.
// Different master seeds give unrelated streams; the same triple always
// gives the same stream, which is what makes experiments repeatable.
inline std::uint64_t derive_seed(std::uint64_t master_seed,
                                 std::uint64_t instance,
                                 std::uint64_t run) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ (0x100000001b3ULL * (instance + 1)));
    h = splitmix64(h ^ (0xdf900294d8f554a5ULL * (run + 1)));
    return h;
}

// mt19937_64 with hand-rolled draw helpers.  The engine itself is specified
// bit-for-bit by the standard, but std::uniform_*_distribution is not, so
// using the library distributions would make results differ between
// standard libraries.  These helpers keep every stream portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform double in [0, 1).  Top 53 bits of one engine draw.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], both ends included.  Rejection sampling,
    // so there is no modulo bias.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw ValidationError("uniform_int: lo > hi");
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(gen_());  // full 64-bit range
        std::uint64_t reject_below = (0 - span) % span;           // 2^64 mod span
        std::uint64_t v = gen_();
        while (v < reject_below) v = gen_();
        return lo + static_cast<std::int64_t>(v % span);
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// Shortest decimal form that parses back to exactly the same double.
// Used everywhere a double lands in a text file, so output is byte-stable.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

}  // namespace ddp
