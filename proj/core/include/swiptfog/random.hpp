#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace swiptfog {

/// Stream tags keep independent consumers of one master seed apart.
enum class Stream : std::uint64_t {
    Channel = 1,
    Csi = 2,
    Order = 3,
    Realization = 4,
    Placement = 5,
};

using Engine = std::mt19937_64;

/// Seeds an engine from (master seed, stream tag, coordinates) through std::seed_seq.
/// The same key always yields the same engine state, on any thread.
Engine make_engine(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> coords = {});

/// A 64-bit child seed for the given key.
std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> coords = {});

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(Engine& engine);

/// Uniform integer in [0, n).
std::uint64_t uniform_below(Engine& engine, std::uint64_t n);

/// Standard normal draw (platform independent).
double standard_normal(Engine& engine);

} // namespace swiptfog
