#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dslv/lattice.hpp"

namespace dslv {

/// A reproducible coefficient generator, written as one token:
///   const:<c>                 q(n) = c
///   decay:<c>                 q(n) = c / (n+1)^2
///   random:<seed>,<lo>,<hi>   q(n) uniform in [lo, hi), anchored to the index n
///   file:<path>               explicit values, JSON array or whitespace/comma separated
struct PotentialSpec {
    enum class Kind { constant, decay, random, file };

    Kind kind = Kind::constant;
    double c = 0.0;
    std::uint64_t seed = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::string path;
    std::vector<double> file_values;

    static PotentialSpec zero() { return {}; }
    static PotentialSpec constant(double c);
    static PotentialSpec decay(double c);
    static PotentialSpec random(std::uint64_t seed, double lo, double hi);

    /// Throws ErrorKind::invalid_argument on malformed input; `file:` payloads are read here.
    static PotentialSpec parse(std::string_view token);

    /// Values on [first, last]. `file:` data must have exactly last-first+1 entries.
    LatticeFunction<double> generate(Index first, Index last) const;

    /// Canonical token; parse(to_string()) reproduces the generator.
    std::string to_string() const;
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_uniform(std::uint64_t bits) noexcept;

/// Shortest round-trip decimal for v.
std::string shortest_repr(double v);

} // namespace dslv
