#pragma once

#include <cstdint>
#include <string_view>

#include "rescoh/linalg.hpp"

namespace rescoh {

/// Counter-based generator (splitmix64 of seed + counter). Sample streams are
/// reproducible from (p, n, name) alone.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : seed_(seed) {}
    static Sampler for_test(std::uint32_t p, std::size_t n, std::string_view name);

    std::uint64_t next();
    /// Uniform-ish value in [0, bound); bound > 0.
    std::uint32_t below(std::uint32_t bound) { return static_cast<std::uint32_t>(next() % bound); }
    Vec vec(std::size_t n, const Prime& p);
    /// Random vector that is not a multiple of a single basis vector when n > 1.
    Vec nonbasis_vec(std::size_t n, const Prime& p);

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace rescoh
