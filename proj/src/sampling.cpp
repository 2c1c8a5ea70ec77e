#include "rescoh/sampling.hpp"

namespace rescoh {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Sampler Sampler::for_test(std::uint32_t p, std::size_t n, std::string_view name) {
    // FNV-1a over the name, folded with p and n.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return Sampler(mix(h ^ mix(p) ^ mix(n + 0x51ed27ULL)));
}

std::uint64_t Sampler::next() { return mix(seed_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

Vec Sampler::vec(std::size_t n, const Prime& p) {
    Vec v(n);
    for (auto& x : v) x = below(p.value());
    return v;
}

Vec Sampler::nonbasis_vec(std::size_t n, const Prime& p) {
    for (;;) {
        Vec v = vec(n, p);
        std::size_t nz = 0;
        for (auto x : v) nz += x != 0;
        if (nz >= 2 || n < 2) return v;
    }
}

}  // namespace rescoh
