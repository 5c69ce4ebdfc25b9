#include "winprob/rng.hpp"

namespace winprob {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) : gen_(seed) {}

RngStream RngStream::derived(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state ^= stream_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(state);
    return RngStream(a ^ b);
}

std::uint64_t RngStream::next() { return gen_(); }

double RngStream::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

int RngStream::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    // rejection sampling on the top of the range keeps the draw unbiased
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
}

} // namespace winprob
