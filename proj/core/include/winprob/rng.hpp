#ifndef WINPROB_RNG_HPP
#define WINPROB_RNG_HPP

#include <cstdint>
#include <random>

namespace winprob {

// splitmix64 step; used to derive independent substreams from one seed.
std::uint64_t splitmix64(std::uint64_t& state);

// Seedable deterministic random stream. Substreams derived from the same
// (seed, index) pair are identical across runs and platforms, which is what
// makes per-trial streams safe to evaluate in any order.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    // Independent substream for a given index (e.g. one per trial).
    static RngStream derived(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next();
    double uniform();                 // [0, 1), 53-bit resolution
    int uniform_int(int lo, int hi);  // inclusive bounds, unbiased

private:
    std::mt19937_64 gen_;
};

} // namespace winprob

#endif
