#include "swiptfog/random.hpp"

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include <vector>

namespace swiptfog {
namespace {

std::vector<std::uint32_t> key_words(std::uint64_t seed, Stream stream,
                                     std::initializer_list<std::uint64_t> coords) {
    std::vector<std::uint32_t> words;
    words.reserve(4 + 2 * coords.size());
    auto push = [&](std::uint64_t v) {
        words.push_back(static_cast<std::uint32_t>(v));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    push(seed);
    push(static_cast<std::uint64_t>(stream));
    for (auto c : coords) push(c);
    return words;
}

} // namespace

Engine make_engine(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> coords) {
    const auto words = key_words(seed, stream, coords);
    std::seed_seq seq(words.begin(), words.end());
    return Engine(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> coords) {
    const auto words = key_words(seed, stream, coords);
    std::seed_seq seq(words.begin(), words.end());
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

double uniform01(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(Engine& engine, std::uint64_t n) {
    boost::random::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    return dist(engine);
}

double standard_normal(Engine& engine) {
    boost::random::normal_distribution<double> dist;
    return dist(engine);
}

} // namespace swiptfog
