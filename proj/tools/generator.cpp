#include "generator.hpp"

#include <random>
#include <vector>

namespace citeswing::tools {

namespace {

// All draws go through modulo reduction on the raw mt19937_64 stream;
// std::uniform_int_distribution is not reproducible across standard
// library implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n)
{
    return rng() % n;
}

std::string padded(const char* prefix, int index, int width)
{
    std::string digits = std::to_string(index);
    std::string out = prefix;
    out.append(static_cast<std::size_t>(width) - std::min<std::size_t>(digits.size(), width), '0');
    out += digits;
    return out;
}

int digit_width(int n)
{
    int w = 1;
    while (n >= 10) {
        n /= 10;
        ++w;
    }
    return w;
}

} // namespace

std::string generate_csv(const GenParams& params)
{
    std::mt19937_64 rng(params.seed);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(params.n_items));
    for (auto& c : counts) {
        c = static_cast<std::int64_t>(draw(rng, 3));
        if (draw(rng, 10) == 0) {
            c += static_cast<std::int64_t>(draw(rng, 8));
        }
    }

    const int item_width = digit_width(params.n_items);
    const int snap_width = digit_width(params.n_snapshots);

    std::string out = "item_id,snapshot,citations\n";
    for (int s = 1; s <= params.n_snapshots; ++s) {
        if (s > 1) {
            for (auto& c : counts) {
                if (params.model == GrowthModel::Uniform) {
                    c += static_cast<std::int64_t>(draw(rng, 3));
                } else {
                    // Binomial(c + 1, 0.3) by direct trials.
                    std::int64_t gain = 0;
                    for (std::int64_t trial = 0; trial < c + 1; ++trial) {
                        gain += draw(rng, 10) < 3 ? 1 : 0;
                    }
                    c += gain;
                }
            }
        }
        const std::string label = padded("s", s, snap_width);
        for (int i = 0; i < params.n_items; ++i) {
            out += padded("p", i + 1, item_width);
            out += ',';
            out += label;
            out += ',';
            out += std::to_string(counts[static_cast<std::size_t>(i)]);
            out += '\n';
        }
    }
    return out;
}

} // namespace citeswing::tools
