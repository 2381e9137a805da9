#ifndef CITESWING_TOOLS_GENERATOR_HPP
#define CITESWING_TOOLS_GENERATOR_HPP

#include <cstdint>
#include <string>

namespace citeswing::tools {

enum class GrowthModel { Uniform, Rich };

// Parameters of the synthetic corpus generator. Citation counts are
// nondecreasing per item; output is byte-identical for identical
// parameters.
struct GenParams {
    std::uint64_t seed = 0;
    int n_items = 1;
    int n_snapshots = 1;
    GrowthModel model = GrowthModel::Uniform;
};

// Emits a long-format CSV corpus (`item_id,snapshot,citations`).
//
// Growth per step: `uniform` adds 0-2 citations per item; `rich` adds
// Binomial(citations + 1, 0.3), i.e. expected gain proportional to the
// item's current count. Initial counts are 0-2 with a sprinkle of
// hotter items so early snapshots already have excess citations.
std::string generate_csv(const GenParams& params);

} // namespace citeswing::tools

#endif
