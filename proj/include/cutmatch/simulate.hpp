#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <cutmatch/netlist.hpp>

namespace cutmatch
{

/*! \brief A block of input patterns, bit-parallel.
 *
 * `words[i]` holds `num_words` 64-bit words for input `i`; pattern `p`
 * lives at bit `p % 64` of word `p / 64`.
 */
struct pattern_set
{
  size_t num_inputs{ 0 };
  size_t num_words{ 0 };
  size_t num_patterns{ 0 };
  std::vector<std::vector<uint64_t>> words;
};

/*! \brief All 2^n assignments; n <= 24. */
pattern_set exhaustive_patterns( size_t num_inputs );
pattern_set random_patterns( size_t num_inputs, size_t num_patterns, std::mt19937_64& rng );

/*! \brief Simulates every node. Inputs of `g` are bound positionally to `patterns`.
 *
 * Returns one word vector per node.
 */
std::vector<std::vector<uint64_t>> simulate( gate_graph const& g, pattern_set const& patterns );

/*! \brief Counts patterns on which two netlists disagree.
 *
 * Data inputs of `candidate` are matched by name to inputs of `reference`;
 * key inputs of `candidate` are tied to `key` (by name). Outputs are
 * compared positionally. Patterns are generated over the reference inputs.
 */
size_t count_mismatches( gate_graph const& reference, gate_graph const& candidate, pattern_set const& patterns,
                         std::unordered_map<std::string, bool> const& key = {} );

/*! \brief Exhaustive when the reference has at most `exhaustive_limit` inputs, random otherwise. */
pattern_set equivalence_patterns( gate_graph const& reference, std::mt19937_64& rng, size_t random_count = 1000,
                                  size_t exhaustive_limit = 16 );

std::unordered_map<std::string, bool> key_assignment( key_record const& record );

} // namespace cutmatch
