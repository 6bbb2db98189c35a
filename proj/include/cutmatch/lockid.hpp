#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <cutmatch/locking.hpp>
#include <cutmatch/netlist.hpp>
#include <cutmatch/truth_table.hpp>

namespace cutmatch
{

/*! \brief A cone function that marks lock logic when its key leaves are bound.
 *
 * Leaf `i` of `function` must bind to a key input when bit `i` of
 * `key_positions` is set. With `transitive`, nets already labeled as lock
 * logic bind as well. Matches are up to NPN equivalence.
 */
struct lock_template
{
  std::string name;
  truth_table function;
  uint32_t key_positions{ 0 };
  bool transitive{ false };
  /*! longest gate path from the cut root to a leaf */
  uint32_t max_depth{ 2 };
};

std::vector<lock_template> builtin_templates( lock_scheme scheme );

struct label_report
{
  std::vector<std::string> labeled;
  /*! absent without ground truth or without labels */
  std::optional<double> precision;
  std::optional<double> recall;
  size_t passes{ 0 };
};

std::string label_report_to_json( label_report const& report );

/*! \brief Labels lock gates by template matching from the key inputs, to fixpoint.
 *
 * Existing labels are kept. Only gates in the transitive fanout of a key
 * input are ever labeled. `ground_truth` names absent from `g` (removed by
 * normalization) are ignored when scoring.
 */
gate_graph label_lock_gates( gate_graph const& g, std::vector<lock_template> const& templates, label_report& report,
                             std::vector<std::string> const& ground_truth = {} );

/*! \brief True when a leaf binding and NPN transform map `t` onto `f`.
 *
 * `bound` marks the leaves of `f` that may take key positions of `t`.
 */
bool template_matches( lock_template const& t, truth_table const& f, uint32_t bound );

} // namespace cutmatch
