#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <cutmatch/netlist.hpp>

namespace cutmatch
{

struct cut_config
{
  uint32_t k{ 6 };
  /*! distinct cuts examined per root */
  size_t max_search{ 10000 };
  size_t n_select{ 20 };
  /*! cuts a node passes on to its fanouts; the highest-volume ones are kept */
  size_t node_cap{ 250 };

  static constexpr size_t unlimited = std::numeric_limits<size_t>::max();
  void check() const;
};

/*! \brief A cone rooted at `root`.
 *
 * `leaves` are sorted by node id and drive the truth-table variables in that
 * order. `interior` is every node reached from the root before a leaf,
 * root included, sorted by id.
 */
struct cut
{
  node_id root{ 0 };
  std::vector<node_id> leaves;
  std::vector<node_id> interior;
  /*! interior gates other than BUF and NOT */
  uint32_t volume{ 0 };
};

/*! \brief PIs, constants and lock gates: their outputs may only be leaves. */
bool is_cut_terminal( gate_graph const& g, node_id id );

/*! \brief Merge enumeration over the fanin cones of `root`.
 *
 * M(n) = {{n}} for terminals, otherwise {{n}} joined with every union of one
 * cut per fanin that has at most k leaves. Fanin cut lists are memoized and
 * truncated to `node_cap`; the root stops after `max_search` distinct leaf
 * sets. The trivial cut {root} is not returned.
 */
std::vector<cut> enumerate_cuts( gate_graph const& g, node_id root, cut_config const& cfg );

/*! \brief Orders by volume descending, then leaf ids lexicographically, and keeps `n_select`. */
std::vector<cut> select_top_cuts( std::vector<cut> cuts, cut_config const& cfg );

struct root_cuts
{
  node_id root;
  std::vector<cut> cuts;
};

/*! \brief select_top_cuts(enumerate_cuts) for every gate that is not a lock gate, BUF, NOT or constant.
 *
 * Roots are processed in id order; `jobs` > 1 splits them across threads
 * with identical results.
 */
std::vector<root_cuts> enumerate_design( gate_graph const& g, cut_config const& cfg, unsigned jobs = 1 );

/*! \brief Computes interior and volume for a leaf set. */
cut make_cut( gate_graph const& g, node_id root, std::vector<node_id> leaves );

/*! \brief `root,leaves,interior,volume` with `;`-separated name lists. */
std::string cuts_to_csv( gate_graph const& g, std::vector<root_cuts> const& cuts );

} // namespace cutmatch
