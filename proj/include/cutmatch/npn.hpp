#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include <cutmatch/cuts.hpp>
#include <cutmatch/netlist.hpp>
#include <cutmatch/truth_table.hpp>

namespace cutmatch
{

/*! \brief Evaluates the cone of `c` over all assignments of its leaves.
 *
 * Leaf `j` of `c.leaves` drives bit `j` of the table index.
 */
truth_table cut_truth_table( gate_graph const& g, cut const& c );

struct npn_class
{
  truth_table canonical;
  /*! false when the search stopped at the transform budget */
  bool exact{ true };
};

constexpr uint64_t default_npn_budget = 200000;

/*! \brief Lexicographically smallest member of the NPN orbit of `t`.
 *
 * Only orbit members in a normal form are enumerated: at most half of the
 * minterms set, every variable's positive cofactor no larger than its negative
 * cofactor, and variables sorted by positive-cofactor count, then by
 * influence, then by their sorted pairwise joint influences. Ties in any of
 * these are searched exhaustively, except that variables which are symmetric
 * in the function are never permuted among themselves. Since every orbit
 * meets the normal form, the minimum over it is a class invariant whenever
 * the search completes within `budget` transform applications.
 */
npn_class npn_canonical( truth_table const& t, uint64_t budget = default_npn_budget );

/*! \brief True iff `a` and `b` share an NPN class (unbounded search). */
bool npn_equivalent( truth_table const& a, truth_table const& b );

/*! \brief Explicit NPN transform: y = out_neg ^ f(x') with x'[perm[i]] = x[i] ^ in_neg[i]. */
struct npn_transform
{
  std::vector<uint32_t> perm;
  uint32_t input_negation{ 0 };
  bool output_negation{ false };
};

/*! \brief Applies `tr` by evaluating `t` at every index; independent of the word-level operations. */
truth_table apply_transform( truth_table const& t, npn_transform const& tr );

/*! \brief Memoizing front end for repeated canonicalization; not thread-safe. */
class npn_cache
{
public:
  explicit npn_cache( uint64_t budget = default_npn_budget ) : budget_( budget ) {}

  npn_class const& operator()( truth_table const& t );
  size_t size() const { return cache_.size(); }

private:
  uint64_t budget_;
  std::unordered_map<truth_table, npn_class> cache_;
};

} // namespace cutmatch
