#pragma once

#include <string>

#include <cutmatch/netlist.hpp>

namespace cutmatch
{

struct normalize_report
{
  size_t gates_before{ 0 };
  size_t gates_after{ 0 };
  size_t constants_folded{ 0 };
  size_t strash_merges{ 0 };
  size_t iterations{ 0 };
};

std::string normalize_report_to_json( normalize_report const& report );

/*! \brief Rewrites every gate into 2-input AND/NAND/OR/NOR/XOR/XNOR plus BUF/NOT.
 *
 * Wide gates become left-deep chains of the non-inverting base with the
 * original kind on the last stage, e.g. NAND(a,b,c) -> NAND(AND(a,b),c).
 * MUX2(s,a,b) becomes OR(AND(s,a), AND(NOT(s),b)). The last stage keeps the
 * original name; fragments of a lock gate stay lock gates.
 */
gate_graph decompose_to_2input( gate_graph const& g );

/*! \brief Propagates constants and removes trivial gates until fixpoint.
 *
 * Handles constant fanins, equal fanins, double inversion and buffers.
 * Primary outputs keep their net names: a buffer feeding an output is
 * folded into its source gate unless the source is a primary input or
 * already names another output. Unobservable gates are dropped.
 * `folded`, when given, receives the number of gates replaced by constants.
 */
gate_graph fold_constants( gate_graph const& g, size_t* folded = nullptr );

/*! \brief Structural hashing: merges gates with equal kind and fanins (commutative). */
gate_graph strash( gate_graph const& g, normalize_report& report );
gate_graph strash( gate_graph const& g );

/*! \brief decompose_to_2input followed by fold_constants and strash to fixpoint. */
gate_graph normalize( gate_graph const& g, normalize_report& report );
gate_graph normalize( gate_graph const& g );

/*! \brief True when only 2-input logic gates, BUF and NOT remain (constants allowed on outputs). */
bool is_normalized_kind_set( gate_graph const& g );

} // namespace cutmatch
