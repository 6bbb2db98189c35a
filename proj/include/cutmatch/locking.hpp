#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <cutmatch/netlist.hpp>

namespace cutmatch
{

class lock_error : public error
{
public:
  using error::error;
};

enum class lock_scheme : uint8_t
{
  TRLL,
  MUX,
  LUT,
  SFLLHD
};

std::string_view scheme_name( lock_scheme scheme );
/*! \brief Case-insensitive; accepts "sfll-hd" for SFLLHD. */
std::optional<lock_scheme> scheme_from_name( std::string_view name );

struct lock_config
{
  lock_scheme scheme{ lock_scheme::TRLL };
  uint32_t key_size{ 32 };
  /*! SFLL-HD distance; key_size / 2 when unset */
  std::optional<uint32_t> hd;
  /*! LUT input count; only 2 is supported */
  uint32_t lut_k{ 2 };
  uint64_t seed{ 1 };

  /*! Explicit lock sites (gate names) for TRLL, MUX and LUT, replacing the random choice. */
  std::vector<std::string> sites;
  /*! SFLL-HD overrides: protected output net and protected inputs. */
  std::string protected_output;
  std::vector<std::string> protected_inputs;

  uint32_t effective_hd() const { return hd ? *hd : key_size / 2; }
  void check() const;
};

/*! \brief A locked netlist with its key.
 *
 * The graph carries no lock labels; `key.lock_gates` is the ground truth.
 */
struct locked_design
{
  gate_graph graph;
  key_record key;
};

/*! \brief Bitwise XOR/XNOR key gates.
 *
 * Each key bit either absorbs an inverter (a NOT gate, or the output
 * inversion of a NAND/NOR/XNOR, which becomes a base gate named `<n>_lk`)
 * or splices a key gate onto a gate output. The key gate keeps the original
 * net name. Ground truth is the set of key gates.
 */
locked_design lock_trll( gate_graph const& g, lock_config const& cfg );

/*! \brief One key-selected MUX2 per key bit between a true wire and a decoy outside its fanout cone. */
locked_design lock_mux( gate_graph const& g, lock_config const& cfg );

/*! \brief key_size / 4 two-input gates become MUX4 trees over four configuration bits.
 *
 * With fanins (a, b) of the replaced gate, configuration bit r of a site is
 * the gate value at row r = 2 * b + a; sites consume key bits in order.
 */
locked_design lock_lut( gate_graph const& g, lock_config const& cfg );

/*! \brief Stripped-functionality lock with a Hamming-distance predicate.
 *
 * The protected output is flipped when the protected inputs lie at distance
 * hd from a secret pattern, and flipped back when they lie at distance hd
 * from the key. Both predicates are population-count adder trees followed
 * by an equality comparator. The protected output defaults to the one with
 * the largest fanin cone, the protected inputs to the first key_size data
 * inputs by name.
 */
locked_design lock_sfll_hd( gate_graph const& g, lock_config const& cfg );

locked_design lock( gate_graph const& g, lock_config const& cfg );

struct overhead_report
{
  std::string design;
  std::string scheme;
  uint32_t key_size{ 0 };
  size_t original_gates{ 0 };
  size_t locked_gates{ 0 };
  double area_ratio{ 1.0 };
};

/*! \brief Ratio of non-BUF gate counts; both graphs are expected normalized. */
overhead_report overhead( gate_graph const& original, gate_graph const& locked );
std::string overhead_to_json( overhead_report const& report );

} // namespace cutmatch
