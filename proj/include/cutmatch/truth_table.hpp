#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace cutmatch
{

/*! \brief Truth table of a Boolean function with at most 8 inputs.
 *
 * Bit `i` holds the function value when input `j` takes bit `j` of `i`
 * (input 0 is least significant). Bits above 2^k are always zero.
 * Tables compare as unsigned integers, most significant bit first.
 */
class truth_table
{
public:
  static constexpr uint32_t max_vars = 8;

  truth_table() = default;
  explicit truth_table( uint32_t num_vars );

  static truth_table projection( uint32_t num_vars, uint32_t var );
  static truth_table from_hex( std::string_view text );
  static truth_table from_words( uint32_t num_vars, std::array<uint64_t, 4> words );

  uint32_t num_vars() const { return k_; }
  uint32_t num_bits() const { return 1u << k_; }
  std::array<uint64_t, 4> const& words() const { return w_; }
  uint32_t num_words() const { return k_ <= 6 ? 1u : 1u << ( k_ - 6 ); }

  bool get_bit( uint32_t index ) const { return ( w_[index >> 6] >> ( index & 63 ) ) & 1; }
  void set_bit( uint32_t index, bool value = true );

  uint32_t count_ones() const;
  /*! \brief Number of ones in the cofactor with `var` = 1. */
  uint32_t count_ones_positive_cofactor( uint32_t var ) const;

  truth_table operator~() const;
  truth_table operator&( truth_table const& other ) const;
  truth_table operator|( truth_table const& other ) const;
  truth_table operator^( truth_table const& other ) const;

  /*! \brief Replaces `var` by its complement. */
  void flip( uint32_t var );
  /*! \brief Exchanges the roles of two variables. */
  void swap( uint32_t a, uint32_t b );

  bool operator==( truth_table const& other ) const = default;
  bool operator<( truth_table const& other ) const;

  /*! \brief `k:hex` with the most significant nibble first, e.g. `3:e8`. */
  std::string to_hex() const;

private:
  void mask();

  uint32_t k_{ 0 };
  std::array<uint64_t, 4> w_{};
};

} // namespace cutmatch

template<>
struct std::hash<cutmatch::truth_table>
{
  size_t operator()( cutmatch::truth_table const& t ) const noexcept
  {
    size_t h = t.num_vars();
    for ( auto w : t.words() )
      h = h * 0x9e3779b97f4a7c15ull ^ ( w + ( h << 6 ) + ( h >> 2 ) );
    return h;
  }
};
