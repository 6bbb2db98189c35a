#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cutmatch
{

/*! \brief Base class of all errors raised by the library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Raised by the bench reader on malformed or inconsistent input. */
class bench_error : public error
{
public:
  using error::error;
};

using node_id = uint32_t;

/*! \brief Kind of a netlist node.
 *
 * `PI` marks primary inputs (key inputs included). `MUX2` has fanins
 * (select, a, b) and computes `select ? a : b`; it only lives inside the
 * locking generators before decomposition.
 */
enum class gate_kind : uint8_t
{
  PI,
  CONST0,
  CONST1,
  BUF,
  NOT,
  AND,
  NAND,
  OR,
  NOR,
  XOR,
  XNOR,
  MUX2
};

std::string_view kind_name( gate_kind kind );
std::optional<gate_kind> kind_from_name( std::string_view name );

/*! \brief True for AND/NAND/OR/NOR/XOR/XNOR. */
bool is_nary( gate_kind kind );
/*! \brief True for NAND/NOR/XNOR/NOT. */
bool is_inverting( gate_kind kind );
/*! \brief Non-inverting base of NAND/NOR/XNOR/NOT; identity otherwise. */
gate_kind positive_kind( gate_kind kind );
/*! \brief Inverting counterpart of AND/OR/XOR/BUF; identity otherwise. */
gate_kind negated_kind( gate_kind kind );

struct node
{
  std::string name;
  gate_kind kind{ gate_kind::PI };
  std::vector<node_id> fanins;
  bool key{ false };  // key input (PI only)
  bool lock{ false }; // gate belongs to the locking logic
};

/*! \brief Gate-level combinational netlist.
 *
 * Every node drives exactly one net that carries the node's name, so net
 * and node are used interchangeably. Primary inputs come first in
 * the node table; gates follow in insertion order. Passes never mutate
 * their input graph and return fresh graphs.
 */
class gate_graph
{
public:
  gate_graph() = default;
  explicit gate_graph( std::string design_name ) : design_( std::move( design_name ) ) {}

  node_id add_input( std::string name, bool key = false );
  node_id add_gate( std::string name, gate_kind kind, std::vector<node_id> fanins );
  void add_output( node_id driver );

  void set_fanins( node_id id, std::vector<node_id> fanins ) { nodes_.at( id ).fanins = std::move( fanins ); }
  void set_kind( node_id id, gate_kind kind ) { nodes_.at( id ).kind = kind; }
  void set_lock( node_id id, bool value = true ) { nodes_.at( id ).lock = value; }
  void set_key( node_id id, bool value = true );
  void rename( node_id id, std::string name );
  void set_output( size_t index, node_id driver ) { outputs_.at( index ) = driver; }

  std::string const& design() const { return design_; }
  void set_design( std::string name ) { design_ = std::move( name ); }

  std::vector<node> const& nodes() const { return nodes_; }
  node const& at( node_id id ) const { return nodes_.at( id ); }
  size_t size() const { return nodes_.size(); }

  std::vector<node_id> const& inputs() const { return inputs_; }
  std::vector<node_id> const& outputs() const { return outputs_; }
  std::vector<node_id> key_inputs() const;
  std::vector<node_id> data_inputs() const;

  bool is_input( node_id id ) const { return nodes_[id].kind == gate_kind::PI; }
  bool is_gate( node_id id ) const { return nodes_[id].kind != gate_kind::PI; }

  size_t num_gates() const { return nodes_.size() - inputs_.size(); }
  /*! \brief Gates other than BUF/NOT/constants. */
  size_t num_logic_gates() const;

  std::optional<node_id> find( std::string_view name ) const;

  /*! \brief Name not yet used in the graph, derived from `base`. */
  std::string fresh_name( std::string_view base ) const;

  /*! \brief Topological order of all nodes; throws `error` on a cycle. */
  std::vector<node_id> topological_order() const;
  /*! \brief True when every fanin precedes its gate in the node table. */
  bool is_topologically_ordered() const;
  std::vector<std::vector<node_id>> fanouts() const;
  std::vector<std::string> lock_gate_names() const;

private:
  std::string design_;
  std::vector<node> nodes_;
  std::vector<node_id> inputs_;
  std::vector<node_id> outputs_;
  std::unordered_map<std::string, node_id> by_name_;
};

/*! \brief Structural identity: same names, kinds, connectivity, ports and flags. */
bool structurally_equal( gate_graph const& a, gate_graph const& b );

struct diagnostic
{
  std::string subject;
  std::string message;
};

/*! \brief Checks every netlist invariant; empty result means valid. */
std::vector<diagnostic> validate( gate_graph const& g );

/* bench format */

struct bench_options
{
  std::string key_prefix{ "keyinput" };
  /*! \brief Extra names flagged as key inputs regardless of prefix. */
  std::vector<std::string> key_inputs;
  std::string design_name;
};

gate_graph parse_bench( std::string_view text, bench_options const& options = {} );
std::string write_bench( gate_graph const& g );

gate_graph read_bench_file( std::string const& path, bench_options options = {} );
void write_text_file( std::string const& path, std::string_view text );
std::string read_text_file( std::string const& path );

/* key record */

struct key_record
{
  std::string scheme;
  std::vector<std::string> key_inputs;
  std::vector<bool> key_bits;
  std::vector<std::string> lock_gates;
};

std::string key_bits_string( std::vector<bool> const& bits );
std::string key_record_to_json( key_record const& record );
key_record key_record_from_json( std::string_view text );

} // namespace cutmatch
