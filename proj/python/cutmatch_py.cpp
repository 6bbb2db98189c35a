#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cutmatch/lockid.hpp>
#include <cutmatch/locking.hpp>
#include <cutmatch/netlist.hpp>
#include <cutmatch/normalize.hpp>
#include <cutmatch/npn.hpp>
#include <cutmatch/repro.hpp>
#include <cutmatch/signature.hpp>

namespace py = pybind11;
using namespace cutmatch;

namespace
{

lock_scheme scheme_of( std::string const& name )
{
  auto const s = scheme_from_name( name );
  if ( !s )
    throw py::value_error( "unknown lock scheme '" + name + "'" );
  return *s;
}

std::vector<std::string> names_of( gate_graph const& g, std::vector<node_id> const& ids )
{
  std::vector<std::string> out;
  for ( auto id : ids )
    out.push_back( g.at( id ).name );
  return out;
}

py::dict key_dict( key_record const& k )
{
  py::dict d;
  d["scheme"] = k.scheme;
  d["key_inputs"] = k.key_inputs;
  d["key_bits"] = k.key_bits;
  d["lock_gates"] = k.lock_gates;
  return d;
}

} // namespace

PYBIND11_MODULE( _cutmatch, m )
{
  m.doc() = "NPN cut-class signatures of gate-level netlists";
  m.attr( "__version__" ) = CUTMATCH_VERSION_STRING;

  py::register_exception<error>( m, "Error", PyExc_RuntimeError );

  py::class_<gate_graph>( m, "Netlist" )
      .def_static(
          "from_bench",
          []( std::string const& text, std::string const& design ) {
            bench_options opts;
            opts.design_name = design;
            return parse_bench( text, opts );
          },
          py::arg( "text" ), py::arg( "design" ) = "" )
      .def_static( "read", []( std::filesystem::path const& p ) { return read_bench_file( p.string() ); } )
      .def( "to_bench", &write_bench )
      .def_property_readonly( "design", &gate_graph::design )
      .def_property_readonly( "num_gates", &gate_graph::num_gates )
      .def_property_readonly( "inputs", []( gate_graph const& g ) { return names_of( g, g.inputs() ); } )
      .def_property_readonly( "outputs", []( gate_graph const& g ) { return names_of( g, g.outputs() ); } )
      .def_property_readonly( "key_inputs", []( gate_graph const& g ) { return names_of( g, g.key_inputs() ); } )
      .def_property_readonly( "lock_gates", &gate_graph::lock_gate_names )
      .def( "validate",
            []( gate_graph const& g ) {
              std::vector<std::pair<std::string, std::string>> out;
              for ( auto const& d : validate( g ) )
                out.emplace_back( d.subject, d.message );
              return out;
            } )
      .def( "__eq__", &structurally_equal )
      .def( "__repr__", []( gate_graph const& g ) {
        return "<Netlist " + g.design() + ": " + std::to_string( g.inputs().size() ) + " inputs, " +
               std::to_string( g.num_gates() ) + " gates>";
      } );

  m.def( "normalize", py::overload_cast<gate_graph const&>( &normalize ), py::arg( "netlist" ) );

  m.def(
      "lock",
      []( gate_graph const& g, std::string const& scheme, uint32_t key_size, uint64_t seed,
          std::optional<uint32_t> hd ) {
        lock_config cfg;
        cfg.scheme = scheme_of( scheme );
        cfg.key_size = key_size;
        cfg.seed = seed;
        cfg.hd = hd;
        auto l = lock( g, cfg );
        return py::make_tuple( std::move( l.graph ), key_dict( l.key ) );
      },
      py::arg( "netlist" ), py::arg( "scheme" ), py::arg( "key_size" ) = 32, py::arg( "seed" ) = 1,
      py::arg( "hd" ) = py::none(), "Returns (locked netlist, key record dict)." );

  m.def(
      "area_ratio",
      []( gate_graph const& original, gate_graph const& locked ) {
        return overhead( normalize( original ), normalize( locked ) ).area_ratio;
      },
      py::arg( "original" ), py::arg( "locked" ) );

  m.def(
      "label",
      []( gate_graph const& g, std::string const& scheme, std::vector<std::string> const& ground_truth ) {
        label_report r;
        auto out = label_lock_gates( g, builtin_templates( scheme_of( scheme ) ), r, ground_truth );
        py::dict d;
        d["labeled"] = r.labeled;
        d["precision"] = r.precision;
        d["recall"] = r.recall;
        d["passes"] = r.passes;
        return py::make_tuple( std::move( out ), d );
      },
      py::arg( "netlist" ), py::arg( "scheme" ), py::arg( "ground_truth" ) = std::vector<std::string>{},
      "Returns (labeled netlist, report dict)." );

  m.def(
      "npn_canonical",
      []( std::string const& hex ) {
        auto const c = npn_canonical( truth_table::from_hex( hex ) );
        return py::make_tuple( c.canonical.to_hex(), c.exact );
      },
      py::arg( "table" ), "Canonical form of a `k:hex` truth table, and whether the search was exhaustive." );

  py::class_<design_signature>( m, "Signature" )
      .def_readonly( "design", &design_signature::design )
      .def_readonly( "k", &design_signature::k )
      .def_readonly( "n_select", &design_signature::n_select )
      .def_readonly( "classes", &design_signature::classes )
      .def_readonly( "exact_fraction", &design_signature::exact_fraction )
      .def_property_readonly( "total", &design_signature::total )
      .def( "to_json", &signature_to_json )
      .def_static( "from_json", &signature_from_json )
      .def( "__eq__", []( design_signature const& a, design_signature const& b ) { return a == b; } );

  m.def(
      "build_signature",
      []( gate_graph const& g, uint32_t k, size_t n_select, size_t max_search, unsigned jobs ) {
        cut_config cfg;
        cfg.k = k;
        cfg.n_select = n_select;
        cfg.max_search = max_search;
        signature_options opts;
        opts.jobs = jobs;
        py::gil_scoped_release release;
        return build_signature( g, cfg, opts );
      },
      py::arg( "netlist" ), py::arg( "k" ) = 6, py::arg( "n_select" ) = 20, py::arg( "max_search" ) = 10000,
      py::arg( "jobs" ) = 1 );

  m.def(
      "jaccard",
      []( design_signature const& a, design_signature const& b, std::string const& mode ) {
        return jaccard( a, b, jaccard_mode_from_name( mode ) );
      },
      py::arg( "a" ), py::arg( "b" ), py::arg( "mode" ) = "set" );

  py::class_<corpus_db>( m, "Corpus" )
      .def_readonly( "k", &corpus_db::k )
      .def_readonly( "n_select", &corpus_db::n_select )
      .def_readonly( "entries", &corpus_db::entries )
      .def( "to_json", &corpus_to_json )
      .def_static( "from_json", &corpus_from_json )
      .def( "__len__", []( corpus_db const& db ) { return db.entries.size(); } );

  m.def(
      "make_corpus",
      []( std::vector<design_signature> entries, bool drop_equivalent ) {
        return make_corpus( drop_equivalent ? exclude_equivalent_references( std::move( entries ) )
                                            : std::move( entries ) );
      },
      py::arg( "signatures" ), py::arg( "drop_equivalent" ) = true );

  m.def(
      "compare",
      []( design_signature const& sig, corpus_db const& db, std::string const& mode ) {
        std::vector<std::pair<std::string, double>> out;
        for ( auto const& r : compare_to_corpus( sig, db, jaccard_mode_from_name( mode ) ) )
          out.emplace_back( r.design, r.score );
        return out;
      },
      py::arg( "signature" ), py::arg( "corpus" ), py::arg( "mode" ) = "set",
      "Ranked (design, score) pairs, best first." );

  m.def(
      "run_repro",
      []( std::filesystem::path const& manifest, unsigned jobs, bool resume,
          std::optional<std::filesystem::path> output ) {
        auto mf = read_manifest( manifest );
        if ( output )
          mf.output = *output;
        repro_options opts;
        opts.jobs = jobs;
        opts.resume = resume;
        py::gil_scoped_release release;
        auto const s = run_repro( mf, opts );
        return std::make_tuple( s.steps, s.reused, s.failed_cells );
      },
      py::arg( "manifest" ), py::arg( "jobs" ) = 1, py::arg( "resume" ) = true, py::arg( "output" ) = py::none(),
      "Returns (steps, reused, failed cells)." );
}
