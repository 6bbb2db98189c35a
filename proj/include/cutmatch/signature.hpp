#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <cutmatch/cuts.hpp>
#include <cutmatch/netlist.hpp>
#include <cutmatch/npn.hpp>

namespace cutmatch
{

/*! \brief NPN class counts over the selected cuts of one design at fixed (k, n_select).
 *
 * Class keys are canonical tables in `truth_table::to_hex` form, so cuts with
 * fewer than k leaves form their own classes.
 */
struct design_signature
{
  std::string design;
  uint32_t k{ 0 };
  size_t n_select{ 0 };
  std::map<std::string, uint64_t> classes;
  /*! share of cuts whose canonical form was proven minimal; 1 when there are no cuts */
  double exact_fraction{ 1.0 };

  uint64_t total() const;
  bool operator==( design_signature const& other ) const = default;
};

struct signature_options
{
  unsigned jobs{ 1 };
  uint64_t npn_budget{ default_npn_budget };
};

design_signature build_signature( gate_graph const& g, cut_config const& cfg, signature_options const& opts = {} );

/*! \brief One signature per entry of `n_selects` from a single enumeration.
 *
 * Valid because selection keeps a prefix of one fixed order per root.
 */
std::vector<design_signature> build_signatures( gate_graph const& g, cut_config const& cfg,
                                                std::vector<size_t> const& n_selects,
                                                signature_options const& opts = {} );

enum class jaccard_mode
{
  set,
  /*! sum of per-class minimum counts over sum of maxima */
  multiset
};

/*! \brief "set" or "multiset"; throws otherwise. */
jaccard_mode jaccard_mode_from_name( std::string const& name );
char const* jaccard_mode_name( jaccard_mode mode );

/*! \brief Intersection over union of class sets; 1 when both are empty. Throws on (k, n_select) mismatch. */
double jaccard( design_signature const& a, design_signature const& b, jaccard_mode mode = jaccard_mode::set );

/*! \brief Reference signatures sharing one (k, n_select), sorted by design name. */
struct corpus_db
{
  uint32_t k{ 0 };
  size_t n_select{ 0 };
  std::vector<design_signature> entries;
  /*! creation parameters; tool name and version are added on write */
  std::map<std::string, std::string> meta;
};

/*! \brief Drops references functionally equivalent to another present reference (c499 when c1355 is present). */
std::vector<design_signature> exclude_equivalent_references( std::vector<design_signature> entries );

/*! \brief Name under which `design` is expected in `db`: itself, or the kept member of its equivalent pair. */
std::string resolve_reference( std::string const& design, corpus_db const& db );

/*! \brief Validates homogeneity and unique names, then sorts by name. */
corpus_db make_corpus( std::vector<design_signature> entries, std::map<std::string, std::string> meta = {} );

std::string corpus_to_json( corpus_db const& db );
corpus_db corpus_from_json( std::string const& text );
std::string signature_to_json( design_signature const& sig );
design_signature signature_from_json( std::string const& text );

struct ranked_design
{
  std::string design;
  double score{ 0.0 };
};

/*! \brief Scores against every entry, descending, ties by name. Throws on an empty corpus or parameter mismatch. */
std::vector<ranked_design> compare_to_corpus( design_signature const& sig, corpus_db const& db,
                                              jaccard_mode mode = jaccard_mode::set );

std::string ranking_to_csv( std::vector<ranked_design> const& ranking );

/*! \brief 1-based position of `design` in `ranking`, 0 when absent. */
size_t rank_of( std::vector<ranked_design> const& ranking, std::string const& design );

struct ranked_article
{
  std::string truth;
  std::vector<ranked_design> ranking;
};

/*! \brief Fraction of articles whose truth is within the first k of its ranking, for each k. */
std::vector<double> topk_accuracy( std::vector<ranked_article> const& articles,
                                   std::vector<size_t> const& ks = { 1, 5, 10, 20 } );

struct similarity_matrix
{
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<double>> values;
};

similarity_matrix compare_all( std::vector<design_signature> const& queries, corpus_db const& db,
                               jaccard_mode mode = jaccard_mode::set );

/*! \brief Header `design,<cols...>`, one row per query, values with three decimals. */
std::string heatmap_to_csv( similarity_matrix const& m );

/*! \brief Mean of the entries whose row and column names differ. */
double mean_off_diagonal( similarity_matrix const& m );

} // namespace cutmatch
