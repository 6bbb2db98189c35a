#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <cutmatch/locking.hpp>
#include <cutmatch/signature.hpp>

namespace cutmatch
{

/*! \brief Experiment grid: every benchmark is locked with every (scheme, key size, seed)
 * and compared, for every (k, n_select), against the unlocked benchmarks.
 *
 * Relative paths in the JSON form resolve against the manifest's directory.
 */
struct experiment_manifest
{
  std::vector<std::filesystem::path> benchmarks;
  /*! designs kept out of the reference corpus in addition to equivalent duplicates */
  std::vector<std::string> reference_exclusions;
  std::vector<lock_scheme> schemes;
  std::vector<uint32_t> key_sizes;
  std::vector<uint64_t> seeds;
  std::vector<uint32_t> cut_sizes;
  std::vector<size_t> n_selects;
  size_t max_search{ 10000 };
  jaccard_mode mode{ jaccard_mode::set };
  std::filesystem::path output;

  void check() const;
};

experiment_manifest manifest_from_json( std::string const& text, std::filesystem::path const& base_dir = {} );
experiment_manifest read_manifest( std::filesystem::path const& path );

struct repro_options
{
  unsigned jobs{ 1 };
  /*! reuse artifacts whose input digest is unchanged */
  bool resume{ true };
  /*! progress lines; none when null */
  std::ostream* log{ nullptr };
};

struct repro_summary
{
  size_t steps{ 0 };
  size_t reused{ 0 };
  size_t failed_cells{ 0 };
};

/*! \brief Runs the grid and writes the artifact tree under `m.output`.
 *
 * All inputs are read before anything is written. A cell whose lock cannot
 * be generated is reported as failed and the rest of the grid continues.
 * Output bytes depend only on the manifest and the benchmark contents.
 */
repro_summary run_repro( experiment_manifest const& m, repro_options const& opts = {} );

/*! \brief Hex SHA-256 of `data`. */
std::string content_digest( std::string_view data );

} // namespace cutmatch
