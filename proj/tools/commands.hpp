#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbound/bounds.hpp"
#include "qbound/clusters.hpp"
#include "qbound/codes.hpp"

namespace qbound::cli {

inline constexpr const char* kToolName = "qbound";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< oracle mismatch or internal error
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

/// Where a code comes from: a builtin family or matrix files.
struct CodeSource {
  std::string kind;  ///< toric | hgp | css | stabilizer
  std::size_t L = 0;
  std::string h1;
  std::string h2;
  std::string gx;
  std::string gz;
  std::string g;
  std::optional<std::size_t> distance;
};

struct RunConfig {
  std::string command;
  CodeSource code;
  std::string sector = "x";
  std::size_t m_max = 4;
  std::size_t rounds = 2;
  std::string ft_errors = "x";
  bool oracle = false;

  std::string theorem = "2";
  std::size_t w = 0;
  std::size_t w_x = 0;
  std::size_t w_z = 0;
  std::string scaling = "inf";
  ChannelParams channel;
  std::string solve;
  std::string curve;
  std::size_t points = 11;

  std::string bad_kind = "css";
  double step = 0.05;
  double rate_max = 0.5;

  std::string census_file;
  std::string field = "irreducible";
  std::size_t fit_m_min = 1;
  std::size_t fit_m_max = 0;

  std::string p_out;
  std::string q_out;

  std::string output;
  std::string format;  ///< empty selects the command default
  std::size_t max_stored = 10'000'000;
  int workers = 0;
};

/// Provenance record embedded in every output. Excludes the worker count
/// and the output path so results compare byte-for-byte across runs.
nlohmann::json config_json(const RunConfig& config);

/// Worker count from the config, falling back to QBOUND_WORKERS, then to
/// the OpenMP default (0).
int resolve_workers(const RunConfig& config);

/// Full command-line entry point. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Individual commands; each validates its config and writes its result to
// `out` (or to config.output when set).
void cmd_build(const RunConfig& config, std::ostream& out);
void cmd_census(const RunConfig& config, std::ostream& out);
void cmd_threshold(const RunConfig& config, std::ostream& out);
void cmd_ft_extend(const RunConfig& config, std::ostream& out);
void cmd_badprob(const RunConfig& config, std::ostream& out);
void cmd_fit(const RunConfig& config, std::ostream& out);

/// Reads a census CSV written by cmd_census (comment lines skipped).
ClusterCensus read_census_csv(std::istream& in);

}  // namespace qbound::cli
