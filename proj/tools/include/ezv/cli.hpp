#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ezv/numerics_types.hpp"

namespace ezv::cli {

enum class ExitCode : int {
  ok = 0,
  verify_failed = 1,
  domain = 2,
  pole = 3,
  truncation = 4,
  io = 5,
  usage = 64,
};

/// Bad command line: unknown target, malformed literal, missing option.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv };

/// Raw option text as given on the command line. Values are validated and
/// converted by the dispatcher, so every literal is checked before any
/// computation starts.
struct RawOptions {
  std::optional<std::string> k, tau, sigma, z, q, rho;
  std::optional<std::string> epsilon, max_terms, radius;
  std::optional<std::string> sigmas, kmax, nmax, grid, step;
  std::optional<std::string> word, word2, x1, x2, x3;
  std::optional<std::string> samples, strategy, source;
  std::optional<std::string> format;  // json by default, csv for tables
  std::optional<std::string> out;
  bool no_anomaly = false;
};

struct CommandRequest {
  std::string subcommand;
  std::string target;
  // Normalized parameters in a fixed order; complex values as "re,im".
  std::vector<std::pair<std::string, std::string>> parameters;
  PrecisionPolicy precision;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out_path;
};

/// Parses "re,im", "a+bi", "a-bi", "bi" or a plain real. Throws UsageError.
cplx parse_complex(const std::string& text);

/// Default epsilon with the EZV_PRECISION override applied.
PrecisionPolicy default_precision();

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ezv::cli
