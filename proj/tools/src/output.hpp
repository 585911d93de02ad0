#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ezv/cli.hpp"

namespace ezv::cli {

using Params = std::vector<std::pair<std::string, std::string>>;
using Json = nlohmann::ordered_json;

/// Machine-readable description of a failed computation.
struct ErrorInfo {
  std::string kind;  // domain, pole, truncation, branch, io
  std::string message;
  std::optional<std::pair<std::size_t, std::size_t>> pole_index;
  std::optional<ApproxValue> partial;
};

/// One result row. Fields that do not apply to a subcommand stay empty and
/// are written as null (JSON) or an empty cell (CSV), so the key order is
/// the same for every envelope.
struct Envelope {
  Params row_parameters;  // appended to the request parameters
  std::optional<cplx> value;
  std::optional<double> err_bound;
  std::optional<std::string> identity;
  std::optional<double> residual;
  std::optional<double> tolerance;
  std::optional<bool> pass;
  std::optional<std::size_t> terms_used;
  double wall_time_ms = 0.0;
  std::optional<ErrorInfo> error;
};

Json envelope_json(const CommandRequest& request, const Envelope& envelope);

/// Serializes with floating-point numbers at 17 significant digits.
std::string dump_json(const Json& value);

/// "%.17g", or "nan"/"inf" spelled out for non-finite input.
std::string format_number(double x);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& text);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

const std::vector<std::string>& envelope_csv_header();
std::vector<std::string> envelope_csv_row(const CommandRequest& request,
                                          const Envelope& envelope);

}  // namespace ezv::cli
