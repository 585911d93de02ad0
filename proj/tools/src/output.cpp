#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace ezv::cli {

namespace {

Json number_or_null(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return nullptr;
  return *x;
}

Json complex_json(cplx z) {
  Json out = Json::object();
  out["re"] = z.real();
  out["im"] = z.imag();
  return out;
}

Json error_json(const ErrorInfo& info) {
  Json out = Json::object();
  out["kind"] = info.kind;
  out["message"] = info.message;
  if (info.pole_index) {
    out["j"] = info.pole_index->first;
    out["l"] = info.pole_index->second;
  }
  if (info.partial) {
    Json partial = Json::object();
    partial["value"] = complex_json(info.partial->value);
    partial["err_bound"] = number_or_null(info.partial->err_bound);
    partial["terms_used"] = info.partial->terms_used;
    out["partial"] = std::move(partial);
  }
  return out;
}

void dump_into(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t n = 0; n < value.size(); ++n) {
        if (n) out += ',';
        dump_into(value[n], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      out += std::isfinite(x) ? format_number(x) : "null";
      break;
    }
    default:
      out += value.dump();
  }
}

std::string params_text(const Params& a, const Params& b) {
  std::string out;
  for (const auto* list : {&a, &b}) {
    for (const auto& [key, val] : *list) {
      if (!out.empty()) out += ';';
      out += key + '=' + val;
    }
  }
  return out;
}

template <class T>
std::string cell(const std::optional<T>& x) {
  if (!x) return {};
  if constexpr (std::is_same_v<T, bool>) {
    return *x ? "true" : "false";
  } else if constexpr (std::is_same_v<T, double>) {
    return format_number(*x);
  } else {
    return std::to_string(*x);
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

Json envelope_json(const CommandRequest& request, const Envelope& envelope) {
  Json params = Json::object();
  for (const auto& [key, val] : request.parameters) params[key] = val;
  for (const auto& [key, val] : envelope.row_parameters) params[key] = val;

  Json precision = Json::object();
  precision["epsilon"] = request.precision.epsilon;
  precision["max_terms"] = request.precision.max_terms;
  precision["lattice_radius"] = request.precision.lattice_radius;

  Json req = Json::object();
  req["subcommand"] = request.subcommand;
  req["target"] = request.target;
  req["parameters"] = std::move(params);
  req["precision"] = std::move(precision);
  req["format"] = request.format == OutputFormat::json ? "json" : "csv";

  Json out = Json::object();
  out["request"] = std::move(req);
  out["value"] = envelope.value ? complex_json(*envelope.value) : Json(nullptr);
  out["err_bound"] = number_or_null(envelope.err_bound);
  out["identity"] = envelope.identity ? Json(*envelope.identity) : Json(nullptr);
  out["residual"] = number_or_null(envelope.residual);
  out["tolerance"] = number_or_null(envelope.tolerance);
  out["pass"] = envelope.pass ? Json(*envelope.pass) : Json(nullptr);
  out["terms_used"] = envelope.terms_used ? Json(*envelope.terms_used) : Json(nullptr);
  out["wall_time_ms"] = envelope.wall_time_ms;
  out["error"] = envelope.error ? error_json(*envelope.error) : Json(nullptr);
  return out;
}

std::string dump_json(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t n = 0; n < fields.size(); ++n) {
    if (n) out << ',';
    out << csv_field(fields[n]);
  }
  out << "\r\n";
}

const std::vector<std::string>& envelope_csv_header() {
  static const std::vector<std::string> header{
      "subcommand", "target",   "parameters", "epsilon",  "max_terms",
      "lattice_radius", "value_re", "value_im", "err_bound", "identity",
      "residual",   "tolerance", "pass",      "terms_used", "wall_time_ms",
      "error_kind", "error_message"};
  return header;
}

std::vector<std::string> envelope_csv_row(const CommandRequest& request,
                                          const Envelope& envelope) {
  const auto& p = request.precision;
  return {request.subcommand,
          request.target,
          params_text(request.parameters, envelope.row_parameters),
          format_number(p.epsilon),
          std::to_string(p.max_terms),
          std::to_string(p.lattice_radius),
          envelope.value ? format_number(envelope.value->real()) : std::string{},
          envelope.value ? format_number(envelope.value->imag()) : std::string{},
          cell(envelope.err_bound),
          envelope.identity.value_or(""),
          cell(envelope.residual),
          cell(envelope.tolerance),
          cell(envelope.pass),
          cell(envelope.terms_used),
          format_number(envelope.wall_time_ms),
          envelope.error ? envelope.error->kind : std::string{},
          envelope.error ? envelope.error->message : std::string{}};
}

}  // namespace ezv::cli
