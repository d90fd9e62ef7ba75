#pragma once

#include <string>
#include <string_view>

#include "augtwist/configspace.hpp"

namespace augtwist {

enum class TraceFormat { Csv, Json };

/// "csv" or "json". Throws std::invalid_argument otherwise.
TraceFormat parse_trace_format(std::string_view name);

/// Shortest decimal that reads back to the same double.
std::string format_number(double x);

/// Header u1,u2,phi1,phi2,psi1,psi2,zeta,kappa1,kappa2,o1a,o1b,o2a,o2b and
/// one row per sample.
std::string trace_csv(const TraceCurve& t);

/// Object with "mode" metadata, the endpoint flags and "samples", an
/// array of records keyed by crease name.
std::string trace_json(const TraceCurve& t);
TraceCurve parse_trace_json(std::string_view text);

/// File variants. Throw std::runtime_error naming the path.
void export_trace(const TraceCurve& t, const std::string& path, TraceFormat format);
TraceCurve import_trace_json(const std::string& path);

}  // namespace augtwist
