#include "augtwist/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace augtwist {

using Json = nlohmann::ordered_json;

namespace {

Track parse_track(std::string_view s) {
  for (Track t : {Track::A, Track::B, Track::C, Track::FoldLine}) {
    if (track_name(t) == s) return t;
  }
  throw std::invalid_argument("unknown track: " + std::string(s));
}

Classification parse_classification(std::string_view s) {
  for (Classification c : {Classification::NonDegenerate, Classification::DegenerateZetaZero,
                           Classification::DisconnectedFromOrigin, Classification::FoldInHalf}) {
    if (classification_name(c) == s) return c;
  }
  throw std::invalid_argument("unknown classification: " + std::string(s));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

TraceFormat parse_trace_format(std::string_view name) {
  if (name == "csv") return TraceFormat::Csv;
  if (name == "json") return TraceFormat::Json;
  throw std::invalid_argument("unknown trace format: " + std::string(name));
}

std::string format_number(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x == 0.0 ? 0.0 : x);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

std::string trace_csv(const TraceCurve& t) {
  std::string out;
  const auto& names = crease_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  out += '\n';
  for (const auto& c : t.samples) {
    for (std::size_t i = 0; i < kCreaseCount; ++i) {
      if (i) out += ',';
      out += format_number(c.angles[i]);
    }
    out += '\n';
  }
  return out;
}

std::string trace_json(const TraceCurve& t) {
  Json mode = {
      {"name", t.mode.name()},
      {"case", t.mode.case_spec.name()},
      {"track", track_name(t.mode.track)},
      {"variant", t.mode.variant},
      {"direction", t.mode.direction},
      {"classification", classification_name(t.mode.classification)},
  };
  Json samples = Json::array();
  for (const auto& c : t.samples) {
    Json rec = Json::object();
    for (std::size_t i = 0; i < kCreaseCount; ++i) rec[std::string(crease_names()[i])] = c.angles[i];
    samples.push_back(std::move(rec));
  }
  Json doc = {
      {"mode", std::move(mode)},
      {"reaches_origin", t.reaches_origin},
      {"reaches_flat", t.reaches_flat},
      {"stop_reason", t.stop_reason},
      {"nominal_step", t.nominal_step},
      {"samples", std::move(samples)},
  };
  return doc.dump(1) + "\n";
}

TraceCurve parse_trace_json(std::string_view text) {
  const Json doc = Json::parse(text);
  TraceCurve t;
  const Json& mode = doc.at("mode");
  t.mode.case_spec = CaseSpec::parse(mode.at("case").get<std::string>());
  t.mode.track = parse_track(mode.at("track").get<std::string>());
  t.mode.variant = mode.at("variant").get<int>();
  t.mode.direction = mode.at("direction").get<int>();
  t.mode.classification = parse_classification(mode.at("classification").get<std::string>());
  t.reaches_origin = doc.at("reaches_origin").get<bool>();
  t.reaches_flat = doc.at("reaches_flat").get<bool>();
  t.stop_reason = doc.at("stop_reason").get<std::string>();
  t.nominal_step = doc.at("nominal_step").get<double>();
  for (const Json& rec : doc.at("samples")) {
    Configuration c;
    for (std::size_t i = 0; i < kCreaseCount; ++i) c.angles[i] = rec.at(std::string(crease_names()[i])).get<double>();
    t.samples.push_back(c);
  }
  return t;
}

void export_trace(const TraceCurve& t, const std::string& path, TraceFormat format) {
  write_file(path, format == TraceFormat::Csv ? trace_csv(t) : trace_json(t));
}

TraceCurve import_trace_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_trace_json(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace augtwist
