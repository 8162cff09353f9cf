#include <fstream>
#include <sstream>

#include "uncommon/errors.hpp"
#include "uncommon_app/app.hpp"

namespace uncommon::app {

namespace {

ordered_json points_json(const PointList& list, bool reported) {
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < list.points.size(); ++i) {
    const auto& p = list.points[i];
    points.push_back(ordered_json{{"rank", i + 1}, {"x", p.x}, {"y", p.y}, {"score", p.score}});
  }
  return ordered_json{{"reported", reported}, {"degenerate", list.degenerate}, {"points", std::move(points)}};
}

PointList points_from_json(const nlohmann::json& j) {
  PointList list;
  list.degenerate = j.at("degenerate").get<bool>();
  for (const auto& p : j.at("points"))
    list.points.push_back({p.at("x").get<int>(), p.at("y").get<int>(), p.at("score").get<double>()});
  return list;
}

}  // namespace

ordered_json config_to_json(const PipelineConfig& c) {
  return ordered_json{
      {"downsample_factor", c.downsample_factor},
      {"crop_width", c.crop_width},
      {"crop_height", c.crop_height},
      {"quantization_bins", c.quantization_bins},
      {"histogram_sigma", c.histogram_sigma},
      {"min_peak_fraction", c.min_peak_fraction},
      {"max_classes", c.max_classes},
      {"blur_width", c.blur_width},
      {"top_k", c.top_k},
      {"suppression_radius", c.suppression_radius},
      {"match_radius", c.match_radius},
  };
}

PipelineConfig config_from_json(const nlohmann::json& j) {
  PipelineConfig c;
  c.downsample_factor = j.at("downsample_factor").get<int>();
  c.crop_width = j.at("crop_width").get<int>();
  c.crop_height = j.at("crop_height").get<int>();
  c.quantization_bins = j.at("quantization_bins").get<int>();
  c.histogram_sigma = j.at("histogram_sigma").get<double>();
  c.min_peak_fraction = j.at("min_peak_fraction").get<double>();
  c.max_classes = j.at("max_classes").get<int>();
  c.blur_width = j.at("blur_width").get<double>();
  c.top_k = j.at("top_k").get<int>();
  c.suppression_radius = j.at("suppression_radius").get<double>();
  c.match_radius = j.at("match_radius").get<double>();
  return c;
}

ordered_json record_payload(const AnalysisRecord& r) {
  ordered_json channels = ordered_json::array();
  for (std::size_t c = 0; c < 3; ++c) {
    const auto& pops = r.populations[c];
    channels.push_back(ordered_json{
        {"name", kChannelNames[c]},
        {"class_count", pops.size()},
        {"retained_classes", std::min<std::size_t>(pops.size(), static_cast<std::size_t>(r.config.max_classes))},
        {"populations", pops},
    });
  }
  ordered_json doc{
      {"image_id", r.image_id},
      {"source", r.source},
      {"width", r.width},
      {"height", r.height},
      {"config", config_to_json(r.config)},
      {"suppression_radius", r.points.suppression_radius},
      {"blurred_points", points_json(r.points.blurred, true)},
      {"raw_points", points_json(r.points.raw, false)},
      {"channels", std::move(channels)},
      {"warnings", r.warnings},
  };
  if (r.debug) doc["debug"] = *r.debug;
  return doc;
}

ordered_json record_to_json(const AnalysisRecord& r) {
  ordered_json doc = record_payload(r);
  doc["timing"] = ordered_json{
      {"load_ms", r.timing.load_ms}, {"analyze_ms", r.timing.analyze_ms}, {"total_ms", r.timing.total_ms}};
  return doc;
}

AnalysisRecord record_from_json(const nlohmann::json& j) {
  AnalysisRecord r;
  r.image_id = j.at("image_id").get<std::string>();
  r.source = j.value("source", std::string{});
  r.width = j.at("width").get<int>();
  r.height = j.at("height").get<int>();
  r.config = config_from_json(j.at("config"));
  r.points.suppression_radius = j.value("suppression_radius", r.config.suppression_radius);
  r.points.blurred = points_from_json(j.at("blurred_points"));
  r.points.raw = points_from_json(j.at("raw_points"));
  if (j.contains("channels")) {
    const auto& channels = j.at("channels");
    for (std::size_t c = 0; c < 3 && c < channels.size(); ++c)
      r.populations[c] = channels[c].at("populations").get<std::vector<std::size_t>>();
  }
  if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("debug")) r.debug = ordered_json(j.at("debug"));
  if (j.contains("timing")) {
    const auto& t = j.at("timing");
    r.timing = {t.value("load_ms", 0.0), t.value("analyze_ms", 0.0), t.value("total_ms", 0.0)};
  }
  return r;
}

std::vector<AnalysisRecord> load_records(const fs::path& path) {
  std::error_code ec;
  const fs::path file = fs::is_directory(path, ec) ? path / "records.json" : path;
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError(file.string(), "cannot open records file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    std::vector<AnalysisRecord> out;
    if (doc.is_array()) {
      for (const auto& item : doc) out.push_back(record_from_json(item));
    } else {
      out.push_back(record_from_json(doc));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(file.string(), std::string("invalid records document (") + e.what() + ")");
  }
}

ordered_json error_json(const std::exception& e) {
  ordered_json err{{"kind", "error"}, {"message", e.what()}};
  if (const auto* ue = dynamic_cast<const Error*>(&e)) err["kind"] = ue->kind();
  if (const auto* io = dynamic_cast<const IoError*>(&e)) err["path"] = io->path();
  if (const auto* fe = dynamic_cast<const FormatError*>(&e)) err["path"] = fe->path();
  return ordered_json{{"error", std::move(err)}};
}

}  // namespace uncommon::app
