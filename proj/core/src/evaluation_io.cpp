#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uncommon/evaluation.hpp"

namespace uncommon {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

AnnotationSet annotation_from_json(const nlohmann::json& j, const fs::path& name) {
  try {
    AnnotationSet set;
    set.image_id = j.at("image_id").get<std::string>();
    for (const auto& f : j.at("features")) {
      Feature feature;
      feature.x = f.at("x").get<int>();
      feature.y = f.at("y").get<int>();
      feature.label = f.value("label", std::string{});
      set.features.push_back(std::move(feature));
    }
    return set;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(name.string(), std::string("invalid annotation document (") + e.what() + ")");
  }
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open annotation file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<AnnotationSet> parse_annotation_file(const fs::path& path) {
  const std::string text = read_text(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string(), std::string("malformed JSON (") + e.what() + ")");
  }
  std::vector<AnnotationSet> out;
  if (doc.is_array()) {
    for (const auto& item : doc) out.push_back(annotation_from_json(item, path));
  } else {
    out.push_back(annotation_from_json(doc, path));
  }
  return out;
}

ordered_json counts_json(const ConcurrenceCounts& c) {
  return ordered_json{{"tp", c.true_positives}, {"fp", c.false_positives}, {"fn", c.false_negatives}};
}

ordered_json rates_json(const std::optional<ConcurrenceRates>& r) {
  if (!r) return nullptr;
  return ordered_json{{"tpr", r->tpr}, {"fpr", r->fpr}, {"fnr", r->fnr}};
}

}  // namespace

AnnotationSet parse_annotation(const std::string& json_text, const fs::path& name) {
  try {
    return annotation_from_json(nlohmann::json::parse(json_text), name);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(name.string(), std::string("malformed JSON (") + e.what() + ")");
  }
}

std::vector<AnnotationSet> load_annotations(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<AnnotationSet> out;
    for (const auto& f : files) {
      auto sets = parse_annotation_file(f);
      std::move(sets.begin(), sets.end(), std::back_inserter(out));
    }
    return out;
  }
  if (!fs::exists(path, ec)) throw IoError(path.string(), "annotation path does not exist");
  return parse_annotation_file(path);
}

std::string report_to_json(const ConcurrenceReport& report) {
  ordered_json images = ordered_json::array();
  for (const auto& img : report.images) {
    images.push_back(ordered_json{
        {"image_id", img.image_id}, {"counts", counts_json(img.counts)}, {"rates", rates_json(img.rates)}});
  }
  ordered_json doc{
      {"match_radius", report.match_radius},
      {"images", std::move(images)},
      {"aggregate",
       ordered_json{{"image_count", report.images.size()},
                    {"counts", counts_json(report.total)},
                    {"rates", rates_json(report.rates)},
                    {"mean_per_image",
                     ordered_json{{"tp", report.mean_true_positives()},
                                  {"fp", report.mean_false_positives()},
                                  {"fn", report.mean_false_negatives()}}}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace uncommon
