#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <thread>
#include <variant>

#include "uncommon/errors.hpp"
#include "uncommon/imageio.hpp"
#include "uncommon_app/app.hpp"

namespace uncommon::app {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void write_json(const fs::path& path, const ordered_json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError(path.string(), "write failed");
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError(dir.string(), "cannot create output directory");
}

std::uint16_t scaled16(double v, double scale) {
  return static_cast<std::uint16_t>(std::clamp(std::lround(v * scale), 0L, 65535L));
}

template <typename T>
ordered_json dump_map(const Grid<T>& grid, double scale, const fs::path& dir, const std::string& name) {
  Grid<std::uint16_t> out(grid.width(), grid.height());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.values()[i] = scaled16(static_cast<double>(grid.values()[i]), scale);
  save_pgm16(out, dir / name);
  return ordered_json{{"file", name}, {"scale", scale}};
}

// 16-bit dumps of every intermediate. Interest maps use a fixed scale so
// integer raw values stay exact: stored = round(value * scale).
ordered_json write_debug_maps(const Analysis& a, const PipelineConfig& config, const fs::path& dir) {
  ordered_json debug = ordered_json::object();
  const double interest_scale = std::floor(65535.0 / (3.0 * kMaxUncommonClasses));
  for (std::size_t c = 0; c < 3; ++c) {
    const std::string name = kChannelNames[c];
    const RasterImage* plane = c == 0 ? &a.planes.hue : c == 1 ? &a.planes.saturation : &a.planes.intensity;
    debug[name + "_plane"] = dump_map(plane->plane(0), 65535.0, dir, name + "_plane.pgm");
    debug[name + "_segmentation"] = dump_map(a.segmentations[c].labels, 1.0, dir, name + "_segmentation.pgm");
    debug[name + "_uncommon"] = dump_map(a.uncommon[c].values, 1.0, dir, name + "_uncommon.pgm");

    // Smoothed co-occurrence histogram, normalised to its own maximum.
    const QuantizedPlane q = quantize(*plane, config.quantization_bins);
    const CooccurrenceHistogram h = build_cooccurrence(q, config.quantization_bins);
    if (h.total_pairs > 0) {
      const auto peaks = find_histogram_peaks(h, config.histogram_sigma, config.min_peak_fraction);
      const double peak = *std::max_element(peaks.smoothed.values().begin(), peaks.smoothed.values().end());
      debug[name + "_histogram"] = dump_map(peaks.smoothed, peak > 0.0 ? 65535.0 / peak : 1.0, dir,
                                            name + "_histogram.pgm");
    }
  }
  debug["interest_raw"] = dump_map(a.interest.raw, interest_scale, dir, "interest_raw.pgm");
  debug["interest_blurred"] = dump_map(a.interest.blurred, interest_scale, dir, "interest_blurred.pgm");
  return debug;
}

}  // namespace

bool is_supported_image(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".ppm" || ext == ".png";
}

AnalysisRecord analyze_file(const fs::path& image, const PipelineConfig& config, const fs::path& output_dir,
                            const AnalyzeOptions& options) {
  config.validate();
  if (options.overlay_format != "png" && options.overlay_format != "ppm")
    throw ContractError("overlay format must be 'png' or 'ppm'");

  const auto start = Clock::now();
  const RasterImage loaded = load_image(image);
  const RasterImage frame =
      preprocess(loaded, config.downsample_factor, config.crop_width, config.crop_height);
  const double load_ms = elapsed_ms(start);

  const auto analyze_start = Clock::now();
  const Analysis analysis = analyze(frame, config);
  const double analyze_ms = elapsed_ms(analyze_start);

  AnalysisRecord record;
  record.image_id = image.stem().string();
  record.source = image.filename().string();
  record.width = frame.width();
  record.height = frame.height();
  record.config = config;
  record.points = analysis.points;
  for (std::size_t c = 0; c < 3; ++c) record.populations[c] = analysis.segmentations[c].populations;
  record.warnings = analysis.warnings;

  ensure_directory(output_dir);
  save_image(render_overlay(frame, analysis.points), output_dir / ("overlay." + options.overlay_format));
  if (options.debug_maps) record.debug = write_debug_maps(analysis, config, output_dir);

  record.timing = {load_ms, analyze_ms, elapsed_ms(start)};
  write_json(output_dir / "record.json", record_to_json(record));
  return record;
}

BatchResult run_batch(const fs::path& dir, const PipelineConfig& config, const fs::path& output_dir,
                      const AnalyzeOptions& options, int jobs) {
  config.validate();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError(dir.string(), "not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && is_supported_image(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
  if (files.empty()) throw ContractError("no supported images (.ppm, .png) in " + dir.string());

  ensure_directory(output_dir);

  // Outcome slot per input file, so results land in input order.
  using Outcome = std::variant<std::monostate, AnalysisRecord, BatchFailure>;
  std::vector<Outcome> outcomes(files.size());
  std::set<std::string> seen;
  std::vector<bool> duplicate(files.size(), false);
  for (std::size_t i = 0; i < files.size(); ++i)
    duplicate[i] = !seen.insert(files[i].stem().string()).second;

  const auto process = [&](std::size_t i) {
    const auto& file = files[i];
    if (duplicate[i]) {
      outcomes[i] = BatchFailure{file.filename().string(), "contract_violation",
                                 "duplicate image_id '" + file.stem().string() + "'"};
      return;
    }
    try {
      outcomes[i] = analyze_file(file, config, output_dir / file.stem(), options);
    } catch (const Error& e) {
      outcomes[i] = BatchFailure{file.filename().string(), e.kind(), e.what()};
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, files.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < files.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) process(i);
      });
  }

  BatchResult result;
  result.image_count = files.size();
  for (auto& o : outcomes) {
    if (auto* r = std::get_if<AnalysisRecord>(&o)) result.records.push_back(std::move(*r));
    if (auto* f = std::get_if<BatchFailure>(&o)) result.failures.push_back(std::move(*f));
  }

  ordered_json all = ordered_json::array();
  for (const auto& r : result.records) all.push_back(record_to_json(r));
  write_json(output_dir / "records.json", all);
  write_json(output_dir / "summary.json", batch_summary_to_json(result));
  return result;
}

ordered_json batch_summary_payload(const BatchResult& result) {
  ordered_json failed = ordered_json::array();
  for (const auto& f : result.failures)
    failed.push_back(ordered_json{{"file", f.file}, {"kind", f.kind}, {"message", f.message}});
  ordered_json ids = ordered_json::array();
  for (const auto& r : result.records) ids.push_back(r.image_id);
  return ordered_json{
      {"image_count", result.image_count},
      {"processed", result.records.size()},
      {"failed_count", result.failures.size()},
      {"records", std::move(ids)},
      {"failed", std::move(failed)},
  };
}

ordered_json batch_summary_to_json(const BatchResult& result) {
  ordered_json doc = batch_summary_payload(result);
  double total = 0.0;
  double worst = 0.0;
  for (const auto& r : result.records) {
    total += r.timing.total_ms;
    worst = std::max(worst, r.timing.total_ms);
  }
  const double mean = result.records.empty() ? 0.0 : total / static_cast<double>(result.records.size());
  doc["timing"] = ordered_json{{"total_ms", total},
                               {"mean_ms", mean},
                               {"max_ms", worst},
                               {"budget_ms", kBudgetMs},
                               {"within_budget", worst <= kBudgetMs}};
  return doc;
}

ConcurrenceReport run_evaluate(const fs::path& records_path, const fs::path& annotations_path,
                               const PipelineConfig& config) {
  if (!(config.match_radius > 0.0)) throw ContractError("match radius must be positive");
  const auto records = load_records(records_path);
  const auto annotations = load_annotations(annotations_path);

  std::map<std::string, const AnnotationSet*> by_id;
  for (const auto& a : annotations)
    if (!by_id.emplace(a.image_id, &a).second) throw ContractError("duplicate annotation for image_id '" + a.image_id + "'");

  std::set<std::string> record_ids;
  std::vector<std::string> unmatched;
  for (const auto& r : records) {
    if (!record_ids.insert(r.image_id).second) throw ContractError("duplicate record for image_id '" + r.image_id + "'");
    if (!by_id.count(r.image_id)) unmatched.push_back(r.image_id + " (no annotation)");
  }
  for (const auto& a : annotations)
    if (!record_ids.count(a.image_id)) unmatched.push_back(a.image_id + " (no record)");
  if (!unmatched.empty()) {
    std::string msg = "unmatched image_ids:";
    for (const auto& id : unmatched) msg += " " + id;
    throw ContractError(msg);
  }

  std::vector<ImageConcurrence> scored;
  for (const auto& r : records) {
    const AnnotationSet& truth = *by_id.at(r.image_id);
    check_bounds(truth, r.width, r.height);
    scored.push_back(score_image(r.points.blurred.points, truth, config.match_radius));
  }
  return aggregate(std::move(scored), config.match_radius);
}

}  // namespace uncommon::app
