#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "uncommon/errors.hpp"
#include "uncommon_app/app.hpp"

namespace uncommon::app {

namespace {

void add_config_flags(CLI::App& cmd, PipelineConfig& c) {
  cmd.add_option("--downsample-factor", c.downsample_factor, "Block-average downsampling factor")->capture_default_str();
  cmd.add_option("--crop-width", c.crop_width, "Centered crop width after downsampling")->capture_default_str();
  cmd.add_option("--crop-height", c.crop_height, "Centered crop height after downsampling")->capture_default_str();
  cmd.add_option("--quantization-bins", c.quantization_bins, "Gray levels per channel")->capture_default_str();
  cmd.add_option("--histogram-sigma", c.histogram_sigma, "Co-occurrence histogram smoothing (bins)")
      ->capture_default_str();
  cmd.add_option("--min-peak-fraction", c.min_peak_fraction, "Minimum histogram peak, fraction of all pairs")
      ->capture_default_str();
  cmd.add_option("--max-classes", c.max_classes, "Classes ranked in the uncommon map (<= 8)")->capture_default_str();
  cmd.add_option("--blur-width", c.blur_width, "Interest-map blur width B (sigma = B/2)")->capture_default_str();
  cmd.add_option("--top-k", c.top_k, "Interest points per scale")->capture_default_str();
  cmd.add_option("--suppression-radius", c.suppression_radius, "Minimum spacing between points (px)")
      ->capture_default_str();
  cmd.add_option("--match-radius", c.match_radius, "Concurrence match radius (px)")->capture_default_str();
}

std::string default_output_dir() {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return kDefaultOutputDir;
}

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncommon-map interest point detection for field imagery"};
  app.require_subcommand(1);

  PipelineConfig config;
  AnalyzeOptions options;
  std::string output_dir = default_output_dir();

  std::string image_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one image");
  analyze_cmd->add_option("image", image_path, "PPM or PNG image")->required();
  analyze_cmd->add_option("-o,--output-dir", output_dir, "Output directory (env " + std::string(kOutputDirEnv) + ")");
  analyze_cmd->add_flag("--debug-maps", options.debug_maps, "Also write intermediate maps as PGM");
  analyze_cmd->add_option("--overlay-format", options.overlay_format, "png or ppm")->capture_default_str();
  add_config_flags(*analyze_cmd, config);

  std::string batch_dir;
  int jobs = 1;
  auto* batch_cmd = app.add_subcommand("batch", "Analyze every image in a directory");
  batch_cmd->add_option("directory", batch_dir, "Directory of PPM/PNG images")->required();
  batch_cmd->add_option("-o,--output-dir", output_dir, "Output directory (env " + std::string(kOutputDirEnv) + ")");
  batch_cmd->add_option("-j,--jobs", jobs, "Images processed concurrently")->capture_default_str();
  batch_cmd->add_flag("--debug-maps", options.debug_maps, "Also write intermediate maps as PGM");
  batch_cmd->add_option("--overlay-format", options.overlay_format, "png or ppm")->capture_default_str();
  add_config_flags(*batch_cmd, config);

  std::string records_path;
  std::string annotations_path;
  std::string report_path;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score interest points against annotations");
  eval_cmd->add_option("records", records_path, "record.json, records array, or batch output directory")->required();
  eval_cmd->add_option("annotations", annotations_path, "Annotation JSON file or directory")->required();
  eval_cmd->add_option("--report", report_path, "Report path (default <output-dir>/report.json)");
  eval_cmd->add_option("-o,--output-dir", output_dir, "Output directory (env " + std::string(kOutputDirEnv) + ")");
  eval_cmd->add_option("--match-radius", config.match_radius, "Concurrence match radius (px)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*analyze_cmd) {
      const auto record = analyze_file(image_path, config, output_dir, options);
      for (std::size_t i = 0; i < record.points.blurred.points.size(); ++i) {
        const auto& p = record.points.blurred.points[i];
        out << (i + 1) << ' ' << p.x << ' ' << p.y << ' ' << format_score(p.score) << '\n';
      }
      if (record.points.blurred.degenerate) out << "# degenerate: interest map is constant\n";
      for (const auto& w : record.warnings) err << "warning: " << w << '\n';
      return 0;
    }
    if (*batch_cmd) {
      const auto result = run_batch(batch_dir, config, output_dir, options, jobs);
      const auto summary = batch_summary_to_json(result);
      out << "processed " << result.records.size() << " of " << result.image_count << " images, mean "
          << format_score(summary["timing"]["mean_ms"].get<double>()) << " ms\n";
      for (const auto& f : result.failures) err << "failed: " << f.file << ": " << f.message << '\n';
      return result.records.empty() ? 1 : 0;
    }
    if (*eval_cmd) {
      const auto report = run_evaluate(records_path, annotations_path, config);
      const fs::path target = report_path.empty() ? fs::path(output_dir) / "report.json" : fs::path(report_path);
      if (target.has_parent_path()) fs::create_directories(target.parent_path());
      std::ofstream file(target, std::ios::binary);
      if (!file) throw IoError(target.string(), "cannot open for writing");
      file << report_to_json(report);
      if (!file) throw IoError(target.string(), "write failed");
      if (!report.rates) throw UndefinedRatesError("rates are undefined without predictions (TP + FP = 0)");
      out << format_rates(*report.rates) << '\n';
      out << "per-image means over " << report.images.size() << " images: " << format_means(report) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << error_json(e).dump() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace uncommon::app
