#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uncommon/config.hpp"
#include "uncommon/evaluation.hpp"
#include "uncommon/saliency.hpp"

namespace uncommon::app {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "UNCOMMON_OUTPUT_DIR";
inline constexpr const char* kDefaultOutputDir = "uncommon-out";
// Per-image processing budget checked by batch summaries.
inline constexpr double kBudgetMs = 1000.0;

struct AnalyzeOptions {
  bool debug_maps = false;
  std::string overlay_format = "png";  // "png" or "ppm"
};

struct Timing {
  double load_ms = 0.0;
  double analyze_ms = 0.0;
  double total_ms = 0.0;
};

// Everything needed to reproduce and score one analysis.
struct AnalysisRecord {
  std::string image_id;
  std::string source;  // file name only, so records don't depend on where the input lives
  int width = 0;       // analysis frame, after preprocessing
  int height = 0;
  PipelineConfig config;
  InterestPointSet points;
  std::array<std::vector<std::size_t>, 3> populations;
  std::vector<std::string> warnings;
  std::optional<ordered_json> debug;
  Timing timing;
};

ordered_json config_to_json(const PipelineConfig& config);
PipelineConfig config_from_json(const nlohmann::json& j);

// Deterministic part of a record (no timing block).
ordered_json record_payload(const AnalysisRecord& record);
// Payload plus the "timing" block, as written to record.json.
ordered_json record_to_json(const AnalysisRecord& record);
AnalysisRecord record_from_json(const nlohmann::json& j);

// Reads records from a record.json, a JSON array of records, or a batch
// output directory (its records.json).
std::vector<AnalysisRecord> load_records(const fs::path& path);

// Load, preprocess and analyze one image; writes record.json, the overlay
// and (optionally) debug maps into output_dir.
AnalysisRecord analyze_file(const fs::path& image, const PipelineConfig& config, const fs::path& output_dir,
                            const AnalyzeOptions& options = {});

struct BatchFailure {
  std::string file;
  std::string kind;
  std::string message;
};

struct BatchResult {
  std::size_t image_count = 0;
  std::vector<AnalysisRecord> records;  // input order
  std::vector<BatchFailure> failures;
};

bool is_supported_image(const fs::path& path);

// Analyzes every .ppm / .png file in `dir` in lexicographic order; each
// image writes into output_dir/<image_id>/. Writes records.json and
// summary.json into output_dir. `jobs` > 1 processes images concurrently
// with identical output. Throws ContractError if dir holds no image.
BatchResult run_batch(const fs::path& dir, const PipelineConfig& config, const fs::path& output_dir,
                      const AnalyzeOptions& options = {}, int jobs = 1);

ordered_json batch_summary_payload(const BatchResult& result);
ordered_json batch_summary_to_json(const BatchResult& result);

// Scores reported (blurred-scale) points against annotations. Throws
// ContractError naming any image_id present on only one side.
ConcurrenceReport run_evaluate(const fs::path& records_path, const fs::path& annotations_path,
                               const PipelineConfig& config);

// Machine-readable error document for a failed command.
ordered_json error_json(const std::exception& e);

// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uncommon::app
