#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uncommon/saliency.hpp"

namespace uncommon {

struct Feature {
  int x = 0;
  int y = 0;
  std::string label;
};

// Human-annotated interesting features for one image.
struct AnnotationSet {
  std::string image_id;
  std::vector<Feature> features;
};

// Throws ContractError if any feature lies outside width x height.
void check_bounds(const AnnotationSet& truth, int width, int height);

struct ConcurrenceCounts {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;

  ConcurrenceCounts& operator+=(const ConcurrenceCounts& o) noexcept {
    true_positives += o.true_positives;
    false_positives += o.false_positives;
    false_negatives += o.false_negatives;
    return *this;
  }
  friend bool operator==(const ConcurrenceCounts&, const ConcurrenceCounts&) = default;
};

struct MatchResult {
  ConcurrenceCounts counts;
  // pairing[i] is the feature index matched by prediction i, if any.
  std::vector<std::optional<std::size_t>> pairing;
};

// Each prediction matches its nearest feature within match_radius
// (inclusive; ties go to the lower feature index). Several predictions may
// match the same feature and each counts as a true positive.
MatchResult match_points(std::span<const InterestPoint> predicted, const AnnotationSet& truth, double match_radius);

// All three rates share the TP + FP denominator, so fnr can exceed 1.
struct ConcurrenceRates {
  double tpr = 0.0;
  double fpr = 0.0;
  double fnr = 0.0;
};

// Throws UndefinedRatesError when TP + FP = 0.
ConcurrenceRates compute_rates(const ConcurrenceCounts& counts);

struct ImageConcurrence {
  std::string image_id;
  ConcurrenceCounts counts;
  std::optional<ConcurrenceRates> rates;  // empty when the image had no predictions
};

struct ConcurrenceReport {
  double match_radius = 0.0;
  std::vector<ImageConcurrence> images;
  ConcurrenceCounts total;
  std::optional<ConcurrenceRates> rates;

  // Per-image averages of TP, FP and FN.
  double mean_true_positives() const noexcept;
  double mean_false_positives() const noexcept;
  double mean_false_negatives() const noexcept;
};

ImageConcurrence score_image(std::span<const InterestPoint> predicted, const AnnotationSet& truth, double match_radius);

// Sums per-image counts into the aggregate block.
ConcurrenceReport aggregate(std::vector<ImageConcurrence> images, double match_radius);

// "tpr=68% fpr=32% fnr=32%" (round half up to whole percent).
std::string format_rates(const ConcurrenceRates& rates);

// "TP=2.2 FP=1.0 FN=1.0" per-image means at one decimal.
std::string format_means(const ConcurrenceReport& report);

// Annotation files: {"image_id": str, "features": [{"x", "y", "label"}]}.
// A file may also hold a JSON array of such objects; a directory is read
// as every *.json inside it, in filename order.
std::vector<AnnotationSet> load_annotations(const std::filesystem::path& path);
AnnotationSet parse_annotation(const std::string& json_text, const std::filesystem::path& name);

// Stable-field-order JSON rendering of a report.
std::string report_to_json(const ConcurrenceReport& report);

}  // namespace uncommon
