#pragma once

namespace uncommon {

// Tunables for the whole pipeline. Defaults reproduce the field setup:
// x2 downsampling to a 192 x 144 frame, top-8 classes, B = 10, top 3 points.
struct PipelineConfig {
  int downsample_factor = 2;
  int crop_width = 192;
  int crop_height = 144;
  int quantization_bins = 64;
  double histogram_sigma = 1.0;
  double min_peak_fraction = 0.0001;
  int max_classes = 8;
  double blur_width = 10.0;
  int top_k = 3;
  double suppression_radius = 10.0;
  double match_radius = 10.0;

  // Throws ContractError unless every field is positive and
  // max_classes <= 8.
  void validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

constexpr int kMaxUncommonClasses = 8;

}  // namespace uncommon
