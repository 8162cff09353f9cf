#include "uncommon/config.hpp"

#include <string>

#include "uncommon/errors.hpp"

namespace uncommon {

namespace {

template <typename T>
void require_positive(T value, const char* name) {
  if (!(value > T{0})) throw ContractError(std::string("config field '") + name + "' must be positive");
}

}  // namespace

void PipelineConfig::validate() const {
  require_positive(downsample_factor, "downsample_factor");
  require_positive(crop_width, "crop_width");
  require_positive(crop_height, "crop_height");
  require_positive(quantization_bins, "quantization_bins");
  require_positive(histogram_sigma, "histogram_sigma");
  require_positive(min_peak_fraction, "min_peak_fraction");
  require_positive(max_classes, "max_classes");
  require_positive(blur_width, "blur_width");
  require_positive(top_k, "top_k");
  require_positive(suppression_radius, "suppression_radius");
  require_positive(match_radius, "match_radius");
  if (quantization_bins < 2) throw ContractError("config field 'quantization_bins' must be at least 2");
  if (max_classes > kMaxUncommonClasses)
    throw ContractError("config field 'max_classes' must not exceed " + std::to_string(kMaxUncommonClasses));
}

}  // namespace uncommon
