#include "uncommon/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace uncommon {

void check_bounds(const AnnotationSet& truth, int width, int height) {
  for (const auto& f : truth.features) {
    if (f.x < 0 || f.y < 0 || f.x >= width || f.y >= height)
      throw ContractError("annotation '" + f.label + "' at (" + std::to_string(f.x) + ", " + std::to_string(f.y) +
                          ") of image '" + truth.image_id + "' lies outside " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
}

MatchResult match_points(std::span<const InterestPoint> predicted, const AnnotationSet& truth, double match_radius) {
  if (!(match_radius > 0.0)) throw ContractError("match radius must be positive");
  MatchResult result;
  std::vector<bool> hit(truth.features.size(), false);
  const double r2 = match_radius * match_radius;
  for (const auto& p : predicted) {
    std::optional<std::size_t> best;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < truth.features.size(); ++i) {
      const double dx = p.x - truth.features[i].x;
      const double dy = p.y - truth.features[i].y;
      const double d2 = dx * dx + dy * dy;
      if (d2 <= r2 && d2 < best_d2) {
        best = i;
        best_d2 = d2;
      }
    }
    result.pairing.push_back(best);
    if (best) {
      ++result.counts.true_positives;
      hit[*best] = true;
    } else {
      ++result.counts.false_positives;
    }
  }
  result.counts.false_negatives = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), false));
  return result;
}

ConcurrenceRates compute_rates(const ConcurrenceCounts& counts) {
  const std::size_t denom = counts.true_positives + counts.false_positives;
  if (denom == 0) throw UndefinedRatesError("rates are undefined without predictions (TP + FP = 0)");
  const double d = static_cast<double>(denom);
  // fpr is FP / (TP + FP) directly, not 1 - tpr.
  return {static_cast<double>(counts.true_positives) / d, static_cast<double>(counts.false_positives) / d,
          static_cast<double>(counts.false_negatives) / d};
}

ImageConcurrence score_image(std::span<const InterestPoint> predicted, const AnnotationSet& truth, double match_radius) {
  ImageConcurrence out;
  out.image_id = truth.image_id;
  out.counts = match_points(predicted, truth, match_radius).counts;
  if (out.counts.true_positives + out.counts.false_positives > 0) out.rates = compute_rates(out.counts);
  return out;
}

ConcurrenceReport aggregate(std::vector<ImageConcurrence> images, double match_radius) {
  ConcurrenceReport report;
  report.match_radius = match_radius;
  report.images = std::move(images);
  for (const auto& img : report.images) report.total += img.counts;
  if (report.total.true_positives + report.total.false_positives > 0) report.rates = compute_rates(report.total);
  return report;
}

namespace {

double per_image(std::size_t total, std::size_t n) {
  return n == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(n);
}

long percent(double ratio) { return std::lround(ratio * 100.0); }

}  // namespace

double ConcurrenceReport::mean_true_positives() const noexcept {
  return per_image(total.true_positives, images.size());
}
double ConcurrenceReport::mean_false_positives() const noexcept {
  return per_image(total.false_positives, images.size());
}
double ConcurrenceReport::mean_false_negatives() const noexcept {
  return per_image(total.false_negatives, images.size());
}

std::string format_rates(const ConcurrenceRates& rates) {
  return "tpr=" + std::to_string(percent(rates.tpr)) + "% fpr=" + std::to_string(percent(rates.fpr)) +
         "% fnr=" + std::to_string(percent(rates.fnr)) + "%";
}

std::string format_means(const ConcurrenceReport& report) {
  // Round half up at one decimal; 69 / 32 = 2.156 renders as 2.2.
  const auto one_decimal = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", std::floor(v * 10.0 + 0.5) / 10.0);
    return std::string(buf);
  };
  return "TP=" + one_decimal(report.mean_true_positives()) + " FP=" + one_decimal(report.mean_false_positives()) +
         " FN=" + one_decimal(report.mean_false_negatives());
}

}  // namespace uncommon
