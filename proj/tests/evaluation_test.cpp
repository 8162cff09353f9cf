#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "uncommon/errors.hpp"
#include "uncommon/evaluation.hpp"

namespace uncommon {
namespace {

AnnotationSet truth_of(std::vector<Feature> features, std::string id = "img") {
  return AnnotationSet{std::move(id), std::move(features)};
}

TEST(MatchPoints, PerfectConcurrence) {
  const std::vector<InterestPoint> pred{{10, 10, 3}, {50, 50, 2}, {90, 20, 1}};
  const auto truth = truth_of({{12, 11, "a"}, {48, 53, "b"}, {90, 25, "c"}});
  const auto m = match_points(pred, truth, 10.0);
  EXPECT_EQ(m.counts, (ConcurrenceCounts{3, 0, 0}));
  EXPECT_EQ(m.pairing[0], 0u);
  EXPECT_EQ(m.pairing[1], 1u);
  EXPECT_EQ(m.pairing[2], 2u);
}

TEST(MatchPoints, DoubleCountingOnOneFeature) {
  const std::vector<InterestPoint> pred{{10, 10, 3}, {14, 10, 2}};
  const auto truth = truth_of({{12, 10, "contact"}, {80, 80, "nodule"}});
  const auto m = match_points(pred, truth, 10.0);
  EXPECT_EQ(m.counts, (ConcurrenceCounts{2, 0, 1}));
}

TEST(MatchPoints, TotalMiss) {
  const std::vector<InterestPoint> pred{{0, 0, 3}, {1, 1, 2}, {2, 2, 1}};
  const auto truth = truth_of({{100, 100, "a"}, {120, 60, "b"}});
  EXPECT_EQ(match_points(pred, truth, 10.0).counts, (ConcurrenceCounts{0, 3, 2}));
}

TEST(MatchPoints, NearestFeatureThenLowerIndex) {
  const std::vector<InterestPoint> pred{{10, 10, 1}, {20, 10, 1}};
  const auto truth = truth_of({{10, 14, "far"}, {10, 12, "near"}, {16, 10, "tie-a"}, {24, 10, "tie-b"}});
  const auto m = match_points(pred, truth, 10.0);
  EXPECT_EQ(m.pairing[0], 1u);
  EXPECT_EQ(m.pairing[1], 2u);
}

TEST(MatchPoints, RadiusIsInclusiveAndPositive) {
  const std::vector<InterestPoint> pred{{0, 0, 1}};
  EXPECT_EQ(match_points(pred, truth_of({{6, 8, "x"}}), 10.0).counts.true_positives, 1u);
  EXPECT_THROW(match_points(pred, truth_of({}), 0.0), ContractError);
}

TEST(ComputeRates, FieldTotals) {
  const auto r = compute_rates({69, 32, 32});
  EXPECT_NEAR(r.tpr, 0.683, 5e-4);
  EXPECT_NEAR(r.fpr, 0.317, 5e-4);
  EXPECT_NEAR(r.fnr, 0.317, 5e-4);
  EXPECT_EQ(format_rates(r), "tpr=68% fpr=32% fnr=32%");
}

TEST(ComputeRates, PerfectScore) {
  const auto r = compute_rates({3, 0, 0});
  EXPECT_EQ(r.tpr, 1.0);
  EXPECT_EQ(r.fpr, 0.0);
  EXPECT_EQ(r.fnr, 0.0);
  EXPECT_EQ(format_rates(r), "tpr=100% fpr=0% fnr=0%");
}

TEST(ComputeRates, FalseNegativeRateSharesDenominator) {
  const auto r = compute_rates({1, 1, 2});
  EXPECT_EQ(r.tpr, 0.5);
  EXPECT_EQ(r.fpr, 0.5);
  EXPECT_EQ(r.fnr, 1.0);
}

TEST(ComputeRates, NoPredictionsIsUndefined) { EXPECT_THROW(compute_rates({0, 0, 4}), UndefinedRatesError); }

TEST(Aggregate, SumsPerImageCounts) {
  std::vector<ImageConcurrence> images{{"a", {2, 1, 0}, {}}, {"b", {3, 0, 2}, {}}, {"c", {0, 0, 1}, {}}};
  const auto report = aggregate(images, 10.0);
  EXPECT_EQ(report.total, (ConcurrenceCounts{5, 1, 3}));
  ASSERT_TRUE(report.rates);
  EXPECT_DOUBLE_EQ(report.rates->tpr, 5.0 / 6.0);
}

TEST(Aggregate, PerImageMeans) {
  std::vector<ImageConcurrence> images(32);
  images[0].counts = {69, 32, 32};
  const auto report = aggregate(images, 10.0);
  EXPECT_DOUBLE_EQ(report.mean_true_positives(), 69.0 / 32.0);
  EXPECT_EQ(format_means(report), "TP=2.2 FP=1.0 FN=1.0");
}

TEST(ScoreImage, NoPredictionsLeavesRatesEmpty) {
  const auto s = score_image({}, truth_of({{1, 1, "a"}}), 10.0);
  EXPECT_FALSE(s.rates);
  EXPECT_EQ(s.counts.false_negatives, 1u);
}

TEST(Annotations, ParsesDocumentsArraysAndDirectories) {
  testing::TempDir dir("ann");
  testing::write_text(dir.path() / "b.json",
                      R"({"image_id": "b", "features": [{"x": 3, "y": 4, "label": "nodule"}]})");
  testing::write_text(dir.path() / "a.json", R"([{"image_id": "a", "features": []},
                                                 {"image_id": "a2", "features": [{"x": 1, "y": 2}]}])");
  const auto sets = load_annotations(dir.path());
  ASSERT_EQ(sets.size(), 3u);
  EXPECT_EQ(sets[0].image_id, "a");
  EXPECT_EQ(sets[1].features[0].label, "");
  EXPECT_EQ(sets[2].features[0].label, "nodule");
  EXPECT_EQ(sets[2].features[0].x, 3);
}

TEST(Annotations, MalformedIsFormatError) {
  EXPECT_THROW(parse_annotation("{\"features\": []}", "x.json"), FormatError);
  EXPECT_THROW(parse_annotation("not json", "x.json"), FormatError);
  EXPECT_THROW(load_annotations("/nonexistent/annotations.json"), IoError);
}

TEST(Annotations, BoundsCheck) {
  const auto truth = truth_of({{191, 143, "corner"}});
  EXPECT_NO_THROW(check_bounds(truth, 192, 144));
  EXPECT_THROW(check_bounds(truth, 191, 144), ContractError);
}

TEST(Report, StableFieldNames) {
  std::vector<ImageConcurrence> images{{"a", {2, 1, 0}, compute_rates({2, 1, 0})}, {"b", {0, 0, 1}, {}}};
  const std::string json = report_to_json(aggregate(images, 10.0));
  for (const char* key : {"\"match_radius\"", "\"images\"", "\"aggregate\"", "\"counts\"", "\"tp\"", "\"fp\"",
                          "\"fn\"", "\"tpr\"", "\"fpr\"", "\"fnr\"", "\"mean_per_image\"", "\"rates\": null"})
    EXPECT_NE(json.find(key), std::string::npos) << key;
}

}  // namespace
}  // namespace uncommon
