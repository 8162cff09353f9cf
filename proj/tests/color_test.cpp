#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "uncommon/color.hpp"
#include "uncommon/errors.hpp"

namespace uncommon {
namespace {

TEST(RgbToHsi, PureRedIsHueOrigin) {
  const Hsi p = rgb_to_hsi(1.0, 0.0, 0.0);
  EXPECT_EQ(p.hue, 0.0);
  EXPECT_EQ(p.saturation, 1.0);
  EXPECT_DOUBLE_EQ(p.intensity, 1.0 / 3.0);
}

TEST(RgbToHsi, GrayIsAchromatic) {
  const Hsi p = rgb_to_hsi(0.5, 0.5, 0.5);
  EXPECT_EQ(p.hue, 0.0);
  EXPECT_EQ(p.saturation, 0.0);
  EXPECT_EQ(p.intensity, 0.5);
}

TEST(RgbToHsi, BlackIsAllZero) {
  const Hsi p = rgb_to_hsi(0.0, 0.0, 0.0);
  EXPECT_EQ(p.hue, 0.0);
  EXPECT_EQ(p.saturation, 0.0);
  EXPECT_EQ(p.intensity, 0.0);
}

TEST(RgbToHsi, OrangeMatchesAcosFormula) {
  const auto ref = testing::oracle::hsi(1.0, 0.5, 0.25);
  const Hsi p = rgb_to_hsi(1.0, 0.5, 0.25);
  EXPECT_NEAR(p.hue, ref.hue, 1e-12);
  EXPECT_NEAR(p.saturation, ref.saturation, 1e-15);
  EXPECT_NEAR(p.intensity, ref.intensity, 1e-15);
  // By hand: I = 7/12, S = 1 - 0.25 / (7/12) = 4/7.
  EXPECT_NEAR(p.intensity, 7.0 / 12.0, 1e-15);
  EXPECT_NEAR(p.saturation, 4.0 / 7.0, 1e-15);
}

TEST(RgbToHsi, PrimariesSitAtThirds) {
  EXPECT_NEAR(rgb_to_hsi(0.0, 1.0, 0.0).hue, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(rgb_to_hsi(0.0, 0.0, 1.0).hue, 2.0 / 3.0, 1e-15);
}

TEST(RgbToHsi, PlanesShareDimensions) {
  RasterImage img(5, 3, 3, 0.2);
  img.at(4, 2, 0) = 0.9;
  const HsiPlanes planes = rgb_to_hsi(img);
  for (const RasterImage* p : {&planes.hue, &planes.saturation, &planes.intensity}) {
    EXPECT_EQ(p->width(), 5);
    EXPECT_EQ(p->height(), 3);
    EXPECT_EQ(p->channels(), 1);
  }
  EXPECT_EQ(planes.saturation.at(0, 0), 0.0);
  EXPECT_GT(planes.saturation.at(4, 2), 0.0);
}

TEST(RgbToHsi, RequiresThreeChannels) { EXPECT_THROW(rgb_to_hsi(RasterImage(2, 2, 1)), ContractError); }

}  // namespace
}  // namespace uncommon
