#include <gtest/gtest.h>

#include "presspose/colormap.hpp"
#include "presspose/errors.hpp"
#include "presspose/png.hpp"

using namespace presspose;
using namespace presspose::data;

TEST(Colormap, BuiltinsAreValidAndViridisIsFirst) {
  const auto maps = list_colormaps();
  ASSERT_GE(maps.size(), 10u);
  EXPECT_EQ(maps.front().name, "viridis");
  for (const auto& m : maps) EXPECT_NO_THROW(m.validate()) << m.name;
  EXPECT_EQ(ColormapRegistry::builtin().default_map().name, "viridis");
  EXPECT_THROW(find_colormap("no-such-map"), UnknownColormapError);
}

TEST(Colormap, SampleHitsTableEndpoints) {
  const auto& m = find_colormap("viridis");
  EXPECT_TRUE(m.sample(0.0f).isApprox(m.lut.row(0).transpose()));
  EXPECT_TRUE(m.sample(1.0f).isApprox(m.lut.row(kLutSize - 1).transpose()));
  EXPECT_TRUE(m.sample(-1.0f).isApprox(m.sample(0.0f)));
  EXPECT_TRUE(m.sample(2.0f).isApprox(m.sample(1.0f)));
}

TEST(Colormap, RegistryAddReplacesByName) {
  auto reg = ColormapRegistry::builtin();
  const auto before = reg.all().size();
  Colormap red{"red_ramp", {}};
  for (int i = 0; i < kLutSize; ++i) red.lut.row(i) << i / 255.0f, 0.0f, 0.0f;
  reg.add(red);
  EXPECT_EQ(reg.all().size(), before + 1);
  reg.add(red);
  EXPECT_EQ(reg.all().size(), before + 1);
  red.lut(0, 0) = 2.0f;
  EXPECT_THROW(reg.add(red), ValidationError);
}

TEST(Colormap, ColorizeShapeAndRange) {
  PressureFrame f;
  for (int y = 0; y < kGridHeight; ++y)
    for (int x = 0; x < kGridWidth; ++x) f.values(y, x) = static_cast<float>((y * 7 + x * 13) % 101);
  const auto img = colorize(f, find_colormap("jet"), ImageSize{256, 128});
  EXPECT_EQ(img.channels(), 3);
  EXPECT_EQ(img.height, 256);
  EXPECT_EQ(img.width, 128);
  EXPECT_GE(img.data.minCoeff(), 0.0f);
  EXPECT_LE(img.data.maxCoeff(), 1.0f);
}

TEST(Colormap, ZeroFrameMapsToFirstEntryEverywhere) {
  const auto& m = find_colormap("viridis");
  const auto img = colorize(PressureFrame{}, m, ImageSize{128, 64});
  for (int c = 0; c < 3; ++c) {
    EXPECT_NEAR(img.data.row(c).minCoeff(), m.lut(0, c), 1e-6);
    EXPECT_NEAR(img.data.row(c).maxCoeff(), m.lut(0, c), 1e-6);
  }
}

TEST(Colormap, BicubicIdentityAtSameSize) {
  PressureFrame f;
  f.values(10, 10) = 80.0f;
  const auto grid = colorize_grid(f, find_colormap("viridis"));
  const auto same = resize_bicubic(grid, ImageSize{kGridHeight, kGridWidth});
  EXPECT_EQ(same.data, grid.data);
}

TEST(Png, RoundTripQuantizesTo8Bits) {
  ColorImage img(3, 5, 7);
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < img.pixels(); ++i) img.data(c, i) = static_cast<float>((c * 31 + i * 17) % 256) / 255.0f;
  const auto back = io::decode_png(io::encode_png(img));
  ASSERT_TRUE(back.same_shape(img));
  EXPECT_LT((back.data - img.data).cwiseAbs().maxCoeff(), 1e-6f);
  EXPECT_THROW(io::decode_png({1, 2, 3}), ParseError);
}
