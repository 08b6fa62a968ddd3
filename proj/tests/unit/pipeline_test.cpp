#include "paltx/error.hpp"
#include "paltx/parallel.hpp"
#include "paltx/pipeline.hpp"

#include "support/synthetic.hpp"

#include <gtest/gtest.h>

namespace paltx {
namespace {

int max_channel_error(const RgbImage& x, const RgbImage& y) {
    int worst = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        worst = std::max({worst, std::abs(x[i].r - y[i].r), std::abs(x[i].g - y[i].g), std::abs(x[i].b - y[i].b)});
    return worst;
}

TEST(RunTransfer, SelfTransferWithAlphaZeroIsIdentity) {
    TransferConfig cfg;
    cfg.alpha = 0.0;
    const RgbImage img = testing::corpus_image(13, 80, 60);
    const PipelineResult r = run_transfer(img, img, std::nullopt, std::nullopt, cfg);
    EXPECT_LE(max_channel_error(img, r.image), 1);
    EXPECT_EQ(r.report.fading_a, 0.0);
    EXPECT_EQ(r.report.fading_b, 0.0);
}

TEST(RunTransfer, GraySourceCannotFade) {
    const RgbImage gray = testing::corpus_image(15, 64, 64);
    const RgbImage colorful = testing::corpus_image(16, 64, 64);
    const PipelineResult r = run_transfer(gray, colorful, std::nullopt, std::nullopt);
    EXPECT_EQ(r.report.fading_a, 0.0);
    EXPECT_EQ(r.report.fading_b, 0.0);
}

TEST(RunTransfer, KeepsSourceDimensions) {
    const RgbImage src = testing::corpus_image(3, 70, 40);
    const RgbImage ref = testing::corpus_image(9, 33, 51);
    const PipelineResult r = run_transfer(src, ref, std::nullopt, std::nullopt);
    EXPECT_EQ(r.image.dims(), src.dims());
}

TEST(RunTransfer, Deterministic) {
    const RgbImage src = testing::corpus_image(19, 90, 90);
    const RgbImage ref = testing::corpus_image(18, 90, 90);
    set_thread_count(1);
    const PipelineResult a = run_transfer(src, ref, std::nullopt, std::nullopt);
    set_thread_count(4);
    const PipelineResult b = run_transfer(src, ref, std::nullopt, std::nullopt);
    set_thread_count(0);
    EXPECT_EQ(a.image, b.image);
}

TEST(RunTransfer, AllForegroundMaskMatchesNoMask) {
    const RgbImage src = testing::corpus_image(4, 64, 64);
    const RgbImage ref = testing::corpus_image(17, 64, 64);
    const PipelineResult plain = run_transfer(src, ref, std::nullopt, std::nullopt);
    const PipelineResult masked = run_transfer(src, ref, default_mask(src.dims()), default_mask(ref.dims()));
    EXPECT_EQ(plain.image, masked.image);
}

TEST(RunTransfer, EnhanceChangesOnlyLightness) {
    const RgbImage src = testing::corpus_image(10, 48, 48);
    TransferConfig cfg;
    cfg.alpha = 0.0;
    const PipelineResult plain = run_transfer(src, src, std::nullopt, std::nullopt, cfg);
    cfg.enhance = true;
    const PipelineResult bright = run_transfer(src, src, std::nullopt, std::nullopt, cfg);
    const LabImage a = rgb_to_lab(plain.image);
    const LabImage b = rgb_to_lab(bright.image);
    double mean_a = 0, mean_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += a[i].l;
        mean_b += b[i].l;
    }
    EXPECT_GT(mean_b, mean_a);  // dark scene gets lifted
}

TEST(RunTransfer, ValidatesConfig) {
    const RgbImage img = testing::solid(4, 4, {1, 2, 3});
    TransferConfig cfg;
    cfg.alpha = 2.0;
    EXPECT_THROW(run_transfer(img, img, std::nullopt, std::nullopt, cfg), std::invalid_argument);
    cfg = {};
    cfg.neighbors = 0;
    EXPECT_THROW(run_transfer(img, img, std::nullopt, std::nullopt, cfg), std::invalid_argument);
    EXPECT_THROW(run_transfer(RgbImage{}, img, std::nullopt, std::nullopt), EmptyPeakSpace);
}

TEST(RunTransfer, MisalignedMaskRejected) {
    const RgbImage img = testing::solid(4, 4, {1, 2, 3});
    EXPECT_THROW(run_transfer(img, img, default_mask({2, 2}), std::nullopt), DimensionMismatch);
}

}  // namespace
}  // namespace paltx
