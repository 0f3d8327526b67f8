#include <doctest.h>

#include <cmath>
#include <vector>

#include "impnoise/framing.hpp"
#include "impnoise/rng.hpp"

using namespace impnoise;

namespace {

Signal random_signal(std::size_t len, std::uint64_t seed) {
    Rng rng(seed);
    Signal s{std::vector<double>(len), 16000.0};
    for (double& x : s.samples) x = rng.uniform(-1.0, 1.0);
    return s;
}

} // namespace

TEST_CASE("segment block geometry") {
    FrameConfig cfg;

    SUBCASE("1024 samples -> 3 blocks at offsets 0, 256, 512") {
        const Signal s = random_signal(1024, 1);
        const auto blocks = segment(s, cfg);
        REQUIRE(blocks.size() == 3);
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t i = 0; i < cfg.block_len; ++i)
                CHECK(blocks[b][i] == s.samples[b * cfg.hop + i]);
    }

    SUBCASE("512 samples -> one block identical to the input") {
        const Signal s = random_signal(512, 2);
        const auto blocks = segment(s, cfg);
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0] == s.samples);
    }

    SUBCASE("600 samples -> 2 blocks, second zero-padded by 168") {
        const Signal s = random_signal(600, 3);
        const auto blocks = segment(s, cfg);
        REQUIRE(blocks.size() == 2);
        for (std::size_t i = 0; i < 344; ++i)
            CHECK(blocks[1][i] == s.samples[256 + i]);
        for (std::size_t i = 344; i < 512; ++i)
            CHECK(blocks[1][i] == 0.0);
    }

    SUBCASE("every input index covered by at least one block") {
        for (std::size_t len : {512u, 513u, 700u, 1000u, 1537u, 4096u}) {
            const auto blocks = segment(random_signal(len, len), cfg);
            const std::size_t covered =
                (blocks.size() - 1) * cfg.hop + cfg.block_len;
            CHECK(covered >= len);
        }
    }
}

TEST_CASE("segment error cases") {
    CHECK_THROWS_WITH(segment(Signal{}, FrameConfig{}), "empty input");
    FrameConfig bad;
    bad.hop = 100; // not block_len / 2
    CHECK_THROWS_WITH(segment(random_signal(512, 4), bad),
                      "invalid frame config");
}

TEST_CASE("periodic Hann window satisfies COLA exactly") {
    const std::size_t len = 512;
    const auto w = hann_window(len);
    double worst = 0.0;
    for (std::size_t n = 0; n < len / 2; ++n)
        worst = std::max(worst, std::fabs(w[n] + w[n + len / 2] - 1.0));
    CHECK(worst < 1e-12);
}

TEST_CASE("overlap_add basics") {
    FrameConfig cfg;

    SUBCASE("all-zero blocks give an all-zero signal") {
        std::vector<std::vector<double>> blocks(
            3, std::vector<double>(cfg.block_len, 0.0));
        const Signal out = overlap_add(blocks, cfg, 1024);
        for (double s : out.samples) CHECK(s == 0.0);
    }

    SUBCASE("single block of ones reproduces the Hann window") {
        std::vector<std::vector<double>> blocks{
            std::vector<double>(cfg.block_len, 1.0)};
        const Signal out = overlap_add(blocks, cfg, cfg.block_len);
        const auto w = hann_window(cfg.block_len);
        for (std::size_t i = 0; i < cfg.block_len; ++i)
            CHECK(out.samples[i] == doctest::Approx(w[i]).epsilon(1e-14));
    }

    SUBCASE("wrong block length is rejected") {
        std::vector<std::vector<double>> blocks{std::vector<double>(100, 0.0)};
        CHECK_THROWS_WITH(overlap_add(blocks, cfg, 100),
                          "block length mismatch");
    }
}

TEST_CASE("segment/overlap_add round-trip restores the interior") {
    FrameConfig cfg;
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t len = 512 + rng.integer(16384 - 512 + 1);
        const Signal s = random_signal(len, 1000 + trial);
        const Signal out = overlap_add(segment(s, cfg), cfg, len);
        REQUIRE(out.size() == len);
        double worst = 0.0;
        for (std::size_t i = cfg.hop; i + cfg.hop < len; ++i)
            worst = std::max(worst, std::fabs(out.samples[i] - s.samples[i]));
        CHECK(worst < 1e-10);
    }
}
