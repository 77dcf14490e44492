// Copyright 2026 The cvstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>

#include "cvstab/channel.hpp"

using namespace cvstab;

TEST(ErrorModel, ParsesSpecStrings) {
    auto a = std::get<SingleModeGaussian>(parse_error_model("single-mode-gaussian:sigma=0.5,restrict=q"));
    EXPECT_EQ(a.sigma, 0.5);
    EXPECT_EQ(a.restrict, Quadrature::q);
    auto b = std::get<SingleModeGaussian>(parse_error_model("single-mode-gaussian:sigma=2"));
    EXPECT_EQ(b.restrict, Quadrature::both);
    auto c = std::get<IidGaussian>(parse_error_model("iid-gaussian:sigma=0.1"));
    EXPECT_EQ(c.sigma, 0.1);
    auto d = std::get<FixedShift>(parse_error_model("fixed:mode=2,q=0.3,p=-0.1"));
    ASSERT_EQ(d.shifts.size(), 1u);
    EXPECT_EQ(d.shifts[0].mode, 1u);
    EXPECT_EQ(d.shifts[0].q, 0.3);
    EXPECT_EQ(d.shifts[0].p, -0.1);
}

TEST(ErrorModel, RejectsBadStrings) {
    for (const char *bad : {
             "gaussian:sigma=1",
             "single-mode-gaussian",
             "single-mode-gaussian:sigma=0",
             "single-mode-gaussian:sigma=-1",
             "single-mode-gaussian:sigma=1,restrict=x",
             "single-mode-gaussian:sigma=1,foo=2",
             "iid-gaussian:sigma=abc",
             "iid-gaussian:sigma=inf",
             "fixed:q=0.3",
             "fixed:mode=0,q=1",
             "fixed:mode=1.5",
             "fixed:mode=1,r=2",
         }) {
        EXPECT_THROW(parse_error_model(bad), std::invalid_argument) << bad;
    }
    EXPECT_THROW(check_model(parse_error_model("fixed:mode=4,q=1"), 3), std::invalid_argument);
    EXPECT_NO_THROW(check_model(parse_error_model("fixed:mode=3,q=1"), 3));
}

TEST(SampleError, FixedIsVerbatim) {
    Rng rng = trial_rng(0, 0);
    auto e = sample_error(parse_error_model("fixed:mode=2,q=0.3,p=-0.1"), 3, rng);
    ShiftError expected = ShiftError::zero(3);
    expected.displacement[1] = 0.3;
    expected.displacement[4] = -0.1;
    EXPECT_EQ(e, expected);
    EXPECT_EQ(e.q(1), 0.3);
    EXPECT_EQ(e.p(1), -0.1);
    ShiftError round = sample_error(FixedShift::from(expected), 3, rng);
    EXPECT_EQ(round, expected);
}

TEST(SampleError, SingleModeSparsity) {
    for (auto restrict : {Quadrature::q, Quadrature::p, Quadrature::both}) {
        for (std::uint64_t t = 0; t < 500; ++t) {
            Rng rng = trial_rng(7, t);
            auto e = sample_error(SingleModeGaussian{0.5, restrict}, 3, rng);
            int nonzero = 0;
            int mode = -1;
            for (std::size_t i = 0; i < 6; ++i) {
                if (e.displacement[i] != 0.0) {
                    ++nonzero;
                    int m = static_cast<int>(i % 3);
                    EXPECT_TRUE(mode == -1 || mode == m);
                    mode = m;
                    // q shifts live in the s half, p shifts in the t half.
                    if (restrict == Quadrature::q) {
                        EXPECT_LT(i, 3u);
                    }
                    if (restrict == Quadrature::p) {
                        EXPECT_GE(i, 3u);
                    }
                }
            }
            EXPECT_EQ(nonzero, restrict == Quadrature::both ? 2 : 1);
        }
    }
}

TEST(SampleError, SingleModeChoosesModesUniformly) {
    std::vector<int> counts(4, 0);
    const int trials = 40000;
    for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(3, static_cast<std::uint64_t>(t));
        auto e = sample_error(SingleModeGaussian{1.0, Quadrature::q}, 4, rng);
        for (std::size_t i = 0; i < 4; ++i) {
            if (e.displacement[i] != 0.0) {
                ++counts[i];
            }
        }
    }
    // +-5 standard deviations of a binomial(40000, 1/4).
    for (int c : counts) {
        EXPECT_NEAR(c, trials / 4, 5 * std::sqrt(trials * 0.25 * 0.75));
    }
}

TEST(SampleError, IidGaussianVariance) {
    const int samples = 100000;
    const std::size_t n = 3;
    std::vector<double> sum(2 * n, 0.0);
    std::vector<double> sum2(2 * n, 0.0);
    for (int t = 0; t < samples; ++t) {
        Rng rng = trial_rng(1, static_cast<std::uint64_t>(t));
        auto e = sample_error(IidGaussian{1.0}, n, rng);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            sum[i] += e.displacement[i];
            sum2[i] += e.displacement[i] * e.displacement[i];
        }
    }
    for (std::size_t i = 0; i < 2 * n; ++i) {
        double mean = sum[i] / samples;
        double var = sum2[i] / samples - mean * mean;
        EXPECT_GE(var, 0.97) << i;
        EXPECT_LE(var, 1.03) << i;
    }
}

TEST(SampleError, SeedDeterminismIndependentOfOrder) {
    auto model = SingleModeGaussian{0.5, Quadrature::both};
    std::vector<ShiftError> forward;
    for (std::uint64_t t = 0; t < 50; ++t) {
        Rng rng = trial_rng(99, t);
        forward.push_back(sample_error(model, 5, rng));
    }
    for (std::uint64_t t = 50; t-- > 0;) {
        Rng rng = trial_rng(99, t);
        EXPECT_EQ(sample_error(model, 5, rng), forward[t]);
    }
    Rng other = trial_rng(100, 0);
    EXPECT_NE(sample_error(model, 5, other), forward[0]);
    Rng next = trial_rng(99, 1);
    EXPECT_NE(sample_error(model, 5, next), forward[0]);
}
