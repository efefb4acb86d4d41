/*
   Copyright 2026, The barrier-delay authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <barrier_delay/phase.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace barrier_delay;

namespace
{
constexpr double pi = std::numbers::pi;
} // namespace

TEST(WrapToPi, Range)
{
    EXPECT_DOUBLE_EQ(wrap_to_pi(0.0), 0.0);
    EXPECT_NEAR(wrap_to_pi(2.0 * pi + 0.1), 0.1, 1e-15);
    EXPECT_NEAR(wrap_to_pi(-2.0 * pi - 0.1), -0.1, 1e-15);
    EXPECT_NEAR(wrap_to_pi(pi), -pi, 1e-15);
    for (double d = -20.0; d < 20.0; d += 0.37) {
        const double w = wrap_to_pi(d);
        EXPECT_GE(w, -pi);
        EXPECT_LT(w, pi);
        const double k = (d - w) / (2.0 * pi);
        EXPECT_NEAR(k, std::round(k), 1e-12);
    }
}

TEST(UnwrapPhase, ConstantSequenceUnchanged)
{
    const std::vector<double> in(10, 1.25);
    EXPECT_EQ(unwrap_phase(in), in);
}

TEST(UnwrapPhase, LinearRampThroughPi)
{
    std::vector<double> truth, principal;
    for (int i = 0; i < 200; ++i) {
        const double v = -1.0 + 0.1 * i;
        truth.push_back(v);
        principal.push_back(wrap_to_pi(v));
    }
    const auto out = unwrap_phase(principal);
    ASSERT_EQ(out.size(), truth.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        EXPECT_NEAR(out[i], truth[i], 1e-12) << i;
}

TEST(UnwrapPhase, DescendingRamp)
{
    std::vector<double> principal;
    for (int i = 0; i < 100; ++i)
        principal.push_back(wrap_to_pi(3.0 - 0.25 * i));
    const auto out = unwrap_phase(principal);
    for (std::size_t i = 1; i < out.size(); ++i)
        EXPECT_NEAR(out[i] - out[i - 1], -0.25, 1e-12);
}

TEST(UnwrapPhase, AmbiguousJumpThrowsWithIndex)
{
    const std::vector<double> in{0.0, 0.1, 0.1 + pi, 0.2 + pi};
    try {
        (void)unwrap_phase(in);
        FAIL() << "expected WrapAmbiguityError";
    } catch (const WrapAmbiguityError& e) {
        EXPECT_EQ(e.index(), 2u);
    }
    const auto flagged = unwrap_phase_flagged(in);
    ASSERT_EQ(flagged.ambiguous.size(), 1u);
    EXPECT_EQ(flagged.ambiguous.front(), 2u);
}

TEST(UnwrapPhase, EmptyAndSingle)
{
    EXPECT_TRUE(unwrap_phase(std::vector<double>{}).empty());
    EXPECT_EQ(unwrap_phase(std::vector<double>{2.5}), std::vector<double>{2.5});
}

TEST(UnwrapPhaseProperty, OutputDiffersFromInputByMultiplesOfTwoPi)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-pi, pi);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> in(50);
        for (auto& v : in)
            v = u(rng);
        const auto res = unwrap_phase_flagged(in);
        for (std::size_t i = 0; i < in.size(); ++i) {
            const double k = (res.phases[i] - in[i]) / (2.0 * pi);
            EXPECT_NEAR(k, std::round(k), 1e-9);
        }
        // consecutive steps are the nearest-branch ones
        for (std::size_t i = 1; i < in.size(); ++i)
            EXPECT_LE(std::abs(res.phases[i] - res.phases[i - 1]), pi + 1e-9);
    }
}

TEST(UnwrapPhaseProperty, RecoversSmoothSignals)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = u(rng), b = u(rng), c = u(rng);
        std::vector<double> truth, principal;
        for (int i = 0; i < 400; ++i) {
            const double x = i / 40.0;
            const double v = a + b * x + c * std::sin(x);
            truth.push_back(v);
            principal.push_back(wrap_to_pi(v));
        }
        const auto out = unwrap_phase(principal);
        const double shift = out.front() - truth.front();
        for (std::size_t i = 0; i < out.size(); ++i)
            EXPECT_NEAR(out[i] - shift, truth[i], 1e-9);
    }
}
