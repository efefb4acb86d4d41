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

#include <barrier_delay/amplitudes.hpp>
#include <barrier_delay/delays.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace barrier_delay;

namespace
{

constexpr double pi = std::numbers::pi;

WaveNumbers fig1_wn()
{
    BarrierConfig c;
    c.V0 = 0.95;
    c.V2 = 0.3;
    return wave_numbers(c, 1.0);
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

} // namespace

TEST(ComplexG, ZeroThicknessIsStepLimit)
{
    const auto wn = fig1_wn();
    const auto g1 = complex_g1(wn, 0.0);
    const auto g2 = complex_g2(wn, 0.0);
    EXPECT_DOUBLE_EQ(g1.real(), 0.5 * (1.0 - wn.k2 / wn.k1));
    EXPECT_EQ(g1.imag(), 0.0);
    EXPECT_DOUBLE_EQ(g2.real(), 0.5 * (1.0 + wn.k2 / wn.k1));
    EXPECT_EQ(g2.imag(), 0.0);
}

TEST(ComplexG, SymmetricResonanceMakesG1Vanish)
{
    WaveNumbers wn{0.3, 1.2, 1.2, 1.0};
    const auto g1 = complex_g1(wn, 2.0 * pi / wn.k0);
    EXPECT_LT(std::abs(g1), 1e-15);
}

TEST(ComplexG, ResonanceMakesG2Real)
{
    const auto wn = fig1_wn();
    for (int m = 1; m <= 3; ++m) {
        const auto g2 = complex_g2(wn, m * pi / wn.k0);
        EXPECT_NEAR(std::abs(g2.real()), 0.5 * (1.0 + wn.k2 / wn.k1), 1e-15);
        EXPECT_LT(std::abs(g2.imag()), 1e-14);
    }
}

TEST(ComplexG, Fig1AtQuarterPeriod)
{
    // direct evaluation (30-digit reference): -(i/2)(k2/k0 -/+ k0/k1)
    const auto wn = fig1_wn();
    const double a = 0.5 * pi / wn.k0;
    const auto g1 = complex_g1(wn, a);
    const auto g2 = complex_g2(wn, a);
    EXPECT_NEAR(g1.real(), 0.0, 1e-15);
    EXPECT_NEAR(g1.imag(), -1.7590252945119803, 1e-14);
    EXPECT_NEAR(g2.real(), 0.0, 1e-15);
    EXPECT_NEAR(g2.imag(), -1.9826320922619593, 1e-14);
    // phase consistent with the tangent relation: phi1 = pi/2 there
    EXPECT_NEAR(phase_of(g1), pi / 2, 1e-14);
}

TEST(ComplexG, ModulusOfG2NeverVanishes)
{
    oracle::ConfigSampler gen(7);
    for (int i = 0; i < 2000; ++i) {
        const auto s = gen.next();
        BarrierConfig c{s.V0, s.V1, s.V2, s.a};
        const auto wn = wave_numbers(c, s.E);
        EXPECT_GT(std::abs(complex_g2(wn, s.a)), 0.0);
    }
}

TEST(Amplitudes, StepLimitMatchesFresnel)
{
    const auto wn = fig1_wn();
    const auto amp = amplitudes(wn, 0.0);
    EXPECT_NEAR(amp.r.real(), (wn.k1 - wn.k2) / (wn.k1 + wn.k2), 1e-15);
    EXPECT_NEAR(amp.r.imag(), 0.0, 1e-15);
    EXPECT_NEAR(amp.t.real(), 2.0 * wn.k1 / (wn.k1 + wn.k2), 1e-15);
    EXPECT_NEAR(amp.t.imag(), 0.0, 1e-15);
}

TEST(Amplitudes, SymmetricResonanceIsTransparent)
{
    BarrierConfig c;
    c.V0 = 0.9;
    c.V1 = 0.1;
    c.V2 = 0.1;
    c.a = 3.0 * pi / std::sqrt(2.0 * 0.1);
    const auto amp = amplitudes(c, 1.0);
    EXPECT_EQ(amp.r, complex(0.0, 0.0));
    EXPECT_FALSE(amp.phi1.has_value());
    EXPECT_NEAR(std::abs(amp.t), 1.0, 1e-13);
    EXPECT_NEAR(amp.T, 1.0, 1e-13);
}

TEST(Amplitudes, Fig1ResonanceHasTransmissionProbabilityAboveOne)
{
    BarrierConfig c;
    c.V0 = 0.95;
    c.V2 = 0.3;
    c.a = pi / std::sqrt(0.1);
    const auto amp = amplitudes(c, 1.0);
    EXPECT_NEAR(amp.T, 1.1857754191932847, 1e-13);
    EXPECT_NEAR(amp.T, transmission_probability_max(fig1_wn()), 1e-13);
    EXPECT_GT(amp.T, 1.0);
    EXPECT_LT(amp.Tc, 1.0);
}

TEST(Amplitudes, DecompositionInvariants)
{
    oracle::ConfigSampler gen(11);
    for (int i = 0; i < 2000; ++i) {
        const auto s = gen.next();
        BarrierConfig c{s.V0, s.V1, s.V2, s.a};
        const auto wn = wave_numbers(c, s.E);
        const auto amp = amplitudes(wn, s.a);
        ASSERT_TRUE(amp.phi1.has_value());
        EXPECT_NEAR(std::abs(amp.t), 1.0 / amp.g2, 1e-13 / amp.g2);
        EXPECT_NEAR(std::abs(amp.r), amp.g1 / amp.g2, 1e-13);
        EXPECT_NEAR(wrap_to_pi(std::arg(amp.t) - amp.phi2), 0.0, 1e-13);
        EXPECT_NEAR(wrap_to_pi(std::arg(amp.r) - (amp.phi2 - *amp.phi1)), 0.0, 1e-12);
        EXPECT_GT(amp.phi2, -pi);
        EXPECT_LE(amp.phi2, pi);
    }
}

TEST(Amplitudes, AgreeWithDirectBoundaryMatching)
{
    oracle::ConfigSampler gen(3);
    for (int i = 0; i < 1000; ++i) {
        const auto s = gen.next();
        BarrierConfig c{s.V0, s.V1, s.V2, s.a};
        const auto amp = amplitudes(c, s.E);
        const auto ref = oracle::match_boundaries(s.V0, s.V1, s.V2, s.a, s.E);
        EXPECT_NEAR(std::abs(amp.r - ref.r), 0.0, 1e-10 * std::max(1.0, std::abs(ref.r)));
        EXPECT_NEAR(std::abs(amp.t - ref.t), 0.0, 1e-10 * std::max(1.0, std::abs(ref.t)));
    }
}

TEST(Amplitudes, AgreeWithBoundaryMatchingInOtherUnits)
{
    BarrierConfig c{3.0, 1.0, -0.5, 0.8, 2.0, 0.5};
    const auto amp = amplitudes(c, 3.4);
    const auto ref = oracle::match_boundaries(3.0, 1.0, -0.5, 0.8, 3.4, 2.0, 0.5);
    EXPECT_LT(std::abs(amp.r - ref.r), 1e-12);
    EXPECT_LT(std::abs(amp.t - ref.t), 1e-12);
}

TEST(Amplitudes, CurrentConservation)
{
    oracle::ConfigSampler gen(5);
    for (int i = 0; i < 5000; ++i) {
        const auto s = gen.next();
        BarrierConfig c{s.V0, s.V1, s.V2, s.a};
        const auto wn = wave_numbers(c, s.E);
        const auto amp = amplitudes(wn, s.a);
        const double total = std::norm(amp.r) + wn.k2 / wn.k1 * std::norm(amp.t);
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_LE(amp.Tc, 1.0 + 1e-12);
    }
}

TEST(TransmissionProbability, ClosedFormMatchesModulusOfT)
{
    const auto wn = fig1_wn();
    const double a = 0.5 * pi / wn.k0;
    const auto ref = oracle::match_boundaries(0.95, 0.0, 0.3, a, 1.0);
    EXPECT_LT(rel_err(transmission_probability(wn, a), std::norm(ref.t)), 1e-12);
    EXPECT_LT(rel_err(transmission_probability(wn, a), amplitudes(wn, a).T), 1e-12);

    oracle::ConfigSampler gen(13);
    for (int i = 0; i < 2000; ++i) {
        const auto s = gen.next();
        const auto w = wave_numbers(BarrierConfig{s.V0, s.V1, s.V2, s.a}, s.E);
        EXPECT_LT(rel_err(transmission_probability(w, s.a), amplitudes(w, s.a).T), 1e-12);
    }
}

TEST(TransmissionProbability, ResonantAndSymmetricValues)
{
    const auto wn = fig1_wn();
    for (int m = 1; m <= 4; ++m)
        EXPECT_NEAR(transmission_probability(wn, m * pi / wn.k0), 4.0 / std::pow(1.0 + wn.k2 / wn.k1, 2), 1e-13);
    WaveNumbers sym{0.2, 1.1, 1.1, 1.0};
    EXPECT_NEAR(transmission_probability(sym, pi / sym.k0), 1.0, 1e-13);
}

TEST(TransmissionProbability, MaximaSitExactlyAtMultiplesOfPi)
{
    // dT/d(k0 a) is proportional to -sin(2 k0 a); bisect its sign change on a
    // fine grid and compare with m pi
    const auto wn = fig1_wn();
    auto T_of = [&](double theta) { return transmission_probability(wn, theta / wn.k0); };
    for (int m = 1; m <= 3; ++m) {
        double lo = m * pi - 0.3;
        double hi = m * pi + 0.3;
        auto slope = [&](double x) {
            const double h = 1e-5;
            return T_of(x + h) - T_of(x - h);
        };
        ASSERT_GT(slope(lo), 0.0);
        ASSERT_LT(slope(hi), 0.0);
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            (slope(mid) > 0.0 ? lo : hi) = mid;
        }
        EXPECT_NEAR(0.5 * (lo + hi), m * pi, 1e-9);
        EXPECT_NEAR(T_of(m * pi), transmission_probability_max(wn), 1e-14);
    }
}

TEST(PhaseTangents, ConsistentWithArgumentsOfG)
{
    oracle::ConfigSampler gen(17);
    for (int i = 0; i < 1000; ++i) {
        const auto s = gen.next();
        const auto wn = wave_numbers(BarrierConfig{s.V0, s.V1, s.V2, s.a}, s.E);
        const auto tg = phase_tangents(wn.k0, wn.k1, wn.k2, s.a);
        const double c = std::cos(wn.k0 * s.a);
        if (std::abs(c) < 1e-3)
            continue;
        const double t1 = std::tan(phase_of(complex_g1(wn, s.a)));
        const double t2 = std::tan(phase_of(complex_g2(wn, s.a)));
        EXPECT_NEAR(t1, tg.tan_phi1, 1e-9 * std::max(1.0, std::abs(t1)));
        EXPECT_NEAR(t2, tg.tan_phi2, 1e-9 * std::max(1.0, std::abs(t2)));
    }
}

TEST(PhaseTangents, SwapSymmetries)
{
    oracle::ConfigSampler gen(19);
    for (int i = 0; i < 1000; ++i) {
        const auto s = gen.next();
        const auto wn = wave_numbers(BarrierConfig{s.V0, s.V1, s.V2, s.a}, s.E);
        const auto fwd = phase_tangents(wn.k0, wn.k1, wn.k2, s.a);
        const auto rev = phase_tangents(wn.k0, wn.k2, wn.k1, s.a);
        const double tol1 = 1e-12 * std::max(1.0, std::abs(fwd.tan_phi1));
        const double tol2 = 1e-12 * std::max(1.0, std::abs(fwd.tan_phi2));
        EXPECT_NEAR(rev.tan_phi1, -fwd.tan_phi1, tol1);
        EXPECT_NEAR(rev.tan_phi2, fwd.tan_phi2, tol2);

        // k1 -> -k1 exchanges the two tangents
        const auto neg = phase_tangents(wn.k0, -wn.k1, wn.k2, s.a);
        EXPECT_NEAR(neg.tan_phi1, fwd.tan_phi2, tol2);
        EXPECT_NEAR(neg.tan_phi2, fwd.tan_phi1, tol1);
    }
}

TEST(PhaseTangents, Phi1FlipsUnderMirroring)
{
    BarrierConfig c{0.95, 0.0, 0.3, 2.3};
    const auto a1 = amplitudes(c, 1.0);
    const auto a2 = amplitudes(c.mirrored(), 1.0);
    // phi1 -> -phi1 modulo pi
    const double s = *a1.phi1 + *a2.phi1;
    EXPECT_NEAR(std::remainder(s, pi), 0.0, 1e-13);
    EXPECT_NEAR(a1.phi2, a2.phi2, 1e-13);
}
