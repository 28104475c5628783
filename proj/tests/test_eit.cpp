#include <doctest.h>

#include "deit/eit.hpp"
#include "oracles.hpp"

using namespace deit;
using num::Complex;
using num::Matrix;

namespace {
const double kTwoPi = 2.0 * M_PI;
}

TEST_CASE("probe-free hamiltonian leaves |2> untouched") {
    eit::MediumParams p;
    const Matrix h = eit::hamiltonian6(0.0, 0.0, p, false);
    num::Vector e2 = num::Vector::Zero(6);
    e2[1] = 1.0;
    CHECK((h * e2).norm() < 1e-15);
}

TEST_CASE("hermitian without decay, damped diagonal with decay") {
    eit::MediumParams p;
    const Matrix h = eit::hamiltonian6(Complex(0.1 * p.Omega_d), Complex(0.05 * p.Omega_d), p, false);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-15);

    const Matrix hd = eit::hamiltonian6(Complex(0.1 * p.Omega_d), Complex(0.05 * p.Omega_d), p, true);
    CHECK(hd(3, 3).imag() == doctest::Approx(-p.gamma));
    CHECK(hd(4, 4).imag() == doctest::Approx(-p.gamma));
    CHECK(hd(5, 5).imag() == doctest::Approx(-p.gamma));
}

TEST_CASE("spectrum invariant under rabi sign flips") {
    eit::MediumParams p;
    const Complex oa(0.08 * p.Omega_d), ob(0.12 * p.Omega_d);
    const auto base = num::eig_general(eit::hamiltonian6(oa, ob, p, true)).values;
    for (int pattern = 1; pattern < 8; ++pattern) {
        const double sa = (pattern & 1) ? -1.0 : 1.0;
        const double sb = (pattern & 2) ? -1.0 : 1.0;
        Matrix h = eit::hamiltonian6(sa * oa, sb * ob, p, true);
        if (pattern & 4) {  // Omega_d sign flip = flipping both drive edges
            h(3, 0) *= -1.0; h(0, 3) *= -1.0;
            h(5, 2) *= -1.0; h(2, 5) *= -1.0;
        }
        const auto flipped = num::eig_general(h).values;
        for (int i = 0; i < 6; ++i) CHECK(std::abs(base[i] - flipped[i]) < 1e-9 * p.Omega_d);
    }
}

TEST_CASE("weak-field branch against the closed form, decay-free") {
    eit::MediumParams p;
    p.gamma = 1e-6;  // validation wants > 0; effectively decay-free
    p.Delta = kTwoPi * 1e6;
    p.Omega_d = kTwoPi * 1e6;
    const Complex oa(0.02 * p.Omega_d), ob(0.02 * p.Omega_d);
    eit::MediumParams q = p;
    q.gamma = 0.0;  // lambda_branch handles gamma = 0 directly
    const auto lb = eit::lambda_branch(oa, ob, q);
    CHECK(std::abs(lb.lambda_exact / lb.lambda_weakfield - 1.0) < 0.01);
}

TEST_CASE("weak-field branch with default medium") {
    eit::MediumParams p;  // gamma = 0.1 Delta
    const Complex oa(0.02 * p.Omega_d), ob(0.02 * p.Omega_d);
    const auto lb = eit::lambda_branch(oa, ob, p);
    CHECK(std::abs(lb.lambda_exact / lb.lambda_weakfield - 1.0) < 0.05);
    CHECK(lb.lambda_exact.real() < 0.0);  // red shift for Delta > 0

    const auto zero = eit::lambda_branch(0.0, ob, p);
    CHECK(std::abs(zero.lambda_exact) == 0.0);
    CHECK(std::abs(zero.lambda_weakfield) == 0.0);
}

TEST_CASE("weak-field validity window") {
    eit::MediumParams p;
    p.gamma = 0.0;
    p.Delta = 1e6;
    p.Omega_d = 1e6;
    for (const auto& [frac, bound] : std::vector<std::pair<double, double>>{
             {0.03, 0.01}, {0.1, 0.10}}) {
        const Complex o(frac * p.Omega_d);
        const auto lb = eit::lambda_branch(o, o, p);
        CHECK(std::abs(lb.lambda_exact / lb.lambda_weakfield - 1.0) < bound);
    }
}

TEST_CASE("polarizability structure") {
    eit::MediumParams p;
    CHECK(std::abs(eit::polarizability_a(p, 0.0)) == 0.0);

    // gamma -> 0: purely real (sigma0 * gamma stays finite)
    eit::MediumParams tiny = p;
    tiny.gamma = 1e-3;
    const Complex a_small = eit::polarizability_a(tiny, Complex(0.02 * p.Omega_d));
    CHECK(std::abs(a_small.imag() / a_small.real()) < 2e-9);
    CHECK(a_small.real() > 0.0);

    // Delta = 10 gamma: |Im/Re| = gamma/Delta = 0.1
    eit::MediumParams ten = p;
    ten.Delta = 10.0 * ten.gamma;
    const Complex a10 = eit::polarizability_a(ten, Complex(0.02 * p.Omega_d));
    CHECK(std::abs(a10.imag() / a10.real()) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(a10.imag() > 0.0);  // absorptive sign

    // quadratic in the cross amplitude
    const Complex a1 = eit::polarizability_a(p, Complex(0.01 * p.Omega_d));
    const Complex a2 = eit::polarizability_a(p, Complex(0.02 * p.Omega_d));
    CHECK(std::abs(a2 / a1 - 4.0) < 1e-10);
}

TEST_CASE("propagation constants: scalings and magnitudes") {
    eit::MediumParams p;
    const auto pc = eit::propagation_constants(p);

    CHECK(pc.v_group > 0.0);
    CHECK(pc.v_group / eit::constants::c_light < 1e-5);
    CHECK(pc.chi < 0.0);  // Delta > 0
    CHECK(pc.pi_over_chi() > 0.1e-6);
    CHECK(pc.pi_over_chi() < 10e-6);
    CHECK(pc.alpha_a.imag() >= 0.0);
    CHECK(pc.self_to_cross_ratio < 1.0);
    CHECK(p.weak_two_photon_absorption());

    eit::MediumParams doubled = p;
    doubled.Omega_d = 2.0 * p.Omega_d;
    const auto pc2 = eit::propagation_constants(doubled);
    CHECK(pc2.v_group == doctest::Approx(4.0 * pc.v_group).epsilon(1e-12));
    CHECK(pc2.chi == doctest::Approx(0.25 * pc.chi).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    eit::MediumParams p;
    p.gamma = -1.0;
    CHECK_THROWS_AS(p.validate(), Error);
}
