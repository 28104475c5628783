#include <doctest.h>

#include "deit/catlab.hpp"
#include "oracles.hpp"

using namespace deit;
using catlab::Parity;
using fock::MultiModeState;
using num::Complex;

namespace {

// |alpha>(|g>+|-g>) + |-alpha>(|g>-|-g>), assembled from coherent states.
MultiModeState analytic_entangled(double alpha, double g, const std::array<int, 2>& cutoffs) {
    const auto ap = fock::coherent_state(alpha, cutoffs[0]);
    const auto am = fock::coherent_state(-alpha, cutoffs[0]);
    const auto gp = fock::coherent_state(g, cutoffs[1]);
    const auto gm = fock::coherent_state(-g, cutoffs[1]);
    MultiModeState out(std::vector<int>(cutoffs.begin(), cutoffs.end()));
    MultiModeState even({cutoffs[1]}), odd({cutoffs[1]});
    even.amplitudes() = gp.amplitudes() + gm.amplitudes();
    odd.amplitudes() = gp.amplitudes() - gm.amplitudes();
    const auto t1 = fock::tensor({ap, even});
    const auto t2 = fock::tensor({am, odd});
    out.amplitudes() = t1.amplitudes() + t2.amplitudes();
    return out.normalized();
}

double odd_support(const fock::DensityOperator& rho) {
    double w = 0.0;
    for (Eigen::Index n = 1; n < rho.dim(); n += 2) w += rho.matrix()(n, n).real();
    return w;
}

}  // namespace

TEST_CASE("entangled coherent state construction") {
    const auto vac = catlab::make_entangled_coherent(0.0, 0.0, {6, 6});
    CHECK(std::abs(vac.amplitudes()[0] - 1.0) < 1e-12);

    const double alpha = 1.3, g = 1.1;
    const std::array<int, 2> cutoffs{fock::coherent_cutoff(alpha), fock::coherent_cutoff(g)};
    const auto psi = catlab::make_entangled_coherent(alpha, g, cutoffs);
    const auto target = analytic_entangled(alpha, g, cutoffs);
    CHECK(std::abs(fock::overlap(target, psi)) > 1.0 - 1e-8);

    // mode-a photon statistics untouched by the cross phase
    const auto bare = fock::coherent_state(alpha, cutoffs[0]);
    const double na = fock::expectation(psi, "number", 0).real();
    CHECK(na == doctest::Approx(fock::expectation(bare, "number", 0).real()).epsilon(1e-10));
}

TEST_CASE("cat states") {
    const auto even0 = catlab::cat_state(0.0, Parity::Even, 6);
    CHECK(std::abs(even0.amplitudes()[0] - 1.0) < 1e-12);
    CHECK_THROWS_AS(catlab::cat_state(0.0, Parity::Odd, 6), Error);

    const double g = 1.2;
    const auto even = catlab::cat_state(g, Parity::Even, 30);
    const auto odd = catlab::cat_state(g, Parity::Odd, 30);
    for (int n = 1; n <= 30; n += 2) CHECK(even.amplitudes()[n] == Complex(0.0));
    for (int n = 0; n <= 30; n += 2) CHECK(odd.amplitudes()[n] == Complex(0.0));

    const double g2 = g * g;
    CHECK(fock::expectation(even, "number", 0).real() ==
          doctest::Approx(g2 * std::tanh(g2)).epsilon(1e-10));
    CHECK(fock::expectation(odd, "number", 0).real() ==
          doctest::Approx(g2 / std::tanh(g2)).epsilon(1e-10));
}

TEST_CASE("heralding projects even and odd cats") {
    const double alpha = 1.5, g = 1.5;
    const int ca = fock::coherent_cutoff(std::sqrt(2.0) * alpha);
    const int cb = fock::coherent_cutoff(g);
    const auto psi = catlab::make_entangled_coherent(alpha, g, {ca, cb});

    const auto d1 = catlab::herald_cat(psi, alpha, catlab::HeraldOutcome::D1);
    const auto even = catlab::cat_state(g, Parity::Even, cb);
    const double f_even =
        (even.amplitudes().adjoint() * d1.mode_b.matrix() * even.amplitudes())(0).real();
    CHECK(f_even > 1.0 - 1e-6);
    CHECK(odd_support(d1.mode_b) < 1e-12);

    const auto d2 = catlab::herald_cat(psi, alpha, catlab::HeraldOutcome::D2);
    const auto odd = catlab::cat_state(g, Parity::Odd, cb);
    const double f_odd =
        (odd.amplitudes().adjoint() * d2.mode_b.matrix() * odd.amplitudes())(0).real();
    CHECK(f_odd > 1.0 - 1e-6);

    const auto none = catlab::herald_cat(psi, alpha, catlab::HeraldOutcome::None);
    CHECK(d1.probability + d2.probability + none.probability ==
          doctest::Approx(1.0).epsilon(1e-10));

    // conditioning on an impossible outcome fails: pure |alpha> input never fires D2
    const auto product = fock::tensor(
        {fock::coherent_state(alpha, ca), fock::coherent_state(g, cb)});
    CHECK_THROWS_AS(catlab::herald_cat(product, alpha, catlab::HeraldOutcome::D2), Error);
}

TEST_CASE("split-cat density family") {
    const double g = 1.4;
    const int cutoff = fock::coherent_cutoff(g / std::sqrt(2.0));
    const std::array<int, 2> cutoffs{cutoff, cutoff};

    const auto pure = catlab::split_cat_density(g, 1.0, cutoffs);
    CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(pure.trace().real() - 1.0) < 1e-12);

    const auto mixed = catlab::split_cat_density(g, 0.0, cutoffs);
    // brute-force purity of the rank-2 mixture
    const double q = std::exp(-2.0 * g * g);
    CHECK((mixed.matrix() * mixed.matrix()).trace().real() ==
          doctest::Approx(0.5 * (1.0 + q * q)).epsilon(1e-9));

    // c = 1 equals a cat split against vacuum
    const auto cat = catlab::cat_state(g, Parity::Even, cutoff);
    const auto split = ops::beam_splitter(fock::tensor({cat, fock::basis_state({0}, {cutoff})}),
                                          0, 1);
    const auto reference = fock::to_density(split);
    CHECK((pure.matrix() - reference.matrix()).cwiseAbs().maxCoeff() < 1e-9);

    CHECK_THROWS_AS(catlab::split_cat_density(g, 1.5, cutoffs), Error);
}

TEST_CASE("duan witness point values") {
    // vanishing amplitude: S = 2 for any c, eta
    for (double c : {0.0, 0.5, 1.0}) {
        const auto rho = catlab::split_cat_density(0.0, c, {10, 10});
        for (double eta : {0.3, 1.0})
            CHECK(catlab::duan_S(rho, eta).S == doctest::Approx(2.0).epsilon(1e-10));
    }

    // the even-cat point near the witness boundary
    const auto rho2 = catlab::split_cat_density(2.0, 1.0, {35, 35});
    const auto duan2 = catlab::duan_S(rho2, 1.0);
    CHECK(duan2.S == doctest::Approx(oracle::duan_S(2.0, 1.0)).epsilon(1e-6));
    CHECK(duan2.S == doctest::Approx(1.995).epsilon(0.005));
    CHECK(duan2.inseparable);
    CHECK(duan2.S == doctest::Approx(duan2.var_u + duan2.var_v).epsilon(1e-12));

    // statistical mixtures sit exactly on the separable bound
    for (double g : {0.5, 1.5, 3.0}) {
        const int cut = fock::coherent_cutoff(g / std::sqrt(2.0));
        const auto rho = catlab::split_cat_density(g, 0.0, {cut, cut});
        CHECK(std::abs(catlab::duan_S(rho, 1.0).S - 2.0) < 1e-8);
    }
}

TEST_CASE("duan witness against the closed form across the family") {
    for (double g : {0.4, 0.9, 1.6}) {
        for (double c : {0.25, 0.7, 1.0}) {
            const int cut = fock::coherent_cutoff(g / std::sqrt(2.0));
            const auto rho = catlab::split_cat_density(g, c, {cut, cut});
            CHECK(catlab::duan_S(rho, 1.0).S ==
                  doctest::Approx(oracle::duan_S(g, c)).epsilon(1e-7));
        }
    }
}

TEST_CASE("losses mix the witness affinely toward the vacuum value") {
    for (double g : {0.5, 1.0, 2.0}) {
        const int cut = fock::coherent_cutoff(g / std::sqrt(2.0)) + 4;
        const auto rho = catlab::split_cat_density(g, 1.0, {cut, cut});
        const double s1 = catlab::duan_S(rho, 1.0).S;
        for (double eta : {0.0, 0.4, 0.8}) {
            const double s = catlab::duan_S(rho, eta).S;
            CHECK(std::abs(s - (eta * s1 + 2.0 * (1.0 - eta))) < 1e-8);
        }
    }
}

TEST_CASE("witness dips below 2 for moderate cats and recovers at large amplitude") {
    double prev = 0.0;
    for (double g : {0.1, 0.5, 1.0, 1.5, 1.9}) {
        const int cut = fock::coherent_cutoff(g / std::sqrt(2.0));
        const double s = catlab::duan_S(catlab::split_cat_density(g, 1.0, {cut, cut}), 1.0).S;
        CHECK(s < 2.0);
    }
    // monotone approach to the bound beyond the minimum
    prev = 0.0;
    for (double g : {2.0, 2.25, 2.5, 2.75, 3.0}) {
        const int cut = fock::coherent_cutoff(g / std::sqrt(2.0));
        const double s = catlab::duan_S(catlab::split_cat_density(g, 1.0, {cut, cut}), 1.0).S;
        CHECK(s > prev);
        CHECK(s < 2.0 + 1e-9);
        prev = s;
    }
}

TEST_CASE("duan witness from a brute-force quadrature expansion") {
    const double g = 1.2, c = 0.7, eta = 0.85;
    const int cut = fock::coherent_cutoff(g / std::sqrt(2.0));
    const auto rho = catlab::split_cat_density(g, c, {cut, cut});
    const auto lossy = ops::loss_channel(ops::loss_channel(rho, 0, eta), 1, eta);

    const int d = cut + 1;
    const auto a = oracle::annihilation(d);
    const auto id = oracle::Matrix::Identity(d, d);
    const auto x = (a + a.adjoint()) / std::sqrt(2.0);
    const auto pm = Complex(0, -1) * (a - a.adjoint()) / std::sqrt(2.0);
    const auto u = oracle::kron(x, id) + oracle::kron(id, x);
    const auto v = -oracle::kron(pm, id) + oracle::kron(id, pm);
    const auto& m = lossy.matrix();
    const double var_u = ((m * u * u).trace() - std::pow((m * u).trace(), 2)).real();
    const double var_v = ((m * v * v).trace() - std::pow((m * v).trace(), 2)).real();

    const auto duan = catlab::duan_S(rho, eta);
    CHECK(duan.var_u == doctest::Approx(var_u).epsilon(1e-10));
    CHECK(duan.var_v == doctest::Approx(var_v).epsilon(1e-10));
}
