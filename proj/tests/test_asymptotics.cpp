#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "caslab/asymptotics.hpp"
#include "caslab/constants.hpp"
#include "caslab/force.hpp"

using namespace caslab;

namespace {

PermittivityModel si_like() {
  return PermittivityModel::drude_lorentz({2.0e15, 6.536e15, 9.859e12});
}

Stack bulk_walls(const PermittivityModel& m, double d) {
  return Stack({Layer::semi_infinite_layer(m), Layer::finite(d, PermittivityModel::vacuum()),
                Layer::semi_infinite_layer(m)},
               1);
}

Stack slab_walls(const PermittivityModel& m, double slab_t, double d) {
  return Stack({Layer::semi_infinite_layer(PermittivityModel::vacuum()),
                Layer::finite(slab_t, m), Layer::finite(d, PermittivityModel::vacuum()),
                Layer::finite(slab_t, m),
                Layer::semi_infinite_layer(PermittivityModel::vacuum())},
               2);
}

Stack mixed_walls(const PermittivityModel& bulk, const PermittivityModel& slab_m, double slab_t,
                  double d) {
  return Stack({Layer::semi_infinite_layer(bulk), Layer::finite(d, PermittivityModel::vacuum()),
                Layer::finite(slab_t, slab_m),
                Layer::semi_infinite_layer(PermittivityModel::vacuum())},
               1);
}

}  // namespace

TEST_CASE("distance-law classification") {
  const double d = 1e-6;
  CHECK(classify_distance_law(bulk_walls(si_like(), d)) == -4);
  CHECK(classify_distance_law(bulk_walls(PermittivityModel::perfect_mirror(), d)) == -4);
  CHECK(classify_distance_law(slab_walls(si_like(), 2.5e-6, d)) == -6);
  CHECK(classify_distance_law(mixed_walls(si_like(), si_like(), 2.5e-6, d)) == -5);
  // a slab backed by anything other than vacuum is not a "single slab" wall
  Stack backed({Layer::semi_infinite_layer(si_like()), Layer::finite(2.5e-6, si_like()),
                Layer::finite(d, PermittivityModel::vacuum()), Layer::finite(2.5e-6, si_like()),
                Layer::semi_infinite_layer(si_like())},
               2);
  CHECK(classify_distance_law(backed) == -4);
}

TEST_CASE("static angular averages") {
  const double d = 1e-6;
  const auto ladder = default_kappa_ladder(d);
  REQUIRE(ladder.size() == 8);
  CHECK(ladder[0] == doctest::Approx(1e4).epsilon(1e-14));
  CHECK(ladder[1] == doctest::Approx(5e3).epsilon(1e-14));

  Stack mir = bulk_walls(PermittivityModel::perfect_mirror(), d);
  for (auto sigma : {Polarization::s, Polarization::p}) {
    for (int m : {1, 2, 5}) {
      CHECK(static_average(mir, sigma, m, ladder) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  Stack vac = bulk_walls(PermittivityModel::vacuum(), d);
  CHECK(static_average(vac, Polarization::s, 1, ladder) == doctest::Approx(0.0));

  Stack si = bulk_walls(si_like(), d);
  double err = 0.0;
  const double a_s1 = static_average(si, Polarization::s, 1, ladder, &err);
  CHECK(a_s1 > 0.0);
  CHECK(a_s1 < 1.0);
  CHECK(err < 1e-4 * a_s1);
  // p average dominates s (stronger static reflection at oblique angles)
  const double a_p1 = static_average(si, Polarization::p, 1, ladder);
  CHECK(a_p1 > a_s1);
  // stable against shifting the whole ladder one rung down
  auto shifted = ladder;
  for (auto& v : shifted) v *= 0.5;
  CHECK(static_average(si, Polarization::s, 1, shifted) == doctest::Approx(a_s1).epsilon(1e-6));

  // batch version agrees with the single-power version
  const StaticAverages batch = compute_static_averages(si, 3, ladder);
  CHECK(batch.values[0][0] == doctest::Approx(a_s1).epsilon(1e-12));
  CHECK(batch.values[1][0] == doctest::Approx(a_p1).epsilon(1e-12));
  CHECK(batch.values[0][2] ==
        doctest::Approx(static_average(si, Polarization::s, 3, ladder)).epsilon(1e-10));
  // averages of higher powers decrease (|x| < 1)
  CHECK(batch.values[0][2] < batch.values[0][0]);

  CHECK_THROWS_AS(static_average(si, Polarization::s, 0, ladder), std::invalid_argument);
  CHECK_THROWS_AS(static_average(si, Polarization::s, 1, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("standard long-distance law") {
  const double d = 1e-4;
  Stack mir = bulk_walls(PermittivityModel::perfect_mirror(), d);
  const double f0 = casimir_ideal(d);
  // all averages are unity: the truncated zeta series reproduces F0
  CHECK(long_distance_standard(mir, d) == doctest::Approx(f0).epsilon(2e-5));

  Stack si = bulk_walls(si_like(), d);
  const double pred = long_distance_standard(si, d);
  CHECK(pred > 0.0);
  CHECK(pred < f0);
  // exact d^-4 scaling of the prediction
  CHECK(long_distance_standard(si, 2.0 * d) == doctest::Approx(pred / 16.0).epsilon(1e-9));

  CHECK_THROWS_AS(long_distance_standard(slab_walls(si_like(), 2.5e-6, d), d), std::logic_error);
}

TEST_CASE("slab coefficients and the d^-6 law") {
  const double d = 1e-4;
  const auto ladder = default_kappa_ladder(d);
  Stack slabs = slab_walls(si_like(), 2.5e-6, d);
  const SlabCoefficients c = slab_coefficients(slabs, ladder);
  CHECK(c.r_bar_s > 0.0);
  CHECK(c.r_bar_p > 0.0);
  CHECK(c.err_estimate < 1e-4 * c.r_bar_p);

  // thin slabs: R-bar scales as the slab thickness squared
  const auto thin = slab_coefficients(slab_walls(si_like(), 1e-8, d), ladder);
  const auto thin2 = slab_coefficients(slab_walls(si_like(), 2e-8, d), ladder);
  CHECK(thin2.r_bar_s / thin.r_bar_s == doctest::Approx(4.0).epsilon(0.02));
  CHECK(thin2.r_bar_p / thin.r_bar_p == doctest::Approx(4.0).epsilon(0.02));
  CHECK(thin.r_bar_s < c.r_bar_s);

  // the d^-6 prefactor
  const double p1 = long_distance_slab(c, d);
  CHECK(p1 == doctest::Approx(15.0 * caslab::hbar * caslab::c_light /
                              (16.0 * M_PI * M_PI * std::pow(d, 6)) * (c.r_bar_s + c.r_bar_p))
                  .epsilon(1e-14));
  CHECK(long_distance_slab(c, 2.0 * d) == doctest::Approx(p1 / 64.0).epsilon(1e-12));
  CHECK(long_distance_slab(slabs, d) == doctest::Approx(p1).epsilon(1e-8));
  CHECK(long_distance_slab(SlabCoefficients{0.0, 0.0, 0.0}, d) == 0.0);

  CHECK_THROWS_AS(slab_coefficients(bulk_walls(si_like(), d), ladder), std::logic_error);
}

TEST_CASE("validity scales") {
  const double d = 1e-6;
  const auto mir = validity_scales(bulk_walls(PermittivityModel::perfect_mirror(), d));
  CHECK(mir.d_min_freq == 0.0);
  CHECK(mir.d_min_geom == 0.0);

  const auto bulk = validity_scales(bulk_walls(si_like(), d));
  CHECK(bulk.d_min_freq == doctest::Approx(caslab::c_light / 2.0e15).epsilon(1e-14));
  CHECK(bulk.d_min_geom == 0.0);

  const auto slab = validity_scales(slab_walls(si_like(), 2.5e-6, d));
  CHECK(slab.d_min_freq == doctest::Approx(caslab::c_light / 2.0e15).epsilon(1e-14));
  const double eps_at_scale = si_like().epsilon_imag_axis(2.0e15);
  CHECK(slab.d_min_geom == doctest::Approx(std::sqrt(eps_at_scale) * 2.5e-6).epsilon(1e-12));
}

TEST_CASE("local exponent of a pressure curve") {
  std::vector<std::pair<double, double>> quartic, sextic;
  for (double d : {1e-6, 1.3e-6, 1.69e-6}) {
    quartic.emplace_back(d, 3.0 / std::pow(d, 4));
    sextic.emplace_back(d, 3.0 / std::pow(d, 6));
  }
  CHECK(local_exponent(quartic, 1) == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(local_exponent(sextic, 1) == doctest::Approx(6.0).epsilon(1e-10));
  CHECK_THROWS_AS(local_exponent(quartic, 0), std::logic_error);
  CHECK_THROWS_AS(local_exponent(quartic, 2), std::logic_error);
}

TEST_CASE("short-distance closed form and error bound") {
  const DrudeLorentzParams si{2.0e15, 6.536e15, 9.859e12};
  CHECK(short_distance_closed_form(si, 5e-9) ==
        doctest::Approx(32024.647963342311).epsilon(1e-9));
  // exact d^-3 scaling
  CHECK(short_distance_closed_form(si, 1e-8) ==
        doctest::Approx(32024.647963342311 / 8.0).epsilon(1e-12));
  CHECK(short_distance_closed_form({2.0e15, 0.0, 0.0}, 5e-9) == 0.0);

  CHECK(short_distance_error_bound(si) == doctest::Approx(1.3027225806280708e-3).epsilon(1e-10));
  CHECK(short_distance_error_bound({2.0e15, 6.536e15, 0.0}) == 0.0);
  // the bound is linear in gamma0 at fixed alpha... not exactly, but it grows
  CHECK(short_distance_error_bound({2.0e15, 6.536e15, 2e13}) > short_distance_error_bound(si));

  // overdamped parameters are rejected by both routines
  CHECK_THROWS_AS(short_distance_closed_form({1e12, 1e15, 1e14}, 5e-9), std::domain_error);
  CHECK_THROWS_AS(short_distance_error_bound({1e12, 1e15, 1e14}), std::domain_error);
}

TEST_CASE("short-distance numeric integral") {
  const double d = 5e-9;
  Stack si = bulk_walls(si_like(), d);
  const double num = short_distance_numeric(si, d);
  const double closed = short_distance_closed_form({2.0e15, 6.536e15, 9.859e12}, d);
  const double bound = short_distance_error_bound({2.0e15, 6.536e15, 9.859e12});
  CHECK(num > 0.0);
  // damping weakens the force; the deviation stays inside the stated bound
  CHECK(num < closed);
  CHECK(std::abs(num - closed) / closed <= 1.2 * bound + 1e-5);

  // vacuum on either side kills the short-distance force
  CHECK(short_distance_numeric(bulk_walls(PermittivityModel::vacuum(), d), d) == 0.0);

  // preconditions
  CHECK_THROWS_AS(short_distance_numeric(bulk_walls(PermittivityModel::perfect_mirror(), d), d),
                  std::domain_error);
  CHECK_THROWS_AS(short_distance_numeric(slab_walls(si_like(), 4.0 * d, d), d), std::domain_error);
  CHECK_NOTHROW(short_distance_numeric(slab_walls(si_like(), 20.0 * d, d), d));
}
