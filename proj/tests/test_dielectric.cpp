#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlcasimir/constants.hpp"
#include "nlcasimir/dielectric.hpp"
#include "nlcasimir/error.hpp"
#include "nlcasimir/numerics.hpp"
#include "oracles.hpp"

using namespace nlcasimir;
using testing::high_frequency_fl;
using testing::static_fl_taylor;
namespace C = nlcasimir::constants;

namespace {

MaterialParams gold() { return MaterialParams::drude(C::ev_to_rad_per_s(9.0), C::ev_to_rad_per_s(0.035), 1.4e6); }

MaterialParams collisionless() { return MaterialParams::drude(C::ev_to_rad_per_s(9.0), 0.0, 1.4e6); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("frequency axis tags") {
  const auto w = ComplexFrequency::imaginary(2.0);
  CHECK(w.on_imaginary_axis());
  CHECK(w.value() == complex{0.0, 2.0});
  CHECK(w.xi() == 2.0);
  CHECK_THROWS_AS(ComplexFrequency::imaginary(0.0), DomainError);
  CHECK_THROWS_AS(ComplexFrequency::imaginary(-1.0), DomainError);
  CHECK_THROWS_AS(ComplexFrequency::real(complex{1.0, -1e-3}), DomainError);
  CHECK_THROWS_AS(ComplexFrequency::real(1.0).xi(), DomainError);
}

TEST_CASE("Drude transverse examples") {
  const auto p = collisionless();
  const complex high = drude_transverse(p, ComplexFrequency::real(1e6 * p.omega_p));
  CHECK(std::abs(high - (1.0 - 1e-12)) < 1e-15);
  CHECK(std::abs(drude_transverse(p, ComplexFrequency::real(p.omega_p))) < 1e-15);
  const complex im = drude_transverse(p, ComplexFrequency::imaginary(p.omega_p));
  CHECK(im.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(im.imag() == 0.0);
  CHECK_THROWS_AS(drude_transverse(p, ComplexFrequency::real(0.0)), DomainError);
}

TEST_CASE("hydrodynamic reduces to Drude at k = 0 exactly") {
  const auto p = gold();
  for (double s : {1e-3, 0.1, 0.7, 1.0, 3.0, 50.0}) {
    for (const auto w : {ComplexFrequency::real(s * p.omega_p), ComplexFrequency::imaginary(s * p.omega_p),
                         ComplexFrequency::real(complex{s * p.omega_p, 0.1 * p.omega_p})}) {
      CHECK(hydrodynamic_longitudinal(p, 0.0, w) == drude_transverse(p, w));
    }
    CHECK(imaginary_axis::hydrodynamic_longitudinal(p, 0.0, s * p.omega_p) ==
          imaginary_axis::drude_transverse(p, s * p.omega_p));
  }
}

TEST_CASE("bulk plasmon dispersion is the zero of eps_l") {
  const auto p = collisionless();
  for (double k : {1e7, 1e8, 1e9, 5e9}) {
    const double omega = std::sqrt(p.omega_p * p.omega_p + p.beta2 * k * k);
    CHECK(std::abs(hydrodynamic_longitudinal(p, k, ComplexFrequency::real(omega))) < 1e-12);
  }
}

TEST_CASE("hydrodynamic pole is a domain error") {
  MaterialParams p = collisionless();
  p.beta2 = 4.0;
  CHECK_THROWS_AS(hydrodynamic_longitudinal(p, 3.0, ComplexFrequency::real(6.0)), DomainError);
}

TEST_CASE("imaginary-axis hydrodynamic lies between 1 and Drude") {
  const auto p = gold();
  for (double xi : log_grid(1e-3 * p.omega_p, 1e2 * p.omega_p, 13)) {
    const double drude = imaginary_axis::drude_transverse(p, xi);
    for (double k : log_grid(1e8, 1e11, 11)) {
      const double eps = imaginary_axis::hydrodynamic_longitudinal(p, k, xi);
      CHECK(eps > 1.0);
      CHECK(eps < drude);
    }
  }
}

TEST_CASE("imaginary-axis monotonic decrease in xi") {
  const auto p = gold();
  const auto xis = log_grid(1e-3 * p.omega_p, 1e3 * p.omega_p, 60);
  for (double k : {0.0, 1e8, 1e10}) {
    for (std::size_t i = 1; i < xis.size(); ++i) {
      CHECK(imaginary_axis::drude_transverse(p, xis[i]) < imaginary_axis::drude_transverse(p, xis[i - 1]));
      CHECK(imaginary_axis::hydrodynamic_longitudinal(p, k, xis[i]) <
            imaginary_axis::hydrodynamic_longitudinal(p, k, xis[i - 1]));
    }
  }
}

TEST_CASE("excitonic Lorentz oscillator") {
  MaterialParams p = gold();
  p.eps_inf = 2.5;
  p.gamma = 0.0;
  p.exciton = ExcitonParams{3.0 * C::eV, 0.1 * C::eV, 0.5 * C::m_e, std::pow(C::ev_to_rad_per_s(4.0), 2)};
  const auto& x = *p.exciton;

  const complex far = excitonic_lorentz(p, 1e8, ComplexFrequency::real(1e6 * p.omega_p));
  CHECK(std::abs(far - p.eps_inf) < 1e-8);

  const double wT0 = exciton_resonance(x, 0.0);
  CHECK(wT0 == doctest::Approx((x.gap_energy - x.binding_energy) / C::hbar).epsilon(1e-15));
  const double static_eps = imaginary_axis::excitonic_lorentz(p, 0.0, 1e-12 * wT0);
  CHECK(static_eps == doctest::Approx(p.eps_inf + x.weight / (wT0 * wT0)).epsilon(1e-12));
  CHECK(static_eps > p.eps_inf);

  for (double k : {1e7, 1e8, 1e9}) {
    CHECK(exciton_resonance(x, k) - wT0 == doctest::Approx(C::hbar * k * k / (2.0 * x.mass)).epsilon(1e-9));
  }

  CHECK_THROWS_AS(excitonic_lorentz(gold(), 1e8, ComplexFrequency::real(1.0)), ConfigError);
}

TEST_CASE("Lindhard: bracket coefficients vanish at w = 1, u = 0") {
  CHECK(std::abs(lindhard_fl(1.0, complex{0.0, 0.0}) - 0.5) < 1e-15);
}

TEST_CASE("Lindhard rejects k = 0") {
  CHECK_THROWS_AS(lindhard_longitudinal(gold(), 0.0, ComplexFrequency::imaginary(1e15)), DomainError);
  CHECK_THROWS_AS(imaginary_axis::lindhard_longitudinal(gold(), 0.0, 1e15), DomainError);
}

TEST_CASE("Lindhard Thomas-Fermi limit against the Taylor oracle") {
  const auto p = collisionless();
  const double k_tf2 = 3.0 * p.omega_p * p.omega_p / (p.v_F * p.v_F);
  for (double w : {1e-3, 1e-2, 3e-2}) {
    CAPTURE(w);
    CHECK(lindhard_fl(w, 0.0).real() == doctest::Approx(static_fl_taylor(w)).epsilon(1e-12));
    const double k = 2.0 * p.k_F * w;
    // Tiny xi probes u -> 0 from the imaginary axis.
    const double xi = 1e-9 * k * p.v_F;
    const double eps = imaginary_axis::lindhard_longitudinal(p, k, xi);
    CHECK(rel(eps, 1.0 + k_tf2 / (k * k)) < 1e-3);
  }
}

TEST_CASE("Lindhard high-frequency limit against the asymptotic oracle") {
  const auto p = collisionless();
  const double k = 1e-2 * p.k_F;
  for (double u : {30.0, 100.0, 1000.0}) {
    CAPTURE(u);
    const double w = k / (2.0 * p.k_F);
    const double omega = u * k * p.v_F;
    const complex f = lindhard_fl(w, complex{u, 0.0});
    CHECK(std::abs(f - high_frequency_fl(w, u)) < 1e-3 * std::abs(high_frequency_fl(w, u)));
    // eps_l - 1 against the collisionless Drude value -omega_p^2/omega^2.
    const complex eps = lindhard_longitudinal(p, k, ComplexFrequency::real(omega));
    const complex drude = drude_transverse(p, ComplexFrequency::real(omega));
    CHECK(std::abs(eps - drude) < 1e-3 * std::abs(drude - 1.0));
    // Same on the imaginary axis, u = i y.
    const double y = u;
    const double fi = lindhard_fl_imaginary(w, y);
    CHECK(rel(fi, high_frequency_fl(w, complex{0.0, y}).real()) < 1e-3);
    const double eps_i = imaginary_axis::lindhard_longitudinal(p, k, omega);
    CHECK(rel(eps_i - 1.0, imaginary_axis::drude_transverse(p, omega) - 1.0) < 1e-3);
  }
}

TEST_CASE("Lindhard real-arithmetic form matches complex logs on a 100x100 grid") {
  const auto p = gold();
  const auto ks = log_grid(1e-4 * p.k_F, 1e2 * p.k_F, 100);
  const auto xis = log_grid(1e-4 * p.omega_p, 1e3 * p.omega_p, 100);
  double worst = 0.0;
  for (double k : ks) {
    for (double xi : xis) {
      const complex z = lindhard_longitudinal(p, k, ComplexFrequency::imaginary(xi));
      const double r = imaginary_axis::lindhard_longitudinal(p, k, xi);
      worst = std::max(worst, std::abs(z - r) / std::abs(r));
      const double w = k / (2.0 * p.k_F);
      const double y = xi / (k * p.v_F);
      const complex fz = lindhard_fl(w, complex{0.0, y});
      const double fr = lindhard_fl_imaginary(w, y);
      worst = std::max(worst, std::abs(fz - fr) / std::abs(fr));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("Lindhard is real and above 1 on the imaginary axis") {
  const auto p = gold();
  for (double k : log_grid(1e-3 * p.k_F, 10 * p.k_F, 20)) {
    for (double xi : log_grid(1e-3 * p.omega_p, 1e2 * p.omega_p, 20)) {
      const complex z = lindhard_longitudinal(p, k, ComplexFrequency::imaginary(xi));
      CHECK(std::abs(z.imag()) <= 1e-14 * std::abs(z.real()));
      CHECK(imaginary_axis::lindhard_longitudinal(p, k, xi) > 1.0);
    }
  }
}

TEST_CASE("complex models are real on the imaginary axis") {
  MaterialParams p = gold();
  p.exciton = ExcitonParams{3.0 * C::eV, 0.1 * C::eV, 0.5 * C::m_e, 1e31};
  for (double xi : log_grid(1e-3 * p.omega_p, 1e2 * p.omega_p, 15)) {
    const auto w = ComplexFrequency::imaginary(xi);
    for (double k : {0.0, 1e8, 1e10}) {
      CHECK(drude_transverse(p, w).imag() == 0.0);
      CHECK(hydrodynamic_longitudinal(p, k, w).imag() == 0.0);
      CHECK(excitonic_lorentz(p, k, w).imag() == 0.0);
    }
  }
}

TEST_CASE("Lindhard agrees with hydrodynamic in the collective regime") {
  const auto p = collisionless();
  for (double k : log_grid(1e-4 * p.k_F, 1e-2 * p.k_F, 8)) {
    for (double s : log_grid(1e2, 1e4, 8)) {
      const double xi = s * k * p.v_F;
      const double hydro = imaginary_axis::hydrodynamic_longitudinal(p, k, xi);
      const double lind = imaginary_axis::lindhard_longitudinal(p, k, xi);
      CHECK(std::abs(lind - hydro) / std::abs(hydro - 1.0) < 0.1);
    }
  }
}

TEST_CASE("Wigner-Seitz constructor reproduces the density") {
  for (double rs : {2.0, 3.0, 4.0, 5.0}) {
    const auto p = MaterialParams::from_wigner_seitz(rs);
    const double a = rs * C::bohr_radius;
    const double n = 3.0 / (4.0 * std::numbers::pi * a * a * a);
    CHECK(p.electron_density() == doctest::Approx(n).epsilon(1e-12));
    CHECK(p.beta2 == doctest::Approx(0.6 * p.v_F * p.v_F).epsilon(1e-15));
    // Free-electron k_F = (3 pi^2 n)^(1/3).
    CHECK(p.k_F == doctest::Approx(std::cbrt(3.0 * std::numbers::pi * std::numbers::pi * n)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(MaterialParams::from_wigner_seitz(0.0), ConfigError);
}

TEST_CASE("material validation") {
  CHECK_NOTHROW(gold().validate());
  MaterialParams p = gold();
  p.omega_p = -1.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = gold();
  p.gamma = std::nan("");
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = gold();
  p.exciton = ExcitonParams{0.1 * C::eV, 0.2 * C::eV, C::m_e, 1.0};
  CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("response objects") {
  const auto p = gold();
  CHECK(ImaginaryAxisResponse::vacuum()(1e8, 1e15) == 1.0);
  CHECK_FALSE(ImaginaryAxisResponse::drude(p).depends_on_k());
  CHECK(ImaginaryAxisResponse::hydrodynamic(p).depends_on_k());
  CHECK(ImaginaryAxisResponse::lindhard(p)(1e9, 1e15) == imaginary_axis::lindhard_longitudinal(p, 1e9, 1e15));
  CHECK_THROWS_AS(ImaginaryAxisResponse::excitonic(p), ConfigError);
}
