#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

namespace calbf {

// coadjoint orbit S^2_r of su(2) with the height moment map mu = r u (u = cos polar angle)
// and symplectic form r du ^ dphi, so the volume is 4 pi r
struct Orbit {
	double r = 1;
	int panels = 64; // composite Gauss-Legendre panels in u
};

// throws std::domain_error if a panel would see more than ~20 rad of phase
void check_resolution(const Orbit &X, double xi);

double symplectic_volume(const Orbit &X);
// DH_X(xi) = int_X e^{i xi mu} omega
std::complex<double> dh_measure(const Orbit &X, double xi);
std::complex<double> dh_measure(const std::vector<Orbit> &disjoint, double xi);
std::vector<std::complex<double>> dh_sample(const Orbit &X, const std::vector<double> &xi);
// support radius of the pushforward of omega along mu, from its second moment
double dh_support_radius(const Orbit &X);

struct TwoRoutes {
	double direct = 0;
	double other = 0;
	double rel() const;
};

// Z_X(eps) = int_X e^{-mu^2 / 2 eps} omega directly and as (f_eps, DH_X),
// f_eps(xi) = sqrt(eps / 2 pi) e^{-eps xi^2 / 2}
TwoRoutes z_norm_squared(const Orbit &X, double eps);
// Z_{X,Y} = int_{X x Y} e^{i mu_X mu_Y} directly and as
// (1/2 pi) int int e^{-i eta xi} DH_X(eta) DH_Y(xi), trapezoid on |eta| <= cutoff/r_X, |xi| <= cutoff/r_Y
TwoRoutes z_pair(const Orbit &X, const Orbit &Y, int points = 4096, double cutoff = 40);

void write_dh_csv(std::ostream &os, const std::vector<Orbit> &orbits, const std::vector<double> &xi);

} // namespace calbf
