#include "calbf/localization.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace calbf;

namespace {
constexpr double pi = std::numbers::pi;
// Si(2), sine integral
constexpr double si2 = 1.6054129768026948;
} // namespace

TEST(Localization, Volume)
{
	EXPECT_NEAR(symplectic_volume({1.0, 8}), 4 * pi, 1e-14);
	EXPECT_NEAR(symplectic_volume({2.5, 8}), 10 * pi, 1e-13);
}

TEST(Localization, DhOfTheSphere)
{
	for (double r : {0.5, 1.0, 2.0})
		for (double xi : {-7.0, -0.3, 0.0, 1.0, 4.5}) {
			auto v = dh_measure(Orbit{r, 64}, xi);
			double expect = xi == 0 ? 4 * pi * r : 4 * pi * std::sin(r * xi) / xi;
			EXPECT_NEAR(v.real(), expect, 1e-12);
			EXPECT_NEAR(v.imag(), 0, 1e-12);
		}
}

TEST(Localization, DisjointUnionAdds)
{
	std::vector<Orbit> u{{1, 64}, {2, 64}, {0.5, 64}};
	auto sum = dh_measure(u[0], 2.2) + dh_measure(u[1], 2.2) + dh_measure(u[2], 2.2);
	EXPECT_NEAR(std::abs(dh_measure(u, 2.2) - sum), 0, 1e-13);
}

TEST(Localization, SamplesMatchPointwise)
{
	std::vector<double> xi{-1, 0.5, 3};
	auto s = dh_sample({1, 64}, xi);
	for (std::size_t i = 0; i < xi.size(); ++i)
		EXPECT_EQ(s[i], dh_measure(Orbit{1, 64}, xi[i]));
}

TEST(Localization, SupportRadius)
{
	for (double r : {0.5, 1.0, 3.0})
		EXPECT_NEAR(dh_support_radius({r, 64}), r, 1e-9);
}

TEST(Localization, ResolutionGuard)
{
	EXPECT_THROW(dh_measure(Orbit{1, 4}, 500.0), std::domain_error);
	EXPECT_NO_THROW(dh_measure(Orbit{1, 64}, 500.0));
}

TEST(Localization, GaussianNormClosedForm)
{
	// int_{S^2} e^{-u^2/2eps} = 2 pi sqrt(2 pi eps) erf(1/sqrt(2 eps))
	for (double eps : {0.05, 0.5, 5.0}) {
		auto z = z_norm_squared({1, 64}, eps);
		double closed = 2 * pi * std::sqrt(2 * pi * eps) * std::erf(1 / std::sqrt(2 * eps));
		EXPECT_NEAR(z.direct, closed, 1e-12 * closed);
		EXPECT_LT(z.rel(), 1e-9);
	}
	EXPECT_THROW(z_norm_squared({1, 64}, 0), std::invalid_argument);
}

TEST(Localization, PairIntegralSineIntegral)
{
	// int_{S^2_1 x S^2_2} e^{i mu mu'} = 16 pi^2 Si(r r')
	auto z = z_pair({1, 64}, {2, 64});
	EXPECT_NEAR(z.direct, 16 * pi * pi * si2, 1e-11);
	EXPECT_LT(z.rel(), 1e-5);
	EXPECT_THROW(z_pair({1, 64}, {2, 64}, 1), std::invalid_argument);
}

TEST(Localization, CsvHeader)
{
	std::stringstream ss;
	write_dh_csv(ss, {{1, 64}}, {0.0, 1.0});
	std::string line;
	std::getline(ss, line);
	EXPECT_EQ(line, "r,xi,re,im");
	int rows = 0;
	while (std::getline(ss, line))
		++rows;
	EXPECT_EQ(rows, 2);
}
