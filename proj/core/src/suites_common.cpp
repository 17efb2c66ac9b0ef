#include "suites.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace calbf::suites {

namespace {

std::uint64_t fnv1a(const std::string &s)
{
	std::uint64_t h = 14695981039346656037ull;
	for (unsigned char c : s) {
		h ^= c;
		h *= 1099511628211ull;
	}
	return h;
}

std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ull;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
	return x ^ (x >> 31);
}

} // namespace

Rng check_rng(std::uint64_t seed, const std::string &id) { return Rng(splitmix64(fnv1a(id) ^ seed)); }

void Context::check(const std::string &id, const std::function<double(Rng &, Echo &)> &fn)
{
	const CheckInfo *info = nullptr;
	for (const auto &c : suite_.checks)
		if (c.id == id)
			info = &c;
	if (!info)
		throw std::logic_error("unregistered check " + id);

	CheckResult r;
	r.check_id = id;
	r.anchor = info->anchor;
	auto it = cfg.tolerances.find(id);
	r.tolerance = it != cfg.tolerances.end() ? it->second : info->tolerance;
	Rng rng = check_rng(cfg.seed, id);
	auto t0 = std::chrono::steady_clock::now();
	try {
		r.error_norm = fn(rng, r.config);
		r.passed = std::isfinite(r.error_norm) && r.error_norm <= r.tolerance;
	} catch (const std::exception &e) {
		r.error_norm = std::numeric_limits<double>::infinity();
		r.error = e.what();
		r.passed = false;
	}
	r.runtime_ms = long(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
	out_.push_back(std::move(r));
}

LoopElement random_loop(const LieAlgebra &alg, int n, Rng &rng, int modes, double amp)
{
	std::normal_distribution<double> N(0.0, amp);
	int D = alg.dim();
	std::vector<double> c(std::size_t(D) * (2 * modes + 1));
	for (auto &v : c)
		v = N(rng);
	for (int m = 1; m <= modes; ++m)
		for (int a = 0; a < D; ++a) {
			// decay keeps the loops smooth
			double s = 1.0 / (1 + m);
			c[std::size_t(D) * (2 * m - 1) + a] *= s;
			c[std::size_t(D) * (2 * m) + a] *= s;
		}
	return make_loop(alg, n, [&](double th, double *x) {
		for (int a = 0; a < D; ++a) {
			double v = c[a];
			for (int m = 1; m <= modes; ++m) {
				double ph = 2 * std::numbers::pi * m * th;
				v += c[std::size_t(D) * (2 * m - 1) + a] * std::cos(ph) + c[std::size_t(D) * (2 * m) + a] * std::sin(ph);
			}
			x[a] = v;
		}
	});
}

Mat random_lie(const LieAlgebra &alg, Rng &rng, double amp)
{
	std::normal_distribution<double> N(0.0, amp);
	std::vector<double> c(alg.dim());
	for (auto &v : c)
		v = N(rng);
	return alg.to_matrix(c.data());
}

CheckVector random_check(const LieAlgebra &alg, int n, Rng &rng)
{
	std::normal_distribution<double> N(0.0, 1.0);
	CheckVector u;
	u.x = N(rng);
	u.xi = random_loop(alg, n, rng);
	return u;
}

AffineVector random_affine(const LieAlgebra &alg, int n, Rng &rng)
{
	std::normal_distribution<double> N(0.0, 1.0);
	AffineVector u;
	u.x = N(rng);
	u.xi = random_loop(alg, n, rng);
	u.y = N(rng);
	return u;
}

double loop_distance(const LoopElement &a, const LoopElement &b)
{
	double e = 0;
	for (std::size_t i = 0; i < a.c.size(); ++i)
		e = std::max(e, std::abs(a.c[i] - b.c[i]));
	return e;
}

double affine_distance(const AffineVector &a, const AffineVector &b)
{
	return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), loop_distance(a.xi, b.xi)});
}

std::string str(double v)
{
	std::ostringstream os;
	os.precision(12);
	os << v;
	return os.str();
}

std::string str(int v) { return std::to_string(v); }

std::string grid_str(const Space &sp)
{
	std::string s = std::to_string(sp.n[AX]) + "," + std::to_string(sp.n[AY]);
	if (sp.n[AS] > 1)
		s += "," + std::to_string(sp.n[AS]);
	return s + "," + std::to_string(sp.n[AT]);
}

} // namespace calbf::suites
