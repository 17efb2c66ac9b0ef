#pragma once

// internal: suite registry and helpers shared by the suite sources

#include "calbf/field.hpp"
#include "calbf/loop.hpp"
#include "calbf/report.hpp"

#include <functional>

namespace calbf::suites {

using Echo = std::vector<std::pair<std::string, std::string>>;

struct SuiteDef {
	std::string name;
	std::vector<CheckInfo> checks;
	std::function<void(class Context &)> run;
};

class Context {
public:
	Context(const RunConfig &cfg, const SuiteDef &suite, std::vector<CheckResult> &out)
	    : cfg(cfg), suite_(suite), out_(out) {}

	const RunConfig &cfg;
	// evaluates one registered check; fn returns the error norm
	void check(const std::string &id, const std::function<double(Rng &, Echo &)> &fn);

private:
	const SuiteDef &suite_;
	std::vector<CheckResult> &out_;
};

Rng check_rng(std::uint64_t seed, const std::string &id);

const SuiteDef &algebra();
const SuiteDef &manifold();
const SuiteDef &caloron();
const SuiteDef &eom();
const SuiteDef &cs();
const SuiteDef &bf();
const SuiteDef &bw();
const SuiteDef &msv();
const SuiteDef &wilson();
const SuiteDef &localization();
const SuiteDef &gerbe();
const SuiteDef &symmetry();

// band-limited random loop with Fourier modes |m| <= modes
LoopElement random_loop(const LieAlgebra &alg, int n, Rng &rng, int modes = 3, double amp = 0.5);
Mat random_lie(const LieAlgebra &alg, Rng &rng, double amp = 1.0);
CheckVector random_check(const LieAlgebra &alg, int n, Rng &rng);
AffineVector random_affine(const LieAlgebra &alg, int n, Rng &rng);
double affine_distance(const AffineVector &a, const AffineVector &b);
double loop_distance(const LoopElement &a, const LoopElement &b); // sup over samples

std::string str(double v);
std::string str(int v);
std::string grid_str(const Space &sp);

} // namespace calbf::suites
