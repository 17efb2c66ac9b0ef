// Acceptance criteria 1-12.  Runs the full suite at k = 1, 2, 3 (32^3, su(2)) and
// judges each criterion against its own thresholds, independent of the registry tolerances.

#include "calbf/report.hpp"

#include <fmt/core.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace calbf;

namespace {

struct Verdict {
	bool pass = true;
	std::vector<std::string> notes;

	void need(bool ok, const std::string &what)
	{
		if (!ok) {
			pass = false;
			notes.push_back(what);
		}
	}
};

double suite_ms(const Report &r, const std::string &prefix)
{
	long ms = 0;
	for (const auto &c : r.checks)
		if (c.check_id.rfind(prefix + ".", 0) == 0)
			ms += c.runtime_ms;
	return double(ms);
}

// error of check `id` strictly below `bound`
void below(Verdict &v, const Report &r, const std::string &id, double bound)
{
	const CheckResult *c = r.find(id);
	if (!c) {
		v.need(false, id + " missing");
		return;
	}
	v.need(c->error.empty() && c->error_norm < bound, fmt::format("{} = {:.3e} (bound {:.0e})", id, c->error_norm, bound));
}

std::string echo(const Report &r, const std::string &id, const std::string &key)
{
	if (const CheckResult *c = r.find(id))
		for (const auto &[k, v] : c->config)
			if (k == key)
				return v;
	return "";
}

} // namespace

int main()
{
	std::map<int, Report> runs;
	for (int k : {1, 2, 3}) {
		RunConfig cfg;
		cfg.level = k;
		runs[k] = run_suites(cfg);
		fmt::print("full run k={}: {} checks, {} failed, {:.1f} s\n", k, runs[k].checks.size(), runs[k].failed(),
		           runs[k].runtime_ms / 1000.0);
	}
	const Report &r = runs[2];

	std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
	    {"1 algebra identities",
	     [&] {
		     Verdict v;
		     for (const auto &c : r.checks)
			     if (c.check_id.rfind("algebra.", 0) == 0) {
				     // loop-side quantities are spectral and held to 1e-10
				     bool spectral = c.check_id.rfind("algebra.lie_", 0) != 0 && c.check_id != "algebra.k0_cocycle" &&
				                     c.check_id != "algebra.extended_jacobi" && c.check_id != "algebra.gamma_cocycle" &&
				                     c.check_id != "algebra.extended_pair_invariance" &&
				                     c.check_id != "algebra.affine_adjoint_flow";
				     below(v, r, c.check_id, spectral ? 1e-10 : 1e-8);
			     }
		     v.need(suite_ms(r, "algebra") < 30e3, "algebra runtime over 30 s");
		     return v;
	     }},
	    {"2 caloron bijection",
	     [&] {
		     Verdict v;
		     below(v, r, "caloron.roundtrip", 1e-12);
		     below(v, r, "caloron.forward_coordinates", 1e-12);
		     below(v, r, "caloron.gauge_square", 1e-8);
		     v.need(suite_ms(r, "caloron") < 10e3, "caloron runtime over 10 s");
		     return v;
	     }},
	    {"3 curvature identity",
	     [&] {
		     Verdict v;
		     below(v, r, "caloron.curvature_untwisted", 1e-9);
		     below(v, r, "caloron.curvature_twisted", 1e-6);
		     // shortfall below sixth order, i.e. observed order > 5.5
		     below(v, r, "caloron.curvature_order", 0.5);
		     return v;
	     }},
	    {"4 field equations",
	     [&] {
		     Verdict v;
		     below(v, r, "eom.pure_gauge", 1e-7);
		     below(v, r, "eom.descent", 1e-5);
		     std::string it = echo(r, "eom.descent", "iterations");
		     v.need(!it.empty() && std::stoi(it) <= 500, "descent iterations " + it);
		     return v;
	     }},
	    {"5 CS quantization",
	     [&] {
		     Verdict v;
		     below(v, r, "cs.quantization_1", 1e-6);
		     below(v, r, "cs.quantization_2", 1e-6);
		     below(v, r, "cs.gauge_mod_z", 1e-6);
		     return v;
	     }},
	    {"6 BF quantization",
	     [&] {
		     Verdict v;
		     below(v, r, "bf.lift_twist_1", 1e-8);
		     below(v, r, "bf.lift_twist_3", 1e-8);
		     below(v, r, "bf.large_gauge_twist", 1e-6);
		     return v;
	     }},
	    {"7 moment map ratio",
	     [&] {
		     Verdict v;
		     below(v, r, "bw.ratio_spread", 1e-5);
		     return v;
	     }},
	    {"8 msv identity",
	     [&] {
		     Verdict v;
		     below(v, r, "msv.untwisted", 1e-9);
		     below(v, r, "msv.twisted", 1e-6);
		     return v;
	     }},
	    {"9 Wilson orbit identity",
	     [&] {
		     Verdict v;
		     below(v, r, "wilson.orbit", 1e-8);
		     return v;
	     }},
	    {"10 localization",
	     [&] {
		     Verdict v;
		     below(v, r, "localization.pairing", 1e-6);
		     below(v, r, "localization.z_pair", 1e-5);
		     v.need(suite_ms(r, "localization") < 60e3, "localization runtime over 60 s");
		     return v;
	     }},
	    {"11 gerbe",
	     [&] {
		     Verdict v;
		     below(v, r, "gerbe.principal_curvature_untwisted", 1e-9);
		     for (const char *id : {"gerbe.heisenberg_adjoint", "gerbe.heisenberg_bracket", "gerbe.heisenberg_cocycle",
		                            "gerbe.heisenberg_curvature"})
			     below(v, r, id, 1e-12);
		     return v;
	     }},
	    {"12 full run, k <= 3",
	     [&] {
		     Verdict v;
		     for (const auto &[k, run] : runs) {
			     v.need(run.failed() == 0, fmt::format("k={}: {} failed checks", k, run.failed()));
			     v.need(run.runtime_ms < 600e3, fmt::format("k={}: {:.1f} s", k, run.runtime_ms / 1000.0));
			     for (const auto &c : run.checks)
				     if (!c.passed)
					     v.notes.push_back(fmt::format("k={} {} = {:.3e}", k, c.check_id, c.error_norm));
		     }
		     return v;
	     }},
	};

	int failed = 0;
	for (const auto &[name, judge] : criteria) {
		Verdict v = judge();
		fmt::print("{} criterion {}\n", v.pass ? "PASS" : "FAIL", name);
		for (const auto &n : v.notes)
			fmt::print("       {}\n", n);
		failed += !v.pass;
	}
	fmt::print("{} of {} criteria passed\n", int(criteria.size()) - failed, criteria.size());
	return failed ? 1 : 0;
}
