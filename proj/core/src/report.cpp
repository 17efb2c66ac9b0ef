#include "calbf/report.hpp"

#include "suites.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace calbf {

namespace {

using json = nlohmann::json;

const std::vector<const suites::SuiteDef *> &registry()
{
	static const std::vector<const suites::SuiteDef *> r = {
	    &suites::algebra(), &suites::manifold(), &suites::caloron(),      &suites::eom(),
	    &suites::cs(),      &suites::bf(),       &suites::bw(),           &suites::msv(),
	    &suites::wilson(),  &suites::localization(), &suites::gerbe(), &suites::symmetry()};
	return r;
}

const suites::SuiteDef *lookup(const std::string &name)
{
	for (auto *s : registry())
		if (s->name == name)
			return s;
	return nullptr;
}

std::vector<const suites::SuiteDef *> expand(const std::vector<std::string> &names)
{
	std::vector<const suites::SuiteDef *> r;
	std::set<std::string> seen;
	for (const auto &n : names) {
		if (n == "all") {
			for (auto *s : registry())
				if (seen.insert(s->name).second)
					r.push_back(s);
			continue;
		}
		auto *s = lookup(n);
		if (!s)
			throw std::invalid_argument("unknown suite '" + n + "'");
		if (seen.insert(n).second)
			r.push_back(s);
	}
	return r;
}

std::string grid_text(const RunConfig &c)
{
	return std::to_string(c.nx) + "," + std::to_string(c.ny) + "," + std::to_string(c.nt);
}

} // namespace

std::size_t Report::failed() const
{
	std::size_t n = 0;
	for (const auto &c : checks)
		n += !c.passed;
	return n;
}

const CheckResult *Report::find(const std::string &id) const
{
	for (const auto &c : checks)
		if (c.check_id == id)
			return &c;
	return nullptr;
}

const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> n;
		for (auto *s : registry())
			n.push_back(s->name);
		return n;
	}();
	return names;
}

const std::vector<CheckInfo> &suite_checks(const std::string &suite)
{
	auto *s = lookup(suite);
	if (!s)
		throw std::invalid_argument("unknown suite '" + suite + "'");
	return s->checks;
}

void validate(const RunConfig &cfg)
{
	if (cfg.suites.empty())
		throw std::invalid_argument("no suite selected");
	expand(cfg.suites);
	if (cfg.nx < 8 || cfg.ny < 8 || cfg.nt < 8)
		throw std::invalid_argument("grid sizes must be at least 8");
	if (cfg.nt % cfg.ny != 0)
		throw std::invalid_argument("n_theta must be a multiple of n_y");
	if (cfg.rank < 2 || cfg.rank > 8)
		throw std::invalid_argument("rank must be in [2, 8]");
	if (cfg.level < 1)
		throw std::invalid_argument("level must be a positive integer");
	for (const auto &[id, tol] : cfg.tolerances) {
		if (!(tol > 0) || !std::isfinite(tol))
			throw std::invalid_argument("tolerance for '" + id + "' must be positive");
		bool known = false;
		for (auto *s : registry())
			for (const auto &c : s->checks)
				known |= c.id == id;
		if (!known)
			throw std::invalid_argument("tolerance override for unknown check '" + id + "'");
	}
}

Report run_suites(const RunConfig &cfg)
{
	validate(cfg);
	Report r;
	r.cfg = cfg;
	auto t0 = std::chrono::steady_clock::now();
	for (auto *s : expand(cfg.suites)) {
		suites::Context ctx(cfg, *s, r.checks);
		s->run(ctx);
	}
	r.runtime_ms = long(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
	return r;
}

std::string report_json(const Report &r, bool with_runtime)
{
	json meta = {{"tool", "calbf"},
	             {"version", "0.1.0"},
	             {"seed", r.cfg.seed},
	             {"grid", grid_text(r.cfg)},
	             {"degree", r.cfg.degree},
	             {"level", r.cfg.level},
	             {"rank", r.cfg.rank},
	             {"suites", r.cfg.suites},
	             {"tolerance_overrides", r.cfg.tolerances},
	             {"fiber_measure", "normalized, theta period 1"},
	             {"pairing", "<X,Y> = -2 Re tr(XY)"}};
	json checks = json::array();
	std::size_t passed = 0;
	for (const auto &c : r.checks) {
		json cfg = json::object();
		for (const auto &[k, v] : c.config)
			cfg[k] = v;
		json j = {{"check_id", c.check_id},
		          {"anchor", c.anchor},
		          {"error_norm", std::isfinite(c.error_norm) ? json(c.error_norm) : json(nullptr)},
		          {"tolerance", c.tolerance},
		          {"passed", c.passed},
		          {"config", cfg}};
		if (with_runtime)
			j["runtime_ms"] = c.runtime_ms;
		if (!c.error.empty())
			j["error"] = c.error;
		checks.push_back(j);
		passed += c.passed;
	}
	json summary = {{"total", r.checks.size()}, {"passed", passed}, {"failed", r.checks.size() - passed}};
	if (with_runtime)
		summary["runtime_ms"] = r.runtime_ms;
	json doc = {{"schema", 1}, {"meta", meta}, {"checks", checks}, {"summary", summary}};
	return doc.dump(2);
}

void write_report(std::ostream &os, const Report &r) { os << report_json(r) << '\n'; }

RunConfig config_from_json(const std::string &text, RunConfig base)
{
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error &e) {
		throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
	}
	if (!j.is_object())
		throw std::invalid_argument("config must be a JSON object");
	try {
		for (const auto &[key, v] : j.items()) {
			if (key == "suite") {
				base.suites.clear();
				if (v.is_array())
					for (const auto &s : v)
						base.suites.push_back(s.get<std::string>());
				else
					base.suites.push_back(v.get<std::string>());
			} else if (key == "seed")
				base.seed = v.get<std::uint64_t>();
			else if (key == "grid") {
				std::vector<int> g;
				if (v.is_array())
					g = v.get<std::vector<int>>();
				else {
					std::stringstream ss(v.get<std::string>());
					for (std::string item; std::getline(ss, item, ',');)
						g.push_back(std::stoi(item));
				}
				if (g.size() != 3)
					throw std::invalid_argument("grid needs three sizes nx,ny,nt");
				base.nx = g[0], base.ny = g[1], base.nt = g[2];
			} else if (key == "degree")
				base.degree = v.get<int>();
			else if (key == "level")
				base.level = v.get<int>();
			else if (key == "rank")
				base.rank = v.get<int>();
			else if (key == "out")
				base.out = v.get<std::string>();
			else if (key == "dh_csv")
				base.dh_csv = v.get<std::string>();
			else if (key == "tol")
				for (const auto &[id, t] : v.items())
					base.tolerances[id] = t.get<double>();
			else
				throw std::invalid_argument("unknown config key '" + key + "'");
		}
	} catch (const json::exception &e) {
		throw std::invalid_argument(std::string("bad config value: ") + e.what());
	}
	return base;
}

} // namespace calbf
