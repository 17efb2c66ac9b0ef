// calbf: run verification suites and write a JSON report

#include "calbf/localization.hpp"
#include "calbf/report.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { ok = 0, failures = 1, config_error = 2, io_error = 3 };

std::string read_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot read " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_dh(const std::string &path)
{
	std::ofstream os(path);
	if (!os)
		throw std::runtime_error("cannot write " + path);
	std::vector<double> xi;
	for (int i = -200; i <= 200; ++i)
		xi.push_back(0.1 * i);
	calbf::write_dh_csv(os, {calbf::Orbit{1, 64}, calbf::Orbit{2, 64}}, xi);
	if (!os)
		throw std::runtime_error("write failed: " + path);
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Run caloron/BF verification suites"};

	std::vector<std::string> suites;
	std::uint64_t seed = 0;
	std::string grid, out, config, dh_csv;
	int degree = 0, level = 0, rank = 0;
	std::vector<std::string> tols;
	bool list = false, quiet = false;

	auto *o_suite = app.add_option("--suite", suites, "suite name or 'all' (repeatable)");
	auto *o_seed = app.add_option("--seed", seed, "64-bit seed");
	auto *o_grid = app.add_option("--grid", grid, "nx,ny,nt");
	auto *o_degree = app.add_option("--degree", degree, "bundle degree for twisted checks");
	auto *o_level = app.add_option("--level", level, "level k");
	auto *o_rank = app.add_option("--rank", rank, "n for su(n)");
	auto *o_out = app.add_option("--out", out, "JSON report path");
	app.add_option("--tol", tols, "tolerance override id=value (repeatable)");
	app.add_option("--config", config, "JSON config with the same keys; flags take precedence");
	auto *o_csv = app.add_option("--dh-csv", dh_csv, "write DH measure samples as CSV");
	app.add_flag("--list", list, "list suites and checks, then exit");
	app.add_flag("-q,--quiet", quiet, "only print the summary");
	CLI11_PARSE(app, argc, argv);

	if (list) {
		for (const auto &s : calbf::suite_names()) {
			fmt::print("{}\n", s);
			for (const auto &c : calbf::suite_checks(s))
				fmt::print("  {:<44} {:.0e}  {}\n", c.id, c.tolerance, c.anchor);
		}
		return ok;
	}

	calbf::RunConfig cfg;
	try {
		if (!config.empty())
			cfg = calbf::config_from_json(read_file(config), cfg);
		if (o_suite->count())
			cfg.suites = suites;
		if (o_seed->count())
			cfg.seed = seed;
		if (o_grid->count()) {
			std::string json_grid = "{\"grid\":\"" + grid + "\"}";
			cfg = calbf::config_from_json(json_grid, cfg);
		}
		if (o_degree->count())
			cfg.degree = degree;
		if (o_level->count())
			cfg.level = level;
		if (o_rank->count())
			cfg.rank = rank;
		if (o_out->count())
			cfg.out = out;
		if (o_csv->count())
			cfg.dh_csv = dh_csv;
		for (const auto &t : tols) {
			auto eq = t.find('=');
			if (eq == std::string::npos)
				throw std::invalid_argument("--tol expects id=value, got '" + t + "'");
			cfg.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
		}
		calbf::validate(cfg);
	} catch (const std::exception &e) {
		fmt::print(stderr, "configuration error: {}\n", e.what());
		return config_error;
	}

	calbf::Report r = calbf::run_suites(cfg);

	if (!quiet)
		for (const auto &c : r.checks)
			fmt::print("{} {:<44} {:>10.3e} / {:.0e}  {:>7} ms{}\n", c.passed ? "PASS" : "FAIL", c.check_id, c.error_norm,
			           c.tolerance, c.runtime_ms, c.error.empty() ? "" : "  (" + c.error + ")");
	fmt::print("{} checks, {} passed, {} failed, {:.1f} s\n", r.checks.size(), r.checks.size() - r.failed(), r.failed(),
	           r.runtime_ms / 1000.0);

	try {
		if (!cfg.out.empty()) {
			std::ofstream os(cfg.out);
			if (!os)
				throw std::runtime_error("cannot write " + cfg.out);
			calbf::write_report(os, r);
			if (!os)
				throw std::runtime_error("write failed: " + cfg.out);
		}
		if (!cfg.dh_csv.empty())
			write_dh(cfg.dh_csv);
	} catch (const std::exception &e) {
		fmt::print(stderr, "I/O error: {}\n", e.what());
		return io_error;
	}
	return r.failed() ? failures : ok;
}
