#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace calbf {

struct RunConfig {
	std::vector<std::string> suites{"all"};
	std::uint64_t seed = 1;
	int nx = 32, ny = 32, nt = 32;
	int degree = 1; // for the twisted-geometry checks; degree-0 checks always run on the torus
	int level = 2;
	int rank = 2;
	std::map<std::string, double> tolerances; // per check id
	std::string out;                          // report path, empty = none
	std::string dh_csv;                       // optional DH density dump
};

// throws std::invalid_argument with a readable message
void validate(const RunConfig &cfg);

struct CheckResult {
	std::string check_id;
	std::string anchor;
	double error_norm = 0;
	double tolerance = 0;
	bool passed = false;
	long runtime_ms = 0;
	std::vector<std::pair<std::string, std::string>> config;
	std::string error; // exception text when the check could not be evaluated
};

struct Report {
	RunConfig cfg;
	std::vector<CheckResult> checks;
	long runtime_ms = 0;

	std::size_t failed() const;
	const CheckResult *find(const std::string &id) const;
};

struct CheckInfo {
	std::string id;
	std::string anchor;
	double tolerance;
};

const std::vector<std::string> &suite_names(); // registered suites, without "all"
const std::vector<CheckInfo> &suite_checks(const std::string &suite);

// expands "all", validates, runs every check; an invalid config throws before anything runs
Report run_suites(const RunConfig &cfg);

std::string report_json(const Report &r, bool with_runtime = true);
void write_report(std::ostream &os, const Report &r);

// RunConfig from a JSON object using the CLI flag names (suite, seed, grid, degree, level, rank, out, tol, dh_csv)
RunConfig config_from_json(const std::string &text, RunConfig base = {});

} // namespace calbf
