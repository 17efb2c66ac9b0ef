#include "calbf/report.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <set>

using namespace calbf;
using nlohmann::json;

TEST(Report, TwelveSuitesWithUniqueChecks)
{
	const auto &names = suite_names();
	EXPECT_EQ(names.size(), 12u);
	std::set<std::string> ids;
	for (const auto &s : names)
		for (const auto &c : suite_checks(s)) {
			EXPECT_EQ(c.id.rfind(s + ".", 0), 0u) << c.id;
			EXPECT_FALSE(c.anchor.empty()) << c.id;
			EXPECT_GT(c.tolerance, 0) << c.id;
			EXPECT_TRUE(ids.insert(c.id).second) << c.id;
		}
	EXPECT_THROW(suite_checks("nope"), std::invalid_argument);
}

TEST(Report, ValidationErrors)
{
	RunConfig c;
	EXPECT_NO_THROW(validate(c));
	c.suites = {"foo"};
	EXPECT_THROW(validate(c), std::invalid_argument);
	c = {};
	c.nt = 48; // not a multiple of ny; some checks are always twisted
	EXPECT_THROW(validate(c), std::invalid_argument);
	c.degree = 0;
	EXPECT_THROW(validate(c), std::invalid_argument);
	c.nt = 64;
	EXPECT_NO_THROW(validate(c));
	c.nx = 4;
	EXPECT_THROW(validate(c), std::invalid_argument);
	c = {};
	c.tolerances["wilson.orbit"] = 0;
	EXPECT_THROW(validate(c), std::invalid_argument);
	c.tolerances = {{"wilson.nothing", 1e-3}};
	EXPECT_THROW(validate(c), std::invalid_argument);
	c = {};
	c.rank = 1;
	EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(Report, UnknownSuiteRunsNothing) {
	RunConfig c;
	c.suites = {"wilson", "foo"};
	EXPECT_THROW(run_suites(c), std::invalid_argument);
}

TEST(Report, DeterministicAndSeedSensitive)
{
	RunConfig c;
	c.suites = {"wilson", "gerbe"};
	c.nx = c.ny = c.nt = 16;
	auto a = report_json(run_suites(c), false), b = report_json(run_suites(c), false);
	EXPECT_EQ(a, b);
	c.seed = 99;
	EXPECT_NE(report_json(run_suites(c), false), a);
}

TEST(Report, JsonSchema)
{
	RunConfig c;
	c.suites = {"wilson"};
	c.tolerances["wilson.orbit"] = 1e-30; // force a failure
	Report r = run_suites(c);
	EXPECT_EQ(r.failed(), 1u);
	json j = json::parse(report_json(r));
	EXPECT_EQ(j["schema"], 1);
	EXPECT_EQ(j["meta"]["seed"], 1);
	EXPECT_EQ(j["summary"]["total"], r.checks.size());
	EXPECT_EQ(j["summary"]["failed"], 1);
	for (const auto &ch : j["checks"]) {
		EXPECT_TRUE(ch.contains("check_id"));
		EXPECT_TRUE(ch.contains("anchor"));
		EXPECT_TRUE(ch.contains("runtime_ms"));
		EXPECT_EQ(ch["passed"].get<bool>(), ch["error_norm"].get<double>() <= ch["tolerance"].get<double>());
	}
	EXPECT_EQ(r.find("wilson.orbit")->tolerance, 1e-30);
	EXPECT_EQ(r.find("nothing"), nullptr);
}

TEST(Report, ConfigFromJson)
{
	auto c = config_from_json(R"({"suite": ["cs", "bf"], "seed": 7, "grid": "16,16,32", "degree": 2, "level": 3,
	                              "rank": 3, "out": "r.json", "tol": {"cs.variation": 1e-4}})");
	EXPECT_EQ(c.suites, (std::vector<std::string>{"cs", "bf"}));
	EXPECT_EQ(c.seed, 7u);
	EXPECT_EQ(c.nt, 32);
	EXPECT_EQ(c.degree, 2);
	EXPECT_EQ(c.level, 3);
	EXPECT_EQ(c.rank, 3);
	EXPECT_EQ(c.out, "r.json");
	EXPECT_EQ(c.tolerances.at("cs.variation"), 1e-4);
	EXPECT_EQ(config_from_json(R"({"grid": [8, 8, 8]})").nx, 8);
	EXPECT_THROW(config_from_json(R"({"colour": 1})"), std::invalid_argument);
	EXPECT_THROW(config_from_json("[1]"), std::invalid_argument);
	EXPECT_THROW(config_from_json("{"), std::invalid_argument);
	EXPECT_THROW(config_from_json(R"({"grid": "8,8"})"), std::invalid_argument);
}
