#include "maxclass/cli.hpp"
#include "maxclass/record.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace maxclass;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run_command(args, out, err);
	return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name)
{
	auto dir = std::filesystem::temp_directory_path() / ("maxclass_test_" + name);
	std::filesystem::remove_all(dir);
	return dir;
}

ResultRecord sample_record()
{
	ResultRecord r;
	r.algebra = "m0";
	r.mode = "trivial";
	r.degree = 2;
	r.grade = 7;
	r.dimension = 1;
	r.basis.push_back({"omega(3,4)", {{std::nullopt, {2, 5}, -1}, {std::nullopt, {3, 4}, 1}}});
	return r;
}

} // namespace

TEST(Cli, DimsJson)
{
	auto r = run({"dims", "--algebra", "m0", "--coefficients", "trivial", "--degree", "2", "--grade", "7", "--format", "json"});
	ASSERT_EQ(r.code, 0) << r.err;
	auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j["dimension"], 1);
	ASSERT_EQ(j["basis"].size(), 1u);
	EXPECT_EQ(j["basis"][0]["label"], "omega(3,4)");
	EXPECT_TRUE(j["cap"].is_null());
}

TEST(Cli, CocycleLatex)
{
	auto r = run({"cocycle", "--family", "omega", "--index", "5,6,7", "--format", "latex"});
	ASSERT_EQ(r.code, 0) << r.err;
	EXPECT_NE(r.out.find("e^{5}\\wedge e^{6}\\wedge e^{7} - e^{4}\\wedge e^{6}\\wedge e^{8}"), std::string::npos);
	EXPECT_NE(r.out.find("- 2 e^{3}\\wedge e^{5}\\wedge e^{10}"), std::string::npos);
	EXPECT_NE(r.out.find("+ 5 e^{2}\\wedge e^{3}\\wedge e^{13}"), std::string::npos);
}

TEST(Cli, Verify)
{
	auto r = run({"verify", "--algebra", "m2", "--family", "phi", "--index", "3,4", "--target", "3", "--cap", "40"});
	EXPECT_EQ(r.code, 0) << r.err;
	EXPECT_EQ(r.out, "closed mod filtration: true\n");
	auto s = run({"verify", "--family", "w", "--index", "3,4,5"});
	EXPECT_EQ(s.code, 0);
	EXPECT_EQ(s.out, "closed: true\n");
}

TEST(Cli, CensusAndCup)
{
	auto c = run({"census", "--algebra", "m2", "--coefficients", "adjoint", "--degree", "2", "--grade", "-4", "--cap", "30"});
	ASSERT_EQ(c.code, 0) << c.err;
	auto j = nlohmann::json::parse(c.out);
	EXPECT_EQ(j["dimension"], 2);
	auto u = run({"cup", "--left", "e^2", "--right", "omega(3,4)"});
	ASSERT_EQ(u.code, 0) << u.err;
	auto k = nlohmann::json::parse(u.out);
	ASSERT_EQ(k["classes"].size(), 1u);
	EXPECT_EQ(k["classes"][0]["label"], "omega(2,3,4)");
}

TEST(Cli, ValidationErrors)
{
	EXPECT_EQ(run({"dims", "--bogus"}).code, 2);
	EXPECT_EQ(run({"frobnicate"}).code, 2);
	EXPECT_EQ(run({"dims", "--algebra", "m7", "--degree", "1", "--grade", "1"}).code, 2);
	EXPECT_EQ(run({"cocycle", "--family", "omega", "--index", "3,5"}).code, 2);
	EXPECT_EQ(run({"cocycle", "--family", "psi", "--index", "2,3"}).code, 2);
	EXPECT_EQ(run({"dims", "--algebra", "m0", "--coefficients", "adjoint", "--degree", "1", "--grade", "0"}).code, 2);
	EXPECT_EQ(run({"cup", "--left", "nonsense", "--right", "e^1"}).code, 2);
	auto r = run({"cocycle", "--family", "omega", "--index", "3,5"});
	EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OracleCheck)
{
	auto r = run({"oracle", "--algebra", "m0", "--degree", "2", "--grade-min", "3", "--grade-max", "9", "--check"});
	EXPECT_EQ(r.code, 0) << r.out << r.err;
	EXPECT_NE(r.out.find("0 mismatches"), std::string::npos);
}

TEST(Cli, RecordRoundTrip)
{
	auto r = sample_record();
	r.extras["closed"] = true;
	EXPECT_EQ(record_from_json(to_json(r)), r);
	r.dimension.reset();
	r.cap = 30;
	r.basis[0].terms[0].module_index = 4;
	r.basis[0].terms[0].coeff = Rational(-3, 4);
	EXPECT_EQ(record_from_json(nlohmann::json::parse(to_json(r).dump())), r);
	EXPECT_EQ(to_json(r)["dimension"], "infinite");
	EXPECT_EQ(to_json(r)["basis"][0]["terms"][0]["coeff"], "-3/4");
	EXPECT_THROW(record_from_json(nlohmann::json::parse(R"({"algebra": "m0"})")), std::invalid_argument);
}

TEST(Cli, CacheStoreLoad)
{
	auto dir = fresh_dir("store");
	ResultCache cache(dir);
	auto key = cache_key("command=dims;cap=null");
	EXPECT_FALSE(cache.load(key).has_value());
	cache.store(key, sample_record());
	auto back = cache.load(key);
	ASSERT_TRUE(back.has_value());
	EXPECT_EQ(*back, sample_record());
	EXPECT_NE(cache_key("command=dims;cap=12"), cache_key("command=dims;cap=13"));
	EXPECT_EQ(key.size(), 16u);
}

TEST(Cli, CachedRunsAreByteIdentical)
{
	auto dir = fresh_dir("runs");
	std::vector<std::string> args{"dims", "--algebra", "m0", "--degree", "3", "--grade", "18", "--cache-dir", dir.string()};
	auto first = run(args);
	ASSERT_EQ(first.code, 0) << first.err;
	ASSERT_EQ(std::distance(std::filesystem::directory_iterator(dir), {}), 1);
	auto second = run(args);
	EXPECT_EQ(first.out, second.out);

	auto bigger = run({"census", "--algebra", "m0", "--coefficients", "adjoint", "--degree", "1", "--grade", "0", "--cap", "12", "--cache-dir", dir.string()});
	auto biggest = run({"census", "--algebra", "m0", "--coefficients", "adjoint", "--degree", "1", "--grade", "0", "--cap", "13", "--cache-dir", dir.string()});
	EXPECT_NE(bigger.out, biggest.out);
	EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir), {}), 3);
}

TEST(Cli, CorruptCacheIsRecomputed)
{
	auto dir = fresh_dir("corrupt");
	std::vector<std::string> args{"dims", "--algebra", "m0", "--degree", "2", "--grade", "7", "--cache-dir", dir.string()};
	auto first = run(args);
	auto file = std::filesystem::directory_iterator(dir)->path();
	std::ofstream(file, std::ios::trunc) << "{not json";
	auto second = run(args);
	EXPECT_EQ(second.code, 0);
	EXPECT_NE(second.err.find("warning"), std::string::npos);
	EXPECT_EQ(second.out, first.out);
	auto third = run(args);
	EXPECT_TRUE(third.err.empty());
}

TEST(Cli, EnvironmentOverridesCacheDir)
{
	auto env_dir = fresh_dir("env");
	auto flag_dir = fresh_dir("flag");
	setenv("MAXCLASS_CACHE", env_dir.c_str(), 1);
	auto r = run({"dims", "--algebra", "m0", "--degree", "2", "--grade", "9", "--cache-dir", flag_dir.string()});
	unsetenv("MAXCLASS_CACHE");
	EXPECT_EQ(r.code, 0);
	EXPECT_TRUE(std::filesystem::exists(env_dir));
	EXPECT_FALSE(std::filesystem::exists(flag_dir));
}
