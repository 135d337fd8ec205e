#include "maxclass/census.hpp"
#include "maxclass/operators.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace maxclass;

namespace {

// Partitions of k into exactly q positive parts, by direct enumeration.
long partitions_brute(int q, int k)
{
	std::function<long(int, int, int)> rec = [&](int parts, int left, int max_part) -> long {
		if (parts == 0)
			return left == 0 ? 1 : 0;
		long n = 0;
		for (int p = std::min(left, max_part); p >= 1; --p)
			n += rec(parts - 1, left - p, p);
		return n;
	};
	return rec(q, k, k);
}

std::vector<std::string> names(const std::vector<CocycleLabel>& labels)
{
	std::vector<std::string> out;
	for (const auto& l : labels)
		out.push_back(l.to_string());
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

TEST(Census, Partitions)
{
	EXPECT_EQ(partition_count(1, 7), 1);
	EXPECT_EQ(partition_count(2, 4), 2);
	EXPECT_EQ(partition_count(3, 2), 0);
	for (int q = 1; q <= 5; ++q)
		for (int k = 0; k <= 30; ++k)
			EXPECT_EQ(partition_count(q, k), partitions_brute(q, k)) << q << "," << k;
}

TEST(Census, ScalarExamples)
{
	EXPECT_EQ(names(enumerate_scalar_labels(Algebra::m0(), 2, 5)), std::vector<std::string>{"omega(2,3)"});
	auto three = names(enumerate_scalar_labels(Algebra::m0(), 3, 18));
	EXPECT_NE(std::find(three.begin(), three.end(), "omega(5,6,7)"), three.end());
	EXPECT_EQ(names(enumerate_scalar_labels(Algebra::m2(), 3, 12)), std::vector<std::string>{"w(3,4,5)"});
}

TEST(Census, ScalarCountsMatchRankOracle)
{
	for (auto alg : {Algebra::m0(), Algebra::m2()})
		for (int q = 1; q <= 3; ++q)
			for (int lambda = 1; lambda <= 20; ++lambda)
				EXPECT_EQ(static_cast<int>(enumerate_scalar_labels(alg, q, lambda).size()),
				          cohomology(alg, Coefficients::Trivial, q, lambda).dimension)
				    << alg.name() << " q=" << q << " lambda=" << lambda;
}

TEST(Census, AdjointExamples)
{
	auto h10 = census_adjoint(Algebra::m0(), 1, 0, 20);
	EXPECT_EQ(names(h10.labels), (std::vector<std::string>{"Psi[1,1]", "Psi[2,2]"}));
	auto h2 = census_adjoint(Algebra::m2(), 2, -4, 30);
	EXPECT_EQ(names(h2.labels), (std::vector<std::string>{"Phi[2,3,1]", "Phi[3,4,3]"}));
	EXPECT_TRUE(census_adjoint(Algebra::m2(), 1, 1, 30).labels.empty());
	EXPECT_TRUE(census_adjoint(Algebra::m0(), 0, 0, 30).labels.empty());
	EXPECT_TRUE(census_adjoint(Algebra::m0(), 2, -3, 30).unbounded);
}

TEST(Census, Admissibility)
{
	EXPECT_TRUE(admissibility_violation(Algebra::m0(), {Family::Psi, {2, 3}, 4}).has_value());
	EXPECT_FALSE(admissibility_violation(Algebra::m0(), {Family::Psi, {2, 3}, 3}).has_value());
	EXPECT_FALSE(admissibility_violation(Algebra::m0(), {Family::Psi, {5, 6}, 4}).has_value());
	// The printed m2 clause removes this label; the higher differentials do not.
	EXPECT_TRUE(printed_m2_violation({3, 5, 6, 7}, 8).has_value());
	EXPECT_FALSE(m2_target_killed({3, 5, 6, 7}, 8));
	EXPECT_TRUE(m2_target_killed({3, 4, 5, 6}, 5));
}

TEST(Census, QuotientOracle)
{
	EXPECT_EQ(quotient_oracle_total(Algebra::m0_quotient(10), Coefficients::Adjoint, 0), 1);
	for (int n = 8; n <= 11; ++n)
		EXPECT_EQ(quotient_oracle(Algebra::m0_quotient(n), Coefficients::Trivial, 2, 7), 1);
	EXPECT_EQ(stable_quotient_dim("m0", Coefficients::Trivial, 2, 7, 10), 1);
}

TEST(Census, AdjointCensusMatchesStableOracle)
{
	for (auto [alg, q, mu] : std::vector<std::tuple<Algebra, int, int>>{
	         {Algebra::m0(), 1, -1}, {Algebra::m0(), 1, 0}, {Algebra::m0(), 2, -2}, {Algebra::m0(), 2, -5},
	         {Algebra::m2(), 1, 0}, {Algebra::m2(), 2, -4}, {Algebra::m2(), 2, -6}, {Algebra::m2(), 3, -8}}) {
		int census = static_cast<int>(census_adjoint(alg, q, mu, 12).labels.size());
		EXPECT_EQ(census, adjoint_stable_dim(alg, q, mu, 12, 20)) << alg.name() << " q=" << q << " mu=" << mu;
	}
}
