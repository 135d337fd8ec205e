#include "maxclass/exterior.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace maxclass;

namespace {

// Sign of the permutation sorting v, by counting inversions.
int inversion_sign(const std::vector<int>& v)
{
	int inv = 0;
	for (std::size_t a = 0; a < v.size(); ++a)
		for (std::size_t b = a + 1; b < v.size(); ++b) {
			if (v[a] == v[b])
				return 0;
			inv += v[a] > v[b];
		}
	return inv % 2 ? -1 : 1;
}

ScalarForm random_form(std::mt19937& rng, int degree, int max_index)
{
	ScalarForm f;
	std::uniform_int_distribution<int> idx(1, max_index), coef(-3, 3);
	for (int t = 0; t < 4; ++t) {
		std::vector<int> v;
		while (static_cast<int>(v.size()) < degree) {
			int i = idx(rng);
			if (std::find(v.begin(), v.end(), i) == v.end())
				v.push_back(i);
		}
		std::sort(v.begin(), v.end());
		f.add(Monomial(v), coef(rng));
	}
	return f;
}

} // namespace

TEST(Exterior, MonomialValidation)
{
	EXPECT_THROW(Monomial({3, 2}), std::invalid_argument);
	EXPECT_THROW(Monomial({2, 2}), std::invalid_argument);
	EXPECT_THROW(Monomial({0, 2}), std::invalid_argument);
	Monomial m({2, 5, 9});
	EXPECT_EQ(m.degree(), 3);
	EXPECT_EQ(m.weight(), 16);
	EXPECT_EQ(m.to_string(), "e^2^e^5^e^9");
}

TEST(Exterior, MergeSigns)
{
	auto r = merge(Monomial({3}), Monomial({2}));
	EXPECT_EQ(r.sign, -1);
	EXPECT_EQ(r.monomial, Monomial({2, 3}));
	EXPECT_EQ(merge(Monomial({2, 4}), Monomial({4})).sign, 0);
	std::mt19937 rng(7);
	for (int t = 0; t < 200; ++t) {
		std::vector<int> v(5);
		std::uniform_int_distribution<int> d(1, 9);
		for (int& x : v)
			x = d(rng);
		EXPECT_EQ(canonicalize(v).sign, inversion_sign(v));
	}
}

TEST(Exterior, WedgeGradedCommutative)
{
	std::mt19937 rng(11);
	for (int t = 0; t < 200; ++t) {
		int p = 1 + t % 3, q = 1 + (t / 3) % 3;
		auto f = random_form(rng, p, 12);
		auto g = random_form(rng, q, 12);
		Rational sign = (p * q) % 2 ? -1 : 1;
		EXPECT_EQ(wedge(f, g), sign * wedge(g, f));
	}
}

TEST(Exterior, WedgeAssociative)
{
	std::mt19937 rng(13);
	for (int t = 0; t < 100; ++t) {
		auto a = random_form(rng, 1, 10), b = random_form(rng, 2, 10), c = random_form(rng, 1, 10);
		EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
	}
}

TEST(Exterior, MonomialEnumeration)
{
	// Brute force over all subsets of {1..W}.
	for (int degree = 1; degree <= 4; ++degree)
		for (int weight = 1; weight <= 22; ++weight) {
			std::size_t count = 0;
			for (unsigned mask = 0; mask < (1u << weight); ++mask) {
				if (__builtin_popcount(mask) != degree)
					continue;
				int w = 0;
				for (int i = 0; i < weight; ++i)
					if (mask >> i & 1)
						w += i + 1;
				count += w == weight;
			}
			auto ms = monomials(degree, weight);
			EXPECT_EQ(ms.size(), count) << degree << "," << weight;
			EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
			for (const auto& m : ms)
				EXPECT_EQ(m.weight(), weight);
		}
	EXPECT_EQ(monomials(2, 9, 2, 6).size(), 2u); // e^3e^6, e^4e^5
}

TEST(Exterior, FormArithmetic)
{
	ScalarForm f(Monomial({3, 4}));
	f.add(Monomial({2, 5}), -1);
	EXPECT_EQ(f.to_string(), "-e^2^e^5 + e^3^e^4");
	EXPECT_EQ(f.degree(), 2);
	EXPECT_EQ(f.weight(), 7);
	EXPECT_TRUE((f - f).is_zero());
	EXPECT_EQ(f.without_index(2), ScalarForm(Monomial({3, 4})));
	EXPECT_EQ(ScalarForm().to_string(), "0");
}
