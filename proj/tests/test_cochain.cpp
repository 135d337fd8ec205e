#include "maxclass/cochain.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace maxclass;

namespace {

ScalarForm form(std::initializer_list<std::pair<std::vector<int>, int>> terms)
{
	ScalarForm f;
	for (const auto& [idx, c] : terms)
		f.add(Monomial(idx), c);
	return f;
}

// d e^k from the bracket table alone: sum over i<j, i+j=k of c_ij e^i ^ e^j.
ScalarForm d_generator_oracle(const Algebra& alg, int k)
{
	ScalarForm f;
	for (int i = 1; 2 * i < k; ++i) {
		auto b = alg.bracket(i, k - i);
		if (b.coefficient != 0 && b.index == k)
			f.add(Monomial({i, k - i}), b.coefficient);
	}
	return f;
}

AdjointCochain random_adjoint(std::mt19937& rng, int degree, int mu, int W)
{
	AdjointCochain x;
	std::uniform_int_distribution<int> coef(-3, 3);
	for (int l = 1; l <= W; ++l) {
		auto ms = monomials(degree, l - mu);
		if (ms.empty())
			continue;
		std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
		for (int t = 0; t < 2; ++t)
			x.add(l, ms[pick(rng)], coef(rng));
	}
	return x;
}

} // namespace

TEST(Cochain, ScalarExamples)
{
	EXPECT_EQ(d_scalar(Algebra::m0(), ScalarForm::generator(5)), form({{{1, 4}, 1}}));
	EXPECT_EQ(d_scalar(Algebra::m2(), ScalarForm::generator(5)), form({{{1, 4}, 1}, {{2, 3}, 1}}));
	for (auto alg : {Algebra::m0(), Algebra::m2()}) {
		EXPECT_TRUE(d_scalar(alg, ScalarForm::generator(1)).is_zero());
		EXPECT_TRUE(d_scalar(alg, ScalarForm::generator(2)).is_zero());
	}
}

TEST(Cochain, GeneratorsMatchBracketTable)
{
	for (auto alg : {Algebra::m0(), Algebra::m2(), Algebra::l1(), Algebra::m2_quotient(8)})
		for (int k = 1; k <= 20; ++k)
			EXPECT_EQ(d_generator(alg, k), d_generator_oracle(alg, k)) << alg.name() << " " << k;
}

TEST(Cochain, AdjointExamples)
{
	AdjointCochain e5;
	e5.add(5, Monomial(), 1);
	AdjointCochain expect;
	expect.add(6, Monomial({1}), -1);
	EXPECT_EQ(d_adjoint(Algebra::m0(), e5, 40), expect);

	AdjointCochain e1;
	e1.add(1, Monomial(), 1);
	AdjointCochain sum;
	for (int j = 2; j <= 5; ++j)
		sum.add(j + 1, Monomial({j}), 1);
	EXPECT_EQ(d_adjoint(Algebra::m0(), e1, 6), sum);

	AdjointCochain e3;
	e3.add(3, Monomial(), 1);
	AdjointCochain m2;
	m2.add(4, Monomial({1}), -1);
	m2.add(5, Monomial({2}), -1);
	EXPECT_EQ(d_adjoint(Algebra::m2(), e3, 40), m2);
}

TEST(Cochain, BlockExamples)
{
	auto m = block_matrix({Algebra::m0(), Coefficients::Trivial, 1, 3, std::nullopt});
	ASSERT_EQ(m.rows(), 1);
	ASSERT_EQ(m.cols(), 1);
	EXPECT_EQ(m.at(0, 0), 1);
	auto z = block_matrix({Algebra::m0(), Coefficients::Trivial, 1, 1, std::nullopt});
	EXPECT_EQ(z.nonzeros(), 0u);
	auto a = block_matrix({Algebra::m2(), Coefficients::Adjoint, 0, 2, 8});
	EXPECT_EQ(kernel_basis(a).size(), 0u);
}

TEST(Cochain, DSquaredZero)
{
	std::mt19937 rng(3);
	for (auto alg : {Algebra::m0(), Algebra::m2(), Algebra::l1(), Algebra::m0_quotient(9)}) {
		for (int t = 0; t < 40; ++t) {
			int degree = 1 + t % 3;
			ScalarForm f;
			for (int w = 0; w < 3; ++w) {
				auto ms = monomials(degree, 8 + t % 7, 1, alg.max_index());
				if (!ms.empty())
					f.add(ms[(t * 7 + w) % ms.size()], 1 + w);
			}
			EXPECT_TRUE(d_scalar(alg, d_scalar(alg, f)).is_zero());
			auto x = random_adjoint(rng, degree, -(t % 5), 25);
			if (alg.max_index())
				continue;
			EXPECT_TRUE(d_adjoint(alg, d_adjoint(alg, x, 25), 25).is_zero()) << alg.name();
		}
	}
}

TEST(Cochain, TrivialCohomologyKnownValues)
{
	// H^1(m0) and H^1(m2) are spanned by e^1 and e^2.
	for (auto alg : {Algebra::m0(), Algebra::m2()})
		for (int k = 1; k <= 12; ++k)
			EXPECT_EQ(cohomology(alg, Coefficients::Trivial, 1, k).dimension, k <= 2 ? 1 : 0);
	// H^2(m0) at weight 2i+1 for i >= 2: omega(i,i+1).
	for (int k = 3; k <= 15; ++k)
		EXPECT_EQ(cohomology(Algebra::m0(), Coefficients::Trivial, 2, k).dimension, (k % 2 == 1 && k >= 5) ? 1 : 0);
}

TEST(Cochain, FiltrationCocycles)
{
	ScalarFamily psi11 = [](int l) {
		if (l == 1)
			return ScalarForm::generator(1);
		if (l == 2)
			return ScalarForm();
		return Rational(l - 2) * ScalarForm::generator(l);
	};
	EXPECT_TRUE(is_cocycle_mod_filtration(Algebra::m0(), psi11, 25));
	ScalarFamily only_e2 = [](int l) { return l == 2 ? ScalarForm::generator(2) : ScalarForm(); };
	EXPECT_FALSE(is_cocycle_mod_filtration(Algebra::m0(), only_e2, 10));
	ScalarFamily tau = [](int l) { return Rational(l) * ScalarForm::generator(l); };
	EXPECT_TRUE(is_cocycle_mod_filtration(Algebra::m2(), tau, 25));
	ScalarFamily mixed = [](int l) { return l == 1 ? ScalarForm::generator(1) : ScalarForm::generator(l + 1); };
	EXPECT_THROW(is_cocycle_mod_filtration(Algebra::m0(), mixed, 10), std::invalid_argument);
}

TEST(Cochain, AdjointCochainBookkeeping)
{
	AdjointCochain x;
	x.add(4, Monomial({2, 3}), 2);
	x.add(6, Monomial({2, 5}), -1);
	EXPECT_EQ(x.degree(), 2);
	EXPECT_EQ(x.weight(), -1);
	EXPECT_EQ(x.truncated(5).size(), 1u);
	EXPECT_EQ(x.component(6), form({{{2, 5}, -1}}));
	EXPECT_THROW(x.add(0, Monomial({1}), 1), std::invalid_argument);
	EXPECT_EQ(parse_coefficients("adjoint"), Coefficients::Adjoint);
	EXPECT_THROW(parse_coefficients("twisted"), std::invalid_argument);
}
