#include "maxclass/sparse_matrix.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace maxclass;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Textbook dense Gaussian elimination over the rationals.
int dense_rank(Dense a)
{
	int rank = 0;
	int rows = static_cast<int>(a.size());
	int cols = rows ? static_cast<int>(a[0].size()) : 0;
	for (int c = 0; c < cols && rank < rows; ++c) {
		int p = rank;
		while (p < rows && a[p][c] == 0)
			++p;
		if (p == rows)
			continue;
		std::swap(a[p], a[rank]);
		for (int r = 0; r < rows; ++r) {
			if (r == rank || a[r][c] == 0)
				continue;
			Rational f = a[r][c] / a[rank][c];
			for (int k = c; k < cols; ++k)
				a[r][k] -= f * a[rank][k];
		}
		++rank;
	}
	return rank;
}

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density, Dense* dense)
{
	SparseMatrix m(rows, cols);
	dense->assign(rows, std::vector<Rational>(cols, 0));
	std::uniform_real_distribution<double> u(0, 1);
	std::uniform_int_distribution<int> v(-4, 4);
	for (int r = 0; r < rows; ++r)
		for (int c = 0; c < cols; ++c)
			if (u(rng) < density) {
				Rational x(v(rng), 1 + (r + c) % 3);
				x.canonicalize();
				m.set(r, c, x);
				(*dense)[r][c] = x;
			}
	return m;
}

} // namespace

TEST(Linalg, SpecExample)
{
	SparseMatrix m(2, 2);
	m.set(0, 0, 1);
	m.set(0, 1, 2);
	m.set(1, 0, 2);
	m.set(1, 1, 4);
	EXPECT_EQ(rank(m), 1);
	auto k = kernel_basis(m);
	ASSERT_EQ(k.size(), 1u);
	EXPECT_EQ(m.apply(k[0]), DenseVector({0, 0}));
	EXPECT_FALSE(solve_particular(m, DenseVector{1, 0}).has_value());
	auto x = solve_particular(m, DenseVector{1, 2});
	ASSERT_TRUE(x.has_value());
	EXPECT_EQ(m.apply(*x), DenseVector({1, 2}));
}

TEST(Linalg, RandomRankAgainstDenseOracle)
{
	std::mt19937 rng(2024);
	for (int t = 0; t < 150; ++t) {
		int rows = 1 + t % 13, cols = 1 + (t * 7) % 11;
		Dense dense;
		auto m = random_matrix(rng, rows, cols, 0.35, &dense);
		int r = rank(m);
		EXPECT_EQ(r, dense_rank(dense));
		auto k = kernel_basis(m);
		EXPECT_EQ(static_cast<int>(k.size()), cols - r);
		DenseVector zero(rows, 0);
		for (const auto& v : k)
			EXPECT_EQ(m.apply(v), zero);
		EXPECT_EQ(Echelon::rank_of_rows(m.row_vectors()), r);
	}
}

TEST(Linalg, RandomSolve)
{
	std::mt19937 rng(99);
	std::uniform_int_distribution<int> v(-5, 5);
	for (int t = 0; t < 100; ++t) {
		int rows = 2 + t % 9, cols = 2 + (t * 5) % 8;
		Dense dense;
		auto m = random_matrix(rng, rows, cols, 0.4, &dense);
		DenseVector x(cols);
		for (auto& e : x)
			e = v(rng);
		auto b = m.apply(x);
		auto y = solve_particular(m, b);
		ASSERT_TRUE(y.has_value());
		EXPECT_EQ(m.apply(*y), b);
		auto ys = solve_particular(m, to_sparse(b));
		ASSERT_TRUE(ys.has_value());
		EXPECT_EQ(m.apply(to_dense(*ys, cols)), b);
		// Consistency matches the rank test of the augmented matrix.
		DenseVector c(rows);
		for (auto& e : c)
			e = v(rng);
		Dense aug = dense;
		for (int r = 0; r < rows; ++r)
			aug[r].push_back(c[r]);
		EXPECT_EQ(solve_particular(m, c).has_value(), dense_rank(aug) == dense_rank(dense));
	}
}

TEST(Linalg, ColumnOrderIndependence)
{
	std::mt19937 rng(5);
	for (int t = 0; t < 60; ++t) {
		Dense dense;
		auto m = random_matrix(rng, 8, 9, 0.3, &dense);
		std::vector<int> order(9);
		std::iota(order.begin(), order.end(), 0);
		std::shuffle(order.begin(), order.end(), rng);
		auto p = m.permute_columns(order);
		EXPECT_EQ(rank(p), rank(m));
		for (const auto& v : kernel_basis(p))
			EXPECT_EQ(p.apply(v), DenseVector(8, 0));
	}
}

TEST(Linalg, SubspaceReduce)
{
	Subspace s;
	EXPECT_TRUE(s.insert({{0, 1}, {2, 1}}));
	EXPECT_TRUE(s.insert({{1, 2}, {2, 2}}));
	EXPECT_FALSE(s.insert({{0, 2}, {1, 2}, {2, 4}}));
	EXPECT_EQ(s.dimension(), 2);
	EXPECT_TRUE(s.contains({{0, 3}, {2, 3}}));
	auto r = s.reduce({{2, 1}});
	EXPECT_EQ(r.count(0), 0u);
	EXPECT_EQ(r.count(1), 0u);
}

TEST(Linalg, LargeEntriesStayExact)
{
	// Hilbert matrix: full rank, badly conditioned in floating point.
	int n = 10;
	SparseMatrix h(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			h.set(i, j, Rational(1, i + j + 1));
	EXPECT_EQ(rank(h), n);
	DenseVector ones(n, 1);
	auto x = solve_particular(h, h.apply(ones));
	ASSERT_TRUE(x.has_value());
	EXPECT_EQ(*x, ones);
}

