#pragma once

#include "maxclass/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace maxclass {

using SparseVector = std::map<int, Rational>;
using DenseVector = std::vector<Rational>;

/// Column-stored exact matrix; zeros are never stored.
class SparseMatrix {
public:
	SparseMatrix(int rows = 0, int cols = 0);

	int rows() const { return rows_; }
	int cols() const { return static_cast<int>(columns_.size()); }

	void set(int r, int c, const Rational& value);
	void add(int r, int c, const Rational& value);
	Rational at(int r, int c) const;

	const SparseVector& column(int c) const { return columns_.at(c); }
	void set_column(int c, SparseVector v);
	std::vector<SparseVector> row_vectors() const;
	std::size_t nonzeros() const;

	DenseVector apply(const DenseVector& x) const;
	/// Column c of the result is column order[c] of this matrix.
	SparseMatrix permute_columns(const std::vector<int>& order) const;

private:
	void check(int r, int c) const;

	int rows_;
	std::vector<SparseVector> columns_;
};

/// Reduced row echelon form of a list of row vectors. The forward pass is
/// fraction-free on integer rows; back-substitution is rational. Columns are
/// swept left to right, so the pivot columns and the RREF do not depend on
/// which row is picked inside a column.
class Echelon {
public:
	static Echelon of_rows(const std::vector<SparseVector>& rows);
	/// Forward pass only; cheaper when just the rank is wanted.
	static int rank_of_rows(const std::vector<SparseVector>& rows);

	int rank() const { return static_cast<int>(rows_.size()); }
	const std::vector<int>& pivot_columns() const { return pivots_; }
	/// Rows ordered by pivot column, leading coefficient 1.
	const std::vector<SparseVector>& rows() const { return rows_; }

private:
	std::vector<int> pivots_;
	std::vector<SparseVector> rows_;
};

int rank(const SparseMatrix& m);
/// One vector per free column, in increasing free-column order.
std::vector<DenseVector> kernel_basis(const SparseMatrix& m);
/// Particular solution with free variables zero, or nullopt when b is not in the image.
std::optional<DenseVector> solve_particular(const SparseMatrix& m, const DenseVector& b);
std::optional<SparseVector> solve_particular(const SparseMatrix& m, const SparseVector& b);

/// Span of inserted vectors, kept in reduced echelon form.
class Subspace {
public:
	int dimension() const { return static_cast<int>(rows_.size()); }
	/// Inserts v; returns false when v already lies in the span.
	bool insert(const SparseVector& v);
	/// Representative of v modulo the span with zero pivot coordinates.
	SparseVector reduce(const SparseVector& v) const;
	bool contains(const SparseVector& v) const { return reduce(v).empty(); }

private:
	std::map<int, SparseVector> rows_; // pivot column -> row with lead 1
};

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, int size);

} // namespace maxclass
