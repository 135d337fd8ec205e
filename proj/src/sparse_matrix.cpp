#include "maxclass/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace maxclass {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), columns_(cols)
{
	if (rows < 0 || cols < 0)
		throw std::invalid_argument("negative matrix dimension");
}

void SparseMatrix::check(int r, int c) const
{
	if (r < 0 || r >= rows_ || c < 0 || c >= cols())
		throw std::out_of_range("matrix index out of range");
}

void SparseMatrix::set(int r, int c, const Rational& value)
{
	check(r, c);
	Rational v = value;
	v.canonicalize();
	if (v == 0)
		columns_[c].erase(r);
	else
		columns_[c][r] = std::move(v);
}

void SparseMatrix::add(int r, int c, const Rational& value)
{
	check(r, c);
	if (value == 0)
		return;
	auto [it, inserted] = columns_[c].try_emplace(r, value);
	if (inserted) {
		it->second.canonicalize();
	} else {
		it->second += value;
		if (it->second == 0)
			columns_[c].erase(it);
	}
}

Rational SparseMatrix::at(int r, int c) const
{
	check(r, c);
	auto it = columns_[c].find(r);
	return it == columns_[c].end() ? Rational(0) : it->second;
}

void SparseMatrix::set_column(int c, SparseVector v)
{
	if (c < 0 || c >= cols())
		throw std::out_of_range("column out of range");
	std::erase_if(v, [](const auto& e) { return e.second == 0; });
	if (!v.empty() && (v.begin()->first < 0 || v.rbegin()->first >= rows_))
		throw std::out_of_range("column entry outside row range");
	columns_[c] = std::move(v);
}

std::vector<SparseVector> SparseMatrix::row_vectors() const
{
	std::vector<SparseVector> out(rows_);
	for (int c = 0; c < cols(); ++c)
		for (const auto& [r, v] : columns_[c])
			out[r].emplace_hint(out[r].end(), c, v);
	return out;
}

std::size_t SparseMatrix::nonzeros() const
{
	std::size_t n = 0;
	for (const auto& col : columns_)
		n += col.size();
	return n;
}

DenseVector SparseMatrix::apply(const DenseVector& x) const
{
	if (static_cast<int>(x.size()) != cols())
		throw std::invalid_argument("vector length does not match column count");
	DenseVector y(rows_);
	for (int c = 0; c < cols(); ++c) {
		if (x[c] == 0)
			continue;
		for (const auto& [r, v] : columns_[c])
			y[r] += v * x[c];
	}
	return y;
}

SparseMatrix SparseMatrix::permute_columns(const std::vector<int>& order) const
{
	SparseMatrix out(rows_, static_cast<int>(order.size()));
	for (std::size_t c = 0; c < order.size(); ++c)
		out.columns_[c] = columns_.at(order[c]);
	return out;
}

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

IntRow to_integer_row(const SparseVector& v)
{
	Integer lcm = 1;
	for (const auto& [c, x] : v)
		mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
	IntRow row;
	row.reserve(v.size());
	for (const auto& [c, x] : v) {
		Integer n = x.get_num() * (lcm / x.get_den());
		row.emplace_back(c, std::move(n));
	}
	return row;
}

void remove_content(IntRow& row)
{
	if (row.empty())
		return;
	Integer g = 0;
	for (const auto& [c, x] : row) {
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
		if (g == 1)
			return;
	}
	for (auto& [c, x] : row)
		mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a*row - b*pivot, dropping the shared leading column.
IntRow combine(const IntRow& row, const Integer& a, const IntRow& pivot, const Integer& b)
{
	IntRow out;
	out.reserve(row.size() + pivot.size());
	std::size_t i = 0, j = 0;
	Integer tmp;
	while (i < row.size() || j < pivot.size()) {
		if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
			out.emplace_back(row[i].first, a * row[i].second);
			++i;
		} else if (i == row.size() || pivot[j].first < row[i].first) {
			out.emplace_back(pivot[j].first, -b * pivot[j].second);
			++j;
		} else {
			tmp = a * row[i].second - b * pivot[j].second;
			if (tmp != 0)
				out.emplace_back(row[i].first, tmp);
			++i;
			++j;
		}
	}
	remove_content(out);
	return out;
}

// Forward elimination: returns the echelon rows in pivot order.
std::vector<IntRow> forward(const std::vector<SparseVector>& rows)
{
	struct Entry {
		IntRow row;
		std::size_t id;
	};
	std::map<int, std::vector<Entry>> buckets;
	std::size_t next_id = 0;
	for (const auto& v : rows) {
		if (v.empty())
			continue;
		IntRow r = to_integer_row(v);
		remove_content(r);
		int lead = r.front().first;
		buckets[lead].push_back({std::move(r), next_id++});
	}

	std::vector<IntRow> echelon;
	while (!buckets.empty()) {
		auto node = buckets.extract(buckets.begin());
		auto& group = node.mapped();
		auto better = [](const Entry& x, const Entry& y) {
			if (x.row.size() != y.row.size())
				return x.row.size() < y.row.size();
			int cmp = mpz_cmpabs(x.row.front().second.get_mpz_t(), y.row.front().second.get_mpz_t());
			if (cmp != 0)
				return cmp < 0;
			return x.id < y.id;
		};
		auto best = std::min_element(group.begin(), group.end(), better);
		Entry pivot = std::move(*best);
		group.erase(best);
		const Integer& p = pivot.row.front().second;
		for (auto& e : group) {
			const Integer& q = e.row.front().second;
			Integer g;
			mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
			IntRow reduced = combine(e.row, p / g, pivot.row, q / g);
			if (reduced.empty())
				continue;
			int lead = reduced.front().first;
			buckets[lead].push_back({std::move(reduced), e.id});
		}
		echelon.push_back(std::move(pivot.row));
	}
	return echelon;
}

} // namespace

int Echelon::rank_of_rows(const std::vector<SparseVector>& rows)
{
	return static_cast<int>(forward(rows).size());
}

Echelon Echelon::of_rows(const std::vector<SparseVector>& rows)
{
	auto echelon = forward(rows);
	Echelon out;
	const std::size_t n = echelon.size();
	out.pivots_.resize(n);
	out.rows_.resize(n);
	std::map<int, std::size_t> pivot_slot;
	for (std::size_t k = 0; k < n; ++k) {
		out.pivots_[k] = echelon[k].front().first;
		pivot_slot[out.pivots_[k]] = k;
	}
	// Bottom-up: rows below are already reduced and carry no pivot columns but
	// their own, so a single pass over the original entries suffices.
	for (std::size_t k = n; k-- > 0;) {
		const IntRow& src = echelon[k];
		Rational lead(src.front().second);
		SparseVector row;
		for (const auto& [c, x] : src)
			row.emplace_hint(row.end(), c, Rational(x) / lead);
		for (const auto& [c, x] : src) {
			if (c == out.pivots_[k])
				continue;
			auto it = pivot_slot.find(c);
			if (it == pivot_slot.end())
				continue;
			auto found = row.find(c);
			if (found == row.end())
				continue;
			Rational factor = found->second;
			for (const auto& [cc, y] : out.rows_[it->second]) {
				auto [pos, inserted] = row.try_emplace(cc, -factor * y);
				if (!inserted) {
					pos->second -= factor * y;
					if (pos->second == 0)
						row.erase(pos);
				}
			}
		}
		out.rows_[k] = std::move(row);
	}
	return out;
}

int rank(const SparseMatrix& m)
{
	return Echelon::rank_of_rows(m.row_vectors());
}

std::vector<DenseVector> kernel_basis(const SparseMatrix& m)
{
	Echelon e = Echelon::of_rows(m.row_vectors());
	std::vector<bool> is_pivot(m.cols(), false);
	for (int p : e.pivot_columns())
		is_pivot[p] = true;
	std::vector<DenseVector> basis;
	for (int f = 0; f < m.cols(); ++f) {
		if (is_pivot[f])
			continue;
		DenseVector v(m.cols());
		v[f] = 1;
		for (int k = 0; k < e.rank(); ++k) {
			auto it = e.rows()[k].find(f);
			if (it != e.rows()[k].end())
				v[e.pivot_columns()[k]] = -it->second;
		}
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<SparseVector> solve_particular(const SparseMatrix& m, const SparseVector& b)
{
	if (!b.empty() && (b.begin()->first < 0 || b.rbegin()->first >= m.rows()))
		throw std::invalid_argument("right-hand side outside row range");
	auto rows = m.row_vectors();
	const int aug = m.cols();
	for (const auto& [r, v] : b)
		if (v != 0)
			rows[r][aug] = v;
	auto echelon = forward(rows);
	// Back-substitution on the augmented column alone; free variables stay zero,
	// which gives the same vector as reading it off the reduced echelon form.
	SparseVector x;
	for (std::size_t k = echelon.size(); k-- > 0;) {
		const IntRow& row = echelon[k];
		const int pivot = row.front().first;
		if (pivot == aug)
			return std::nullopt;
		Rational acc = 0;
		for (const auto& [c, v] : row) {
			if (c == aug) {
				acc += Rational(v);
			} else if (c != pivot) {
				auto it = x.find(c);
				if (it != x.end())
					acc -= Rational(v) * it->second;
			}
		}
		if (acc != 0)
			x[pivot] = acc / Rational(row.front().second);
	}
	return x;
}

std::optional<DenseVector> solve_particular(const SparseMatrix& m, const DenseVector& b)
{
	if (static_cast<int>(b.size()) != m.rows())
		throw std::invalid_argument("right-hand side length does not match row count");
	auto x = solve_particular(m, to_sparse(b));
	if (!x)
		return std::nullopt;
	return to_dense(*x, m.cols());
}

SparseVector Subspace::reduce(const SparseVector& v) const
{
	SparseVector out = v;
	for (const auto& [pivot, row] : rows_) {
		auto it = out.find(pivot);
		if (it == out.end())
			continue;
		Rational factor = it->second;
		for (const auto& [c, y] : row) {
			auto [pos, inserted] = out.try_emplace(c, -factor * y);
			if (!inserted) {
				pos->second -= factor * y;
				if (pos->second == 0)
					out.erase(pos);
			}
		}
	}
	return out;
}

bool Subspace::insert(const SparseVector& v)
{
	SparseVector r = reduce(v);
	if (r.empty())
		return false;
	const int pivot = r.begin()->first;
	Rational lead = r.begin()->second;
	for (auto& [c, y] : r)
		y /= lead;
	for (auto& [p, row] : rows_) {
		auto it = row.find(pivot);
		if (it == row.end())
			continue;
		Rational factor = it->second;
		for (const auto& [c, y] : r) {
			auto [pos, inserted] = row.try_emplace(c, -factor * y);
			if (!inserted) {
				pos->second -= factor * y;
				if (pos->second == 0)
					row.erase(pos);
			}
		}
	}
	rows_.emplace(pivot, std::move(r));
	return true;
}

SparseVector to_sparse(const DenseVector& v)
{
	SparseVector out;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (v[i] != 0)
			out.emplace_hint(out.end(), static_cast<int>(i), v[i]);
	return out;
}

DenseVector to_dense(const SparseVector& v, int size)
{
	DenseVector out(size);
	for (const auto& [i, x] : v) {
		if (i < 0 || i >= size)
			throw std::out_of_range("sparse index outside dense size");
		out[i] = x;
	}
	return out;
}

} // namespace maxclass
