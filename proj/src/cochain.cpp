#include "maxclass/cochain.hpp"

#include <set>
#include <stdexcept>

namespace maxclass {

ScalarForm d_generator(const Algebra& alg, int k)
{
	ScalarForm out;
	for (int i = 1; 2 * i < k; ++i) {
		auto b = alg.bracket(i, k - i);
		if (b.coefficient != 0)
			out.add(Monomial{i, k - i}, Rational(static_cast<long>(b.coefficient)));
	}
	return out;
}

namespace {

// d on one monomial; sign (-1)^p for the generator at position p.
void d_monomial(const Algebra& alg, const Monomial& m, const Rational& c, ScalarForm& out)
{
	const auto& idx = m.indices();
	for (std::size_t p = 0; p < idx.size(); ++p) {
		const int k = idx[p];
		for (int i = 1; 2 * i < k; ++i) {
			auto b = alg.bracket(i, k - i);
			if (b.coefficient == 0)
				continue;
			std::vector<int> v(idx.begin(), idx.begin() + p);
			v.push_back(i);
			v.push_back(k - i);
			v.insert(v.end(), idx.begin() + p + 1, idx.end());
			auto r = canonicalize(std::move(v));
			if (r.sign == 0)
				continue;
			int sign = (p % 2 ? -1 : 1) * r.sign;
			out.add(r.monomial, c * static_cast<long>(sign * b.coefficient));
		}
	}
}

} // namespace

ScalarForm d_scalar(const Algebra& alg, const ScalarForm& f)
{
	ScalarForm out;
	for (const auto& [m, c] : f.terms())
		d_monomial(alg, m, c, out);
	return out;
}

void AdjointCochain::add(int l, const Monomial& mon, const Rational& c)
{
	if (c == 0)
		return;
	if (l < 1)
		throw std::invalid_argument("module index must be positive");
	auto [it, inserted] = terms_.try_emplace(AdjointKey{l, mon}, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void AdjointCochain::add(int l, const ScalarForm& f, const Rational& scale)
{
	for (const auto& [m, c] : f.terms())
		add(l, m, scale * c);
}

void AdjointCochain::add(const AdjointCochain& other, const Rational& scale)
{
	for (const auto& [k, c] : other.terms_)
		add(k.module_index, k.mon, scale * c);
}

Rational AdjointCochain::coefficient(int l, const Monomial& mon) const
{
	auto it = terms_.find(AdjointKey{l, mon});
	return it == terms_.end() ? Rational(0) : it->second;
}

ScalarForm AdjointCochain::component(int l) const
{
	ScalarForm out;
	for (auto it = terms_.lower_bound(AdjointKey{l, Monomial()}); it != terms_.end() && it->first.module_index == l; ++it)
		out.add(it->first.mon, it->second);
	return out;
}

std::vector<int> AdjointCochain::module_indices() const
{
	std::vector<int> out;
	for (const auto& [k, c] : terms_)
		if (out.empty() || out.back() != k.module_index)
			out.push_back(k.module_index);
	return out;
}

AdjointCochain AdjointCochain::truncated(int W) const
{
	AdjointCochain out(W);
	for (const auto& [k, c] : terms_)
		if (k.module_index <= W)
			out.terms_.emplace_hint(out.terms_.end(), k, c);
	return out;
}

std::optional<int> AdjointCochain::degree() const
{
	std::optional<int> d;
	for (const auto& [k, c] : terms_) {
		if (d && *d != k.mon.degree())
			return std::nullopt;
		d = k.mon.degree();
	}
	return d;
}

std::optional<int> AdjointCochain::weight() const
{
	std::optional<int> w;
	for (const auto& [k, c] : terms_) {
		int mu = k.module_index - k.mon.weight();
		if (w && *w != mu)
			return std::nullopt;
		w = mu;
	}
	return w;
}

std::string AdjointCochain::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (const auto& [k, c] : terms_) {
		Rational a = abs(c);
		if (out.empty())
			out += (c < 0) ? "-" : "";
		else
			out += (c < 0) ? " - " : " + ";
		if (a != 1)
			out += maxclass::to_string(a) + "*";
		out += "e_" + std::to_string(k.module_index) + "(x)" + k.mon.to_string();
	}
	return out;
}

AdjointCochain d_adjoint(const Algebra& alg, const AdjointCochain& x, int W)
{
	AdjointCochain out(W);
	std::map<Monomial, ScalarForm> d_cache;
	for (const auto& [key, c] : x.terms()) {
		const int l = key.module_index;
		if (l > W)
			continue;
		for (int a = 1; l + a <= W; ++a) {
			auto b = alg.bracket(l, a);
			if (b.coefficient == 0)
				continue;
			auto r = merge(Monomial{a}, key.mon);
			if (r.sign != 0)
				out.add(l + a, r.monomial, c * static_cast<long>(r.sign * b.coefficient));
		}
		auto [it, inserted] = d_cache.try_emplace(key.mon);
		if (inserted)
			it->second = d_scalar(alg, ScalarForm(key.mon));
		out.add(l, it->second, c);
	}
	return out;
}

std::string to_string(Coefficients mode)
{
	return mode == Coefficients::Trivial ? "trivial" : "adjoint";
}

Coefficients parse_coefficients(const std::string& text)
{
	if (text == "trivial")
		return Coefficients::Trivial;
	if (text == "adjoint")
		return Coefficients::Adjoint;
	throw std::invalid_argument("unknown coefficients '" + text + "' (expected trivial or adjoint)");
}

namespace {

int effective_cap(const BlockSpec& spec)
{
	auto n = spec.alg.max_index();
	if (spec.cap && n)
		return std::min(*spec.cap, *n);
	if (spec.cap)
		return *spec.cap;
	if (n)
		return *n;
	throw std::invalid_argument("adjoint block of an infinite algebra needs a cap");
}

} // namespace

std::vector<AdjointKey> block_basis(const BlockSpec& spec)
{
	std::vector<AdjointKey> out;
	if (spec.degree < 0)
		return out;
	auto n = spec.alg.max_index();
	if (spec.mode == Coefficients::Trivial) {
		for (auto& m : monomials(spec.degree, spec.grade, 1, n))
			out.push_back({0, std::move(m)});
		return out;
	}
	const int W = effective_cap(spec);
	for (int l = 1; l <= W; ++l) {
		const int lambda = l - spec.grade;
		if (lambda < 0)
			continue;
		for (auto& m : monomials(spec.degree, lambda, 1, n))
			out.push_back({l, std::move(m)});
	}
	return out;
}

SparseMatrix block_matrix(const BlockSpec& spec)
{
	auto source = block_basis(spec);
	BlockSpec next = spec;
	next.degree = spec.degree + 1;
	auto target = block_basis(next);
	std::map<AdjointKey, int> row_of;
	for (std::size_t r = 0; r < target.size(); ++r)
		row_of.emplace(target[r], static_cast<int>(r));

	SparseMatrix m(static_cast<int>(target.size()), static_cast<int>(source.size()));
	for (std::size_t c = 0; c < source.size(); ++c) {
		SparseVector col;
		auto place = [&](const AdjointKey& k, const Rational& v) {
			auto it = row_of.find(k);
			if (it == row_of.end())
				throw std::logic_error("differential term " + k.mon.to_string() + " escapes its block");
			col[it->second] = v;
		};
		if (spec.mode == Coefficients::Trivial) {
			auto image = d_scalar(spec.alg, ScalarForm(source[c].mon));
			for (const auto& [mon, v] : image.terms())
				place({0, mon}, v);
		} else {
			AdjointCochain x;
			x.add(source[c].module_index, source[c].mon, 1);
			auto image = d_adjoint(spec.alg, x, effective_cap(spec));
			for (const auto& [k, v] : image.terms())
				place(k, v);
		}
		m.set_column(static_cast<int>(c), std::move(col));
	}
	return m;
}

CohomologyResult cohomology_dim(const BlockSpec& in, const BlockSpec& out)
{
	if (!(in.alg == out.alg) || in.mode != out.mode || in.grade != out.grade || in.cap != out.cap)
		throw std::invalid_argument("cohomology blocks must share algebra, mode, grade and cap");
	if (in.degree + 1 != out.degree)
		throw std::invalid_argument("cohomology blocks must have consecutive degrees");

	CohomologyResult result;
	result.basis = block_basis(out);
	SparseMatrix d_out = block_matrix(out);
	auto kernel = kernel_basis(d_out);

	Subspace span;
	if (in.degree >= 0) {
		SparseMatrix d_in = block_matrix(in);
		for (int c = 0; c < d_in.cols(); ++c)
			span.insert(d_in.column(c));
	}
	for (const auto& v : kernel) {
		SparseVector r = span.reduce(to_sparse(v));
		if (r.empty())
			continue;
		span.insert(r);
		result.representatives.push_back(std::move(r));
	}
	result.dimension = static_cast<int>(result.representatives.size());
	return result;
}

CohomologyResult cohomology(const Algebra& alg, Coefficients mode, int degree, int grade, std::optional<int> cap)
{
	BlockSpec in{alg, mode, degree - 1, grade, cap};
	BlockSpec out{alg, mode, degree, grade, cap};
	return cohomology_dim(in, out);
}

bool is_cocycle_mod_filtration(const Algebra& alg, const AdjointCochain& x, int W)
{
	if (!x.is_zero() && (!x.degree() || !x.weight()))
		throw std::invalid_argument("inhomogeneous family");
	return d_adjoint(alg, x.truncated(W), W).is_zero();
}

bool is_cocycle_mod_filtration(const Algebra& alg, const ScalarFamily& family, int W)
{
	AdjointCochain x(W);
	for (int l = 1; l <= W; ++l)
		x.add(l, family(l));
	return is_cocycle_mod_filtration(alg, x, W);
}

ScalarForm scalar_from_coordinates(const std::vector<AdjointKey>& basis, const SparseVector& v)
{
	ScalarForm out;
	for (const auto& [i, c] : v)
		out.add(basis.at(i).mon, c);
	return out;
}

AdjointCochain adjoint_from_coordinates(const std::vector<AdjointKey>& basis, const SparseVector& v)
{
	AdjointCochain out;
	for (const auto& [i, c] : v)
		out.add(basis.at(i).module_index, basis.at(i).mon, c);
	return out;
}

} // namespace maxclass
