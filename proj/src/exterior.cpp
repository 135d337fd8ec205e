#include "maxclass/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maxclass {

Monomial::Monomial(std::vector<int> indices) : indices_(std::move(indices))
{
	for (std::size_t k = 0; k < indices_.size(); ++k) {
		if (indices_[k] < 1)
			throw std::invalid_argument("monomial index must be positive");
		if (k > 0 && indices_[k - 1] >= indices_[k])
			throw std::invalid_argument("monomial indices must be strictly increasing");
	}
}

int Monomial::weight() const
{
	return std::accumulate(indices_.begin(), indices_.end(), 0);
}

bool Monomial::contains(int index) const
{
	return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::string Monomial::to_string() const
{
	if (indices_.empty())
		return "1";
	std::string out;
	for (int i : indices_) {
		if (!out.empty())
			out += '^';
		out += "e^" + std::to_string(i);
	}
	return out;
}

MergeResult canonicalize(std::vector<int> v)
{
	// Insertion sort; the lists are short and the inversion count gives the sign.
	int sign = 1;
	for (std::size_t i = 1; i < v.size(); ++i) {
		for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
			if (v[j - 1] == v[j])
				return {0, {}};
			std::swap(v[j - 1], v[j]);
			sign = -sign;
		}
	}
	MergeResult r;
	r.sign = sign;
	r.monomial = Monomial(std::move(v));
	return r;
}

MergeResult merge(const Monomial& a, const Monomial& b)
{
	const auto& x = a.indices();
	const auto& y = b.indices();
	std::vector<int> out;
	out.reserve(x.size() + y.size());
	// Each element of b jumps over the elements of a that are larger than it.
	int inversions = 0;
	std::size_t i = 0, j = 0;
	while (i < x.size() || j < y.size()) {
		if (j == y.size() || (i < x.size() && x[i] < y[j])) {
			out.push_back(x[i++]);
		} else if (i == x.size() || y[j] < x[i]) {
			inversions += static_cast<int>(x.size() - i);
			out.push_back(y[j++]);
		} else {
			return {0, {}};
		}
	}
	MergeResult r;
	r.sign = (inversions % 2) ? -1 : 1;
	r.monomial = Monomial(std::move(out));
	return r;
}

void ScalarForm::add(const Monomial& m, const Rational& c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void ScalarForm::add(const ScalarForm& other, const Rational& scale)
{
	if (scale == 0)
		return;
	for (const auto& [m, c] : other.terms_)
		add(m, scale * c);
}

Rational ScalarForm::coefficient(const Monomial& m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> ScalarForm::degree() const
{
	std::optional<int> d;
	for (const auto& [m, c] : terms_) {
		if (d && *d != m.degree())
			return std::nullopt;
		d = m.degree();
	}
	return d;
}

std::optional<int> ScalarForm::weight() const
{
	std::optional<int> w;
	for (const auto& [m, c] : terms_) {
		if (w && *w != m.weight())
			return std::nullopt;
		w = m.weight();
	}
	return w;
}

ScalarForm ScalarForm::without_index(int index) const
{
	ScalarForm out;
	for (const auto& [m, c] : terms_)
		if (!m.contains(index))
			out.terms_.emplace_hint(out.terms_.end(), m, c);
	return out;
}

ScalarForm ScalarForm::operator-() const
{
	ScalarForm out(*this);
	for (auto& [m, c] : out.terms_)
		c = -c;
	return out;
}

ScalarForm& ScalarForm::operator*=(const Rational& c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [m, v] : terms_)
		v *= c;
	return *this;
}

std::string ScalarForm::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (const auto& [m, c] : terms_) {
		Rational a = abs(c);
		if (out.empty())
			out += (c < 0) ? "-" : "";
		else
			out += (c < 0) ? " - " : " + ";
		if (a != 1)
			out += maxclass::to_string(a) + "*";
		out += m.to_string();
	}
	return out;
}

ScalarForm operator+(ScalarForm a, const ScalarForm& b) { return a += b; }
ScalarForm operator-(ScalarForm a, const ScalarForm& b) { return a -= b; }
ScalarForm operator*(const Rational& c, ScalarForm f) { return f *= c; }

ScalarForm wedge(const ScalarForm& f, const ScalarForm& g)
{
	ScalarForm out;
	for (const auto& [a, ca] : f.terms())
		for (const auto& [b, cb] : g.terms()) {
			auto r = merge(a, b);
			if (r.sign != 0)
				out.add(r.monomial, r.sign * ca * cb);
		}
	return out;
}

namespace {

void collect(int remaining, int weight, int start, std::optional<int> max_index, std::vector<int>& prefix, std::vector<Monomial>& out)
{
	if (remaining == 0) {
		if (weight == 0)
			out.emplace_back(prefix);
		return;
	}
	if (remaining == 1) {
		if (weight >= start && (!max_index || weight <= *max_index)) {
			prefix.push_back(weight);
			out.emplace_back(prefix);
			prefix.pop_back();
		}
		return;
	}
	// Smallest completion from i is i + (i+1) + ... + (i+remaining-1).
	for (int i = start; i * remaining + remaining * (remaining - 1) / 2 <= weight; ++i) {
		if (max_index && i > *max_index)
			break;
		prefix.push_back(i);
		collect(remaining - 1, weight - i, i + 1, max_index, prefix, out);
		prefix.pop_back();
	}
}

} // namespace

std::vector<Monomial> monomials(int degree, int weight, int min_index, std::optional<int> max_index)
{
	std::vector<Monomial> out;
	if (degree < 0)
		return out;
	std::vector<int> prefix;
	collect(degree, weight, std::max(min_index, 1), max_index, prefix, out);
	return out;
}

} // namespace maxclass
