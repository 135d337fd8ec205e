#pragma once

#include "maxclass/rational.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace maxclass {

/// e^{i_1} ^ ... ^ e^{i_q} with i_1 < ... < i_q; empty is the unit.
class Monomial {
public:
	Monomial() = default;
	/// Throws std::invalid_argument unless strictly increasing and positive.
	explicit Monomial(std::vector<int> indices);
	Monomial(std::initializer_list<int> indices) : Monomial(std::vector<int>(indices)) {}

	const std::vector<int>& indices() const { return indices_; }
	int degree() const { return static_cast<int>(indices_.size()); }
	int weight() const;
	bool contains(int index) const;
	bool empty() const { return indices_.empty(); }
	int front() const { return indices_.front(); }
	int back() const { return indices_.back(); }

	/// "e^2^e^3^e^7", or "1" for the unit.
	std::string to_string() const;

	auto operator<=>(const Monomial&) const = default;

private:
	std::vector<int> indices_;
};

/// Sign and sorted merge of a ^ b; sign 0 when an index repeats.
struct MergeResult {
	int sign = 0;
	Monomial monomial;
};
MergeResult merge(const Monomial& a, const Monomial& b);

/// Sorts an arbitrary index list, returning the permutation sign (0 on repeats).
MergeResult canonicalize(std::vector<int> indices);

class ScalarForm {
public:
	using Terms = std::map<Monomial, Rational>;

	ScalarForm() = default;
	ScalarForm(const Monomial& m, const Rational& c = 1) { add(m, c); }

	static ScalarForm generator(int index) { return ScalarForm(Monomial{index}); }

	void add(const Monomial& m, const Rational& c);
	void add(const ScalarForm& other, const Rational& scale = 1);

	Rational coefficient(const Monomial& m) const;
	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	/// Defined iff all monomials share it; nullopt for zero or mixed forms.
	std::optional<int> degree() const;
	std::optional<int> weight() const;

	/// Drops every monomial containing e^index.
	ScalarForm without_index(int index) const;

	ScalarForm operator-() const;
	ScalarForm& operator+=(const ScalarForm& o) { add(o); return *this; }
	ScalarForm& operator-=(const ScalarForm& o) { add(o, -1); return *this; }
	ScalarForm& operator*=(const Rational& c);

	bool operator==(const ScalarForm&) const = default;

	/// "2*e^1^e^4 - e^2^e^3", "0" for zero.
	std::string to_string() const;

private:
	Terms terms_;
};

ScalarForm operator+(ScalarForm a, const ScalarForm& b);
ScalarForm operator-(ScalarForm a, const ScalarForm& b);
ScalarForm operator*(const Rational& c, ScalarForm f);

ScalarForm wedge(const ScalarForm& f, const ScalarForm& g);

/// All monomials of the given degree and weight with indices in [min_index, max_index].
std::vector<Monomial> monomials(int degree, int weight, int min_index = 1, std::optional<int> max_index = std::nullopt);

} // namespace maxclass
