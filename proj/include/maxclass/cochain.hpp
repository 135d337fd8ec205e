#pragma once

#include "maxclass/exterior.hpp"
#include "maxclass/graded_lie.hpp"
#include "maxclass/sparse_matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace maxclass {

/// d on scalar forms: d e^k = sum_{i<j, i+j=k} c_ij e^i ^ e^j, extended as a
/// graded derivation. This is minus the textbook Chevalley-Eilenberg d.
ScalarForm d_scalar(const Algebra& alg, const ScalarForm& f);
ScalarForm d_generator(const Algebra& alg, int k);

/// e_l (x) mon. module_index 0 marks a scalar basis element inside blocks.
struct AdjointKey {
	int module_index = 0;
	Monomial mon;

	auto operator<=>(const AdjointKey&) const = default;
};

class AdjointCochain {
public:
	using Terms = std::map<AdjointKey, Rational>;

	AdjointCochain() = default;
	explicit AdjointCochain(std::optional<int> cap) : cap_(cap) {}

	void add(int l, const Monomial& mon, const Rational& c);
	void add(int l, const ScalarForm& f, const Rational& scale = 1);
	void add(const AdjointCochain& other, const Rational& scale = 1);

	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	Rational coefficient(int l, const Monomial& mon) const;
	/// Coefficient form of e_l.
	ScalarForm component(int l) const;
	std::vector<int> module_indices() const;

	std::optional<int> cap() const { return cap_; }
	void set_cap(std::optional<int> cap) { cap_ = cap; }
	/// Drops terms with module index above W and records the cap.
	AdjointCochain truncated(int W) const;

	std::optional<int> degree() const;
	/// mu = l - weight(mon), when shared by all terms.
	std::optional<int> weight() const;

	std::string to_string() const;

	bool operator==(const AdjointCochain& o) const { return terms_ == o.terms_; }

private:
	Terms terms_;
	std::optional<int> cap_;
};

/// All components of d x with module index <= W. They are exact because d never
/// lowers the module index.
AdjointCochain d_adjoint(const Algebra& alg, const AdjointCochain& x, int W);

enum class Coefficients { Trivial, Adjoint };

std::string to_string(Coefficients mode);
Coefficients parse_coefficients(const std::string& text);

struct BlockSpec {
	Algebra alg = Algebra::m0();
	Coefficients mode = Coefficients::Trivial;
	int degree = 0;
	int grade = 0;
	std::optional<int> cap; // required for adjoint blocks of infinite algebras
};

/// Trivial: monomials in lexicographic order (module_index 0).
/// Adjoint: ascending module index, then lexicographic monomial.
std::vector<AdjointKey> block_basis(const BlockSpec& spec);

/// Matrix of d from block (q, grade) to block (q+1, grade).
SparseMatrix block_matrix(const BlockSpec& spec);

struct CohomologyResult {
	int dimension = 0;
	std::vector<AdjointKey> basis;             // basis of the degree-q block
	std::vector<SparseVector> representatives; // coordinates in that basis
};

/// `in` describes d: C^{q-1} -> C^q and `out` d: C^q -> C^{q+1}.
CohomologyResult cohomology_dim(const BlockSpec& in, const BlockSpec& out);
CohomologyResult cohomology(const Algebra& alg, Coefficients mode, int degree, int grade, std::optional<int> cap = std::nullopt);

using ScalarFamily = std::function<ScalarForm(int)>;

/// True iff d of sum_{l<=W} e_l (x) family(l) vanishes in every module index <= W.
/// Throws std::invalid_argument("inhomogeneous family") on mixed bidegree.
bool is_cocycle_mod_filtration(const Algebra& alg, const ScalarFamily& family, int W);
bool is_cocycle_mod_filtration(const Algebra& alg, const AdjointCochain& x, int W);

/// Scalar form or adjoint cochain from block coordinates.
ScalarForm scalar_from_coordinates(const std::vector<AdjointKey>& basis, const SparseVector& v);
AdjointCochain adjoint_from_coordinates(const std::vector<AdjointKey>& basis, const SparseVector& v);

} // namespace maxclass
