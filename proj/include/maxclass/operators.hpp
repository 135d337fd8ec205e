#pragma once

#include "maxclass/cochain.hpp"
#include "maxclass/exterior.hpp"
#include "maxclass/labels.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace maxclass {

/// D1: e^2 -> 0, e^i -> e^{i-1}; derivation on forms in e^2, e^3, ...
ScalarForm apply_D1(const ScalarForm& f);
/// Right inverse of D1: xi ^ e^i -> sum_l (-1)^l D1^l(xi) ^ e^{i+1+l}.
ScalarForm apply_Dminus1(const ScalarForm& f);
/// D2: e^1, e^2, e^4 -> 0, e^3 -> e^1, e^i -> e^{i-2} for i >= 5.
ScalarForm apply_D2(const ScalarForm& f);

/// Linear extension of omega(eta ^ e^{i+1}) over monomials ending in e^i ^ e^{i+1}.
ScalarForm omega_of(const ScalarForm& f);
ScalarForm omega_cocycle(const std::vector<int>& I);
ScalarForm w_cocycle(const std::vector<int>& I);

/// Explicit first step D~_{-1} w_I; satisfies d x = e^1 ^ w_I in m2.
ScalarForm tilde_Dminus1_explicit(const std::vector<int>& I);

/// Forms x_0 = w, x_1, x_2, ... in the m2 complex with
/// d x_j = e^1 ^ x_{j-1} + e^2 ^ x_{j-2}. Every x_j with j >= 1 is normalised to have
/// no monomial whose last three indices are consecutive, so the resulting Phi
/// cochains satisfy the evaluation (Kronecker) property.
class TildeDminus1Chain {
public:
	/// Chain of the basic cocycle w_I.
	explicit TildeDminus1Chain(std::vector<int> I);
	/// Chain of an arbitrary closed form; x_1 is solved for as well.
	explicit TildeDminus1Chain(ScalarForm w);

	const ScalarForm& at(int j);
	const std::vector<int>& index() const { return I_; }

private:
	ScalarForm next(int j);

	std::vector<int> I_;
	std::vector<ScalarForm> xs_;
	std::mutex lock_;
};

/// Shared chains of the basic cocycles, keyed by I.
std::shared_ptr<TildeDminus1Chain> tilde_chain(const std::vector<int>& I);
/// D~_{-1}^j w for a closed m2 form w (j >= 1).
ScalarForm tilde_Dminus1(const ScalarForm& w, int j);

/// Solves d x = rhs in the m2 scalar complex; throws std::runtime_error("inconsistent").
ScalarForm m2_preimage(const ScalarForm& rhs);

AdjointCochain psi_cochain(const CocycleLabel& label, int W);
AdjointCochain phi_cochain(const CocycleLabel& label, int W);
/// sum_j e_{r+j} (x) D_{-1}^j omega_I without any admissibility check.
AdjointCochain psi_series(const std::vector<int>& I, int r, int W);
/// Dispatches on Psi/Phi labels; scalar labels throw std::invalid_argument.
AdjointCochain label_cochain(const Algebra& alg, const CocycleLabel& label, int W);
ScalarForm label_form(const Algebra& alg, const CocycleLabel& label);

/// tau = Psi[1,1] + 2 Psi[2,2] = sum_j j e_j (x) e^j.
AdjointCochain grading_derivation(int W);

struct GeneratorMultiple {
	Rational coefficient;
	int index = 0; // 0 when the value is zero
};
/// x(e_{a_1}, ..., e_{a_q}) with the antisymmetric extension for unsorted args.
GeneratorMultiple eval_cochain(const AdjointCochain& x, const std::vector<int>& args);

/// Representative of the class of a closed form with all image pivots cleared.
ScalarForm cohomology_normal_form(const Algebra& alg, const ScalarForm& f);
bool cohomologous(const Algebra& alg, const ScalarForm& a, const ScalarForm& b);
/// wedge(a, b) in normal form; both inputs must be closed.
ScalarForm cup_product(const Algebra& alg, const ScalarForm& a, const ScalarForm& b);

/// Coordinates of the class of f in the census label basis of its block.
std::vector<std::pair<CocycleLabel, Rational>> class_coordinates(const Algebra& alg, const ScalarForm& f);

} // namespace maxclass
