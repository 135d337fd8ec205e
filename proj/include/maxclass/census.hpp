#pragma once

#include "maxclass/cochain.hpp"
#include "maxclass/graded_lie.hpp"
#include "maxclass/labels.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxclass {

/// Partitions of k into exactly q positive parts.
std::int64_t partition_count(int q, int k);

/// Increasing tuples of `head` free entries (>= min_first) followed by a tail of
/// `tail` consecutive successors of the last one, with total weight `weight`.
std::vector<std::vector<int>> tail_tuples(int head, int tail, int weight, int min_first);

/// Basis labels of H^q_lambda for m0 or m2.
std::vector<CocycleLabel> enumerate_scalar_labels(const Algebra& alg, int degree, int weight);

struct CensusResult {
	Algebra alg = Algebra::m0();
	Coefficients mode = Coefficients::Adjoint;
	int degree = 0;
	int grade = 0;
	std::optional<int> cap;
	std::vector<CocycleLabel> labels;
	/// The label pattern continues past the cap, so the component is infinite.
	bool unbounded = false;
	/// Labels where the printed exclusion inequalities disagree with the rule used.
	std::vector<std::string> divergences;
};

/// Labels of H^degree_mu(alg, alg) with target index <= cap.
CensusResult census_adjoint(const Algebra& alg, int degree, int mu, int cap);

/// Reason the label is not a basis class, or nullopt if it is admissible.
std::optional<std::string> admissibility_violation(const Algebra& alg, const CocycleLabel& label);

/// The printed inequalities for m2 labels Phi[(I),r]; reason or nullopt.
std::optional<std::string> printed_m2_violation(const std::vector<int>& I, int r);

/// True when e_r (x) w_I is hit by a higher differential from e_1 (x) w_J or e_2 (x) w_J.
bool m2_target_killed(const std::vector<int>& I, int r);

/// Brute-force dimension of one homogeneous block of a finite quotient.
int quotient_oracle(const Algebra& quotient, Coefficients mode, int degree, int grade);
/// Sum over all grades.
int quotient_oracle_total(const Algebra& quotient, Coefficients mode, int degree);
/// Common value over the quotients of size n, n+1, n+2, or nullopt if they differ.
std::optional<int> stable_quotient_dim(const std::string& family, Coefficients mode, int degree, int grade, int n);

/// Dimension of the part of H^degree_mu(alg, alg) visible at module index <= W:
/// rank of the degree-q cocycles at cap W' restricted to indices <= W, minus the
/// rank of the coboundaries at cap W. Needs W' large enough to stabilise.
int adjoint_stable_dim(const Algebra& alg, int degree, int mu, int W, int W_outer);

} // namespace maxclass
