#pragma once

#include <optional>
#include <string>
#include <vector>

namespace maxclass {

enum class Family { Generator, Omega, W, Psi, PsiSpecial, Phi, PhiSpecial };

/// Symbolic name of a basis class. For adjoint families the cochain weight is
/// target - sum(indices) in every case, special families included:
///   Psi[1,1], Psi[1,2], Psi[2,l+2]          indices {1} or {2}
///   Phi[1,1], Phi[2,l+2]                    indices {1} or {2}
///   Phi[2,3,m], Phi[3,4,l]                  indices {2,3} or {3,4}
/// Omega with indices {2,3} or {3,4} also names the two degree-2 classes of m2.
struct CocycleLabel {
	Family family = Family::Omega;
	std::vector<int> indices;
	std::optional<int> target;

	int degree() const;
	int index_weight() const;
	/// lambda for scalar labels, mu for adjoint ones.
	int grade() const;

	std::string to_string() const;

	auto operator<=>(const CocycleLabel&) const = default;
};

bool is_adjacent_tuple(const std::vector<int>& I);        // i_1 >= 2, tail i_q, i_q+1
bool is_doubly_adjacent_tuple(const std::vector<int>& I); // i_1 >= 3, tail i_q, i_q+1, i_q+2

/// Parses the to_string forms: "e^1", "omega(3,4)", "w(3,4,5)", "Psi[(5,6),4]",
/// "Psi[1,1]", "Phi[(3,4,5),6]", "Phi[2,3,7]". Throws std::invalid_argument.
CocycleLabel parse_label(const std::string& text);

std::vector<int> parse_index_list(const std::string& text);
std::string join_indices(const std::vector<int>& I);

} // namespace maxclass
