#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace maxclass {

enum class AlgebraKind { M0, M2, L1, M0Quotient, M2Quotient };

/// c * e_index; coefficient 0 means the bracket vanishes.
struct BracketTerm {
	std::int64_t coefficient = 0;
	int index = 0;

	bool operator==(const BracketTerm&) const = default;
};

/// An N-graded Lie algebra [e_i, e_j] = c_ij e_{i+j}, given by its coefficient
/// rule rather than a table. Quotients reuse the parent rule with e_k = 0 for k > n.
class Algebra {
public:
	static Algebra m0();
	static Algebra m2();
	static Algebra l1();
	static Algebra m0_quotient(int n);
	static Algebra m2_quotient(int n);

	/// "m0", "m2", "l1", "m0:n", "m2:n".
	static Algebra parse(std::string_view text);

	AlgebraKind kind() const { return kind_; }
	bool is_quotient() const { return kind_ == AlgebraKind::M0Quotient || kind_ == AlgebraKind::M2Quotient; }

	/// Highest generator index for quotients; nullopt for the infinite algebras.
	std::optional<int> max_index() const;
	bool has_generator(int i) const { return i >= 1 && (!max_index() || i <= *max_index()); }

	BracketTerm bracket(int i, int j) const;

	/// Name of the parent algebra family: "m0", "m2" or "l1".
	std::string family() const;
	std::string name() const;

	bool operator==(const Algebra&) const = default;

private:
	Algebra(AlgebraKind kind, int n) : kind_(kind), n_(n) {}

	AlgebraKind kind_;
	int n_;
};

/// Jacobi identity on all triples i < j < k with i + j + k <= cap.
bool jacobi_check(const Algebra& algebra, int cap);

} // namespace maxclass
