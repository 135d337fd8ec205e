#include "maxclass/graded_lie.hpp"

#include <charconv>
#include <stdexcept>

namespace maxclass {

Algebra Algebra::m0() { return Algebra(AlgebraKind::M0, 0); }
Algebra Algebra::m2() { return Algebra(AlgebraKind::M2, 0); }
Algebra Algebra::l1() { return Algebra(AlgebraKind::L1, 0); }

Algebra Algebra::m0_quotient(int n)
{
	if (n < 2)
		throw std::invalid_argument("m0 quotient needs n >= 2");
	return Algebra(AlgebraKind::M0Quotient, n);
}

Algebra Algebra::m2_quotient(int n)
{
	if (n < 3)
		throw std::invalid_argument("m2 quotient needs n >= 3");
	return Algebra(AlgebraKind::M2Quotient, n);
}

Algebra Algebra::parse(std::string_view text)
{
	if (text == "m0")
		return m0();
	if (text == "m2")
		return m2();
	if (text == "l1")
		return l1();
	auto colon = text.find(':');
	if (colon != std::string_view::npos) {
		auto head = text.substr(0, colon);
		auto tail = text.substr(colon + 1);
		int n = 0;
		auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
		if (ec != std::errc() || ptr != tail.data() + tail.size())
			throw std::invalid_argument("bad quotient dimension in '" + std::string(text) + "'");
		if (head == "m0")
			return m0_quotient(n);
		if (head == "m2")
			return m2_quotient(n);
	}
	throw std::invalid_argument("unknown algebra '" + std::string(text) + "' (expected m0, m2, l1, m0:n, m2:n)");
}

std::optional<int> Algebra::max_index() const
{
	if (is_quotient())
		return n_;
	return std::nullopt;
}

BracketTerm Algebra::bracket(int i, int j) const
{
	const int target = i + j;
	if (i == j || i < 1 || j < 1 || (is_quotient() && (i > n_ || j > n_ || target > n_)))
		return {0, target};

	std::int64_t sign = 1;
	if (i > j) {
		std::swap(i, j);
		sign = -1;
	}
	std::int64_t c = 0;
	switch (kind_) {
	case AlgebraKind::M0:
	case AlgebraKind::M0Quotient:
		c = (i == 1) ? 1 : 0;
		break;
	case AlgebraKind::M2:
	case AlgebraKind::M2Quotient:
		c = (i == 1 || (i == 2 && j >= 3)) ? 1 : 0;
		break;
	case AlgebraKind::L1:
		c = j - i;
		break;
	}
	return {sign * c, target};
}

std::string Algebra::family() const
{
	switch (kind_) {
	case AlgebraKind::M0:
	case AlgebraKind::M0Quotient:
		return "m0";
	case AlgebraKind::M2:
	case AlgebraKind::M2Quotient:
		return "m2";
	case AlgebraKind::L1:
		return "l1";
	}
	return "";
}

std::string Algebra::name() const
{
	if (is_quotient())
		return family() + ":" + std::to_string(n_);
	return family();
}

bool jacobi_check(const Algebra& algebra, int cap)
{
	// Every term of the Jacobiator lands in weight i + j + k, so one scalar per triple.
	auto nested = [&](int a, int b, int c) -> std::int64_t {
		auto inner = algebra.bracket(a, b);
		if (inner.coefficient == 0)
			return 0;
		return inner.coefficient * algebra.bracket(inner.index, c).coefficient;
	};
	for (int i = 1; i <= cap; ++i)
		for (int j = i + 1; i + j <= cap; ++j)
			for (int k = j + 1; i + j + k <= cap; ++k)
				if (nested(i, j, k) + nested(j, k, i) + nested(k, i, j) != 0)
					return false;
	return true;
}

} // namespace maxclass
