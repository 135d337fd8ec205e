#include "maxclass/rational.hpp"

#include <stdexcept>

namespace maxclass {

std::string to_string(const Rational& value)
{
	Rational canonical(value);
	canonical.canonicalize();
	if (canonical.get_den() == 1)
		return canonical.get_num().get_str();
	return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
	if (text.empty())
		throw std::invalid_argument("empty rational");
	Rational value;
	if (value.set_str(std::string(text), 10) != 0)
		throw std::invalid_argument("malformed rational: " + std::string(text));
	if (value.get_den() == 0)
		throw std::invalid_argument("zero denominator: " + std::string(text));
	value.canonicalize();
	return value;
}

} // namespace maxclass
