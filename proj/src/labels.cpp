#include "maxclass/labels.hpp"

#include <charconv>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace maxclass {

int CocycleLabel::degree() const
{
	switch (family) {
	case Family::Generator:
		return 1;
	case Family::PsiSpecial:
		return 1;
	case Family::PhiSpecial:
		return indices.size() == 1 ? 1 : 2;
	default:
		return static_cast<int>(indices.size());
	}
}

int CocycleLabel::index_weight() const
{
	return std::accumulate(indices.begin(), indices.end(), 0);
}

int CocycleLabel::grade() const
{
	if (target)
		return *target - index_weight();
	return index_weight();
}

std::string join_indices(const std::vector<int>& I)
{
	std::string out;
	for (int i : I) {
		if (!out.empty())
			out += ',';
		out += std::to_string(i);
	}
	return out;
}

std::string CocycleLabel::to_string() const
{
	const std::string r = target ? std::to_string(*target) : "?";
	switch (family) {
	case Family::Generator:
		return "e^" + std::to_string(indices.at(0));
	case Family::Omega:
		return "omega(" + join_indices(indices) + ")";
	case Family::W:
		return "w(" + join_indices(indices) + ")";
	case Family::Psi:
		return "Psi[(" + join_indices(indices) + ")," + r + "]";
	case Family::PsiSpecial:
		return "Psi[" + join_indices(indices) + "," + r + "]";
	case Family::Phi:
		return "Phi[(" + join_indices(indices) + ")," + r + "]";
	case Family::PhiSpecial:
		return "Phi[" + join_indices(indices) + "," + r + "]";
	}
	return "";
}

bool is_adjacent_tuple(const std::vector<int>& I)
{
	if (I.size() < 2 || I.front() < 2)
		return false;
	for (std::size_t k = 1; k < I.size(); ++k)
		if (I[k - 1] >= I[k])
			return false;
	return I[I.size() - 1] == I[I.size() - 2] + 1;
}

bool is_doubly_adjacent_tuple(const std::vector<int>& I)
{
	if (I.size() < 3 || I.front() < 3)
		return false;
	for (std::size_t k = 1; k < I.size(); ++k)
		if (I[k - 1] >= I[k])
			return false;
	const std::size_t n = I.size();
	return I[n - 1] == I[n - 2] + 1 && I[n - 2] == I[n - 3] + 1;
}

std::vector<int> parse_index_list(const std::string& text)
{
	std::vector<int> out;
	std::size_t pos = 0;
	if (text.empty())
		throw std::invalid_argument("empty index list");
	while (pos <= text.size()) {
		std::size_t comma = text.find(',', pos);
		if (comma == std::string::npos)
			comma = text.size();
		std::string piece = text.substr(pos, comma - pos);
		int value = 0;
		auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
		if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
			throw std::invalid_argument("bad index list '" + text + "'");
		out.push_back(value);
		pos = comma + 1;
	}
	return out;
}

CocycleLabel parse_label(const std::string& text)
{
	static const std::regex generator(R"(e\^(\d+))");
	static const std::regex scalar(R"((omega|w)\(([\d,]+)\))");
	static const std::regex tuple(R"((Psi|Phi)\[\(([\d,]+)\),(\d+)\])");
	static const std::regex special(R"((Psi|Phi)\[([\d,]+),(\d+)\])");
	std::smatch m;
	CocycleLabel label;
	if (std::regex_match(text, m, generator)) {
		label.family = Family::Generator;
		label.indices = {std::stoi(m[1])};
	} else if (std::regex_match(text, m, scalar)) {
		label.family = m[1] == "omega" ? Family::Omega : Family::W;
		label.indices = parse_index_list(m[2]);
	} else if (std::regex_match(text, m, tuple)) {
		label.family = m[1] == "Psi" ? Family::Psi : Family::Phi;
		label.indices = parse_index_list(m[2]);
		label.target = std::stoi(m[3]);
	} else if (std::regex_match(text, m, special)) {
		label.family = m[1] == "Psi" ? Family::PsiSpecial : Family::PhiSpecial;
		label.indices = parse_index_list(m[2]);
		label.target = std::stoi(m[3]);
	} else {
		throw std::invalid_argument("unrecognised label '" + text + "'");
	}
	return label;
}

} // namespace maxclass
