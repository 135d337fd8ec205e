#include "maxclass/record.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace maxclass {

using nlohmann::json;

std::vector<RecordTerm> record_terms(const ScalarForm& f)
{
	std::vector<RecordTerm> out;
	for (const auto& [m, c] : f.terms())
		out.push_back({std::nullopt, m.indices(), c});
	return out;
}

std::vector<RecordTerm> record_terms(const AdjointCochain& x)
{
	std::vector<RecordTerm> out;
	for (const auto& [k, c] : x.terms())
		out.push_back({k.module_index, k.mon.indices(), c});
	return out;
}

json to_json(const ResultRecord& r)
{
	json j = r.extras.is_object() ? r.extras : json::object();
	j["algebra"] = r.algebra;
	j["mode"] = r.mode;
	j["degree"] = r.degree;
	j["grade"] = r.grade;
	j["cap"] = r.cap ? json(*r.cap) : json(nullptr);
	j["dimension"] = r.dimension ? json(*r.dimension) : json("infinite");
	json basis = json::array();
	for (const auto& b : r.basis) {
		json terms = json::array();
		for (const auto& t : b.terms)
			terms.push_back({{"module_index", t.module_index ? json(*t.module_index) : json(nullptr)},
			                 {"indices", t.indices},
			                 {"coeff", to_string(t.coeff)}});
		basis.push_back({{"label", b.label}, {"terms", std::move(terms)}});
	}
	j["basis"] = std::move(basis);
	return j;
}

ResultRecord record_from_json(const json& j)
{
	try {
		ResultRecord r;
		r.algebra = j.at("algebra").get<std::string>();
		r.mode = j.at("mode").get<std::string>();
		r.degree = j.at("degree").get<int>();
		r.grade = j.at("grade").get<int>();
		if (!j.at("cap").is_null())
			r.cap = j.at("cap").get<int>();
		const auto& dim = j.at("dimension");
		if (dim.is_string()) {
			if (dim.get<std::string>() != "infinite")
				throw std::invalid_argument("dimension must be an integer or \"infinite\"");
		} else {
			r.dimension = dim.get<long>();
		}
		for (const auto& b : j.at("basis")) {
			BasisEntry e;
			e.label = b.at("label").get<std::string>();
			for (const auto& t : b.at("terms")) {
				RecordTerm term;
				if (!t.at("module_index").is_null())
					term.module_index = t.at("module_index").get<int>();
				term.indices = t.at("indices").get<std::vector<int>>();
				term.coeff = parse_rational(t.at("coeff").get<std::string>());
				e.terms.push_back(std::move(term));
			}
			r.basis.push_back(std::move(e));
		}
		for (auto it = j.begin(); it != j.end(); ++it) {
			static const std::vector<std::string> core{"algebra", "mode", "degree", "grade", "cap", "dimension", "basis"};
			if (std::find(core.begin(), core.end(), it.key()) == core.end())
				r.extras[it.key()] = it.value();
		}
		return r;
	} catch (const json::exception& e) {
		throw std::invalid_argument(std::string("malformed record: ") + e.what());
	}
}

Format parse_format(const std::string& text)
{
	if (text == "json")
		return Format::Json;
	if (text == "csv")
		return Format::Csv;
	if (text == "latex")
		return Format::Latex;
	throw std::invalid_argument("unknown format '" + text + "' (expected json, csv, latex)");
}

namespace {

std::string csv_field(const std::string& text)
{
	if (text.find_first_of(",\"\n") == std::string::npos)
		return text;
	std::string out = "\"";
	for (char ch : text)
		out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
	return out + "\"";
}

std::string latex_coeff(const Rational& c, bool first)
{
	Rational a = abs(c);
	std::string sign = c < 0 ? "-" : (first ? "" : "+");
	std::string body;
	if (a != 1) {
		if (a.get_den() == 1)
			body = a.get_num().get_str();
		else
			body = fmt::format("\\frac{{{}}}{{{}}}", a.get_num().get_str(), a.get_den().get_str());
	}
	return first ? sign + body : " " + sign + " " + body;
}

std::string latex_label(const std::string& label)
{
	// omega(3,4) -> \omega_{(3,4)}, w(3,4,5) -> w_{3,4,5}, Psi[(5,6),4] -> \Psi_{(5,6),4}
	auto open = label.find_first_of("([");
	if (open == std::string::npos)
		return label;
	std::string name = label.substr(0, open);
	std::string inner = label.substr(open + 1, label.size() - open - 2);
	if (name == "omega")
		return "\\omega_{(" + inner + ")}";
	if (name == "Psi" || name == "Phi")
		return "\\" + name + "_{" + inner + "}";
	return name + "_{" + inner + "}";
}

std::string latex_term(const RecordTerm& t)
{
	std::string mon;
	for (int i : t.indices) {
		if (!mon.empty())
			mon += "\\wedge ";
		mon += fmt::format("e^{{{}}}", i);
	}
	if (mon.empty())
		mon = "1";
	if (t.module_index)
		return fmt::format("e_{{{}}}\\otimes {}", *t.module_index, mon);
	return mon;
}

} // namespace

std::string render(const ResultRecord& r, Format format)
{
	std::ostringstream out;
	const std::string cap = r.cap ? std::to_string(*r.cap) : "";
	const std::string dim = r.dimension ? std::to_string(*r.dimension) : "infinite";
	switch (format) {
	case Format::Json:
		out << to_json(r).dump(2) << '\n';
		break;
	case Format::Csv:
		out << "algebra,mode,degree,grade,cap,dimension,label,module_index,indices,coeff\n";
		for (const auto& b : r.basis) {
			auto row = [&](const std::string& l, const std::string& idx, const std::string& c) {
				out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", csv_field(r.algebra), r.mode, r.degree, r.grade, cap, dim, csv_field(b.label), l, idx, c);
			};
			if (b.terms.empty())
				row("", "", "");
			for (const auto& t : b.terms) {
				std::string idx;
				for (int i : t.indices)
					idx += (idx.empty() ? "" : " ") + std::to_string(i);
				row(t.module_index ? std::to_string(*t.module_index) : "", idx, to_string(t.coeff));
			}
		}
		break;
	case Format::Latex:
		out << fmt::format("% {} {} degree {} grade {} cap {} dimension {}\n", r.algebra, r.mode, r.degree, r.grade, cap.empty() ? "none" : cap, dim);
		for (const auto& b : r.basis) {
			out << latex_label(b.label) << " &= ";
			if (b.terms.empty())
				out << "0";
			// Grouped by module index, then by the last exterior index.
			auto terms = b.terms;
			std::stable_sort(terms.begin(), terms.end(), [](const RecordTerm& x, const RecordTerm& y) {
				auto key = [](const RecordTerm& t) {
					return std::make_tuple(t.module_index.value_or(0), t.indices.empty() ? 0 : t.indices.back(), t.indices);
				};
				return key(x) < key(y);
			});
			bool first = true;
			for (const auto& t : terms) {
				std::string c = latex_coeff(t.coeff, first);
				out << c << (c.empty() || c.back() == ' ' ? "" : " ") << latex_term(t);
				first = false;
			}
			out << " \\\\\n";
		}
		break;
	}
	return out.str();
}

std::string cache_key(const std::string& canonical_request)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char ch : canonical_request) {
		h ^= ch;
		h *= 0x100000001b3ULL;
	}
	return fmt::format("{:016x}", h);
}

std::optional<ResultRecord> ResultCache::load(const std::string& key, std::string* warning) const
{
	auto path = path_of(key);
	std::ifstream in(path);
	if (!in)
		return std::nullopt;
	try {
		json j = json::parse(in);
		return record_from_json(j);
	} catch (const std::exception& e) {
		if (warning)
			*warning = fmt::format("corrupt cache entry {} ({}); recomputing", path.string(), e.what());
		return std::nullopt;
	}
}

void ResultCache::store(const std::string& key, const ResultRecord& r) const
{
	std::filesystem::create_directories(dir_);
	auto path = path_of(key);
	auto tmp = path;
	tmp += ".tmp";
	{
		std::ofstream out(tmp, std::ios::trunc);
		if (!out)
			throw std::runtime_error("cannot write cache file " + tmp.string());
		out << to_json(r).dump() << '\n';
	}
	std::filesystem::rename(tmp, path);
}

} // namespace maxclass
