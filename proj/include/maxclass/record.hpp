#pragma once

#include "maxclass/cochain.hpp"
#include "maxclass/rational.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace maxclass {

struct RecordTerm {
	std::optional<int> module_index;
	std::vector<int> indices;
	Rational coeff;

	bool operator==(const RecordTerm&) const = default;
};

struct BasisEntry {
	std::string label;
	std::vector<RecordTerm> terms;

	bool operator==(const BasisEntry&) const = default;
};

struct ResultRecord {
	std::string algebra;
	std::string mode;
	int degree = 0;
	int grade = 0;
	std::optional<int> cap;
	std::optional<long> dimension; // nullopt means "infinite"
	std::vector<BasisEntry> basis;
	nlohmann::json extras = nlohmann::json::object(); // merged into the top level

	bool operator==(const ResultRecord&) const = default;
};

std::vector<RecordTerm> record_terms(const ScalarForm& f);
std::vector<RecordTerm> record_terms(const AdjointCochain& x);

nlohmann::json to_json(const ResultRecord& r);
/// Throws std::invalid_argument on schema violations.
ResultRecord record_from_json(const nlohmann::json& j);

enum class Format { Json, Csv, Latex };
Format parse_format(const std::string& text);
std::string render(const ResultRecord& r, Format format);

/// 64-bit FNV-1a of the canonical request string, as 16 hex digits.
std::string cache_key(const std::string& canonical_request);

class ResultCache {
public:
	explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

	/// nullopt on a miss. A corrupt entry is reported through `warning` and treated as a miss.
	std::optional<ResultRecord> load(const std::string& key, std::string* warning = nullptr) const;
	void store(const std::string& key, const ResultRecord& r) const;
	std::filesystem::path path_of(const std::string& key) const { return dir_ / (key + ".json"); }

private:
	std::filesystem::path dir_;
};

} // namespace maxclass
