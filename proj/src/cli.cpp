#include "maxclass/cli.hpp"

#include "maxclass/census.hpp"
#include "maxclass/cochain.hpp"
#include "maxclass/labels.hpp"
#include "maxclass/operators.hpp"
#include "maxclass/record.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace maxclass {

namespace {

/// Disagreement between two independent computations.
struct Inconsistency : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string algebra;
	std::string coefficients = "trivial";
	int degree = 0;
	int grade = 0;
	int cap = 0;
	int target = 0;
	std::string family;
	std::string index;
	std::string format = "json";
	std::string cache_dir;
	std::string left;
	std::string right;
	int grade_min = 0;
	int grade_max = 0;
	int n = 0;
	int outer_cap = 0;
	bool check = false;

	CLI::Option* degree_opt = nullptr;
	CLI::Option* grade_opt = nullptr;
	CLI::Option* cap_opt = nullptr;
	CLI::Option* target_opt = nullptr;
	CLI::Option* algebra_opt = nullptr;
	CLI::Option* format_opt = nullptr;
	CLI::Option* n_opt = nullptr;
	CLI::Option* outer_opt = nullptr;

	std::optional<int> cap_value() const { return cap_opt && cap_opt->count() ? std::optional<int>(cap) : std::nullopt; }
};

void add_block_flags(CLI::App* cmd, Options& o)
{
	o.algebra_opt = cmd->add_option("--algebra", o.algebra, "m0, m2, l1, m0:n or m2:n");
	cmd->add_option("--coefficients", o.coefficients, "trivial or adjoint");
	o.degree_opt = cmd->add_option("--degree", o.degree, "cochain degree q");
	o.grade_opt = cmd->add_option("--grade", o.grade, "weight lambda (trivial) or mu (adjoint)");
	o.cap_opt = cmd->add_option("--cap", o.cap, "module index cap W")->check(CLI::PositiveNumber);
}

void add_label_flags(CLI::App* cmd, Options& o)
{
	o.algebra_opt = cmd->add_option("--algebra", o.algebra, "m0 or m2");
	cmd->add_option("--family", o.family, "omega, w, psi or phi")->required()->check(CLI::IsMember({"omega", "w", "psi", "phi"}));
	cmd->add_option("--index", o.index, "comma-separated index tuple")->required();
	o.target_opt = cmd->add_option("--target", o.target, "target index r of Psi/Phi");
	o.cap_opt = cmd->add_option("--cap", o.cap, "module index cap W")->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, Options& o)
{
	o.format_opt = cmd->add_option("--format", o.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
	cmd->add_option("--cache-dir", o.cache_dir, "directory of cached records");
}

Algebra algebra_or(const Options& o, const std::string& fallback)
{
	return Algebra::parse(o.algebra.empty() ? fallback : o.algebra);
}

bool is_infinite(const Algebra& alg)
{
	return alg.kind() == AlgebraKind::M0 || alg.kind() == AlgebraKind::M2;
}

void require(const CLI::Option* opt, const char* name)
{
	if (!opt || opt->count() == 0)
		throw std::invalid_argument(fmt::format("{} is required", name));
}

CocycleLabel label_from_flags(const Options& o)
{
	CocycleLabel label;
	label.indices = parse_index_list(o.index);
	const auto& I = label.indices;
	std::optional<int> target = o.target_opt->count() ? std::optional<int>(o.target) : std::nullopt;
	if (o.family == "omega" || o.family == "w") {
		if (target)
			throw std::invalid_argument("--target applies to psi and phi only");
		label.family = o.family == "omega" ? Family::Omega : Family::W;
		return label;
	}
	if (!target)
		throw std::invalid_argument("--target is required for psi and phi");
	label.target = target;
	bool special = I.size() == 1 || (o.family == "phi" && (I == std::vector<int>{2, 3} || I == std::vector<int>{3, 4}));
	if (o.family == "psi")
		label.family = special ? Family::PsiSpecial : Family::Psi;
	else
		label.family = special ? Family::PhiSpecial : Family::Phi;
	return label;
}

bool is_adjoint_label(const CocycleLabel& l)
{
	return l.family != Family::Generator && l.family != Family::Omega && l.family != Family::W;
}

ResultRecord base_record(const Algebra& alg, Coefficients mode, int degree, int grade, std::optional<int> cap)
{
	ResultRecord r;
	r.algebra = alg.name();
	r.mode = to_string(mode);
	r.degree = degree;
	r.grade = grade;
	r.cap = cap;
	return r;
}

ResultRecord representatives_record(const Algebra& alg, Coefficients mode, int degree, int grade, std::optional<int> cap)
{
	auto h = cohomology(alg, mode, degree, grade, cap);
	auto r = base_record(alg, mode, degree, grade, cap);
	r.dimension = h.dimension;
	for (std::size_t i = 0; i < h.representatives.size(); ++i) {
		BasisEntry e{fmt::format("class[{}]", i), {}};
		if (mode == Coefficients::Trivial)
			e.terms = record_terms(scalar_from_coordinates(h.basis, h.representatives[i]));
		else
			e.terms = record_terms(adjoint_from_coordinates(h.basis, h.representatives[i]));
		r.basis.push_back(std::move(e));
	}
	return r;
}

ResultRecord run_dims(const Options& o, bool with_terms)
{
	Algebra alg = algebra_or(o, "m0");
	Coefficients mode = parse_coefficients(o.coefficients);
	require(o.degree_opt, "--degree");
	require(o.grade_opt, "--grade");
	if (o.degree < 0)
		throw std::invalid_argument("--degree must be non-negative");
	auto cap = o.cap_value();

	if (!is_infinite(alg)) {
		if (!with_terms)
			throw std::invalid_argument("census covers m0 and m2 only");
		if (mode == Coefficients::Adjoint && !alg.is_quotient())
			throw std::invalid_argument("adjoint blocks of l1 are not supported; use a quotient");
		return representatives_record(alg, mode, o.degree, o.grade, mode == Coefficients::Adjoint ? std::nullopt : cap);
	}

	if (mode == Coefficients::Trivial) {
		auto r = base_record(alg, mode, o.degree, o.grade, std::nullopt);
		auto labels = enumerate_scalar_labels(alg, o.degree, o.grade);
		r.dimension = static_cast<long>(labels.size());
		if (with_terms) {
			int exact = cohomology(alg, mode, o.degree, o.grade).dimension;
			if (exact != static_cast<int>(labels.size()))
				throw Inconsistency(fmt::format("census gives {} classes, the complex gives {}", labels.size(), exact));
		}
		for (const auto& l : labels)
			r.basis.push_back({l.to_string(), with_terms ? record_terms(label_form(alg, l)) : std::vector<RecordTerm>{}});
		return r;
	}

	if (!cap)
		throw std::invalid_argument("adjoint blocks of m0 and m2 need --cap");
	auto census = census_adjoint(alg, o.degree, o.grade, *cap);
	auto r = base_record(alg, mode, o.degree, o.grade, cap);
	if (!census.unbounded)
		r.dimension = static_cast<long>(census.labels.size());
	for (const auto& l : census.labels)
		r.basis.push_back({l.to_string(), with_terms ? record_terms(label_cochain(alg, l, *cap).truncated(*cap)) : std::vector<RecordTerm>{}});
	if (!census.divergences.empty())
		r.extras["divergences"] = census.divergences;
	return r;
}

ResultRecord run_cocycle(const Options& o)
{
	auto label = label_from_flags(o);
	bool adjoint = is_adjoint_label(label);
	std::string fallback = (o.family == "w" || o.family == "phi") ? "m2" : "m0";
	Algebra alg = algebra_or(o, fallback);
	if (!adjoint) {
		auto r = base_record(alg, Coefficients::Trivial, label.degree(), label.grade(), std::nullopt);
		r.dimension = 1;
		r.basis.push_back({label.to_string(), record_terms(label_form(alg, label))});
		return r;
	}
	int W = o.cap_value().value_or(12);
	auto r = base_record(alg, Coefficients::Adjoint, label.degree(), label.grade(), W);
	r.dimension = 1;
	r.basis.push_back({label.to_string(), record_terms(label_cochain(alg, label, W).truncated(W))});
	return r;
}

int run_verify(const Options& o, std::ostream& out)
{
	auto label = label_from_flags(o);
	std::string fallback = (o.family == "w" || o.family == "phi") ? "m2" : "m0";
	Algebra alg = algebra_or(o, fallback);
	bool closed;
	if (is_adjoint_label(label)) {
		int W = o.cap_value().value_or(40);
		closed = is_cocycle_mod_filtration(alg, label_cochain(alg, label, W), W);
		out << "closed mod filtration: " << (closed ? "true" : "false") << '\n';
	} else {
		closed = d_scalar(alg, label_form(alg, label)).is_zero();
		out << "closed: " << (closed ? "true" : "false") << '\n';
	}
	return closed ? 0 : 3;
}

ResultRecord run_cup(const Options& o)
{
	Algebra alg = algebra_or(o, "m0");
	auto left = parse_label(o.left);
	auto right = parse_label(o.right);
	auto a = label_form(alg, left);
	auto b = label_form(alg, right);
	auto product = cup_product(alg, a, b);
	auto r = base_record(alg, Coefficients::Trivial, left.degree() + right.degree(), left.grade() + right.grade(), std::nullopt);
	auto coords = product.is_zero() ? std::vector<std::pair<CocycleLabel, Rational>>{} : class_coordinates(alg, product);
	r.dimension = product.is_zero() ? 0 : 1;
	r.basis.push_back({left.to_string() + "*" + right.to_string(), record_terms(product)});
	nlohmann::json classes = nlohmann::json::array();
	for (const auto& [l, c] : coords)
		classes.push_back({{"label", l.to_string()}, {"coeff", to_string(c)}});
	r.extras["classes"] = std::move(classes);
	return r;
}

int run_oracle(const Options& o, std::ostream& out)
{
	Algebra alg = algebra_or(o, "m0");
	if (!is_infinite(alg))
		throw std::invalid_argument("oracle compares the census of m0 or m2");
	Coefficients mode = parse_coefficients(o.coefficients);
	require(o.degree_opt, "--degree");
	if (o.grade_min > o.grade_max)
		throw std::invalid_argument("--grade-min must not exceed --grade-max");
	int cap = o.cap_value().value_or(12);
	int outer = o.outer_opt->count() ? o.outer_cap : cap + 8;
	int n = o.n_opt->count() ? o.n : o.grade_max + 3;
	if (mode == Coefficients::Adjoint && outer < cap)
		throw std::invalid_argument("--outer-cap must be at least --cap");
	int mismatches = 0;
	for (int k = o.grade_min; k <= o.grade_max; ++k) {
		int census;
		std::optional<int> oracle;
		if (mode == Coefficients::Trivial) {
			census = static_cast<int>(enumerate_scalar_labels(alg, o.degree, k).size());
			oracle = stable_quotient_dim(alg.family(), mode, o.degree, k, n);
		} else {
			census = static_cast<int>(census_adjoint(alg, o.degree, k, cap).labels.size());
			oracle = adjoint_stable_dim(alg, o.degree, k, cap, outer);
		}
		bool ok = oracle && *oracle == census;
		mismatches += ok ? 0 : 1;
		out << fmt::format("degree {} grade {} census {} oracle {} {}\n", o.degree, k, census,
		                   oracle ? std::to_string(*oracle) : "unstable", ok ? "ok" : "MISMATCH");
	}
	out << fmt::format("{} mismatches\n", mismatches);
	if (o.check && mismatches > 0)
		return 3;
	return 0;
}

std::string canonical_request(const std::string& command, const Options& o)
{
	auto cap = o.cap_value();
	std::string target = o.target_opt && o.target_opt->count() ? std::to_string(o.target) : "";
	return fmt::format("command={};algebra={};mode={};degree={};grade={};cap={};family={};index={};target={}", command,
	                   o.algebra, o.coefficients, o.degree, o.grade, cap ? std::to_string(*cap) : "null", o.family, o.index, target);
}

std::optional<std::filesystem::path> cache_dir(const Options& o)
{
	if (const char* env = std::getenv("MAXCLASS_CACHE"); env && *env)
		return std::filesystem::path(env);
	if (!o.cache_dir.empty())
		return std::filesystem::path(o.cache_dir);
	return std::nullopt;
}

template <class Compute>
ResultRecord cached(const std::string& command, const Options& o, std::ostream& err, Compute compute)
{
	auto dir = cache_dir(o);
	if (!dir)
		return compute();
	ResultCache cache(*dir);
	auto key = cache_key(canonical_request(command, o));
	std::string warning;
	if (auto hit = cache.load(key, &warning))
		return *hit;
	if (!warning.empty())
		err << "warning: " << warning << '\n';
	auto record = compute();
	cache.store(key, record);
	return record;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Cohomology of the graded Lie algebras of maximal class m0 and m2", "maxclass"};
	app.require_subcommand(1);
	Options o;

	auto* dims = app.add_subcommand("dims", "dimension and basis of one homogeneous block");
	add_block_flags(dims, o);
	add_output_flags(dims, o);

	auto* census = app.add_subcommand("census", "basis labels of one homogeneous block");
	add_block_flags(census, o);
	add_output_flags(census, o);

	auto* cocycle = app.add_subcommand("cocycle", "expansion of a named cocycle");
	add_label_flags(cocycle, o);
	add_output_flags(cocycle, o);

	auto* verify = app.add_subcommand("verify", "check that a named cocycle is closed");
	add_label_flags(verify, o);

	auto* cup = app.add_subcommand("cup", "cup product of two scalar classes");
	o.algebra_opt = nullptr;
	cup->add_option("--algebra", o.algebra, "m0 or m2");
	cup->add_option("--left", o.left, "left label, e.g. e^2")->required();
	cup->add_option("--right", o.right, "right label, e.g. omega(3,4)")->required();
	add_output_flags(cup, o);

	auto* oracle = app.add_subcommand("oracle", "compare the census with the brute-force oracle");
	oracle->add_option("--algebra", o.algebra, "m0 or m2");
	oracle->add_option("--coefficients", o.coefficients, "trivial or adjoint");
	o.degree_opt = oracle->add_option("--degree", o.degree, "cochain degree q");
	oracle->add_option("--grade-min", o.grade_min, "first grade of the grid");
	oracle->add_option("--grade-max", o.grade_max, "last grade of the grid");
	o.n_opt = oracle->add_option("--n", o.n, "quotient size for trivial coefficients")->check(CLI::PositiveNumber);
	o.cap_opt = oracle->add_option("--cap", o.cap, "module index cap W")->check(CLI::PositiveNumber);
	o.outer_opt = oracle->add_option("--outer-cap", o.outer_cap, "cap used to stabilise the cocycle space")->check(CLI::PositiveNumber);
	oracle->add_flag("--check", o.check, "exit 3 on any mismatch");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return 0;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n';
		return 2;
	}

	// The shared option pointers refer to the last subcommand that registered them.
	auto bind = [&](CLI::App* cmd) {
		o.degree_opt = cmd->get_option_no_throw("--degree");
		o.grade_opt = cmd->get_option_no_throw("--grade");
		o.cap_opt = cmd->get_option_no_throw("--cap");
		o.target_opt = cmd->get_option_no_throw("--target");
		o.algebra_opt = cmd->get_option_no_throw("--algebra");
		o.format_opt = cmd->get_option_no_throw("--format");
		o.n_opt = cmd->get_option_no_throw("--n");
		o.outer_opt = cmd->get_option_no_throw("--outer-cap");
	};

	try {
		auto emit = [&](const ResultRecord& r) { out << render(r, parse_format(o.format)); };
		if (dims->parsed()) {
			bind(dims);
			emit(cached("dims", o, err, [&] { return run_dims(o, true); }));
		} else if (census->parsed()) {
			bind(census);
			emit(cached("census", o, err, [&] { return run_dims(o, false); }));
		} else if (cocycle->parsed()) {
			bind(cocycle);
			emit(cached("cocycle", o, err, [&] { return run_cocycle(o); }));
		} else if (verify->parsed()) {
			bind(verify);
			return run_verify(o, out);
		} else if (cup->parsed()) {
			bind(cup);
			emit(run_cup(o));
		} else if (oracle->parsed()) {
			bind(oracle);
			return run_oracle(o, out);
		}
		return 0;
	} catch (const std::invalid_argument& e) {
		err << "error: " << e.what() << '\n';
		return 2;
	} catch (const std::exception& e) {
		err << "internal error: " << e.what() << '\n';
		return 3;
	}
}

} // namespace maxclass
