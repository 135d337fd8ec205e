#include "maxclass/operators.hpp"

#include "maxclass/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxclass {

namespace {

// Derivation sending e^i to e^{rule(i)}; rule returns 0 to kill, -1 for "outside domain".
template <class Rule>
ScalarForm derivation(const ScalarForm& f, Rule rule)
{
	ScalarForm out;
	for (const auto& [m, c] : f.terms()) {
		const auto& idx = m.indices();
		for (std::size_t p = 0; p < idx.size(); ++p) {
			const int t = rule(idx[p]);
			if (t < 0)
				throw std::invalid_argument("outside domain Lambda*(e^2, e^3, ...)");
			if (t == 0)
				continue;
			std::vector<int> v = idx;
			v[p] = t;
			auto r = canonicalize(std::move(v));
			if (r.sign != 0)
				out.add(r.monomial, r.sign * c);
		}
	}
	return out;
}

int d1_rule(int i)
{
	if (i == 1)
		return -1;
	return i == 2 ? 0 : i - 1;
}

int d2_rule(int i)
{
	if (i == 1 || i == 2 || i == 4)
		return 0;
	return i == 3 ? 1 : i - 2;
}

// sum_l (-1)^l D1^l(eta) ^ e^{k+l}; every index of eta is below k.
ScalarForm alternating_tail(ScalarForm eta, int k)
{
	ScalarForm out;
	for (int l = 0; !eta.is_zero(); ++l) {
		const int sign = (l % 2) ? -1 : 1;
		for (const auto& [m, c] : eta.terms()) {
			std::vector<int> v = m.indices();
			if (!v.empty() && v.back() >= k + l)
				throw std::logic_error("tail index collides with the form");
			v.push_back(k + l);
			out.add(Monomial(std::move(v)), sign * c);
		}
		eta = apply_D1(eta);
	}
	return out;
}

Monomial drop_last(const Monomial& m, int count = 1)
{
	const auto& v = m.indices();
	return Monomial(std::vector<int>(v.begin(), v.end() - count));
}

ScalarForm monomial_form(const std::vector<int>& I)
{
	return ScalarForm(Monomial(I));
}

ScalarForm project_off_e1(const ScalarForm& f)
{
	return f.without_index(1);
}

// (D2 + D1^2) followed by dropping the monomials containing e^1.
ScalarForm T_step(const ScalarForm& xi)
{
	return project_off_e1(apply_D2(xi) + apply_D1(apply_D1(xi)));
}

void require_adjacent(const std::vector<int>& I)
{
	if (!is_adjacent_tuple(I))
		throw std::invalid_argument("omega index tuple must be increasing with i_1 >= 2 and an adjacent tail");
}

void require_doubly_adjacent(const std::vector<int>& I)
{
	if (!is_doubly_adjacent_tuple(I))
		throw std::invalid_argument("w index tuple must be increasing with i_1 >= 3 and a doubly adjacent tail");
}

bool has_double_tail(const Monomial& m)
{
	const auto& v = m.indices();
	const std::size_t n = v.size();
	return n >= 3 && v[n - 1] == v[n - 2] + 1 && v[n - 2] == v[n - 3] + 1;
}

} // namespace

ScalarForm apply_D1(const ScalarForm& f) { return derivation(f, d1_rule); }
ScalarForm apply_D2(const ScalarForm& f) { return derivation(f, d2_rule); }

ScalarForm apply_Dminus1(const ScalarForm& f)
{
	ScalarForm out;
	for (const auto& [m, c] : f.terms()) {
		if (m.empty())
			throw std::invalid_argument("D_{-1} is not defined on constants");
		if (m.contains(1))
			throw std::invalid_argument("outside domain Lambda*(e^2, e^3, ...)");
		out.add(alternating_tail(ScalarForm(drop_last(m), c), m.back() + 1));
	}
	return out;
}

ScalarForm omega_of(const ScalarForm& f)
{
	ScalarForm out;
	for (const auto& [m, c] : f.terms()) {
		const auto& v = m.indices();
		if (v.size() < 2 || v[v.size() - 1] != v[v.size() - 2] + 1)
			throw std::invalid_argument("omega needs monomials ending in e^i ^ e^{i+1}");
		out.add(alternating_tail(ScalarForm(drop_last(m), c), m.back()));
	}
	return out;
}

ScalarForm omega_cocycle(const std::vector<int>& I)
{
	require_adjacent(I);
	return omega_of(monomial_form(I));
}

ScalarForm w_cocycle(const std::vector<int>& I)
{
	require_doubly_adjacent(I);
	static std::mutex lock;
	static std::map<std::vector<int>, ScalarForm> memo;
	{
		std::lock_guard guard(lock);
		auto it = memo.find(I);
		if (it != memo.end())
			return it->second;
	}
	const int iq = I[I.size() - 3];
	ScalarForm xi = monomial_form(std::vector<int>(I.begin(), I.end() - 2));
	ScalarForm out;
	Rational scale = 1;
	for (int l = 0; !xi.is_zero(); ++l) {
		out.add(omega_of(wedge(xi, monomial_form({iq + 1 + l, iq + 2 + l}))), scale);
		xi = T_step(xi);
		scale /= 2;
	}
	std::lock_guard guard(lock);
	memo.emplace(I, out);
	return out;
}

ScalarForm tilde_Dminus1_explicit(const std::vector<int>& I)
{
	require_doubly_adjacent(I);
	const int iq = I[I.size() - 3];
	ScalarForm out = apply_Dminus1(w_cocycle(I));
	ScalarForm xi = apply_D1(monomial_form(std::vector<int>(I.begin(), I.end() - 2)));
	Rational scale = 1;
	for (int s = 0; !xi.is_zero(); ++s) {
		out.add(omega_of(wedge(xi, monomial_form({iq + 2 + s, iq + 3 + s}))), -(s + 1) * scale);
		xi = T_step(xi);
		scale /= 2;
	}
	return out;
}

namespace {

// Columns: degree-p monomials over e^2, e^3, ... of the given weight whose indices
// other than the last are all <= head_max.
std::vector<Monomial> bounded_columns(int degree, int weight, int head_max)
{
	std::vector<Monomial> out;
	std::vector<int> head;
	auto rec = [&](auto&& self, int start, int remaining, int left) -> void {
		if (remaining == 0) {
			if (left > (head.empty() ? 1 : head.back())) {
				auto v = head;
				v.push_back(left);
				out.emplace_back(std::move(v));
			}
			return;
		}
		for (int i = start; i <= head_max; ++i) {
			// the remaining head entries and the last index all exceed i
			if ((remaining + 1) * i + remaining * (remaining + 1) / 2 > left)
				break;
			head.push_back(i);
			self(self, i + 1, remaining - 1, left - i);
			head.pop_back();
		}
	};
	rec(rec, 2, degree - 1, weight);
	return out;
}

std::optional<ScalarForm> solve_on(const Algebra& alg, const std::vector<Monomial>& columns, const ScalarForm& rhs)
{
	std::map<Monomial, int> row_of;
	std::vector<ScalarForm> images;
	images.reserve(columns.size());
	for (const auto& m : columns) {
		images.push_back(d_scalar(alg, ScalarForm(m)));
		for (const auto& [r, v] : images.back().terms())
			row_of.try_emplace(r, 0);
	}
	for (const auto& [r, v] : rhs.terms())
		row_of.try_emplace(r, 0);
	int next = 0;
	for (auto& [r, i] : row_of)
		i = next++;
	SparseMatrix M(next, static_cast<int>(columns.size()));
	for (std::size_t c = 0; c < columns.size(); ++c) {
		SparseVector col;
		for (const auto& [r, v] : images[c].terms())
			col.emplace(row_of[r], v);
		M.set_column(static_cast<int>(c), std::move(col));
	}
	SparseVector b;
	for (const auto& [r, v] : rhs.terms())
		b.emplace(row_of[r], v);
	auto x = solve_particular(M, b);
	if (!x)
		return std::nullopt;
	ScalarForm out;
	for (const auto& [c, v] : *x)
		out.add(columns[c], v);
	return out;
}

// Removes every monomial with three consecutive final indices by subtracting the
// closed form carrying it: w_K for k_1 >= 3, e^2 ^ w_K' for K = (2, K'), and
// e^2^e^3^e^4 itself.
ScalarForm kronecker_normalize(ScalarForm x)
{
	for (int round = 0; round < 8; ++round) {
		std::vector<std::pair<Monomial, Rational>> hits;
		for (const auto& [m, c] : x.terms())
			if (has_double_tail(m))
				hits.emplace_back(m, c);
		if (hits.empty())
			return x;
		for (const auto& [m, c] : hits) {
			const auto& v = m.indices();
			if (v.front() >= 3) {
				x.add(w_cocycle(v), -c);
			} else if (v.front() == 2 && v.size() == 3) {
				x.add(m, -c);
			} else if (v.front() == 2) {
				std::vector<int> rest(v.begin() + 1, v.end());
				x.add(wedge(ScalarForm::generator(2), w_cocycle(rest)), -c);
			} else {
				throw std::logic_error("unexpected e^1 in a D~_{-1} form");
			}
		}
	}
	throw std::logic_error("Kronecker normalisation did not terminate");
}

int head_max_of(const ScalarForm& f)
{
	int h = 0;
	for (const auto& [m, c] : f.terms()) {
		const auto& v = m.indices();
		if (v.size() >= 2)
			h = std::max(h, v[v.size() - 2]);
	}
	return h;
}

// For e^1-free x in m2, d x = e^1 ^ D1 x + e^2 ^ D2'(x) with D2' = D2 followed by
// e^3 -> 0. Writing rhs = e^1 ^ a + r, every e^1-free solution is D_{-1} a plus a
// combination of omega_I (the kernel of D1), fixed by e^2 ^ D2'(.) = r. Only omega_I
// with entries up to the head bound are tried, which keeps the system small.
class SplitSolver {
public:
	SplitSolver(const ScalarForm& rhs, int degree, int weight) : degree_(degree), weight_(weight)
	{
		ScalarForm a, r;
		for (const auto& [m, c] : rhs.terms()) {
			if (m.front() == 1) {
				std::vector<int> rest(m.indices().begin() + 1, m.indices().end());
				a.add(Monomial(rest), c);
			} else {
				r.add(m, c);
			}
		}
		base_ = apply_Dminus1(a);
		target_ = r - e2_part(base_);
		candidates_ = tail_tuples(degree - 1, 1, weight, 2);
		std::sort(candidates_.begin(), candidates_.end(), [](const auto& x, const auto& y) {
			return std::make_pair(x.back(), x) < std::make_pair(y.back(), y);
		});
	}

	/// Solution using the omega_I whose entries are all <= bound, if any.
	std::optional<ScalarForm> solve(int bound)
	{
		if (target_.is_zero())
			return base_;
		while (used_ < candidates_.size() && candidates_[used_].back() <= bound) {
			omegas_.push_back(omega_cocycle(candidates_[used_]));
			images_.push_back(e2_part(omegas_.back()));
			++used_;
		}
		if (images_.empty())
			return std::nullopt;
		std::map<Monomial, int> row_of;
		for (const auto& f : images_)
			for (const auto& [m, c] : f.terms())
				row_of.try_emplace(m, 0);
		for (const auto& [m, c] : target_.terms())
			if (!row_of.count(m))
				return std::nullopt;
		int next = 0;
		for (auto& [m, i] : row_of)
			i = next++;
		SparseMatrix M(next, static_cast<int>(images_.size()));
		for (std::size_t c = 0; c < images_.size(); ++c) {
			SparseVector col;
			for (const auto& [m, v] : images_[c].terms())
				col.emplace(row_of[m], v);
			M.set_column(static_cast<int>(c), std::move(col));
		}
		SparseVector b;
		for (const auto& [m, v] : target_.terms())
			b.emplace(row_of[m], v);
		auto coeffs = solve_particular(M, b);
		if (!coeffs)
			return std::nullopt;
		ScalarForm x = base_;
		for (const auto& [c, v] : *coeffs)
			x.add(omegas_[c], v);
		return x;
	}

	bool exhausted() const { return used_ == candidates_.size(); }

private:
	static ScalarForm e2_part(const ScalarForm& x)
	{
		return wedge(ScalarForm::generator(2), project_off_e1(apply_D2(x)));
	}

	int degree_;
	int weight_;
	ScalarForm base_;
	ScalarForm target_;
	std::vector<std::vector<int>> candidates_;
	std::size_t used_ = 0;
	std::vector<ScalarForm> omegas_;
	std::vector<ScalarForm> images_;
};

} // namespace

ScalarForm m2_preimage(const ScalarForm& rhs)
{
	if (rhs.is_zero())
		return {};
	auto degree = rhs.degree();
	auto weight = rhs.weight();
	if (!degree || !weight || *degree < 1)
		throw std::invalid_argument("preimage needs a homogeneous form of positive degree");
	const Algebra alg = Algebra::m2();
	const int p = *degree - 1;
	const int lambda = *weight;
	if (p == 0)
		throw std::runtime_error("inconsistent");
	SplitSolver split(rhs, p, lambda);
	for (int H = head_max_of(rhs) + 1; H <= lambda; ++H) {
		if (auto x = split.solve(H + 1); x && d_scalar(alg, *x) == rhs)
			return *x;
		if (split.exhausted())
			break;
	}
	// Staged: small head bounds first, then the whole e^1-free block, then everything.
	for (int H = std::max(head_max_of(rhs) + 1, p); H < lambda; ++H) {
		auto columns = bounded_columns(p, lambda, H);
		if (auto x = solve_on(alg, columns, rhs))
			return *x;
		if (H > lambda / 2 + 1)
			break;
	}
	if (auto x = solve_on(alg, monomials(p, lambda, 2), rhs))
		return *x;
	if (auto x = solve_on(alg, monomials(p, lambda, 1), rhs))
		return *x;
	throw std::runtime_error("inconsistent");
}

TildeDminus1Chain::TildeDminus1Chain(std::vector<int> I) : I_(std::move(I))
{
	xs_.push_back(w_cocycle(I_));
	xs_.push_back(kronecker_normalize(tilde_Dminus1_explicit(I_)));
}

TildeDminus1Chain::TildeDminus1Chain(ScalarForm w)
{
	if (!d_scalar(Algebra::m2(), w).is_zero())
		throw std::invalid_argument("D~_{-1} needs a closed form");
	xs_.push_back(std::move(w));
}

const ScalarForm& TildeDminus1Chain::at(int j)
{
	if (j < 0)
		throw std::invalid_argument("negative order");
	std::lock_guard guard(lock_);
	while (static_cast<int>(xs_.size()) <= j)
		xs_.push_back(next(static_cast<int>(xs_.size())));
	return xs_[j];
}

ScalarForm TildeDminus1Chain::next(int j)
{
	ScalarForm rhs = wedge(ScalarForm::generator(1), xs_[j - 1]);
	if (j >= 2)
		rhs += wedge(ScalarForm::generator(2), xs_[j - 2]);
	return kronecker_normalize(m2_preimage(rhs));
}

std::shared_ptr<TildeDminus1Chain> tilde_chain(const std::vector<int>& I)
{
	static std::mutex lock;
	static std::map<std::vector<int>, std::shared_ptr<TildeDminus1Chain>> cache;
	std::lock_guard guard(lock);
	auto& slot = cache[I];
	if (!slot)
		slot = std::make_shared<TildeDminus1Chain>(I);
	return slot;
}

ScalarForm tilde_Dminus1(const ScalarForm& w, int j)
{
	if (j < 1)
		throw std::invalid_argument("D~_{-1} order must be >= 1");
	TildeDminus1Chain chain(w);
	return chain.at(j);
}

AdjointCochain psi_series(const std::vector<int>& I, int r, int W)
{
	require_adjacent(I);
	AdjointCochain out(W);
	ScalarForm x = omega_cocycle(I);
	for (int l = r; l <= W; ++l) {
		out.add(l, x);
		x = apply_Dminus1(x);
	}
	return out;
}

namespace {

void require_admissible(const Algebra& alg, const CocycleLabel& label)
{
	if (auto why = admissibility_violation(alg, label))
		throw std::invalid_argument(label.to_string() + ": " + *why);
}

ScalarForm phi_bracket(int j)
{
	ScalarForm b;
	b.add(Monomial{4, 5 + j}, 1);
	b.add(Monomial{3, 6 + j}, -(j + 1));
	b.add(Monomial{2, 7 + j}, Rational((j + 2) * (j + 1), 2));
	return b;
}

} // namespace

AdjointCochain psi_cochain(const CocycleLabel& label, int W)
{
	require_admissible(Algebra::m0(), label);
	const int r = *label.target;
	if (label.family == Family::Psi)
		return psi_series(label.indices, r, W);
	AdjointCochain out(W);
	if (label.family != Family::PsiSpecial)
		throw std::invalid_argument(label.to_string() + " is not a Psi label");
	if (label.indices[0] == 1 && r == 1) {
		out.add(1, Monomial{1}, 1);
		for (int j = 3; j <= W; ++j)
			out.add(j, Monomial{j}, j - 2);
	} else if (label.indices[0] == 1) {
		out.add(2, Monomial{1}, 1);
	} else {
		const int l = r - 2;
		for (int j = 2; l + j <= W; ++j)
			out.add(l + j, Monomial{j}, 1);
	}
	return out.truncated(W);
}

AdjointCochain phi_cochain(const CocycleLabel& label, int W)
{
	require_admissible(Algebra::m2(), label);
	const int r = *label.target;
	AdjointCochain out(W);
	if (label.family == Family::Phi) {
		auto chain = tilde_chain(label.indices);
		for (int j = 0; r + j <= W; ++j)
			out.add(r + j, chain->at(j));
		return out;
	}
	if (label.family != Family::PhiSpecial)
		throw std::invalid_argument(label.to_string() + " is not a Phi label");
	const auto& I = label.indices;
	if (I == std::vector<int>{1}) {
		for (int j = 1; j <= W; ++j)
			out.add(j, Monomial{j}, j);
	} else if (I == std::vector<int>{2}) {
		const int l = r - 2;
		for (int j = 2; l + j <= W; ++j)
			out.add(l + j, Monomial{j}, 1);
	} else if (I == std::vector<int>{2, 3}) {
		if (r == 1) {
			out.add(1, Monomial{2, 3}, 1);
			for (int j = 0; 5 + j <= W; ++j)
				out.add(5 + j, phi_bracket(j), Rational(1, 2));
		} else if (r == 2) {
			for (int i = 0; 2 + i <= W; ++i)
				out.add(2 + i, Monomial{2, 3 + i}, 1);
			for (int j = 0; 6 + j <= W; ++j)
				out.add(6 + j, phi_bracket(j), Rational(1, 2));
		} else {
			for (int j = 0; r + j <= W; ++j)
				out.add(r + j, Monomial{2, 3 + j}, 1);
		}
	} else {
		for (int i = 0; r + i <= W; ++i) {
			out.add(r + i, Monomial{3, 4 + i}, 1);
			out.add(r + i, Monomial{2, 5 + i}, -(i + 1));
		}
	}
	return out.truncated(W);
}

AdjointCochain label_cochain(const Algebra& alg, const CocycleLabel& label, int W)
{
	switch (label.family) {
	case Family::Psi:
	case Family::PsiSpecial:
		if (alg.family() != "m0" || alg.is_quotient())
			throw std::invalid_argument("Psi cocycles belong to m0");
		return psi_cochain(label, W);
	case Family::Phi:
	case Family::PhiSpecial:
		if (alg.family() != "m2" || alg.is_quotient())
			throw std::invalid_argument("Phi cocycles belong to m2");
		return phi_cochain(label, W);
	default:
		throw std::invalid_argument(label.to_string() + " is a scalar label");
	}
}

ScalarForm label_form(const Algebra& alg, const CocycleLabel& label)
{
	require_admissible(alg, label);
	switch (label.family) {
	case Family::Generator:
		return ScalarForm::generator(label.indices[0]);
	case Family::Omega:
		return omega_cocycle(label.indices);
	case Family::W:
		return w_cocycle(label.indices);
	default:
		throw std::invalid_argument(label.to_string() + " is an adjoint label");
	}
}

AdjointCochain grading_derivation(int W)
{
	AdjointCochain tau = psi_cochain({Family::PsiSpecial, {1}, 1}, W);
	tau.add(psi_cochain({Family::PsiSpecial, {2}, 2}, W), 2);
	tau.set_cap(W);
	return tau;
}

GeneratorMultiple eval_cochain(const AdjointCochain& x, const std::vector<int>& args)
{
	auto sorted = canonicalize(args);
	GeneratorMultiple out;
	out.coefficient = 0;
	if (sorted.sign == 0)
		return out;
	for (const auto& [k, c] : x.terms()) {
		if (k.mon != sorted.monomial)
			continue;
		if (out.index != 0 && out.index != k.module_index)
			throw std::invalid_argument("value is not a multiple of a single generator");
		out.index = k.module_index;
		out.coefficient += sorted.sign * c;
	}
	if (out.coefficient == 0)
		out.index = 0;
	return out;
}

namespace {

struct ImageSpace {
	std::vector<AdjointKey> basis;
	std::map<Monomial, int> position;
	Subspace image;
};

std::shared_ptr<const ImageSpace> image_space(const Algebra& alg, int degree, int weight)
{
	static std::mutex lock;
	static std::map<std::tuple<std::string, int, int>, std::shared_ptr<const ImageSpace>> cache;
	auto key = std::make_tuple(alg.name(), degree, weight);
	{
		std::lock_guard guard(lock);
		auto it = cache.find(key);
		if (it != cache.end())
			return it->second;
	}
	auto space = std::make_shared<ImageSpace>();
	BlockSpec spec{alg, Coefficients::Trivial, degree, weight, std::nullopt};
	space->basis = block_basis(spec);
	for (std::size_t i = 0; i < space->basis.size(); ++i)
		space->position.emplace(space->basis[i].mon, static_cast<int>(i));
	if (degree >= 1) {
		SparseMatrix d = block_matrix({alg, Coefficients::Trivial, degree - 1, weight, std::nullopt});
		for (int c = 0; c < d.cols(); ++c)
			space->image.insert(d.column(c));
	}
	std::lock_guard guard(lock);
	cache.emplace(key, space);
	return space;
}

SparseVector coordinates(const ImageSpace& space, const ScalarForm& f)
{
	SparseVector v;
	for (const auto& [m, c] : f.terms()) {
		auto it = space.position.find(m);
		if (it == space.position.end())
			throw std::invalid_argument("form leaves its block");
		v.emplace(it->second, c);
	}
	return v;
}

} // namespace

ScalarForm cohomology_normal_form(const Algebra& alg, const ScalarForm& f)
{
	if (f.is_zero())
		return f;
	auto degree = f.degree();
	auto weight = f.weight();
	if (!degree || !weight)
		throw std::invalid_argument("normal form needs a homogeneous form");
	auto space = image_space(alg, *degree, *weight);
	return scalar_from_coordinates(space->basis, space->image.reduce(coordinates(*space, f)));
}

bool cohomologous(const Algebra& alg, const ScalarForm& a, const ScalarForm& b)
{
	ScalarForm diff = a - b;
	if (!d_scalar(alg, diff).is_zero())
		return false;
	return cohomology_normal_form(alg, diff).is_zero();
}

ScalarForm cup_product(const Algebra& alg, const ScalarForm& a, const ScalarForm& b)
{
	if (!d_scalar(alg, a).is_zero() || !d_scalar(alg, b).is_zero())
		throw std::invalid_argument("cup product needs closed forms");
	return cohomology_normal_form(alg, wedge(a, b));
}

std::vector<std::pair<CocycleLabel, Rational>> class_coordinates(const Algebra& alg, const ScalarForm& f)
{
	std::vector<std::pair<CocycleLabel, Rational>> out;
	if (f.is_zero())
		return out;
	if (!d_scalar(alg, f).is_zero())
		throw std::invalid_argument("class coordinates need a closed form");
	auto degree = f.degree();
	auto weight = f.weight();
	if (!degree || !weight)
		throw std::invalid_argument("class coordinates need a homogeneous form");
	auto space = image_space(alg, *degree, *weight);
	auto labels = enumerate_scalar_labels(alg, *degree, *weight);
	SparseMatrix M(static_cast<int>(space->basis.size()), static_cast<int>(labels.size()));
	for (std::size_t i = 0; i < labels.size(); ++i)
		M.set_column(static_cast<int>(i), space->image.reduce(coordinates(*space, label_form(alg, labels[i]))));
	auto x = solve_particular(M, space->image.reduce(coordinates(*space, f)));
	if (!x)
		throw std::logic_error("class lies outside the span of the census labels");
	for (const auto& [i, c] : *x)
		out.emplace_back(labels[i], c);
	return out;
}

} // namespace maxclass
