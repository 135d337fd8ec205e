#include "maxclass/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace maxclass {

std::int64_t partition_count(int q, int k)
{
	if (q < 0 || k < 0)
		return 0;
	if (q == 0)
		return k == 0 ? 1 : 0;
	if (k < q)
		return 0;
	static std::mutex lock;
	static std::map<std::pair<int, int>, std::int64_t> memo;
	{
		std::lock_guard guard(lock);
		auto it = memo.find({q, k});
		if (it != memo.end())
			return it->second;
	}
	std::int64_t value = partition_count(q - 1, k - 1) + partition_count(q, k - q);
	std::lock_guard guard(lock);
	memo[{q, k}] = value;
	return value;
}

namespace {

void tuples_rec(int remaining, int tail, int weight, int start, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
	if (remaining == 0) {
		// weight left must equal the tail sum t*a + t(t+1)/2 where a is the last head entry
		const int a = prefix.back();
		if (weight == tail * a + tail * (tail + 1) / 2) {
			auto t = prefix;
			for (int s = 1; s <= tail; ++s)
				t.push_back(a + s);
			out.push_back(std::move(t));
		}
		return;
	}
	for (int i = start;; ++i) {
		// smallest completion: i, i+1, ..., then the tail after the last
		const int r = remaining;
		const int head_min = r * i + r * (r - 1) / 2;
		const int last = i + r - 1;
		if (head_min + tail * last + tail * (tail + 1) / 2 > weight)
			break;
		prefix.push_back(i);
		tuples_rec(remaining - 1, tail, weight - i, i + 1, prefix, out);
		prefix.pop_back();
	}
}

} // namespace

std::vector<std::vector<int>> tail_tuples(int head, int tail, int weight, int min_first)
{
	std::vector<std::vector<int>> out;
	if (head < 1)
		return out;
	std::vector<int> prefix;
	tuples_rec(head, tail, weight, min_first, prefix, out);
	return out;
}

std::vector<CocycleLabel> enumerate_scalar_labels(const Algebra& alg, int degree, int weight)
{
	std::vector<CocycleLabel> out;
	const std::string fam = alg.family();
	if (alg.is_quotient() || fam == "l1")
		throw std::invalid_argument("scalar census exists only for m0 and m2");
	if (degree == 1) {
		if (weight == 1 || weight == 2)
			out.push_back({Family::Generator, {weight}, std::nullopt});
		return out;
	}
	if (degree < 1)
		return out;
	if (fam == "m0") {
		for (auto& I : tail_tuples(degree - 1, 1, weight, 2))
			out.push_back({Family::Omega, std::move(I), std::nullopt});
		return out;
	}
	if (degree == 2) {
		if (weight == 5)
			out.push_back({Family::Omega, {2, 3}, std::nullopt});
		if (weight == 7)
			out.push_back({Family::Omega, {3, 4}, std::nullopt});
		return out;
	}
	for (auto& I : tail_tuples(degree - 2, 2, weight, 3))
		out.push_back({Family::W, std::move(I), std::nullopt});
	return out;
}

namespace {

std::optional<std::string> m0_violation(const std::vector<int>& I, int r)
{
	const int q = static_cast<int>(I.size()) - 1;
	if (!is_adjacent_tuple(I))
		return "index tuple must be increasing with i_1 >= 2 and an adjacent tail";
	if (r < 2)
		return "target must satisfy r >= 2";
	if (3 <= r && r <= q + 1 && I[r - 3] == r - 1)
		return "i_{r-2} > r-1 required when 3 <= r <= q+1";
	if (r == q + 3 && I[q] == q + 2)
		return "i_{q+1} > q+2 required when r = q+3";
	return std::nullopt;
}

} // namespace

std::optional<std::string> printed_m2_violation(const std::vector<int>& I, int r)
{
	const int q = static_cast<int>(I.size()) - 2;
	auto at = [&](int k) { return I.at(k - 1); }; // 1-based
	if (r == 4 && q >= 2 && !(at(1) > 3))
		return "i_1 > 3 required when r = 4, q >= 2";
	if ((5 <= r && r <= q + 3) || r == q + 6) {
		const int k = r - 4;
		if (k >= 1 && k <= static_cast<int>(I.size())) {
			const int a = at(k);
			if (!(a > r - 1 || (a == r - 1 && at(1) > 3)))
				return "i_{r-4} > r-1, or i_{r-4} = r-1 and i_1 > 3, required when 5 <= r <= q+3 or r = q+6";
		}
	}
	if (r == q + 5) {
		const int k = r - 3;
		if (k >= 1 && k <= static_cast<int>(I.size()) && !(at(k) > r - 1))
			return "i_{r-3} > r-1 required when r = q+5";
	}
	return std::nullopt;
}

namespace {

// Killed targets (I, r) for one (degree, mu) cell. A source e_c (x) w_J (c = 1, 2)
// of degree p-1 hits, on page x, the first still-live target e_{x+c} (x) w_{J u {x}}.
// In degree 3 the source is the class e^3^e^4 - e^2^e^5, treated as J = (3,4).
std::set<std::pair<std::vector<int>, int>> killed_targets(int degree, int mu)
{
	struct Source {
		std::vector<int> J;
		int c;
		bool used = false;
	};
	std::vector<Source> sources;
	for (int c = 1; c <= 2; ++c) {
		const int weight = c - mu;
		if (degree == 3) {
			if (weight == 7)
				sources.push_back({{3, 4}, c});
		} else if (degree > 3) {
			for (auto& J : tail_tuples(degree - 3, 2, weight, 3))
				sources.push_back({std::move(J), c});
		}
	}
	std::set<std::pair<std::vector<int>, int>> dead;
	int max_x = 0;
	for (const auto& s : sources)
		max_x = std::max(max_x, s.J.back() + 1);
	for (int x = 3; x <= max_x; ++x) {
		for (auto& s : sources) {
			if (s.used || std::binary_search(s.J.begin(), s.J.end(), x))
				continue;
			std::vector<int> T = s.J;
			T.insert(std::upper_bound(T.begin(), T.end(), x), x);
			if (!is_doubly_adjacent_tuple(T))
				continue;
			auto key = std::make_pair(T, x + s.c);
			if (dead.count(key))
				continue;
			dead.insert(std::move(key));
			s.used = true;
		}
	}
	return dead;
}

} // namespace

bool m2_target_killed(const std::vector<int>& I, int r)
{
	static std::mutex lock;
	static std::map<std::pair<int, int>, std::set<std::pair<std::vector<int>, int>>> memo;
	const int degree = static_cast<int>(I.size());
	int weight = 0;
	for (int i : I)
		weight += i;
	const int mu = r - weight;
	std::lock_guard guard(lock);
	auto it = memo.find({degree, mu});
	if (it == memo.end())
		it = memo.emplace(std::make_pair(degree, mu), killed_targets(degree, mu)).first;
	return it->second.count({I, r}) > 0;
}

namespace {

std::optional<std::string> m2_violation(const std::vector<int>& I, int r)
{
	if (!is_doubly_adjacent_tuple(I))
		return "index tuple must be increasing with i_1 >= 3 and a doubly adjacent tail";
	if (r < 3)
		return "target must satisfy r >= 3";
	if (m2_target_killed(I, r))
		return "e_r (x) w_I is hit by a differential from e_1 or e_2 (x) w_J";
	return std::nullopt;
}

} // namespace

std::optional<std::string> admissibility_violation(const Algebra& alg, const CocycleLabel& label)
{
	const std::string fam = alg.family();
	const auto& I = label.indices;
	if (alg.is_quotient() || fam == "l1")
		return "labels are defined only for m0 and m2";
	switch (label.family) {
	case Family::Generator:
		if (I.size() != 1 || (I[0] != 1 && I[0] != 2))
			return "generator classes are e^1 and e^2";
		return std::nullopt;
	case Family::Omega:
		if (fam == "m2") {
			if (I == std::vector<int>{2, 3} || I == std::vector<int>{3, 4})
				return std::nullopt;
			return "m2 has omega classes only for (2,3) and (3,4)";
		}
		if (!is_adjacent_tuple(I))
			return "omega index tuple must be increasing with i_1 >= 2 and an adjacent tail";
		return std::nullopt;
	case Family::W:
		if (fam != "m2")
			return "w classes belong to m2";
		if (!is_doubly_adjacent_tuple(I))
			return "w index tuple must be increasing with i_1 >= 3 and a doubly adjacent tail";
		return std::nullopt;
	case Family::Psi:
		if (fam != "m0")
			return "Psi cocycles belong to m0";
		if (!label.target)
			return "Psi needs a target index";
		return m0_violation(I, *label.target);
	case Family::PsiSpecial: {
		if (fam != "m0")
			return "Psi cocycles belong to m0";
		if (!label.target || I.size() != 1)
			return "special Psi labels are Psi[1,1], Psi[1,2], Psi[2,l+2]";
		const int r = *label.target;
		if (I[0] == 1 && (r == 1 || r == 2))
			return std::nullopt;
		if (I[0] == 2 && r >= 2 && r != 3)
			return std::nullopt;
		return "special Psi labels are Psi[1,1], Psi[1,2], Psi[2,l+2] with l >= 0, l != 1";
	}
	case Family::Phi:
		if (fam != "m2")
			return "Phi cocycles belong to m2";
		if (!label.target)
			return "Phi needs a target index";
		return m2_violation(I, *label.target);
	case Family::PhiSpecial: {
		if (fam != "m2")
			return "Phi cocycles belong to m2";
		if (!label.target)
			return "Phi needs a target index";
		const int r = *label.target;
		if (I == std::vector<int>{1} && r == 1)
			return std::nullopt;
		if (I == std::vector<int>{2} && r >= 4)
			return std::nullopt;
		if (I == std::vector<int>{2, 3} && (r == 1 || r == 2 || r == 3 || r >= 7))
			return std::nullopt;
		if (I == std::vector<int>{3, 4} && r >= 3)
			return std::nullopt;
		return "special Phi labels are Phi[1,1], Phi[2,l+2] (l >= 2), Phi[2,3,m] (m = 1,2,3 or m >= 7), Phi[3,4,l] (l >= 3)";
	}
	}
	return "unknown family";
}

CensusResult census_adjoint(const Algebra& alg, int degree, int mu, int cap)
{
	CensusResult out;
	out.alg = alg;
	out.mode = Coefficients::Adjoint;
	out.degree = degree;
	out.grade = mu;
	out.cap = cap;
	const std::string fam = alg.family();
	if (alg.is_quotient() || fam == "l1")
		throw std::invalid_argument("adjoint census exists only for m0 and m2");
	auto push = [&](Family f, std::vector<int> I, int r) {
		if (r <= cap)
			out.labels.push_back({f, std::move(I), r});
	};

	if (degree <= 0)
		return out;
	if (fam == "m0") {
		if (degree == 1) {
			if (mu == 0)
				push(Family::PsiSpecial, {1}, 1);
			if (mu == 1)
				push(Family::PsiSpecial, {1}, 2);
			if (mu >= 0 && mu != 1)
				push(Family::PsiSpecial, {2}, mu + 2);
			return out;
		}
		out.unbounded = true;
		for (int r = 2; r <= cap; ++r)
			for (auto& I : tail_tuples(degree - 1, 1, r - mu, 2))
				if (!m0_violation(I, r))
					push(Family::Psi, std::move(I), r);
		return out;
	}

	if (degree == 1) {
		if (mu == 0)
			push(Family::PhiSpecial, {1}, 1);
		if (mu >= 2)
			push(Family::PhiSpecial, {2}, mu + 2);
		return out;
	}
	if (degree == 2) {
		const int m = mu + 5;
		if (m == 1 || m == 2 || m == 3 || m >= 7)
			push(Family::PhiSpecial, {2, 3}, m);
		const int l = mu + 7;
		if (l >= 3)
			push(Family::PhiSpecial, {3, 4}, l);
		return out;
	}
	out.unbounded = true;
	for (int r = 3; r <= cap; ++r) {
		for (auto& I : tail_tuples(degree - 2, 2, r - mu, 3)) {
			const bool killed = m2_target_killed(I, r);
			const bool printed = !printed_m2_violation(I, r);
			CocycleLabel label{Family::Phi, I, r};
			if (killed == printed)
				out.divergences.push_back(label.to_string() + (killed ? " kept by the printed inequalities" : " removed by the printed inequalities"));
			if (!killed)
				push(Family::Phi, std::move(I), r);
		}
	}
	return out;
}

int quotient_oracle(const Algebra& quotient, Coefficients mode, int degree, int grade)
{
	if (!quotient.is_quotient())
		throw std::invalid_argument("quotient oracle needs m0:n or m2:n");
	if (*quotient.max_index() < 4)
		throw std::invalid_argument("quotient oracle needs n >= 4");
	return cohomology(quotient, mode, degree, grade).dimension;
}

int quotient_oracle_total(const Algebra& quotient, Coefficients mode, int degree)
{
	if (!quotient.is_quotient())
		throw std::invalid_argument("quotient oracle needs m0:n or m2:n");
	const int n = *quotient.max_index();
	if (degree < 0 || degree > n)
		return 0;
	// weights of degree-q monomials over 1..n
	const int lo = degree * (degree + 1) / 2;
	const int hi = degree * n - degree * (degree - 1) / 2;
	int total = 0;
	if (mode == Coefficients::Trivial) {
		for (int lambda = lo; lambda <= hi; ++lambda)
			total += quotient_oracle(quotient, mode, degree, lambda);
	} else {
		for (int mu = 1 - hi; mu <= n - lo; ++mu)
			total += quotient_oracle(quotient, mode, degree, mu);
	}
	return total;
}

std::optional<int> stable_quotient_dim(const std::string& family, Coefficients mode, int degree, int grade, int n)
{
	std::optional<int> value;
	for (int m = n; m <= n + 2; ++m) {
		Algebra q = Algebra::parse(family + ":" + std::to_string(m));
		int d = quotient_oracle(q, mode, degree, grade);
		if (value && *value != d)
			return std::nullopt;
		value = d;
	}
	return value;
}

int adjoint_stable_dim(const Algebra& alg, int degree, int mu, int W, int W_outer)
{
	if (W_outer < W)
		throw std::invalid_argument("outer cap must not be below the cap");
	BlockSpec outer{alg, Coefficients::Adjoint, degree, mu, W_outer};
	auto basis = block_basis(outer);
	auto kernel = kernel_basis(block_matrix(outer));
	std::vector<SparseVector> restricted;
	restricted.reserve(kernel.size());
	for (const auto& v : kernel) {
		SparseVector r;
		for (std::size_t i = 0; i < v.size(); ++i)
			if (v[i] != 0 && basis[i].module_index <= W)
				r.emplace_hint(r.end(), static_cast<int>(i), v[i]);
		restricted.push_back(std::move(r));
	}
	int cocycles = Echelon::rank_of_rows(restricted);
	int boundaries = 0;
	if (degree > 0)
		boundaries = rank(block_matrix({alg, Coefficients::Adjoint, degree - 1, mu, W}));
	return cocycles - boundaries;
}

} // namespace maxclass
