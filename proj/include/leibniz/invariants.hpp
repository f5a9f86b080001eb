#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/combinatorics.hpp"
#include "leibniz/parallel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// [v_1, ..., v_n]_Lie: the bracket summed over all n! orderings of its arguments.
template <FieldScalar S>
Vector<S> lie_bracket(const Algebra<S> &a, const std::vector<Vector<S>> &args)
{
	if (args.size() != a.arity())
		throw DimensionMismatch("Lie bracket of " + std::to_string(args.size()) + " vectors in a " + std::to_string(a.arity()) + "-algebra");
	Vector<S> out = zero_vector<S>(a.dim());
	std::vector<Vector<S>> permuted(args.size());
	for (const auto &p : permutations(args.size())) {
		for (std::size_t s = 0; s < p.size(); ++s)
			permuted[s] = args[p[s]];
		axpy(out, S(1), eval_bracket(a, permuted));
	}
	return out;
}

/// lie_bracket on basis vectors, by tensor lookup.
template <FieldScalar S>
Vector<S> lie_bracket_basis(const Algebra<S> &a, const IndexTuple &args)
{
	Vector<S> out = zero_vector<S>(a.dim());
	IndexTuple t(args.size());
	for (const auto &p : permutations(args.size())) {
		for (std::size_t s = 0; s < p.size(); ++s)
			t[s] = args[p[s]];
		if (const auto *v = a.basis_bracket(t))
			axpy(out, S(1), *v);
	}
	return out;
}

/// The same quantity computed as [s, ..., s] minus every bracket whose
/// argument indices repeat, s = v_1 + ... + v_n. Kept as a cross-check on
/// lie_bracket; shares only eval_bracket with it.
template <FieldScalar S>
Vector<S> lie_bracket_oracle(const Algebra<S> &a, const std::vector<Vector<S>> &args)
{
	const std::size_t n = a.arity();
	if (args.size() != n)
		throw DimensionMismatch("Lie bracket of " + std::to_string(args.size()) + " vectors in a " + std::to_string(n) + "-algebra");
	Vector<S> s = zero_vector<S>(a.dim());
	for (const auto &v : args)
		axpy(s, S(1), v);
	Vector<S> out = eval_bracket(a, std::vector<Vector<S>>(n, s));
	std::vector<Vector<S>> picked(n);
	for_each_tuple(n, n, [&](const IndexTuple &t) {
		std::vector<bool> seen(n, false);
		bool injective = true;
		for (auto i : t) {
			injective = injective && !seen[i];
			seen[i] = true;
		}
		if (injective)
			return;
		for (std::size_t k = 0; k < n; ++k)
			picked[k] = args[t[k]];
		axpy(out, S(-1), eval_bracket(a, picked));
	});
	return out;
}

namespace detail {

/// Span of gen(i) for i in [0, count), evaluated in parallel chunks and
/// merged in chunk order. The canonical form makes the result independent
/// of the partition.
template <FieldScalar S, class Gen>
Subspace<S> parallel_span(std::size_t ambient, std::size_t count, Gen &&gen)
{
	auto parts = parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
		Matrix<S> m(0, ambient);
		for (std::size_t i = begin; i < end; ++i)
			for (const auto &v : gen(i))
				if (!is_zero(v))
					m.append_row(v);
		return Subspace<S>::row_space(m);
	});
	Subspace<S> acc(ambient);
	for (const auto &p : parts)
		acc = subspace_sum(acc, p);
	return acc;
}

/// Kernel of the stacked linear conditions rows(i), i in [0, count).
template <FieldScalar S, class Rows>
Subspace<S> parallel_kernel(std::size_t ambient, std::size_t count, Rows &&rows)
{
	auto parts = parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
		Matrix<S> m(0, ambient);
		for (std::size_t i = begin; i < end; ++i)
			m.append_rows(rows(i));
		return Subspace<S>::row_space(m);
	});
	Matrix<S> all(0, ambient);
	for (const auto &p : parts)
		all.append_rows(p.basis());
	return kernel(all);
}

} // namespace detail

/// q^n_Lie. lie_bracket is symmetric, so basis multisets span it.
template <FieldScalar S>
Subspace<S> lie_commutator(const Algebra<S> &a)
{
	require_valid(a);
	const auto ms = multisets(a.dim(), a.arity());
	auto sp = detail::parallel_span<S>(a.dim(), ms.size(), [&](std::size_t i) {
		return std::vector<Vector<S>>{lie_bracket_basis(a, ms[i])};
	});
	require_invariant(is_ideal(a, sp), "Lie-commutator of '" + a.name() + "' is not an ideal");
	return sp;
}

/// Z_Lie(q) = {x : [x, e_J]_Lie = 0 for every (n-1)-multiset J}.
template <FieldScalar S>
Subspace<S> lie_center(const Algebra<S> &a)
{
	require_valid(a);
	const std::size_t d = a.dim();
	const auto ms = multisets(d, a.arity() - 1);
	return detail::parallel_kernel<S>(d, ms.size(), [&](std::size_t k) {
		Matrix<S> m(d, d);
		IndexTuple t(a.arity());
		std::copy(ms[k].begin(), ms[k].end(), t.begin() + 1);
		for (std::size_t i = 0; i < d; ++i) {
			t[0] = i;
			auto col = lie_bracket_basis(a, t);
			for (std::size_t r = 0; r < d; ++r)
				m(r, i) = col[r];
		}
		return m;
	});
}

/// Z(q): x vanishing in every slot against every basis filling.
template <FieldScalar S>
Subspace<S> center(const Algebra<S> &a)
{
	require_valid(a);
	const std::size_t n = a.arity(), d = a.dim();
	const auto fills = tuples(d, n - 1);
	return detail::parallel_kernel<S>(d, n * fills.size(), [&](std::size_t k) {
		const std::size_t slot = k / fills.size();
		const auto &rest = fills[k % fills.size()];
		IndexTuple t(n);
		for (std::size_t s = 0, r = 0; s < n; ++s)
			t[s] = s == slot ? 0 : rest[r++];
		Matrix<S> m(d, d);
		for (std::size_t i = 0; i < d; ++i) {
			t[slot] = i;
			if (const auto *v = a.basis_bracket(t))
				for (std::size_t r = 0; r < d; ++r)
					m(r, i) = (*v)[r];
		}
		return m;
	});
}

/// q^n = [q, ..., q].
template <FieldScalar S>
Subspace<S> commutator(const Algebra<S> &a)
{
	require_valid(a);
	std::vector<Vector<S>> vs;
	for (const auto &[idx, val] : a.tensor())
		vs.push_back(val);
	return ideal_closure(a, Subspace<S>::span(a.dim(), vs));
}

/// nLeib(q): the ideal generated by brackets with a repeated argument. The
/// repeated argument u = Σ c_k e_k is polarized into the symmetric pairs
/// B(k,l) + B(l,k), which span the same space when 2 is invertible.
template <FieldScalar S>
Subspace<S> n_leib_ideal(const Algebra<S> &a)
{
	if constexpr (characteristic_of<S> == 2)
		throw MathRejection("repeated-argument ideal needs 2 invertible; not available over F2");
	require_valid(a);
	const std::size_t n = a.arity(), d = a.dim();
	std::vector<std::pair<std::size_t, std::size_t>> slot_pairs;
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t q = p + 1; q < n; ++q)
			slot_pairs.emplace_back(p, q);
	const auto fills = tuples(d, n - 2);
	const auto basis_pairs = multisets(d, 2);
	const std::size_t per_pair = basis_pairs.size() * fills.size();
	auto gens = detail::parallel_span<S>(d, slot_pairs.size() * per_pair, [&](std::size_t k) {
		auto [p, q] = slot_pairs[k / per_pair];
		const auto &kl = basis_pairs[(k % per_pair) / fills.size()];
		const auto &rest = fills[k % fills.size()];
		IndexTuple t(n);
		for (std::size_t s = 0, r = 0; s < n; ++s)
			if (s != p && s != q)
				t[s] = rest[r++];
		t[p] = kl[0];
		t[q] = kl[1];
		Vector<S> g = a.basis_bracket_vector(t);
		std::swap(t[p], t[q]);
		if (const auto *v = a.basis_bracket(t))
			axpy(g, S(1), *v);
		return std::vector<Vector<S>>{std::move(g)};
	});
	return ideal_closure(a, gens);
}

/// q / nLeib(q), an n-Lie algebra.
template <FieldScalar S>
QuotientResult<S> liezation(const Algebra<S> &a)
{
	auto res = quotient_algebra(a, n_leib_ideal(a));
	res.algebra.set_name(a.name() + "_Lie");
	require_invariant(is_n_lie(res.algebra), "quotient by the repeated-argument ideal is not n-Lie");
	return res;
}

template <FieldScalar S>
bool is_lie_abelian(const Algebra<S> &a)
{
	const bool by_commutator = lie_commutator(a).dim() == 0;
	const bool by_center = lie_center(a).dim() == a.dim();
	require_invariant(by_commutator == by_center, "Lie-abelian tests disagree on '" + a.name() + "'");
	return by_commutator;
}

template <FieldScalar S>
bool is_lie_perfect(const Algebra<S> &a)
{
	return lie_commutator(a).dim() == a.dim();
}

/// Σ_{i=1..n} C(n-1, i-1) C(k, i): the number of Lie-brackets of n basis
/// vectors drawn from k central-factor representatives, up to order.
inline BigInt bound_B(std::size_t n, std::size_t k)
{
	if (n < 2)
		throw InputError("arity must be at least 2");
	BigInt sum = 0;
	for (std::size_t i = 1; i <= n; ++i)
		sum += binomial(n - 1, i - 1) * binomial(k, i);
	return sum;
}

inline BigInt bound_crude(std::size_t n, std::size_t k)
{
	return power(k, n);
}

/// [m, _{n-1} q]_Lie, closed to an ideal.
template <FieldScalar S>
Subspace<S> relative_lie_bracket_ideal(const Algebra<S> &a, const Subspace<S> &m)
{
	require_valid(a);
	if (!is_ideal(a, m))
		throw NotAnIdeal("relative Lie-bracket of a subspace that is not an ideal");
	const std::size_t n = a.arity(), d = a.dim();
	const auto ms = multisets(d, n - 1);
	const auto mb = m.basis_vectors();
	std::vector<Vector<S>> basis;
	for (std::size_t i = 0; i < d; ++i)
		basis.push_back(unit_vector<S>(d, i));
	auto sp = detail::parallel_span<S>(d, mb.size() * ms.size(), [&](std::size_t k) {
		std::vector<Vector<S>> args{mb[k / ms.size()]};
		for (auto j : ms[k % ms.size()])
			args.push_back(basis[j]);
		return std::vector<Vector<S>>{lie_bracket(a, args)};
	});
	return ideal_closure(a, sp);
}

/// Checks exactness of m/[m,q]_Lie -> q/q^n_Lie -> q/(m + q^n_Lie) -> 0 with
/// the maps induced by inclusion and identity.
template <FieldScalar S>
bool check_tail_exactness(const Algebra<S> &a, const Subspace<S> &m)
{
	if (!is_ideal(a, m))
		throw NotAnIdeal("tail exactness needs an ideal");
	const std::size_t d = a.dim();
	const auto rel = relative_lie_bracket_ideal(a, m);
	const auto comm = lie_commutator(a);
	const auto upper = subspace_sum(m, comm);
	if (!m.contains(rel) || !comm.contains(rel))
		return false;

	const auto left = quotient_coordinates(d, rel);   // coordinates on q/rel; m/rel sits inside
	const auto mid = quotient_coordinates(d, comm);   // q/q^n_Lie
	const auto right = quotient_coordinates(d, upper); // q/(m + q^n_Lie)

	// basis of m/rel lifted to q
	std::vector<Vector<S>> m_images;
	for (const auto &v : m.basis_vectors())
		m_images.push_back(left.project(v));
	const auto m_mod_rel = Subspace<S>::span(left.dim(), m_images);
	std::vector<Vector<S>> f_cols;
	for (const auto &c : m_mod_rel.basis_vectors())
		f_cols.push_back(mid.project(left.lift(c)));
	// well defined: rel maps to zero in the middle
	for (const auto &v : rel.basis_vectors())
		if (!is_zero(mid.project(v)))
			return false;

	Matrix<S> g(right.dim(), mid.dim());
	for (std::size_t j = 0; j < mid.dim(); ++j) {
		auto col = right.project(mid.representative(j));
		for (std::size_t r = 0; r < right.dim(); ++r)
			g(r, j) = col[r];
	}
	const auto image_f = Subspace<S>::span(mid.dim(), f_cols);
	const auto kernel_g = kernel(g);
	const bool exact_middle = image_f == kernel_g;
	const bool onto_right = rank(g) == right.dim();
	return exact_middle && onto_right;
}

/// Σ C(n-1,i-1) C(k,i) - dim M_Lie(q), defined only where dim M_Lie(q) is
/// known in closed form: Lie-abelian 2-algebras, where it is k(k+1)/2.
template <FieldScalar S>
std::optional<BigInt> t_invariant(const Algebra<S> &a)
{
	if (a.arity() != 2 || !is_lie_abelian(a))
		return std::nullopt;
	const std::size_t k = a.dim();
	return bound_B(2, k) - BigInt(k * (k + 1) / 2);
}

struct InvariantReport {
	std::string name;
	std::string field;
	std::size_t arity = 0;
	std::size_t dim = 0;
	std::size_t dim_lie_center = 0;
	std::size_t dim_lie_commutator = 0;
	std::size_t dim_center = 0;
	std::size_t dim_commutator = 0;
	std::optional<std::size_t> dim_n_leib; ///< absent in characteristic 2
	std::optional<std::size_t> dim_liezation;
	bool lie_abelian = false;
	bool lie_perfect = false;
	bool n_lie = false;
	BigInt bound_B = 0;
	BigInt bound_crude = 0;
	bool bound_satisfied = false;
	bool crude_bound_satisfied = false;
	std::optional<BigInt> t_invariant;
};

template <FieldScalar S>
InvariantReport analyze(const Algebra<S> &a)
{
	require_valid(a);
	InvariantReport r;
	r.name = a.name();
	r.field = ScalarTraits<S>::field_name();
	r.arity = a.arity();
	r.dim = a.dim();
	r.dim_lie_center = lie_center(a).dim();
	r.dim_lie_commutator = lie_commutator(a).dim();
	r.dim_center = center(a).dim();
	r.dim_commutator = commutator(a).dim();
	if constexpr (characteristic_of<S> != 2) {
		r.dim_n_leib = n_leib_ideal(a).dim();
		r.dim_liezation = a.dim() - *r.dim_n_leib;
	}
	r.lie_abelian = r.dim_lie_commutator == 0;
	require_invariant(r.lie_abelian == (r.dim_lie_center == r.dim), "Lie-abelian tests disagree on '" + a.name() + "'");
	r.lie_perfect = r.dim_lie_commutator == r.dim;
	r.n_lie = is_n_lie(a);
	r.bound_B = bound_B(a.arity(), r.dim - r.dim_lie_center);
	r.bound_crude = bound_crude(a.arity(), r.dim - r.dim_center);
	r.bound_satisfied = BigInt(r.dim_lie_commutator) <= r.bound_B;
	r.crude_bound_satisfied = BigInt(r.dim_commutator) <= r.bound_crude;
	if (a.arity() == 2 && r.lie_abelian)
		r.t_invariant = bound_B(2, r.dim) - BigInt(r.dim * (r.dim + 1) / 2);
	return r;
}

} // namespace leibniz
