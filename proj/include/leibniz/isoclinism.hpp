#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/parallel.hpp"

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// eta: q/Z_Lie(q) -> p/Z_Lie(p) and xi: q^n_Lie -> p^n_Lie, as matrices in
/// the canonical coordinates of IsoclinismFrame.
template <FieldScalar S>
struct IsoclinismWitness {
	Matrix<S> eta;
	Matrix<S> xi;
};

/// Coordinates on the Lie-central factor (non-pivot representatives of
/// Z_Lie) and on the Lie-commutator (its echelon basis), plus the induced
/// symmetric map (q/Z_Lie)^n -> q^n_Lie tabulated on factor basis tuples.
template <FieldScalar S>
struct IsoclinismFrame {
	Subspace<S> lie_center;
	Subspace<S> lie_commutator;
	QuotientCoordinates<S> factor;
	std::vector<IndexTuple> tuples;       ///< every factor basis n-tuple
	std::vector<Vector<S>> induced;       ///< commutator coordinates, per tuple
	std::vector<std::size_t> multiset_of; ///< index of each multiset inside `tuples`

	std::size_t factor_dim() const { return factor.dim(); }
	std::size_t commutator_dim() const { return lie_commutator.dim(); }
};

namespace detail {
template <FieldScalar S>
Vector<S> induced_bracket(const Algebra<S> &a, const IsoclinismFrame<S> &f, const std::vector<Vector<S>> &lifts, const IndexTuple &t)
{
	std::vector<Vector<S>> args;
	for (auto i : t)
		args.push_back(lifts[i]);
	return f.lie_commutator.coordinates(lie_bracket(a, args));
}
} // namespace detail

template <FieldScalar S>
IsoclinismFrame<S> isoclinism_frame(const Algebra<S> &a)
{
	IsoclinismFrame<S> f;
	f.lie_center = lie_center(a);
	f.lie_commutator = lie_commutator(a);
	f.factor = quotient_coordinates(a.dim(), f.lie_center);
	const std::size_t k = f.factor.dim(), n = a.arity();
	std::vector<Vector<S>> lifts, shifted;
	for (std::size_t i = 0; i < k; ++i) {
		lifts.push_back(f.factor.representative(i));
		shifted.push_back(lifts.back());
		if (f.lie_center.dim() > 0)
			axpy(shifted.back(), S(1), f.lie_center.basis_vector(i % f.lie_center.dim()));
	}
	f.tuples = tuples(k, n);
	for (std::size_t t = 0; t < f.tuples.size(); ++t) {
		f.induced.push_back(detail::induced_bracket(a, f, lifts, f.tuples[t]));
		// Lie-central elements drop out of every Lie-bracket
		require_invariant(f.induced.back() == detail::induced_bracket(a, f, shifted, f.tuples[t]),
		                  "induced Lie-bracket depends on the choice of lifts");
		if (std::is_sorted(f.tuples[t].begin(), f.tuples[t].end()))
			f.multiset_of.push_back(t);
	}
	return f;
}

namespace detail {

/// p's induced map evaluated on eta-images of q's factor basis, for each
/// q multiset: Σ over p factor tuples of Π eta entries times p's table.
template <FieldScalar S>
std::vector<Vector<S>> transported(const IsoclinismFrame<S> &fq, const IsoclinismFrame<S> &fp, const Matrix<S> &eta)
{
	std::vector<Vector<S>> out;
	for (auto mi : fq.multiset_of) {
		const auto &t = fq.tuples[mi];
		Vector<S> acc = zero_vector<S>(fp.commutator_dim());
		for (std::size_t pi = 0; pi < fp.tuples.size(); ++pi) {
			const auto &u = fp.tuples[pi];
			S c(1);
			for (std::size_t s = 0; s < u.size() && !c.is_zero(); ++s)
				c *= eta(u[s], t[s]);
			if (!c.is_zero())
				axpy(acc, c, fp.induced[pi]);
		}
		out.push_back(std::move(acc));
	}
	return out;
}

template <FieldScalar S>
bool witness_matches(const IsoclinismFrame<S> &fq, const std::vector<Vector<S>> &target, const Matrix<S> &xi)
{
	for (std::size_t j = 0; j < fq.multiset_of.size(); ++j)
		if (xi.apply(fq.induced[fq.multiset_of[j]]) != target[j])
			return false;
	return true;
}

} // namespace detail

/// eta and xi are invertible and xi([x_1..x_n]_Lie) = [eta x_1 .. eta x_n]_Lie
/// on factor basis multisets (both sides symmetric and multilinear).
template <FieldScalar S>
bool check_witness(const Algebra<S> &q, const Algebra<S> &p, const IsoclinismWitness<S> &w)
{
	if (q.arity() != p.arity())
		throw DimensionMismatch("isoclinism between algebras of different arity");
	const auto fq = isoclinism_frame(q), fp = isoclinism_frame(p);
	if (w.eta.rows() != fp.factor_dim() || w.eta.cols() != fq.factor_dim())
		throw DimensionMismatch("eta is " + std::to_string(w.eta.rows()) + "x" + std::to_string(w.eta.cols()) + ", factors have dimensions " +
		                        std::to_string(fq.factor_dim()) + " and " + std::to_string(fp.factor_dim()));
	if (w.xi.rows() != fp.commutator_dim() || w.xi.cols() != fq.commutator_dim())
		throw DimensionMismatch("xi is " + std::to_string(w.xi.rows()) + "x" + std::to_string(w.xi.cols()) + ", Lie-commutators have dimensions " +
		                        std::to_string(fq.commutator_dim()) + " and " + std::to_string(fp.commutator_dim()));
	if (fq.factor_dim() != fp.factor_dim() || fq.commutator_dim() != fp.commutator_dim())
		return false;
	if (!inverse(w.eta) || !inverse(w.xi))
		return false;
	return detail::witness_matches(fq, detail::transported(fq, fp, w.eta), w.xi);
}

template <FieldScalar S>
IsoclinismWitness<S> inverse_witness(const IsoclinismWitness<S> &w)
{
	auto e = inverse(w.eta), x = inverse(w.xi);
	if (!e || !x)
		throw MathRejection("witness matrices are not invertible");
	return {std::move(*e), std::move(*x)};
}

enum class SearchStatus { found, none, inconclusive };

inline const char *to_string(SearchStatus s)
{
	switch (s) {
	case SearchStatus::found:
		return "found";
	case SearchStatus::none:
		return "none";
	case SearchStatus::inconclusive:
		return "inconclusive";
	}
	return "?";
}

struct SearchLimits {
	bool exhaustive = false;
	std::size_t max_exhaustive_dim = 3;
	std::uint32_t max_exhaustive_prime = 3;
	std::uint64_t max_candidates = 200'000'000;
};

template <FieldScalar S>
struct SearchResult {
	SearchStatus status = SearchStatus::inconclusive;
	std::optional<IsoclinismWitness<S>> witness;
	std::string reason;
	std::uint64_t candidates = 0;
};

namespace detail {

/// Every invertible n x n matrix over F_p, in lexicographic entry order.
template <FieldScalar S>
std::vector<Matrix<S>> general_linear_group(std::size_t n)
{
	constexpr std::uint32_t p = characteristic_of<S>;
	std::vector<Matrix<S>> out;
	for_each_tuple(p, n * n, [&](const IndexTuple &t) {
		Matrix<S> m(n, n);
		for (std::size_t i = 0; i < n * n; ++i)
			m(i / n, i % n) = S(static_cast<long>(t[i]));
		if (rank(m) == n)
			out.push_back(std::move(m));
	});
	return out;
}

/// Signed permutation matrices.
template <FieldScalar S>
std::vector<Matrix<S>> signed_permutations(std::size_t n)
{
	std::vector<Matrix<S>> out;
	const std::size_t signs = characteristic_of<S> == 2 ? 1 : std::size_t{1} << n;
	for (const auto &p : permutations(n))
		for (std::size_t mask = 0; mask < signs; ++mask) {
			Matrix<S> m(n, n);
			for (std::size_t j = 0; j < n; ++j)
				m(p[j], j) = (mask >> j) & 1 ? S(-1) : S(1);
			out.push_back(std::move(m));
		}
	return out;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
	if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
		return std::numeric_limits<std::uint64_t>::max();
	return a * b;
}

} // namespace detail

/// Looks for a witness by enumerating matrix pairs, eta outermost, pruning
/// on the first failing multiset. Exhaustive mode runs over all of GL x GL
/// for small prime fields, where `none` proves the algebras are not
/// Lie-isoclinic over that field. Otherwise only signed permutation
/// matrices are tried and failure is inconclusive.
template <FieldScalar S>
SearchResult<S> search_witness(const Algebra<S> &q, const Algebra<S> &p, const SearchLimits &limits = {})
{
	if (q.arity() != p.arity())
		throw DimensionMismatch("isoclinism between algebras of different arity");
	SearchResult<S> res;
	const auto fq = isoclinism_frame(q), fp = isoclinism_frame(p);
	const std::size_t f = fq.factor_dim(), c = fq.commutator_dim();
	if (f != fp.factor_dim() || c != fp.commutator_dim()) {
		res.status = SearchStatus::none;
		res.reason = "dimension obstruction: Lie-central factors " + std::to_string(f) + " vs " + std::to_string(fp.factor_dim()) +
		             ", Lie-commutators " + std::to_string(c) + " vs " + std::to_string(fp.commutator_dim());
		return res;
	}

	constexpr std::uint32_t ch = characteristic_of<S>;
	const bool exhaustive = limits.exhaustive && ch != 0 && ch <= limits.max_exhaustive_prime && f <= limits.max_exhaustive_dim &&
	                        c <= limits.max_exhaustive_dim;
	if (limits.exhaustive && !exhaustive) {
		res.status = SearchStatus::inconclusive;
		res.reason = ch == 0 ? "exhaustive search needs a prime field"
		                     : "exhaustive search limited to p <= " + std::to_string(limits.max_exhaustive_prime) + " and dimensions <= " +
		                           std::to_string(limits.max_exhaustive_dim);
		return res;
	}

	std::vector<Matrix<S>> etas, xis;
	if constexpr (ch != 0) {
		if (exhaustive) {
			etas = detail::general_linear_group<S>(f);
			xis = detail::general_linear_group<S>(c);
		}
	}
	if (!exhaustive) {
		etas = detail::signed_permutations<S>(f);
		xis = detail::signed_permutations<S>(c);
	}
	const std::uint64_t space = detail::saturating_mul(etas.size(), xis.size());
	if (space > limits.max_candidates) {
		res.status = SearchStatus::inconclusive;
		res.reason = "candidate space of " + std::to_string(space) + " pairs exceeds the limit of " + std::to_string(limits.max_candidates);
		return res;
	}

	// Lowest eta index with a match wins, so the answer does not depend on the worker count.
	std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
	struct Hit {
		std::size_t eta = std::numeric_limits<std::size_t>::max();
		std::size_t xi = 0;
		std::uint64_t tried = 0;
	};
	auto hits = parallel_chunks(etas.size(), [&](std::size_t begin, std::size_t end) {
		Hit h;
		for (std::size_t e = begin; e < end && e < best.load(); ++e) {
			const auto target = detail::transported(fq, fp, etas[e]);
			for (std::size_t x = 0; x < xis.size(); ++x) {
				++h.tried;
				if (detail::witness_matches(fq, target, xis[x])) {
					h.eta = e;
					h.xi = x;
					std::size_t cur = best.load();
					while (e < cur && !best.compare_exchange_weak(cur, e)) {
					}
					return h;
				}
			}
		}
		return h;
	});
	Hit win;
	for (const auto &h : hits) {
		res.candidates += h.tried;
		if (h.eta < win.eta)
			win = h;
	}
	if (win.eta != std::numeric_limits<std::size_t>::max()) {
		res.status = SearchStatus::found;
		res.witness = IsoclinismWitness<S>{etas[win.eta], xis[win.xi]};
		res.reason = exhaustive ? "exhaustive search" : "signed-permutation search";
		require_invariant(check_witness(q, p, *res.witness), "search returned a witness that fails the check");
	} else if (exhaustive) {
		res.status = SearchStatus::none;
		res.reason = "exhaustive search over GL(" + std::to_string(f) + "," + std::to_string(ch) + ") x GL(" + std::to_string(c) + "," +
		             std::to_string(ch) + ") found no witness";
	} else {
		res.status = SearchStatus::inconclusive;
		res.reason = "no signed-permutation witness";
	}
	return res;
}

} // namespace leibniz
