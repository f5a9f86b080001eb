#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/invariants.hpp"

#include <optional>
#include <string>

namespace leibniz {

/// 0 -> m -> g -> q -> 0, with the surjection g -> q held explicitly.
template <FieldScalar S>
struct Extension {
	Algebra<S> total;
	Subspace<S> kernel_ideal;
	AlgebraHomomorphism<S> projection;

	const Algebra<S> &base() const { return projection.codomain; }
};

/// The extension of total / ideal by ideal.
template <FieldScalar S>
Extension<S> make_extension(const Algebra<S> &total, const Subspace<S> &ideal)
{
	auto q = quotient_algebra(total, ideal);
	return {total, ideal, std::move(q.projection)};
}

/// Projection is a surjective homomorphism out of `total` whose kernel is the ideal.
template <FieldScalar S>
bool is_valid_extension(const Extension<S> &e)
{
	return same_structure(e.projection.domain, e.total) && is_ideal(e.total, e.kernel_ideal) && check_homomorphism(e.projection) &&
	       is_surjective(e.projection) && kernel(e.projection) == e.kernel_ideal;
}

/// m ⊆ Z_Lie(g), decided both directly and as [m, _{n-1} g]_Lie = 0.
template <FieldScalar S>
bool check_lie_central(const Extension<S> &e)
{
	const bool inside_center = lie_center(e.total).contains(e.kernel_ideal);
	const bool bracket_vanishes = relative_lie_bracket_ideal(e.total, e.kernel_ideal).dim() == 0;
	require_invariant(inside_center == bracket_vanishes, "Lie-centrality tests disagree");
	return inside_center;
}

/// Lie-central with m ⊆ g^n_Lie.
template <FieldScalar S>
bool check_lie_stem(const Extension<S> &e)
{
	return check_lie_central(e) && lie_commutator(e.total).contains(e.kernel_ideal);
}

/// A map of extensions: beta on totals over base_map on bases.
template <FieldScalar S>
struct ExtensionMorphism {
	Extension<S> source;
	Extension<S> target;
	AlgebraHomomorphism<S> beta;
	AlgebraHomomorphism<S> base_map;
};

template <FieldScalar S>
bool check_extension_morphism(const ExtensionMorphism<S> &m)
{
	if (m.beta.matrix.rows() != m.target.total.dim() || m.beta.matrix.cols() != m.source.total.dim())
		throw DimensionMismatch("beta does not map the source total algebra to the target total algebra");
	if (m.base_map.matrix.rows() != m.target.base().dim() || m.base_map.matrix.cols() != m.source.base().dim())
		throw DimensionMismatch("base map does not map the source base to the target base");
	if (!check_homomorphism(m.beta) || !check_homomorphism(m.base_map))
		return false;
	if (m.target.projection.matrix * m.beta.matrix != m.base_map.matrix * m.source.projection.matrix)
		return false;
	for (const auto &v : m.source.kernel_ideal.basis_vectors())
		if (!m.target.kernel_ideal.contains(m.beta(v)))
			return false;
	return true;
}

/// The Lie-stem extension 0 -> v -> g -> abelian(2,k) -> 0 of maximal
/// dimension: g has basis x_1..x_k, y_ij (i <= j) with [x_i, x_j] = y_ij for
/// i <= j and every other basis bracket zero.
template <FieldScalar S>
Extension<S> abelian_cover(std::size_t k)
{
	if constexpr (characteristic_of<S> == 2)
		if (k > 0)
			throw MathRejection("abelian cover: [x_i, x_i]_Lie = 2 y_ii vanishes in characteristic 2");
	std::vector<std::string> labels;
	for (std::size_t i = 1; i <= k; ++i)
		labels.push_back("x" + std::to_string(i));
	for (std::size_t i = 1; i <= k; ++i)
		for (std::size_t j = i; j <= k; ++j)
			labels.push_back("y" + std::to_string(i) + "," + std::to_string(j));
	const std::size_t d = labels.size();
	Algebra<S> g("cover(" + std::to_string(k) + ")", 2, d, labels);
	std::size_t y = k;
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i; j < k; ++j)
			g.set_bracket({i, j}, y++, S(1));
	validate_fundamental_identity(g, 0);
	require_invariant(g.validation() == Validation::valid, "cover construction fails the Leibniz identity");

	std::vector<Vector<S>> ys;
	for (std::size_t i = k; i < d; ++i)
		ys.push_back(unit_vector<S>(d, i));
	const auto v = Subspace<S>::span(d, ys);
	require_invariant(lie_commutator(g) == v, "cover Lie-commutator is not the span of the y_ij");
	auto e = make_extension(g, v);
	e.projection.codomain.set_name("abelian(2," + std::to_string(k) + ")");
	require_invariant(e.base().tensor().empty(), "cover base is not abelian");
	require_invariant(check_lie_stem(e), "cover is not a Lie-stem extension");
	return e;
}

/// dim M_Lie(q) = k(k+1)/2 for a k-dimensional Lie-abelian Leibniz 2-algebra.
inline std::size_t multiplier_dim_abelian_2(std::size_t k)
{
	return k * (k + 1) / 2;
}

enum class CoverVerdict { not_stem, stem_only, cover };

inline const char *to_string(CoverVerdict v)
{
	switch (v) {
	case CoverVerdict::not_stem:
		return "not-stem";
	case CoverVerdict::stem_only:
		return "stem-only";
	case CoverVerdict::cover:
		return "cover";
	}
	return "?";
}

/// A Lie-stem extension whose kernel has the multiplier's dimension is a
/// cover. Without a known multiplier dimension the best verdict is stem-only.
template <FieldScalar S>
CoverVerdict check_cover_candidate(const Extension<S> &e, std::optional<std::size_t> known_multiplier_dim)
{
	if (!check_lie_stem(e))
		return CoverVerdict::not_stem;
	if (known_multiplier_dim && e.kernel_ideal.dim() == *known_multiplier_dim)
		return CoverVerdict::cover;
	return CoverVerdict::stem_only;
}

/// dim(m ⊗^{n-1} q/nLeib(q)) for a Lie-central ideal m.
template <FieldScalar S>
BigInt tensor_bound_term(const Algebra<S> &a, const Subspace<S> &m)
{
	if (!is_ideal(a, m))
		throw NotAnIdeal("tensor bound term needs an ideal");
	if (!lie_center(a).contains(m))
		throw MathRejection("tensor bound term needs an ideal inside the Lie-center");
	const std::size_t liez = a.dim() - n_leib_ideal(a).dim();
	return BigInt(m.dim()) * power(liez, a.arity() - 1);
}

} // namespace leibniz
