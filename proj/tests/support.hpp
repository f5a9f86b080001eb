#pragma once

#include "leibniz/leibniz.hpp"

#include <random>

namespace leibniz::testing {

using Q = Rational;
using F3 = Zp<3>;

class Gen
{
public:
	explicit Gen(std::uint64_t seed) : rng_(seed) {}

	long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
	std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
	bool coin() { return integer(0, 1) == 1; }

	/// Small rationals, zero about a quarter of the time.
	template <FieldScalar S>
	S scalar()
	{
		if constexpr (characteristic_of<S> == 0) {
			if (integer(0, 3) == 0)
				return S(0);
			return S(integer(-5, 5), integer(1, 4));
		} else {
			return S(integer(0, characteristic_of<S> - 1));
		}
	}

	template <FieldScalar S>
	Vector<S> vector(std::size_t d)
	{
		Vector<S> v;
		for (std::size_t i = 0; i < d; ++i)
			v.push_back(scalar<S>());
		return v;
	}

	template <FieldScalar S>
	Matrix<S> matrix(std::size_t r, std::size_t c)
	{
		Matrix<S> m(r, c);
		for (std::size_t i = 0; i < r; ++i)
			for (std::size_t j = 0; j < c; ++j)
				m(i, j) = scalar<S>();
		return m;
	}

	template <FieldScalar S>
	Matrix<S> invertible(std::size_t n)
	{
		for (;;) {
			auto m = matrix<S>(n, n);
			if (rank(m) == n)
				return m;
		}
	}

	/// Arbitrary structure tensor; almost never satisfies the identity.
	template <FieldScalar S>
	Algebra<S> tensor(std::size_t n, std::size_t d, double density = 0.5)
	{
		Algebra<S> a("random", n, d);
		std::bernoulli_distribution keep(density);
		for_each_tuple(d, n, [&](const IndexTuple &t) {
			if (keep(rng_))
				a.set_bracket(t, vector<S>(d));
		});
		return a;
	}

	std::mt19937_64 &engine() { return rng_; }

private:
	std::mt19937_64 rng_;
};

/// Valid rational fixtures small enough for exhaustive checks.
inline std::vector<Algebra<Q>> small_valid_algebras()
{
	std::vector<Algebra<Q>> out;
	for (const auto &id : catalog::list()) {
		auto e = catalog::get(id);
		if (e.algebra.validation() == Validation::valid)
			out.push_back(e.algebra);
	}
	out.push_back(abelian_cover<Q>(2).total);
	return out;
}

/// A valid algebra in a random basis, built from a fixture.
inline Algebra<Q> random_valid(Gen &g)
{
	auto all = small_valid_algebras();
	auto a = all[g.index(all.size())];
	auto b = change_basis(a, g.invertible<Q>(a.dim()));
	b.set_validation(Validation::valid);
	return b;
}

template <FieldScalar S>
std::vector<Vector<S>> basis_vectors(std::size_t d)
{
	std::vector<Vector<S>> out;
	for (std::size_t i = 0; i < d; ++i)
		out.push_back(unit_vector<S>(d, i));
	return out;
}

/// Every ideal generated by one vector with entries in {-1,0,1}, deduplicated.
template <FieldScalar S>
std::vector<Subspace<S>> principal_ideals(const Algebra<S> &a)
{
	std::vector<Subspace<S>> out;
	for_each_tuple(3, a.dim(), [&](const IndexTuple &t) {
		Vector<S> v;
		for (auto x : t)
			v.push_back(S(static_cast<long>(x) - 1));
		auto i = ideal_closure(a, Subspace<S>::span(a.dim(), {v}));
		for (const auto &j : out)
			if (j == i)
				return;
		out.push_back(std::move(i));
	});
	return out;
}

} // namespace leibniz::testing
