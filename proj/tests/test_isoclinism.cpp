#include "support.hpp"

#include <gtest/gtest.h>

using namespace leibniz;
using namespace leibniz::testing;

namespace {

Algebra<Q> fixture(const std::string &id) { return catalog::get(id).algebra; }

template <FieldScalar S>
IsoclinismWitness<S> identity_witness(const Algebra<S> &a)
{
	auto f = isoclinism_frame(a);
	return {Matrix<S>::identity(f.factor_dim()), Matrix<S>::identity(f.commutator_dim())};
}

/// Basis x1, x2, y with [x_i, x_j] = c_ij y; y is central.
template <FieldScalar S>
Algebra<S> quadratic(const std::string &name, long c11, long c12, long c21, long c22)
{
	Algebra<S> a(name, 2, 3, {"x1", "x2", "y"});
	const long c[2][2] = {{c11, c12}, {c21, c22}};
	for (std::size_t i = 0; i < 2; ++i)
		for (std::size_t j = 0; j < 2; ++j)
			if (c[i][j] != 0)
				a.set_bracket({i, j}, 2, S(c[i][j]));
	validate_fundamental_identity(a, 0);
	return a;
}

Algebra<Q> permuted_cover(std::size_t k, std::uint64_t seed)
{
	Gen g(seed);
	auto total = abelian_cover<Q>(k).total;
	std::vector<std::size_t> perm(total.dim());
	std::iota(perm.begin(), perm.end(), 0);
	std::shuffle(perm.begin(), perm.end(), g.engine());
	auto p = permute_basis(total, perm);
	p.set_validation(Validation::valid);
	return p;
}

} // namespace

TEST(Frame, DimensionsMatchInvariants)
{
	for (const auto &a : small_valid_algebras()) {
		auto f = isoclinism_frame(a);
		EXPECT_EQ(f.factor_dim(), a.dim() - lie_center(a).dim());
		EXPECT_EQ(f.commutator_dim(), lie_commutator(a).dim());
		EXPECT_EQ(f.tuples.size(), power(f.factor_dim(), a.arity()).get_ui());
	}
}

TEST(Witness, Reflexive)
{
	Gen g(40);
	for (int t = 0; t < 20; ++t) {
		auto a = random_valid(g);
		EXPECT_TRUE(check_witness(a, a, identity_witness(a))) << a.name();
	}
}

TEST(Witness, Symmetric)
{
	auto q = permuted_cover(2, 1), p = permuted_cover(2, 2);
	auto r = search_witness(q, p);
	ASSERT_EQ(r.status, SearchStatus::found);
	EXPECT_TRUE(check_witness(q, p, *r.witness));
	EXPECT_TRUE(check_witness(p, q, inverse_witness(*r.witness)));
}

TEST(Witness, LieAbelianAlgebrasAreIsoclinic)
{
	const IsoclinismWitness<Q> empty{Matrix<Q>(0, 0), Matrix<Q>(0, 0)};
	std::vector<Algebra<Q>> all{fixture("paper-ex-1"), fixture("paper-ex-23")};
	for (std::size_t k = 0; k <= 3; ++k)
		all.push_back(abelian_algebra<Q>(3, k));
	for (const auto &a : all)
		for (const auto &b : all)
			EXPECT_TRUE(check_witness(a, b, empty)) << a.name() << " ~ " << b.name();
}

TEST(Witness, DimensionObstruction)
{
	auto q = fixture("sq(1)"), p = fixture("abelian(2,2)");
	EXPECT_FALSE(check_witness(q, p, IsoclinismWitness<Q>{Matrix<Q>(0, 1), Matrix<Q>(0, 1)}));
	EXPECT_THROW(check_witness(q, p, IsoclinismWitness<Q>{Matrix<Q>(1, 1), Matrix<Q>(1, 1)}), DimensionMismatch);
	EXPECT_EQ(search_witness(q, p).status, SearchStatus::none);
	EXPECT_THROW(check_witness(fixture("heis3"), fixture("paper-ex-1"), IsoclinismWitness<Q>{}), DimensionMismatch);
}

TEST(Witness, RejectsSingularOrWrongMaps)
{
	auto q = fixture("sq(2)");
	auto w = identity_witness(q);
	EXPECT_TRUE(check_witness(q, q, w));
	auto singular = w;
	singular.eta(0, 0) = Q(0);
	EXPECT_FALSE(check_witness(q, q, singular));
	auto scaled = w;
	scaled.xi(0, 0) = Q(2);
	EXPECT_FALSE(check_witness(q, q, scaled));
	EXPECT_THROW(inverse_witness(singular), MathRejection);
}

TEST(Witness, AbelianFactorsDoNotMatter)
{
	for (auto id : {"sq(1)", "sq(2)", "paper-ex-23"}) {
		auto q = fixture(id);
		for (std::size_t k = 1; k <= 2; ++k) {
			auto p = direct_product(q, abelian_algebra<Q>(q.arity(), k));
			p.set_validation(Validation::valid);
			EXPECT_TRUE(check_witness(q, p, identity_witness(q))) << id;
		}
	}
}

TEST(Search, IdenticalAlgebrasGiveIdentity)
{
	auto q = fixture("sq(2)");
	auto r = search_witness(q, q);
	ASSERT_EQ(r.status, SearchStatus::found);
	EXPECT_EQ(r.witness->eta, Matrix<Q>::identity(2));
	EXPECT_EQ(r.witness->xi, Matrix<Q>::identity(2));
}

TEST(Search, PermutedCoversOverQAndF3)
{
	auto q = permuted_cover(2, 7), p = permuted_cover(2, 8);
	auto r = search_witness(q, p);
	ASSERT_EQ(r.status, SearchStatus::found);
	EXPECT_TRUE(check_witness(q, p, *r.witness));

	SearchLimits ex;
	ex.exhaustive = true;
	auto q3 = reduce_mod<3>(q), p3 = reduce_mod<3>(p);
	auto r3 = search_witness(q3, p3, ex);
	ASSERT_EQ(r3.status, SearchStatus::found);
	EXPECT_TRUE(check_witness(q3, p3, *r3.witness));
}

TEST(Search, ExhaustiveProvesNonIsoclinism)
{
	// Lie-brackets 2I and the hyperbolic plane: discriminants 1 and -1 differ mod squares in F3.
	auto diag = quadratic<F3>("diag", 1, 0, 0, 1);
	auto hyper = quadratic<F3>("hyper", 0, 1, 0, 0);
	auto split = quadratic<F3>("split", 1, 0, 0, -1);
	SearchLimits ex;
	ex.exhaustive = true;
	auto none = search_witness(diag, hyper, ex);
	EXPECT_EQ(none.status, SearchStatus::none);
	EXPECT_GT(none.candidates, 0u);
	auto found = search_witness(split, hyper, ex);
	ASSERT_EQ(found.status, SearchStatus::found);
	EXPECT_TRUE(check_witness(split, hyper, *found.witness));
}

TEST(Search, HeuristicFailureIsInconclusive)
{
	// Isoclinic over Q only through a non-monomial eta.
	auto a = quadratic<Q>("a", 1, 0, 0, -1);
	auto b = quadratic<Q>("b", 0, 1, 0, 0);
	auto r = search_witness(a, b);
	EXPECT_EQ(r.status, SearchStatus::inconclusive);
	EXPECT_FALSE(r.witness.has_value());
}

TEST(Search, LimitsReportInconclusive)
{
	SearchLimits ex;
	ex.exhaustive = true;
	auto q = fixture("sq(2)");
	EXPECT_EQ(search_witness(q, q, ex).status, SearchStatus::inconclusive);
	auto q5 = reduce_mod<5>(q);
	EXPECT_EQ(search_witness(q5, q5, ex).status, SearchStatus::inconclusive);
	SearchLimits tiny;
	tiny.max_candidates = 1;
	auto r = search_witness(q, q, tiny);
	EXPECT_EQ(r.status, SearchStatus::inconclusive);
	EXPECT_NE(r.reason.find("limit"), std::string::npos);
}

TEST(Search, DeterministicAcrossWorkers)
{
	auto q = reduce_mod<3>(permuted_cover(2, 11)), p = reduce_mod<3>(permuted_cover(2, 12));
	SearchLimits ex;
	ex.exhaustive = true;
	SearchResult<F3> one, four;
	{
		ScopedWorkerCount w(1);
		one = search_witness(q, p, ex);
	}
	{
		ScopedWorkerCount w(4);
		four = search_witness(q, p, ex);
	}
	ASSERT_EQ(one.status, SearchStatus::found);
	ASSERT_EQ(four.status, SearchStatus::found);
	EXPECT_EQ(one.witness->eta, four.witness->eta);
	EXPECT_EQ(one.witness->xi, four.witness->xi);
}
