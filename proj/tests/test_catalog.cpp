#include "support.hpp"

#include <gtest/gtest.h>

using namespace leibniz;
using namespace leibniz::testing;

namespace {

std::int64_t reported(const InvariantReport &r, const std::string &key)
{
	if (key == "valid")
		return 1;
	if (key == "dim_lie_center")
		return static_cast<std::int64_t>(r.dim_lie_center);
	if (key == "dim_lie_commutator")
		return static_cast<std::int64_t>(r.dim_lie_commutator);
	if (key == "dim_center")
		return static_cast<std::int64_t>(r.dim_center);
	if (key == "dim_commutator")
		return static_cast<std::int64_t>(r.dim_commutator);
	if (key == "dim_n_leib")
		return static_cast<std::int64_t>(r.dim_n_leib.value());
	if (key == "n_lie")
		return r.n_lie ? 1 : 0;
	ADD_FAILURE() << "unknown expected key " << key;
	return -1;
}

} // namespace

TEST(Catalog, ListIsStableAndResolvable)
{
	auto ids = catalog::list();
	EXPECT_EQ(ids.size(), 10u);
	for (const auto &id : ids) {
		auto e = catalog::get(id);
		EXPECT_EQ(e.id, id);
		EXPECT_EQ(e.algebra.name(), id);
		EXPECT_FALSE(e.expected.empty());
		EXPECT_FALSE(e.description.empty());
	}
}

TEST(Catalog, ExpectedValuesMatchComputedReports)
{
	for (const auto &id : catalog::list()) {
		auto e = catalog::get(id);
		const bool valid = check_fundamental_identity(e.algebra).valid;
		ASSERT_EQ(valid ? 1 : 0, e.expected.at("valid").value) << id;
		if (!valid)
			continue;
		auto r = analyze(e.algebra);
		for (const auto &[key, ev] : e.expected)
			EXPECT_EQ(reported(r, key), ev.value) << id << " " << key << " (" << catalog::to_string(ev.origin) << ")";
	}
}

TEST(Catalog, PublishedExampleValues)
{
	auto e1 = catalog::get("paper-ex-1");
	EXPECT_EQ(e1.expected.at("dim_lie_center").origin, catalog::Origin::literature);
	auto r1 = analyze(e1.algebra);
	EXPECT_EQ(r1.dim_lie_center, 2u);
	EXPECT_EQ(r1.dim_lie_commutator, 0u);

	auto r23 = analyze(catalog::get("paper-ex-23").algebra);
	EXPECT_EQ(r23.dim_lie_commutator, 0u);
	EXPECT_EQ(r23.dim_n_leib, 1u);
	EXPECT_EQ(r23.dim_liezation, 1u);
}

TEST(Catalog, BadIdentityFails)
{
	auto e = catalog::get("bad-identity");
	auto r = check_fundamental_identity(e.algebra);
	EXPECT_FALSE(r.valid);
	EXPECT_GE(r.violations.size(), 1u);
}

TEST(Catalog, ParametricFamilies)
{
	auto a = catalog::get("abelian(4,5)");
	EXPECT_EQ(a.algebra.arity(), 4u);
	EXPECT_EQ(a.algebra.dim(), 5u);
	EXPECT_EQ(a.expected.at("dim_lie_center").value, 5);
	EXPECT_EQ(a.expected.at("dim_lie_center").origin, catalog::Origin::definitional);
	for (std::size_t k = 0; k <= 4; ++k) {
		auto s = catalog::get("sq(" + std::to_string(k) + ")");
		auto r = analyze(s.algebra);
		EXPECT_EQ(r.dim, 2 * k);
		EXPECT_EQ(r.dim_lie_commutator, k);
		EXPECT_EQ(r.dim_lie_center, k);
	}
}

TEST(Catalog, UnknownOrOutOfRange)
{
	for (auto id : {"nope", "abelian(1,2)", "abelian(9,1)", "abelian(2,65)", "sq(33)", "sq(-1)", "abelian(2, 3)", ""})
		EXPECT_THROW(catalog::get(id), InputError) << id;
}

TEST(Catalog, NLieEntriesAreLieTrivial)
{
	for (auto id : {"heis3", "sl2", "simple-3-lie-4d"}) {
		auto r = analyze(catalog::get(id).algebra);
		EXPECT_TRUE(r.n_lie) << id;
		EXPECT_EQ(r.dim_lie_commutator, 0u) << id;
		EXPECT_EQ(r.dim_lie_center, r.dim) << id;
	}
}
