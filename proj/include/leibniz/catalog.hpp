#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/combinatorics.hpp"
#include "leibniz/error.hpp"
#include "leibniz/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace leibniz::catalog {

/// Where an expected value comes from.
enum class Origin {
	literature,    ///< stated for this algebra in the published example
	definitional,  ///< immediate from the definitions (abelian, n-Lie, ...)
	brute_force,   ///< tests/oracle/catalog_oracle.py, full tuple enumeration
};

inline const char *to_string(Origin o)
{
	switch (o) {
	case Origin::literature:
		return "literature";
	case Origin::definitional:
		return "definitional";
	case Origin::brute_force:
		return "brute-force";
	}
	return "?";
}

struct ExpectedValue {
	std::int64_t value;
	Origin origin;
};

/// Keys match the InvariantReport field names: valid, dim_lie_center,
/// dim_lie_commutator, dim_center, dim_commutator, dim_n_leib, n_lie.
using Expected = std::map<std::string, ExpectedValue>;

struct CatalogEntry {
	std::string id;
	std::string description;
	Algebra<Rational> algebra;
	Expected expected;
};

namespace detail {

inline Vector<Rational> vec(std::initializer_list<long> xs)
{
	Vector<Rational> v;
	for (long x : xs)
		v.emplace_back(x);
	return v;
}

/// Sets [e_args] = value and every permutation of args with the permutation's sign.
inline void set_antisymmetric(Algebra<Rational> &a, const IndexTuple &args, const Vector<Rational> &value)
{
	for (const auto &p : permutations(args.size())) {
		IndexTuple t;
		int sign = 1;
		for (std::size_t i = 0; i < p.size(); ++i) {
			t.push_back(args[p[i]]);
			for (std::size_t j = i + 1; j < p.size(); ++j)
				if (p[i] > p[j])
					sign = -sign;
		}
		Vector<Rational> v = value;
		if (sign < 0)
			for (auto &x : v)
				x = -x;
		a.set_bracket(t, v);
	}
}

inline Expected dims(std::int64_t lie_center, std::int64_t lie_comm, std::int64_t center, std::int64_t comm, std::int64_t n_leib, bool n_lie, Origin o)
{
	return {
	    {"valid", {1, o}},
	    {"dim_lie_center", {lie_center, o}},
	    {"dim_lie_commutator", {lie_comm, o}},
	    {"dim_center", {center, o}},
	    {"dim_commutator", {comm, o}},
	    {"dim_n_leib", {n_leib, o}},
	    {"n_lie", {n_lie ? 1 : 0, o}},
	};
}

inline void finish(CatalogEntry &e)
{
	validate_fundamental_identity(e.algebra, 0);
}

inline CatalogEntry paper_ex_1()
{
	CatalogEntry e{"paper-ex-1", "Lie-abelian Leibniz 3-algebra that is not 3-Lie: [x,y,y]=-2x, [y,y,x]=[y,x,y]=x",
	               Algebra<Rational>("paper-ex-1", 3, 2, {"x", "y"}), {}};
	e.algebra.set_bracket({0, 1, 1}, vec({-2, 0}));
	e.algebra.set_bracket({1, 1, 0}, vec({1, 0}));
	e.algebra.set_bracket({1, 0, 1}, vec({1, 0}));
	e.expected = dims(2, 0, 0, 1, 1, false, Origin::brute_force);
	e.expected["dim_lie_center"].origin = Origin::literature;
	e.expected["dim_lie_commutator"].origin = Origin::literature;
	finish(e);
	return e;
}

inline CatalogEntry paper_ex_23()
{
	CatalogEntry e{"paper-ex-23", "Lie-abelian Leibniz 3-algebra with 1-dimensional Liezation: [x,x,y]=y, [y,x,x]=-y",
	               Algebra<Rational>("paper-ex-23", 3, 2, {"x", "y"}), {}};
	e.algebra.set_bracket({0, 0, 1}, vec({0, 1}));
	e.algebra.set_bracket({1, 0, 0}, vec({0, -1}));
	e.expected = dims(2, 0, 0, 1, 1, false, Origin::brute_force);
	e.expected["dim_lie_commutator"].origin = Origin::literature;
	e.expected["dim_n_leib"].origin = Origin::literature;
	finish(e);
	return e;
}

inline CatalogEntry abelian(std::size_t n, std::size_t k)
{
	auto id = "abelian(" + std::to_string(n) + "," + std::to_string(k) + ")";
	CatalogEntry e{id, "zero bracket", Algebra<Rational>(id, n, k), {}};
	auto kk = static_cast<std::int64_t>(k);
	e.expected = dims(kk, 0, kk, 0, 0, true, Origin::definitional);
	e.algebra.set_validation(Validation::valid);
	return e;
}

inline CatalogEntry heis3()
{
	CatalogEntry e{"heis3", "3-dimensional Heisenberg Lie algebra: [x,y]=z", Algebra<Rational>("heis3", 2, 3, {"x", "y", "z"}), {}};
	set_antisymmetric(e.algebra, {0, 1}, vec({0, 0, 1}));
	e.expected = dims(3, 0, 1, 1, 0, true, Origin::brute_force);
	for (auto key : {"dim_lie_center", "dim_lie_commutator", "dim_n_leib", "n_lie"})
		e.expected[key].origin = Origin::definitional;
	finish(e);
	return e;
}

inline CatalogEntry sl2()
{
	CatalogEntry e{"sl2", "sl(2): [h,e]=2e, [h,f]=-2f, [e,f]=h", Algebra<Rational>("sl2", 2, 3, {"h", "e", "f"}), {}};
	set_antisymmetric(e.algebra, {0, 1}, vec({0, 2, 0}));
	set_antisymmetric(e.algebra, {0, 2}, vec({0, 0, -2}));
	set_antisymmetric(e.algebra, {1, 2}, vec({1, 0, 0}));
	e.expected = dims(3, 0, 0, 3, 0, true, Origin::brute_force);
	for (auto key : {"dim_lie_center", "dim_lie_commutator", "dim_n_leib", "n_lie"})
		e.expected[key].origin = Origin::definitional;
	finish(e);
	return e;
}

/// The simple 4-dimensional 3-Lie algebra: [e_1..ê_i..e_4] = (-1)^i e_i.
inline CatalogEntry simple_3_lie_4d()
{
	CatalogEntry e{"simple-3-lie-4d", "simple 4-dimensional 3-Lie algebra, totally antisymmetric", Algebra<Rational>("simple-3-lie-4d", 3, 4), {}};
	set_antisymmetric(e.algebra, {1, 2, 3}, vec({-1, 0, 0, 0}));
	set_antisymmetric(e.algebra, {0, 2, 3}, vec({0, 1, 0, 0}));
	set_antisymmetric(e.algebra, {0, 1, 3}, vec({0, 0, -1, 0}));
	set_antisymmetric(e.algebra, {0, 1, 2}, vec({0, 0, 0, 1}));
	e.expected = dims(4, 0, 0, 4, 0, true, Origin::brute_force);
	for (auto key : {"dim_lie_center", "dim_lie_commutator", "dim_n_leib", "n_lie"})
		e.expected[key].origin = Origin::definitional;
	finish(e);
	return e;
}

/// Squares algebra: basis x_1..x_k, y_1..y_k with [x_i, x_i] = y_i.
inline CatalogEntry sq(std::size_t k)
{
	auto id = "sq(" + std::to_string(k) + ")";
	std::vector<std::string> labels;
	for (std::size_t i = 1; i <= k; ++i)
		labels.push_back("x" + std::to_string(i));
	for (std::size_t i = 1; i <= k; ++i)
		labels.push_back("y" + std::to_string(i));
	CatalogEntry e{id, "Leibniz 2-algebra [x_i,x_i]=y_i", Algebra<Rational>(id, 2, 2 * k, labels), {}};
	for (std::size_t i = 0; i < k; ++i)
		e.algebra.set_bracket({i, i}, k + i, Rational(1));
	auto kk = static_cast<std::int64_t>(k);
	e.expected = dims(kk, kk, kk, kk, kk, k == 0, Origin::brute_force);
	finish(e);
	return e;
}

/// [e, e] = e in dimension 1: [[e,e],e] = e but the right side gives 2e.
inline CatalogEntry bad_identity()
{
	CatalogEntry e{"bad-identity", "deliberately invalid: [e,e]=e", Algebra<Rational>("bad-identity", 2, 1, {"e"}), {}};
	e.algebra.set_bracket({0, 0}, vec({1}));
	e.expected = {{"valid", {0, Origin::brute_force}}};
	finish(e);
	return e;
}

} // namespace detail

/// The fixed inventory; parametric families are also reachable through get().
inline std::vector<std::string> list()
{
	return {"paper-ex-1", "paper-ex-23", "abelian(2,3)", "abelian(3,2)", "heis3", "sl2", "simple-3-lie-4d", "sq(1)", "sq(2)", "bad-identity"};
}

/// Looks up an id; "abelian(n,k)" and "sq(k)" accept any parameters.
inline CatalogEntry get(const std::string &id)
{
	if (id == "paper-ex-1")
		return detail::paper_ex_1();
	if (id == "paper-ex-23")
		return detail::paper_ex_23();
	if (id == "heis3")
		return detail::heis3();
	if (id == "sl2")
		return detail::sl2();
	if (id == "simple-3-lie-4d")
		return detail::simple_3_lie_4d();
	if (id == "bad-identity")
		return detail::bad_identity();
	static const std::regex abelian_re(R"(abelian\((\d+),(\d+)\))"), sq_re(R"(sq\((\d+)\))");
	std::smatch m;
	if (std::regex_match(id, m, abelian_re)) {
		auto n = std::stoul(m[1]), k = std::stoul(m[2]);
		if (n < 2 || n > 8 || k > 64)
			throw InputError("abelian(n,k) needs 2 <= n <= 8 and k <= 64");
		return detail::abelian(n, k);
	}
	if (std::regex_match(id, m, sq_re)) {
		auto k = std::stoul(m[1]);
		if (k > 32)
			throw InputError("sq(k) needs k <= 32");
		return detail::sq(k);
	}
	throw InputError("unknown catalog id '" + id + "'");
}

} // namespace leibniz::catalog
