#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/error.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/isoclinism.hpp"
#include "leibniz/scalar.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace leibniz::io {

using Json = nlohmann::ordered_json;

constexpr int schema_version = 1;

/// Fields an algebra file may declare. "Fp" files name their prime in "p".
using AnyAlgebra = std::variant<Algebra<Rational>, Algebra<Zp<2>>, Algebra<Zp<3>>, Algebra<Zp<5>>, Algebra<Zp<7>>, Algebra<Zp<11>>, Algebra<Zp<13>>>;

inline const std::vector<std::uint32_t> &supported_primes()
{
	static const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
	return primes;
}

template <FieldScalar S>
Json field_json(Json j)
{
	if constexpr (characteristic_of<S> == 0) {
		j["field"] = "Q";
	} else {
		j["field"] = "Fp";
		j["p"] = characteristic_of<S>;
	}
	return j;
}

template <FieldScalar S>
Json vector_json(const Vector<S> &v)
{
	Json a = Json::array();
	for (const auto &x : v)
		a.push_back(x.str());
	return a;
}

template <FieldScalar S>
Json matrix_json(const Matrix<S> &m)
{
	Json rows = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		rows.push_back(vector_json<S>(m.row_vector(r)));
	return rows;
}

template <FieldScalar S>
Json subspace_json(const Subspace<S> &s)
{
	return {{"dim", s.dim()}, {"pivots", s.pivots()}, {"basis", matrix_json(s.basis())}};
}

/// Serializes in the AlgebraFile schema; brackets in lexicographic tuple order.
template <FieldScalar S>
Json algebra_to_json(const Algebra<S> &a)
{
	Json j;
	j["schema_version"] = schema_version;
	j["name"] = a.name();
	j["arity"] = a.arity();
	j["dim"] = a.dim();
	j["basis"] = a.labels();
	j = field_json<S>(std::move(j));
	Json brackets = Json::array();
	for (const auto &[idx, val] : a.tensor()) {
		Json value = Json::array();
		for (std::size_t i = 0; i < val.size(); ++i)
			if (!val[i].is_zero())
				value.push_back({{"basis", i}, {"coef", val[i].str()}});
		brackets.push_back({{"args", idx}, {"value", std::move(value)}});
	}
	j["brackets"] = std::move(brackets);
	return j;
}

namespace detail {

[[noreturn]] inline void fail(const std::string &path, const std::string &what)
{
	throw InputError(path + ": " + what);
}

inline const Json &member(const Json &j, const std::string &key, const std::string &path)
{
	if (!j.is_object())
		fail(path, "expected an object");
	auto it = j.find(key);
	if (it == j.end())
		fail(path, "missing field '" + key + "'");
	return *it;
}

inline std::size_t as_count(const Json &j, const std::string &path)
{
	if (!j.is_number_integer() || j.get<long long>() < 0)
		fail(path, "expected a non-negative integer");
	return j.get<std::size_t>();
}

inline std::string as_string(const Json &j, const std::string &path)
{
	if (!j.is_string())
		fail(path, "expected a string");
	return j.get<std::string>();
}

template <FieldScalar S>
S parse_scalar(const Json &j, const std::string &path)
{
	try {
		return S::parse(as_string(j, path), true);
	} catch (const InputError &e) {
		fail(path, e.what());
	}
}

template <FieldScalar S>
Algebra<S> parse_typed(const Json &j)
{
	const auto version = as_count(member(j, "schema_version", "$"), "$.schema_version");
	if (version != schema_version)
		fail("$.schema_version", "unsupported version " + std::to_string(version) + " (expected " + std::to_string(schema_version) + ")");
	std::string name = j.contains("name") ? as_string(j["name"], "$.name") : "";
	const auto arity = as_count(member(j, "arity", "$"), "$.arity");
	if (arity < 2)
		fail("$.arity", "arity must be at least 2");
	const auto dim = as_count(member(j, "dim", "$"), "$.dim");
	std::vector<std::string> labels;
	if (j.contains("basis")) {
		const auto &b = j["basis"];
		if (!b.is_array() || b.size() != dim)
			fail("$.basis", "expected an array of " + std::to_string(dim) + " labels");
		for (std::size_t i = 0; i < b.size(); ++i)
			labels.push_back(as_string(b[i], "$.basis[" + std::to_string(i) + "]"));
	}
	Algebra<S> a(name, arity, dim, labels);
	const auto &brackets = member(j, "brackets", "$");
	if (!brackets.is_array())
		fail("$.brackets", "expected an array");
	std::set<IndexTuple> seen;
	for (std::size_t e = 0; e < brackets.size(); ++e) {
		const std::string path = "$.brackets[" + std::to_string(e) + "]";
		const auto &args_j = member(brackets[e], "args", path);
		if (!args_j.is_array() || args_j.size() != arity)
			fail(path + ".args", "expected " + std::to_string(arity) + " basis indices");
		IndexTuple args;
		for (std::size_t s = 0; s < args_j.size(); ++s) {
			auto idx = as_count(args_j[s], path + ".args[" + std::to_string(s) + "]");
			if (idx >= dim)
				fail(path + ".args[" + std::to_string(s) + "]", "index " + std::to_string(idx) + " out of range for dimension " + std::to_string(dim));
			args.push_back(idx);
		}
		if (!seen.insert(args).second)
			fail(path + ".args", "duplicate bracket tuple");
		const auto &value_j = member(brackets[e], "value", path);
		if (!value_j.is_array())
			fail(path + ".value", "expected an array");
		Vector<S> value = zero_vector<S>(dim);
		std::set<std::size_t> used;
		for (std::size_t t = 0; t < value_j.size(); ++t) {
			const std::string tp = path + ".value[" + std::to_string(t) + "]";
			auto basis = as_count(member(value_j[t], "basis", tp), tp + ".basis");
			if (basis >= dim)
				fail(tp + ".basis", "index " + std::to_string(basis) + " out of range for dimension " + std::to_string(dim));
			if (!used.insert(basis).second)
				fail(tp + ".basis", "duplicate basis index");
			value[basis] = parse_scalar<S>(member(value_j[t], "coef", tp), tp + ".coef");
		}
		a.set_bracket(args, std::move(value));
	}
	return a;
}

template <std::size_t I = 0>
AnyAlgebra parse_fp(const Json &j, std::uint32_t p)
{
	if constexpr (I + 1 < std::variant_size_v<AnyAlgebra>) {
		using A = std::variant_alternative_t<I + 1, AnyAlgebra>;
		using S = std::remove_cvref_t<decltype(std::declval<A>().tensor().begin()->second[0])>;
		if (characteristic_of<S> == p)
			return parse_typed<S>(j);
		return parse_fp<I + 1>(j, p);
	} else {
		fail("$.p", "unsupported prime " + std::to_string(p));
	}
}

/// 1-based line and column of a byte offset.
inline std::string position(std::string_view text, std::size_t byte)
{
	std::size_t line = 1, col = 1;
	for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
		if (text[i] == '\n') {
			++line;
			col = 1;
		} else {
			++col;
		}
	}
	return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace detail

inline Json parse_json(std::string_view text)
{
	try {
		return Json::parse(text);
	} catch (const nlohmann::json::parse_error &e) {
		throw InputError("malformed JSON at " + detail::position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
	}
}

inline AnyAlgebra algebra_from_json(const Json &j)
{
	const auto field = detail::as_string(detail::member(j, "field", "$"), "$.field");
	if (field == "Q")
		return detail::parse_typed<Rational>(j);
	if (field == "Fp")
		return detail::parse_fp(j, static_cast<std::uint32_t>(detail::as_count(detail::member(j, "p", "$"), "$.p")));
	detail::fail("$.field", "expected \"Q\" or \"Fp\", got \"" + field + "\"");
}

template <FieldScalar S>
Algebra<S> typed_algebra_from_json(const Json &j)
{
	auto any = algebra_from_json(j);
	if (auto *a = std::get_if<Algebra<S>>(&any))
		return std::move(*a);
	throw InputError("$.field: algebra is not over " + ScalarTraits<S>::field_name());
}

/// Parses vectors written as "c1,c2,...;c1,c2,..." into length-`dim` vectors.
template <FieldScalar S>
std::vector<Vector<S>> parse_vector_list(std::string_view text, std::size_t dim)
{
	std::vector<Vector<S>> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		auto end = text.find(';', start);
		auto item = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
		if (!item.empty()) {
			Vector<S> v;
			std::size_t s = 0;
			while (s <= item.size()) {
				auto e = item.find(',', s);
				auto tok = item.substr(s, e == std::string_view::npos ? std::string_view::npos : e - s);
				v.push_back(S::parse(tok));
				if (e == std::string_view::npos)
					break;
				s = e + 1;
			}
			if (v.size() != dim)
				throw InputError("vector '" + std::string(item) + "' has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
			out.push_back(std::move(v));
		}
		if (end == std::string_view::npos)
			break;
		start = end + 1;
	}
	return out;
}

template <FieldScalar S>
Matrix<S> matrix_from_json(const Json &j, const std::string &path)
{
	if (!j.is_array())
		detail::fail(path, "expected an array of rows");
	std::vector<Vector<S>> rows;
	std::size_t cols = 0;
	for (std::size_t r = 0; r < j.size(); ++r) {
		const std::string rp = path + "[" + std::to_string(r) + "]";
		if (!j[r].is_array())
			detail::fail(rp, "expected an array");
		if (r == 0)
			cols = j[r].size();
		else if (j[r].size() != cols)
			detail::fail(rp, "ragged matrix row");
		Vector<S> v;
		for (std::size_t c = 0; c < j[r].size(); ++c)
			v.push_back(detail::parse_scalar<S>(j[r][c], rp + "[" + std::to_string(c) + "]"));
		rows.push_back(std::move(v));
	}
	return Matrix<S>::from_rows(rows, cols);
}

/// A witness file. An empty array is a 0x0 matrix; non-square shapes are
/// caught later by check_witness.
template <FieldScalar S>
IsoclinismWitness<S> witness_from_json(const Json &j)
{
	return {matrix_from_json<S>(detail::member(j, "eta", "$"), "$.eta"), matrix_from_json<S>(detail::member(j, "xi", "$"), "$.xi")};
}

template <FieldScalar S>
Json witness_to_json(const IsoclinismWitness<S> &w, const IsoclinismFrame<S> &q, const IsoclinismFrame<S> &p)
{
	return {
	    {"eta", matrix_json(w.eta)},
	    {"xi", matrix_json(w.xi)},
	    {"q_factor_representatives", q.factor.representatives},
	    {"q_commutator_pivots", q.lie_commutator.pivots()},
	    {"p_factor_representatives", p.factor.representatives},
	    {"p_commutator_pivots", p.lie_commutator.pivots()},
	};
}

template <FieldScalar S>
Json extension_to_json(const Extension<S> &e)
{
	return {
	    {"total", algebra_to_json(e.total)},
	    {"kernel_basis", matrix_json(e.kernel_ideal.basis())},
	    {"projection", matrix_json(e.projection.matrix)},
	    {"quotient", algebra_to_json(e.base())},
	};
}

template <FieldScalar S>
Extension<S> extension_from_json(const Json &j)
{
	auto total = typed_algebra_from_json<S>(detail::member(j, "total", "$"));
	auto kb = matrix_from_json<S>(detail::member(j, "kernel_basis", "$"), "$.kernel_basis");
	auto proj = matrix_from_json<S>(detail::member(j, "projection", "$"), "$.projection");
	auto base = typed_algebra_from_json<S>(detail::member(j, "quotient", "$"));
	Subspace<S> kernel_ideal = kb.rows() == 0 ? Subspace<S>::zero(total.dim()) : Subspace<S>::row_space(kb);
	if (kernel_ideal.ambient_dim() != total.dim())
		detail::fail("$.kernel_basis", "rows must have length " + std::to_string(total.dim()));
	if (proj.rows() == 0)
		proj = Matrix<S>(0, total.dim());
	return {total, std::move(kernel_ideal), {total, std::move(base), std::move(proj)}};
}

inline Json big_json(const BigInt &v)
{
	if (v.fits_slong_p())
		return Json(v.get_si());
	return Json(v.get_str());
}

inline Json report_to_json(const InvariantReport &r)
{
	Json j;
	j["name"] = r.name;
	j["field"] = r.field;
	j["arity"] = r.arity;
	j["dim"] = r.dim;
	j["valid"] = true;
	j["dim_Z_Lie"] = r.dim_lie_center;
	j["dim_qn_Lie"] = r.dim_lie_commutator;
	j["dim_Z"] = r.dim_center;
	j["dim_qn"] = r.dim_commutator;
	j["dim_nLeib"] = r.dim_n_leib ? Json(*r.dim_n_leib) : Json(nullptr);
	j["dim_liezation"] = r.dim_liezation ? Json(*r.dim_liezation) : Json(nullptr);
	j["lie_abelian"] = r.lie_abelian;
	j["lie_perfect"] = r.lie_perfect;
	j["n_lie"] = r.n_lie;
	j["bound_B"] = big_json(r.bound_B);
	j["bound_crude"] = big_json(r.bound_crude);
	j["bound_satisfied"] = r.bound_satisfied;
	j["crude_bound_satisfied"] = r.crude_bound_satisfied;
	j["t_invariant"] = r.t_invariant ? big_json(*r.t_invariant) : Json(nullptr);
	return j;
}

template <FieldScalar S>
Json validation_to_json(const Algebra<S> &a, const ValidationResult<S> &v)
{
	Json j;
	j["name"] = a.name();
	j["verdict"] = v.valid ? "valid" : "invalid";
	j["violation_count"] = v.violation_count;
	Json list = Json::array();
	for (const auto &x : v.violations)
		list.push_back({{"x", x.xs}, {"y", x.ys}, {"lhs", vector_json(x.lhs)}, {"rhs", vector_json(x.rhs)}});
	j["violations"] = std::move(list);
	return j;
}

} // namespace leibniz::io
