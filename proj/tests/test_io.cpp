#include "support.hpp"

#include <gtest/gtest.h>

using namespace leibniz;
using namespace leibniz::testing;
using io::Json;

namespace {

std::string error_of(const std::string &text)
{
	try {
		io::algebra_from_json(io::parse_json(text));
	} catch (const InputError &e) {
		return e.what();
	}
	return "";
}

const char *minimal = R"({"schema_version":1,"name":"m","arity":2,"dim":2,"basis":["x","y"],"field":"Q",
 "brackets":[{"args":[0,0],"value":[{"basis":1,"coef":"1/2"}]}]})";

} // namespace

TEST(AlgebraJson, RoundTripsEveryCatalogEntry)
{
	for (const auto &id : catalog::list()) {
		auto a = catalog::get(id).algebra;
		auto j = io::algebra_to_json(a);
		auto back = io::typed_algebra_from_json<Q>(io::parse_json(j.dump()));
		EXPECT_TRUE(same_structure(a, back)) << id;
		EXPECT_EQ(back.labels(), a.labels());
		EXPECT_EQ(io::algebra_to_json(back).dump(), j.dump());
	}
}

TEST(AlgebraJson, RoundTripsPrimeFields)
{
	auto a = reduce_mod<7>(catalog::get("sl2").algebra);
	auto any = io::algebra_from_json(io::algebra_to_json(a));
	ASSERT_TRUE(std::holds_alternative<Algebra<Zp<7>>>(any));
	EXPECT_TRUE(same_structure(a, std::get<Algebra<Zp<7>>>(any)));
	auto j = io::algebra_to_json(a);
	EXPECT_EQ(j["field"], "Fp");
	EXPECT_EQ(j["p"], 7);
	EXPECT_THROW(io::typed_algebra_from_json<Q>(j), InputError);
}

TEST(AlgebraJson, RoundTripsRandomTensors)
{
	Gen g(50);
	for (int t = 0; t < 50; ++t) {
		auto a = g.tensor<Q>(2 + g.index(2), 1 + g.index(3));
		auto back = io::typed_algebra_from_json<Q>(io::algebra_to_json(a));
		EXPECT_TRUE(same_structure(a, back));
	}
}

TEST(AlgebraJson, ParsesMinimalFile)
{
	auto a = io::typed_algebra_from_json<Q>(io::parse_json(minimal));
	EXPECT_EQ(a.basis_bracket_vector({0, 0}), (Vector<Q>{Q(0), Q(1, 2)}));
	EXPECT_EQ(a.basis_bracket_vector({1, 0}), zero_vector<Q>(2));
}

TEST(AlgebraJson, ErrorsNameTheField)
{
	auto with = [](const std::string &from, const std::string &to) {
		std::string s = minimal;
		s.replace(s.find(from), from.size(), to);
		return error_of(s);
	};
	EXPECT_NE(with("\"1/2\"", "\"2/4\"").find("$.brackets[0].value[0].coef"), std::string::npos);
	EXPECT_NE(with("\"1/2\"", "\"1.5\"").find("$.brackets[0].value[0].coef"), std::string::npos);
	EXPECT_NE(with("\"1/2\"", "3").find("$.brackets[0].value[0].coef"), std::string::npos);
	EXPECT_NE(with("[0,0]", "[0,2]").find("$.brackets[0].args[1]"), std::string::npos);
	EXPECT_NE(with("[0,0]", "[0]").find("$.brackets[0].args"), std::string::npos);
	EXPECT_NE(with("\"basis\":1", "\"basis\":5").find("$.brackets[0].value[0].basis"), std::string::npos);
	EXPECT_NE(with("\"schema_version\":1", "\"schema_version\":2").find("$.schema_version"), std::string::npos);
	EXPECT_NE(with("\"field\":\"Q\"", "\"field\":\"R\"").find("$.field"), std::string::npos);
	EXPECT_NE(with("\"field\":\"Q\"", "\"field\":\"Fp\",\"p\":17").find("$.p"), std::string::npos);
	EXPECT_NE(with("\"field\":\"Q\"", "\"field\":\"Fp\"").find("missing field 'p'"), std::string::npos);
	EXPECT_NE(with("\"arity\":2", "\"arity\":1").find("$.arity"), std::string::npos);
	EXPECT_NE(with("[\"x\",\"y\"]", "[\"x\"]").find("$.basis"), std::string::npos);
	EXPECT_NE(with("\"dim\":2,", "").find("missing field 'dim'"), std::string::npos);
}

TEST(AlgebraJson, DuplicatesRejected)
{
	std::string dup = R"({"schema_version":1,"arity":2,"dim":1,"field":"Q","brackets":[
	  {"args":[0,0],"value":[]},{"args":[0,0],"value":[{"basis":0,"coef":"1"}]}]})";
	EXPECT_NE(error_of(dup).find("$.brackets[1].args: duplicate"), std::string::npos);
	std::string dup_basis = R"({"schema_version":1,"arity":2,"dim":1,"field":"Q","brackets":[
	  {"args":[0,0],"value":[{"basis":0,"coef":"1"},{"basis":0,"coef":"2"}]}]})";
	EXPECT_NE(error_of(dup_basis).find("$.brackets[0].value[1].basis"), std::string::npos);
}

TEST(AlgebraJson, PrimeFieldCoefficientsMustBeReduced)
{
	std::string s = R"({"schema_version":1,"arity":2,"dim":1,"field":"Fp","p":3,"brackets":[{"args":[0,0],"value":[{"basis":0,"coef":"3"}]}]})";
	EXPECT_NE(error_of(s).find("$.brackets[0].value[0].coef"), std::string::npos);
}

TEST(AlgebraJson, MalformedJsonReportsLineAndColumn)
{
	auto e = error_of("{\n  \"schema_version\": 1,\n  \"arity\" 2\n}");
	EXPECT_NE(e.find("line 3"), std::string::npos) << e;
	EXPECT_NE(e.find("column"), std::string::npos) << e;
}

TEST(VectorList, Parses)
{
	auto vs = io::parse_vector_list<Q>("1,0,-1/2;0,1,0", 3);
	ASSERT_EQ(vs.size(), 2u);
	EXPECT_EQ(vs[0][2], Q(-1, 2));
	EXPECT_TRUE(io::parse_vector_list<Q>("", 3).empty());
	EXPECT_THROW(io::parse_vector_list<Q>("1,0", 3), InputError);
	EXPECT_THROW(io::parse_vector_list<Q>("1,x,0", 3), InputError);
}

TEST(ExtensionJson, RoundTrip)
{
	for (std::size_t k = 0; k <= 3; ++k) {
		auto e = abelian_cover<Q>(k);
		auto j = io::extension_to_json(e);
		auto back = io::extension_from_json<Q>(io::parse_json(j.dump()));
		EXPECT_TRUE(same_structure(back.total, e.total));
		EXPECT_EQ(back.kernel_ideal, e.kernel_ideal);
		EXPECT_EQ(back.projection.matrix, e.projection.matrix);
		EXPECT_TRUE(is_valid_extension(back));
		EXPECT_TRUE(check_lie_stem(back));
	}
}

TEST(WitnessJson, RoundTrip)
{
	auto q = catalog::get("sq(2)").algebra;
	auto r = search_witness(q, q);
	ASSERT_TRUE(r.witness);
	auto f = isoclinism_frame(q);
	auto j = io::witness_to_json(*r.witness, f, f);
	auto w = io::witness_from_json<Q>(io::parse_json(j.dump()));
	EXPECT_EQ(w.eta, r.witness->eta);
	EXPECT_EQ(w.xi, r.witness->xi);
	EXPECT_TRUE(check_witness(q, q, w));
	EXPECT_EQ(j["q_factor_representatives"], Json(f.factor.representatives));
	auto empty = io::witness_from_json<Q>(io::parse_json(R"({"eta":[],"xi":[]})"));
	EXPECT_EQ(empty.eta.rows(), 0u);
	EXPECT_THROW(io::witness_from_json<Q>(io::parse_json(R"({"eta":[["1"],["1","0"]],"xi":[]})")), InputError);
}

TEST(ReportJson, StableKeysAndNulls)
{
	auto r = io::report_to_json(analyze(catalog::get("paper-ex-23").algebra));
	std::vector<std::string> keys;
	for (auto it = r.begin(); it != r.end(); ++it)
		keys.push_back(it.key());
	const std::vector<std::string> expected{"name", "field", "arity", "dim", "valid", "dim_Z_Lie", "dim_qn_Lie", "dim_Z", "dim_qn", "dim_nLeib",
	                                        "dim_liezation", "lie_abelian", "lie_perfect", "n_lie", "bound_B", "bound_crude", "bound_satisfied",
	                                        "crude_bound_satisfied", "t_invariant"};
	EXPECT_EQ(keys, expected);
	EXPECT_TRUE(r["t_invariant"].is_null());
	EXPECT_EQ(r["bound_B"], 0);
	auto r2 = io::report_to_json(analyze(reduce_mod<2>(catalog::get("heis3").algebra)));
	EXPECT_TRUE(r2["dim_nLeib"].is_null());
	EXPECT_EQ(io::big_json(power(10, 30)), Json("1000000000000000000000000000000"));
}
