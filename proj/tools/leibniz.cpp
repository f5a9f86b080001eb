#include "leibniz/leibniz.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace leibniz;
using io::AnyAlgebra;
using io::Json;

namespace {

enum Exit { ok = 0, bad_input = 1, rejected = 2, inconclusive = 3, internal = 4 };

bool pretty = false;

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

/// A file path, or catalog:<id>.
AnyAlgebra load(const std::string &source)
{
	if (source.rfind("catalog:", 0) == 0)
		return catalog::get(source.substr(8)).algebra;
	try {
		return io::algebra_from_json(io::parse_json(read_file(source)));
	} catch (const InputError &e) {
		throw InputError(source + ": " + e.what());
	}
}

template <class T>
struct Tag {
	using type = T;
};

template <class F>
auto with_field(std::uint32_t p, F &&f)
{
	switch (p) {
	case 0:
		return f(Tag<Rational>{});
	case 2:
		return f(Tag<Zp<2>>{});
	case 3:
		return f(Tag<Zp<3>>{});
	case 5:
		return f(Tag<Zp<5>>{});
	case 7:
		return f(Tag<Zp<7>>{});
	case 11:
		return f(Tag<Zp<11>>{});
	case 13:
		return f(Tag<Zp<13>>{});
	}
	throw InputError("unsupported field characteristic " + std::to_string(p) + " (use 0 for Q or one of 2,3,5,7,11,13)");
}

std::uint32_t characteristic(const AnyAlgebra &a)
{
	return std::visit([](const auto &x) {
		using S = std::remove_cvref_t<decltype(x.tensor().begin()->second[0])>;
		return characteristic_of<S>;
	}, a);
}

/// The algebra over S; rational algebras are reduced when S is a prime field.
template <FieldScalar S>
Algebra<S> over(AnyAlgebra a)
{
	if (auto *x = std::get_if<Algebra<S>>(&a))
		return std::move(*x);
	if constexpr (characteristic_of<S> != 0) {
		if (auto *r = std::get_if<Algebra<Rational>>(&a))
			return reduce_mod<characteristic_of<S>>(*r);
	}
	throw InputError("algebra '" + std::visit([](const auto &x) { return x.name(); }, a) + "' cannot be used over " + ScalarTraits<S>::field_name());
}

std::string cell(const Json &v)
{
	if (v.is_string())
		return v.get<std::string>();
	if (v.is_array())
		return "[" + std::to_string(v.size()) + " entries]";
	if (v.is_object())
		return "{...}";
	return v.dump();
}

void table(const Json &j)
{
	if (!pretty)
		return;
	if (j.is_array()) {
		if (j.empty() || !j[0].is_object())
			return;
		std::vector<std::string> keys;
		for (auto it = j[0].begin(); it != j[0].end(); ++it)
			keys.push_back(it.key());
		std::vector<std::size_t> width(keys.size());
		for (std::size_t c = 0; c < keys.size(); ++c) {
			width[c] = keys[c].size();
			for (const auto &row : j)
				width[c] = std::max(width[c], cell(row[keys[c]]).size());
		}
		auto line = [&](auto get) {
			for (std::size_t c = 0; c < keys.size(); ++c) {
				auto s = get(c);
				std::cerr << s << std::string(width[c] - s.size() + 2, ' ');
			}
			std::cerr << "\n";
		};
		line([&](std::size_t c) { return keys[c]; });
		for (const auto &row : j)
			line([&](std::size_t c) { return cell(row[keys[c]]); });
		return;
	}
	std::size_t w = 0;
	for (auto it = j.begin(); it != j.end(); ++it)
		w = std::max(w, it.key().size());
	for (auto it = j.begin(); it != j.end(); ++it)
		std::cerr << it.key() << std::string(w - it.key().size() + 2, ' ') << cell(it.value()) << "\n";
}

void emit(const Json &j)
{
	std::cout << j.dump(2) << "\n";
	table(j);
}

int cmd_validate(const std::string &src)
{
	auto any = load(src);
	std::visit([](auto &a) {
		auto r = validate_fundamental_identity(a);
		emit(io::validation_to_json(a, r));
	}, any);
	return ok;
}

int cmd_analyze(const std::string &src)
{
	auto any = load(src);
	std::visit([](auto &a) {
		validate_fundamental_identity(a, 0);
		emit(io::report_to_json(analyze(a)));
	}, any);
	return ok;
}

int cmd_bound(std::size_t n, std::size_t k, bool crude)
{
	if (n < 2)
		throw InputError("--arity must be at least 2");
	auto v = crude ? bound_crude(n, k) : bound_B(n, k);
	std::cout << v.get_str() << "\n";
	if (pretty)
		std::cerr << (crude ? "k^n" : "B(n,k)") << " with n=" << n << ", k=" << k << ": " << v.get_str() << "\n";
	return ok;
}

int cmd_quotient(const std::string &src, const std::string &ideal, bool close)
{
	auto any = load(src);
	std::visit([&](auto &a) {
		using S = std::remove_cvref_t<decltype(a.tensor().begin()->second[0])>;
		validate_fundamental_identity(a, 0);
		require_valid(a);
		auto gens = io::parse_vector_list<S>(ideal, a.dim());
		auto sub = Subspace<S>::span(a.dim(), gens);
		if (close)
			sub = ideal_closure(a, sub);
		else if (!is_ideal(a, sub))
			throw NotAnIdeal("the span of --ideal is not an ideal (use --close for the generated ideal)");
		auto q = quotient_algebra(a, sub);
		emit(io::algebra_to_json(q.algebra));
	}, any);
	return ok;
}

int cmd_cover(std::size_t k, std::uint32_t p)
{
	if (k > 12)
		throw InputError("--k must be at most 12");
	return with_field(p, [&](auto tag) {
		using S = typename decltype(tag)::type;
		auto e = abelian_cover<S>(k);
		const auto m = multiplier_dim_abelian_2(k);
		Json j;
		j["k"] = k;
		j["multiplier_dim"] = m;
		j["lie_stem"] = check_lie_stem(e);
		j["verdict"] = to_string(check_cover_candidate(e, m));
		j["cover"] = io::algebra_to_json(e.total);
		j["extension"] = io::extension_to_json(e);
		emit(j);
		return ok;
	});
}

int cmd_isoclinic(const std::string &a_src, const std::string &b_src, const std::string &witness, bool search, std::optional<std::uint32_t> field,
                  bool exhaustive)
{
	if (!witness.empty() && search)
		throw InputError("--witness and --search are mutually exclusive");
	auto qa = load(a_src), pa = load(b_src);
	std::uint32_t p = field ? *field : characteristic(qa);
	if (!field && characteristic(pa) != p)
		throw InputError("the two algebras are over different fields (pass --field to reduce rational input)");
	return with_field(p, [&](auto tag) {
		using S = typename decltype(tag)::type;
		auto q = over<S>(qa);
		auto r = over<S>(pa);
		validate_fundamental_identity(q, 0);
		validate_fundamental_identity(r, 0);
		require_valid(q);
		require_valid(r);
		Json j;
		j["a"] = q.name();
		j["b"] = r.name();
		j["field"] = ScalarTraits<S>::field_name();
		int code = ok;
		if (!witness.empty()) {
			auto w = io::witness_from_json<S>(io::parse_json(read_file(witness)));
			const bool good = check_witness(q, r, w);
			j["method"] = "witness";
			j["verdict"] = good ? "isoclinic" : "witness-rejected";
		} else {
			SearchLimits limits;
			limits.exhaustive = exhaustive;
			auto res = search_witness(q, r, limits);
			j["method"] = exhaustive ? "exhaustive-search" : "heuristic-search";
			j["candidates"] = res.candidates;
			switch (res.status) {
			case SearchStatus::found:
				j["verdict"] = "isoclinic";
				break;
			case SearchStatus::none:
				j["verdict"] = "not-isoclinic";
				break;
			case SearchStatus::inconclusive:
				j["verdict"] = "inconclusive";
				code = inconclusive;
				break;
			}
			j["reason"] = res.reason;
			if (res.witness)
				j["witness"] = io::witness_to_json(*res.witness, isoclinism_frame(q), isoclinism_frame(r));
		}
		emit(j);
		return code;
	});
}

int cmd_catalog(const std::string &id)
{
	if (!id.empty()) {
		auto e = catalog::get(id);
		emit(io::algebra_to_json(e.algebra));
		return ok;
	}
	Json list = Json::array();
	for (const auto &name : catalog::list()) {
		auto e = catalog::get(name);
		list.push_back({{"id", e.id}, {"arity", e.algebra.arity()}, {"dim", e.algebra.dim()}, {"description", e.description}});
	}
	emit(list);
	return ok;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact computations with Leibniz n-algebras given by structure constants.\n"
	             "Algebra arguments are JSON files or catalog:<id>. Set LEIBNIZ_WORKERS to use several threads."};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_flag("--pretty", pretty, "also print a human-readable table to stderr");

	std::string src, src_b, ideal, witness, id;
	std::size_t arity = 0, k = 0;
	std::uint32_t prime = 0;
	bool crude = false, close = false, search = false, exhaustive = false;

	auto *validate = app.add_subcommand("validate", "check the fundamental identity; prints a verdict");
	validate->add_option("file", src, "algebra file or catalog:<id>")->required();

	auto *analyze_cmd = app.add_subcommand("analyze", "print the invariant report");
	analyze_cmd->add_option("file", src, "algebra file or catalog:<id>")->required();

	auto *bound = app.add_subcommand("bound", "evaluate B(n,k), or k^n with --crude");
	bound->add_option("--arity", arity, "n")->required();
	bound->add_option("--k", k, "k")->required();
	bound->add_flag("--crude", crude, "print k^n");

	auto *quotient = app.add_subcommand("quotient", "quotient by an ideal given by spanning vectors");
	quotient->add_option("file", src, "algebra file or catalog:<id>")->required();
	quotient->add_option("--ideal", ideal, "vectors as \"c,c,...;c,c,...\"")->required();
	quotient->add_flag("--close", close, "quotient by the ideal generated by the vectors");

	auto *cover = app.add_subcommand("cover", "the cover of the abelian 2-algebra of dimension k");
	cover->add_option("--k", k, "k")->required();
	cover->add_option("--field", prime, "0 for Q, or a prime");

	std::optional<std::uint32_t> iso_field;
	auto *iso = app.add_subcommand("isoclinic", "decide Lie-isoclinism via a witness or a search");
	iso->add_option("a", src, "first algebra")->required();
	iso->add_option("b", src_b, "second algebra")->required();
	iso->add_option("--witness", witness, "JSON file with eta and xi");
	iso->add_flag("--search", search, "search for a witness (default)");
	iso->add_option("--field", iso_field, "0 for Q, or a prime; rational input is reduced");
	iso->add_flag("--exhaustive", exhaustive, "enumerate GL x GL (small prime fields only)");

	auto *cat = app.add_subcommand("catalog", "list built-in algebras, or print one");
	cat->add_option("id", id, "catalog id");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		return app.exit(e) == 0 ? ok : bad_input;
	}

	try {
		if (*validate)
			return cmd_validate(src);
		if (*analyze_cmd)
			return cmd_analyze(src);
		if (*bound)
			return cmd_bound(arity, k, crude);
		if (*quotient)
			return cmd_quotient(src, ideal, close);
		if (*cover)
			return cmd_cover(k, prime);
		if (*iso)
			return cmd_isoclinic(src, src_b, witness, search, iso_field, exhaustive);
		if (*cat)
			return cmd_catalog(id);
	} catch (const InputError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return bad_input;
	} catch (const MathRejection &e) {
		std::cerr << "rejected: " << e.what() << "\n";
		return rejected;
	} catch (const std::exception &e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return internal;
	}
	return ok;
}
