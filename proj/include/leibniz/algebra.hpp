#pragma once

#include "leibniz/combinatorics.hpp"
#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

enum class Validation { unchecked, valid, invalid };

template <FieldScalar S>
struct IdentityViolation {
	IndexTuple xs; ///< x_1 .. x_n
	IndexTuple ys; ///< y_2 .. y_n
	Vector<S> lhs;
	Vector<S> rhs;
};

template <FieldScalar S>
struct ValidationResult {
	bool valid = true;
	std::size_t violation_count = 0;
	std::vector<IdentityViolation<S>> violations; ///< the first few, in enumeration order
};

/// A Leibniz n-algebra given by structure constants on a fixed basis.
/// Basis tuples absent from the tensor bracket to zero. Construction does
/// not validate; validate() runs the fundamental identity check and caches
/// the verdict until the tensor is next modified.
template <FieldScalar S>
class Algebra
{
  public:
	using Tensor = std::map<IndexTuple, Vector<S>>;

	Algebra() : Algebra("", 2, 0) {}
	Algebra(std::string name, std::size_t arity, std::size_t dim, std::vector<std::string> labels = {})
	    : name_(std::move(name)), arity_(arity), dim_(dim), labels_(std::move(labels))
	{
		if (arity_ < 2)
			throw InputError("arity must be at least 2, got " + std::to_string(arity_));
		if (labels_.empty())
			for (std::size_t i = 0; i < dim_; ++i)
				labels_.push_back("e" + std::to_string(i + 1));
		if (labels_.size() != dim_)
			throw InputError(std::to_string(labels_.size()) + " basis labels for dimension " + std::to_string(dim_));
	}

	const std::string &name() const { return name_; }
	void set_name(std::string n) { name_ = std::move(n); }
	std::size_t arity() const { return arity_; }
	std::size_t dim() const { return dim_; }
	const std::vector<std::string> &labels() const { return labels_; }
	const Tensor &tensor() const { return tensor_; }
	Validation validation() const { return validation_; }

	/// Sets [e_args] = value; a zero value removes the entry.
	void set_bracket(const IndexTuple &args, Vector<S> value)
	{
		check_args(args);
		if (value.size() != dim_)
			throw DimensionMismatch("bracket value of length " + std::to_string(value.size()) + " in dimension " + std::to_string(dim_));
		validation_ = Validation::unchecked;
		if (is_zero(value))
			tensor_.erase(args);
		else
			tensor_[args] = std::move(value);
	}

	void set_bracket(const IndexTuple &args, std::size_t basis, const S &coef)
	{
		auto v = zero_vector<S>(dim_);
		v.at(basis) = coef;
		set_bracket(args, std::move(v));
	}

	/// The bracket of basis vectors, or nullptr when it vanishes.
	const Vector<S> *basis_bracket(const IndexTuple &args) const
	{
		auto it = tensor_.find(args);
		return it == tensor_.end() ? nullptr : &it->second;
	}

	Vector<S> basis_bracket_vector(const IndexTuple &args) const
	{
		const auto *v = basis_bracket(args);
		return v ? *v : zero_vector<S>(dim_);
	}

	/// Records a verdict computed by validate_fundamental_identity.
	void set_validation(Validation v) { validation_ = v; }

	/// Structural equality: same arity, dimension and tensor.
	friend bool same_structure(const Algebra &a, const Algebra &b)
	{
		return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
	}

  private:
	void check_args(const IndexTuple &args) const
	{
		if (args.size() != arity_)
			throw DimensionMismatch("bracket of " + std::to_string(args.size()) + " arguments in a " + std::to_string(arity_) + "-algebra");
		for (auto i : args)
			if (i >= dim_)
				throw DimensionMismatch("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim_));
	}

	std::string name_;
	std::size_t arity_;
	std::size_t dim_;
	std::vector<std::string> labels_;
	Tensor tensor_;
	Validation validation_ = Validation::unchecked;
};

template <FieldScalar S>
Algebra<S> abelian_algebra(std::size_t arity, std::size_t dim)
{
	Algebra<S> a("abelian(" + std::to_string(arity) + "," + std::to_string(dim) + ")", arity, dim);
	a.set_validation(Validation::valid);
	return a;
}

/// Multilinear evaluation [v_1, ..., v_n].
template <FieldScalar S>
Vector<S> eval_bracket(const Algebra<S> &a, std::span<const Vector<S>> args)
{
	if (args.size() != a.arity())
		throw DimensionMismatch("bracket of " + std::to_string(args.size()) + " vectors in a " + std::to_string(a.arity()) + "-algebra");
	for (const auto &v : args)
		if (v.size() != a.dim())
			throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(a.dim()));
	Vector<S> out = zero_vector<S>(a.dim());
	for (const auto &[idx, val] : a.tensor()) {
		S c(1);
		for (std::size_t s = 0; s < idx.size() && !c.is_zero(); ++s)
			c *= args[s][idx[s]];
		if (!c.is_zero())
			axpy(out, c, val);
	}
	return out;
}

template <FieldScalar S>
Vector<S> eval_bracket(const Algebra<S> &a, const std::vector<Vector<S>> &args)
{
	return eval_bracket(a, std::span<const Vector<S>>(args));
}

/// [e_t1, ..., v at `slot`, ..., e_tn]: basis vectors everywhere except one slot.
template <FieldScalar S>
Vector<S> bracket_with_slot(const Algebra<S> &a, IndexTuple tuple, std::size_t slot, std::span<const S> v)
{
	Vector<S> out = zero_vector<S>(a.dim());
	for (std::size_t j = 0; j < v.size(); ++j) {
		if (v[j].is_zero())
			continue;
		tuple[slot] = j;
		if (const auto *b = a.basis_bracket(tuple))
			axpy(out, v[j], *b);
	}
	return out;
}

/// Checks [[x_1..x_n], y_2..y_n] = Σ_i [x_1..[x_i, y_2..y_n]..x_n] on every
/// basis tuple. Both sides are multilinear in all 2n-1 arguments, so basis
/// tuples decide the identity for all vectors.
template <FieldScalar S>
ValidationResult<S> check_fundamental_identity(const Algebra<S> &a, std::size_t keep = 16)
{
	const std::size_t n = a.arity(), d = a.dim();
	ValidationResult<S> res;
	if (a.tensor().empty())
		return res;
	// right multiplication by each (n-1)-tuple of basis vectors
	std::map<IndexTuple, std::vector<Vector<S>>> right;
	for_each_tuple(d, n - 1, [&](const IndexTuple &ys) {
		std::vector<Vector<S>> cols;
		IndexTuple t(n);
		std::copy(ys.begin(), ys.end(), t.begin() + 1);
		for (std::size_t i = 0; i < d; ++i) {
			t[0] = i;
			cols.push_back(a.basis_bracket_vector(t));
		}
		right.emplace(ys, std::move(cols));
	});
	for_each_tuple(d, n, [&](const IndexTuple &xs) {
		const auto *inner = a.basis_bracket(xs);
		for (const auto &[ys, cols] : right) {
			Vector<S> lhs = zero_vector<S>(d);
			if (inner) {
				IndexTuple t(n);
				std::copy(ys.begin(), ys.end(), t.begin() + 1);
				lhs = bracket_with_slot(a, t, 0, std::span<const S>(*inner));
			}
			Vector<S> rhs = zero_vector<S>(d);
			for (std::size_t i = 0; i < n; ++i) {
				const auto &ri = cols[xs[i]];
				if (is_zero(ri))
					continue;
				auto term = bracket_with_slot(a, xs, i, std::span<const S>(ri));
				axpy(rhs, S(1), term);
			}
			if (lhs != rhs) {
				res.valid = false;
				++res.violation_count;
				if (res.violations.size() < keep)
					res.violations.push_back({xs, ys, std::move(lhs), std::move(rhs)});
			}
		}
	});
	return res;
}

/// As check_fundamental_identity, caching the verdict on the algebra.
template <FieldScalar S>
ValidationResult<S> validate_fundamental_identity(Algebra<S> &a, std::size_t keep = 16)
{
	auto r = check_fundamental_identity(a, keep);
	a.set_validation(r.valid ? Validation::valid : Validation::invalid);
	return r;
}

/// Throws MathRejection unless the algebra satisfies the fundamental identity.
template <FieldScalar S>
void require_valid(const Algebra<S> &a)
{
	switch (a.validation()) {
	case Validation::valid:
		return;
	case Validation::invalid:
		throw MathRejection("'" + a.name() + "' violates the fundamental identity");
	case Validation::unchecked:
		if (!check_fundamental_identity(a, 0).valid)
			throw MathRejection("'" + a.name() + "' violates the fundamental identity");
	}
}

/// Antisymmetry in every pair of slots, on basis tuples. The repeated-argument
/// condition is checked separately because it does not follow in characteristic 2.
template <FieldScalar S>
bool is_n_lie(const Algebra<S> &a)
{
	const std::size_t n = a.arity(), d = a.dim();
	bool ok = true;
	for_each_tuple(d, n, [&](const IndexTuple &t) {
		if (!ok)
			return;
		const auto *v = a.basis_bracket(t);
		for (std::size_t p = 0; p < n && ok; ++p)
			for (std::size_t q = p + 1; q < n && ok; ++q) {
				if (t[p] == t[q]) {
					ok = v == nullptr;
					continue;
				}
				IndexTuple s = t;
				std::swap(s[p], s[q]);
				const auto *w = a.basis_bracket(s);
				if (!v && !w)
					continue;
				if (!v || !w) {
					ok = false;
					continue;
				}
				for (std::size_t k = 0; k < d && ok; ++k)
					ok = ((*v)[k] + (*w)[k]).is_zero();
			}
	});
	return ok;
}

template <FieldScalar S>
void require_same_ambient(const Algebra<S> &a, const Subspace<S> &s)
{
	if (s.ambient_dim() != a.dim())
		throw DimensionMismatch("subspace of " + std::to_string(s.ambient_dim()) + "-dim space inside " + std::to_string(a.dim()) + "-dim algebra");
}

template <FieldScalar S>
bool is_subalgebra(const Algebra<S> &a, const Subspace<S> &s)
{
	require_same_ambient(a, s);
	auto basis = s.basis_vectors();
	bool ok = true;
	for_each_tuple(s.dim(), a.arity(), [&](const IndexTuple &t) {
		if (!ok)
			return;
		std::vector<Vector<S>> args;
		for (auto i : t)
			args.push_back(basis[i]);
		ok = s.contains(eval_bracket(a, args));
	});
	return ok;
}

/// Brackets with one slot from `s` and ambient basis vectors elsewhere,
/// over every slot position.
template <FieldScalar S>
std::vector<Vector<S>> slot_brackets(const Algebra<S> &a, const std::vector<Vector<S>> &vs)
{
	const std::size_t n = a.arity(), d = a.dim();
	std::vector<Vector<S>> out;
	for (const auto &v : vs)
		for (std::size_t p = 0; p < n; ++p)
			for_each_tuple(d, n - 1, [&](const IndexTuple &rest) {
				IndexTuple t(n);
				for (std::size_t s = 0, r = 0; s < n; ++s)
					t[s] = s == p ? 0 : rest[r++];
				auto b = bracket_with_slot(a, t, p, std::span<const S>(v));
				if (!is_zero(b))
					out.push_back(std::move(b));
			});
	return out;
}

template <FieldScalar S>
bool is_ideal(const Algebra<S> &a, const Subspace<S> &s)
{
	require_same_ambient(a, s);
	for (const auto &b : slot_brackets(a, s.basis_vectors()))
		if (!s.contains(b))
			return false;
	return true;
}

/// Smallest ideal containing the generators, by fixpoint iteration.
template <FieldScalar S>
Subspace<S> ideal_closure(const Algebra<S> &a, const Subspace<S> &generators)
{
	require_same_ambient(a, generators);
	Subspace<S> cur = generators;
	std::vector<Vector<S>> frontier = cur.basis_vectors();
	while (!frontier.empty()) {
		auto products = slot_brackets(a, frontier);
		frontier.clear();
		for (auto &p : products) {
			if (cur.contains(p))
				continue;
			cur = subspace_sum(cur, Subspace<S>::span(a.dim(), {p}));
			frontier.push_back(std::move(p));
		}
	}
	return cur;
}

/// A linear map between algebras of equal arity, given by its
/// (codomain.dim x domain.dim) matrix.
template <FieldScalar S>
struct AlgebraHomomorphism {
	Algebra<S> domain;
	Algebra<S> codomain;
	Matrix<S> matrix;

	Vector<S> operator()(const Vector<S> &v) const { return matrix.apply(v); }
};

template <FieldScalar S>
void require_shape(const AlgebraHomomorphism<S> &f)
{
	if (f.matrix.rows() != f.codomain.dim() || f.matrix.cols() != f.domain.dim())
		throw DimensionMismatch("map matrix " + std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()) + " between algebras of dimensions " +
		                        std::to_string(f.domain.dim()) + " -> " + std::to_string(f.codomain.dim()));
	if (f.domain.arity() != f.codomain.arity())
		throw DimensionMismatch("map between algebras of different arity");
}

/// φ[e_t] = [φe_t1, ..., φe_tn] on every basis tuple of the domain.
template <FieldScalar S>
bool check_homomorphism(const AlgebraHomomorphism<S> &f)
{
	require_shape(f);
	const std::size_t n = f.domain.arity(), d = f.domain.dim();
	std::vector<Vector<S>> images;
	for (std::size_t i = 0; i < d; ++i)
		images.push_back(f.matrix.column(i));
	bool ok = true;
	for_each_tuple(d, n, [&](const IndexTuple &t) {
		if (!ok)
			return;
		auto lhs = f.matrix.apply(f.domain.basis_bracket_vector(t));
		std::vector<Vector<S>> args;
		for (auto i : t)
			args.push_back(images[i]);
		ok = lhs == eval_bracket(f.codomain, args);
	});
	return ok;
}

template <FieldScalar S>
Subspace<S> image(const AlgebraHomomorphism<S> &f)
{
	return Subspace<S>::row_space(f.matrix.transpose());
}

template <FieldScalar S>
Subspace<S> kernel(const AlgebraHomomorphism<S> &f)
{
	return kernel(f.matrix);
}

template <FieldScalar S>
bool is_surjective(const AlgebraHomomorphism<S> &f)
{
	return rank(f.matrix) == f.codomain.dim();
}

template <FieldScalar S>
AlgebraHomomorphism<S> identity_map(const Algebra<S> &a)
{
	return {a, a, Matrix<S>::identity(a.dim())};
}

template <FieldScalar S>
AlgebraHomomorphism<S> compose(const AlgebraHomomorphism<S> &g, const AlgebraHomomorphism<S> &f)
{
	return {f.domain, g.codomain, g.matrix * f.matrix};
}

template <FieldScalar S>
struct QuotientResult {
	Algebra<S> algebra;
	AlgebraHomomorphism<S> projection;
	QuotientCoordinates<S> coordinates;
};

/// a / i with structure constants on the non-pivot representatives of i.
template <FieldScalar S>
QuotientResult<S> quotient_algebra(const Algebra<S> &a, const Subspace<S> &i)
{
	if (!is_ideal(a, i))
		throw NotAnIdeal("quotient by a subspace that is not an ideal of '" + a.name() + "'");
	auto qc = quotient_coordinates(a.dim(), i);
	std::vector<std::string> labels;
	for (auto r : qc.representatives)
		labels.push_back(a.labels()[r]);
	std::string name = i.dim() == 0 ? a.name() : a.name() + "/I" + std::to_string(i.dim());
	Algebra<S> q(name, a.arity(), qc.dim(), labels);
	for_each_tuple(qc.dim(), a.arity(), [&](const IndexTuple &t) {
		IndexTuple lifted;
		for (auto k : t)
			lifted.push_back(qc.representatives[k]);
		if (const auto *v = a.basis_bracket(lifted))
			q.set_bracket(t, qc.project(*v));
	});
	if (a.validation() == Validation::valid)
		q.set_validation(Validation::valid);
	AlgebraHomomorphism<S> proj{a, q, qc.map};
	require_invariant(check_homomorphism(proj), "quotient projection is not a homomorphism");
	require_invariant(kernel(proj) == i, "quotient projection kernel differs from the ideal");
	return {std::move(q), std::move(proj), std::move(qc)};
}

/// a × b with the componentwise bracket; basis of a first, then b.
template <FieldScalar S>
Algebra<S> direct_product(const Algebra<S> &a, const Algebra<S> &b)
{
	if (a.arity() != b.arity())
		throw DimensionMismatch("direct product of a " + std::to_string(a.arity()) + "-algebra and a " + std::to_string(b.arity()) + "-algebra");
	const std::size_t da = a.dim(), d = a.dim() + b.dim();
	std::vector<std::string> labels = a.labels();
	for (const auto &l : b.labels())
		labels.push_back(std::find(a.labels().begin(), a.labels().end(), l) == a.labels().end() ? l : l + "'");
	Algebra<S> p(a.name() + " x " + b.name(), a.arity(), d, labels);
	for (const auto &[idx, val] : a.tensor()) {
		Vector<S> v = zero_vector<S>(d);
		std::copy(val.begin(), val.end(), v.begin());
		p.set_bracket(idx, std::move(v));
	}
	for (const auto &[idx, val] : b.tensor()) {
		IndexTuple t = idx;
		for (auto &k : t)
			k += da;
		Vector<S> v = zero_vector<S>(d);
		std::copy(val.begin(), val.end(), v.begin() + da);
		p.set_bracket(t, std::move(v));
	}
	if (a.validation() == Validation::valid && b.validation() == Validation::valid)
		p.set_validation(Validation::valid);
	return p;
}

/// Projections of a × b onto its factors.
template <FieldScalar S>
std::pair<AlgebraHomomorphism<S>, AlgebraHomomorphism<S>> product_projections(const Algebra<S> &a, const Algebra<S> &b)
{
	auto p = direct_product(a, b);
	Matrix<S> pa(a.dim(), p.dim()), pb(b.dim(), p.dim());
	for (std::size_t i = 0; i < a.dim(); ++i)
		pa(i, i) = S(1);
	for (std::size_t i = 0; i < b.dim(); ++i)
		pb(i, a.dim() + i) = S(1);
	return {{p, a, std::move(pa)}, {p, b, std::move(pb)}};
}

/// Embeds a subspace of a and one of b as their product inside a × b.
template <FieldScalar S>
Subspace<S> product_subspace(const Subspace<S> &sa, const Subspace<S> &sb)
{
	const std::size_t da = sa.ambient_dim(), d = da + sb.ambient_dim();
	std::vector<Vector<S>> vs;
	for (const auto &v : sa.basis_vectors()) {
		Vector<S> w = zero_vector<S>(d);
		std::copy(v.begin(), v.end(), w.begin());
		vs.push_back(std::move(w));
	}
	for (const auto &v : sb.basis_vectors()) {
		Vector<S> w = zero_vector<S>(d);
		std::copy(v.begin(), v.end(), w.begin() + da);
		vs.push_back(std::move(w));
	}
	return Subspace<S>::span(d, vs);
}

/// The same algebra written in the basis given by the columns of `change`
/// (new basis vector j = Σ_i change(i, j) e_i).
template <FieldScalar S>
Algebra<S> change_basis(const Algebra<S> &a, const Matrix<S> &change, std::vector<std::string> labels = {})
{
	auto inv = inverse(change);
	if (!inv || change.rows() != a.dim())
		throw MathRejection("basis change matrix is not invertible");
	const std::size_t n = a.arity(), d = a.dim();
	Algebra<S> b(a.name(), n, d, labels.empty() ? std::vector<std::string>{} : std::move(labels));
	std::vector<Vector<S>> cols;
	for (std::size_t j = 0; j < d; ++j)
		cols.push_back(change.column(j));
	for_each_tuple(d, n, [&](const IndexTuple &t) {
		std::vector<Vector<S>> args;
		for (auto k : t)
			args.push_back(cols[k]);
		auto v = eval_bracket(a, args);
		if (!is_zero(v))
			b.set_bracket(t, inv->apply(v));
	});
	if (a.validation() == Validation::valid)
		b.set_validation(Validation::valid);
	return b;
}

/// change_basis with a permutation: new basis vector j is e_perm[j].
template <FieldScalar S>
Algebra<S> permute_basis(const Algebra<S> &a, const std::vector<std::size_t> &perm)
{
	const std::size_t d = a.dim();
	if (perm.size() != d)
		throw DimensionMismatch("permutation length differs from dimension");
	Matrix<S> m(d, d);
	std::vector<std::string> labels;
	for (std::size_t j = 0; j < d; ++j) {
		m(perm.at(j), j) = S(1);
		labels.push_back(a.labels().at(perm[j]));
	}
	return change_basis(a, m, labels);
}

/// The algebra's structure constants reduced modulo P.
template <std::uint32_t P>
Algebra<Zp<P>> reduce_mod(const Algebra<Rational> &a)
{
	Algebra<Zp<P>> b(a.name(), a.arity(), a.dim(), a.labels());
	for (const auto &[idx, val] : a.tensor()) {
		Vector<Zp<P>> v;
		for (const auto &c : val)
			v.push_back(reduce_mod<P>(c));
		b.set_bracket(idx, std::move(v));
	}
	return b;
}

} // namespace leibniz
