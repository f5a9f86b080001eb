#pragma once

#include "leibniz/error.hpp"
#include "leibniz/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

template <FieldScalar S>
using Vector = std::vector<S>;

template <FieldScalar S>
Vector<S> zero_vector(std::size_t n)
{
	return Vector<S>(n, S(0));
}

template <FieldScalar S>
Vector<S> unit_vector(std::size_t n, std::size_t i)
{
	Vector<S> v(n, S(0));
	v.at(i) = S(1);
	return v;
}

template <FieldScalar S>
bool is_zero(std::span<const S> v)
{
	return std::all_of(v.begin(), v.end(), [](const S &s) { return s.is_zero(); });
}

template <FieldScalar S>
bool is_zero(const Vector<S> &v)
{
	return is_zero(std::span<const S>(v));
}

/// acc += c * v
template <FieldScalar S>
void axpy(Vector<S> &acc, const S &c, std::span<const S> v)
{
	if (acc.size() != v.size())
		throw DimensionMismatch("axpy: length " + std::to_string(acc.size()) + " vs " + std::to_string(v.size()));
	if (c.is_zero())
		return;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			acc[i] += c * v[i];
}

template <FieldScalar S>
void axpy(Vector<S> &acc, const S &c, const Vector<S> &v)
{
	axpy(acc, c, std::span<const S>(v));
}

/// Dense row-major matrix.
template <FieldScalar S>
class Matrix
{
  public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

	static Matrix identity(std::size_t n)
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = S(1);
		return m;
	}

	static Matrix from_rows(const std::vector<Vector<S>> &rows, std::size_t cols)
	{
		Matrix m(0, cols);
		for (const auto &r : rows)
			m.append_row(r);
		return m;
	}

	static Matrix from_columns(const std::vector<Vector<S>> &cols, std::size_t rows)
	{
		Matrix m(rows, cols.size());
		for (std::size_t j = 0; j < cols.size(); ++j) {
			if (cols[j].size() != rows)
				throw DimensionMismatch("column length mismatch");
			for (std::size_t i = 0; i < rows; ++i)
				m(i, j) = cols[j][i];
		}
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	S &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const S &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
	std::span<S> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
	Vector<S> row_vector(std::size_t r) const { return Vector<S>(row(r).begin(), row(r).end()); }

	Vector<S> column(std::size_t c) const
	{
		Vector<S> v;
		v.reserve(rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			v.push_back((*this)(r, c));
		return v;
	}

	void append_row(std::span<const S> r)
	{
		if (r.size() != cols_)
			throw DimensionMismatch("row length " + std::to_string(r.size()) + " vs " + std::to_string(cols_) + " columns");
		data_.insert(data_.end(), r.begin(), r.end());
		++rows_;
	}
	void append_row(const Vector<S> &r) { append_row(std::span<const S>(r)); }

	void append_rows(const Matrix &other)
	{
		if (other.cols_ != cols_)
			throw DimensionMismatch("stacking matrices with different column counts");
		data_.insert(data_.end(), other.data_.begin(), other.data_.end());
		rows_ += other.rows_;
	}

	Vector<S> apply(std::span<const S> v) const
	{
		if (v.size() != cols_)
			throw DimensionMismatch("matrix with " + std::to_string(cols_) + " columns applied to vector of length " + std::to_string(v.size()));
		Vector<S> out(rows_, S(0));
		for (std::size_t c = 0; c < cols_; ++c) {
			if (v[c].is_zero())
				continue;
			for (std::size_t r = 0; r < rows_; ++r)
				if (!(*this)(r, c).is_zero())
					out[r] += (*this)(r, c) * v[c];
		}
		return out;
	}
	Vector<S> apply(const Vector<S> &v) const { return apply(std::span<const S>(v)); }

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			for (std::size_t c = 0; c < cols_; ++c)
				t(c, r) = (*this)(r, c);
		return t;
	}

	friend Matrix operator*(const Matrix &a, const Matrix &b)
	{
		if (a.cols_ != b.rows_)
			throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
			                        std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
		Matrix p(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k) {
				const S &aik = a(i, k);
				if (aik.is_zero())
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
					if (!b(k, j).is_zero())
						p(i, j) += aik * b(k, j);
			}
		return p;
	}

	friend bool operator==(const Matrix &a, const Matrix &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

  private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<S> data_;
};

template <FieldScalar S>
struct EchelonForm {
	Matrix<S> matrix; ///< non-zero rows only
	std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with zero rows dropped.
template <FieldScalar S>
EchelonForm<S> echelon(Matrix<S> m)
{
	const std::size_t rows = m.rows(), cols = m.cols();
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c) {
		std::size_t sel = r;
		while (sel < rows && m(sel, c).is_zero())
			++sel;
		if (sel == rows)
			continue;
		if (sel != r)
			for (std::size_t j = 0; j < cols; ++j)
				std::swap(m(sel, j), m(r, j));
		const S inv = S(1) / m(r, c);
		for (std::size_t j = c; j < cols; ++j)
			m(r, j) *= inv;
		for (std::size_t i = 0; i < rows; ++i) {
			if (i == r || m(i, c).is_zero())
				continue;
			const S f = m(i, c);
			for (std::size_t j = c; j < cols; ++j)
				if (!m(r, j).is_zero())
					m(i, j) -= f * m(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	Matrix<S> out(0, cols);
	for (std::size_t i = 0; i < r; ++i)
		out.append_row(m.row(i));
	return {std::move(out), std::move(pivots)};
}

template <FieldScalar S>
Matrix<S> rref(const Matrix<S> &m)
{
	return echelon(m).matrix;
}

template <FieldScalar S>
std::size_t rank(const Matrix<S> &m)
{
	return echelon(m).pivots.size();
}

template <FieldScalar S>
std::optional<Matrix<S>> inverse(const Matrix<S> &m)
{
	if (m.rows() != m.cols())
		throw DimensionMismatch("inverse of non-square matrix");
	const std::size_t n = m.rows();
	Matrix<S> aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j)
			aug(i, j) = m(i, j);
		aug(i, n + i) = S(1);
	}
	auto e = echelon(std::move(aug));
	if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
		return std::nullopt;
	Matrix<S> inv(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			inv(i, j) = e.matrix(i, n + j);
	return inv;
}

/// A linear subspace of S^ambient, stored as the RREF of a basis. Equal
/// subspaces have identical representations, so operator== is set equality.
template <FieldScalar S>
class Subspace
{
  public:
	Subspace() = default;
	explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

	static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

	static Subspace full(std::size_t ambient)
	{
		Subspace s(ambient);
		s.basis_ = Matrix<S>::identity(ambient);
		for (std::size_t i = 0; i < ambient; ++i)
			s.pivots_.push_back(i);
		return s;
	}

	static Subspace row_space(const Matrix<S> &m)
	{
		Subspace s(m.cols());
		auto e = echelon(m);
		s.basis_ = std::move(e.matrix);
		s.pivots_ = std::move(e.pivots);
		return s;
	}

	static Subspace span(std::size_t ambient, const std::vector<Vector<S>> &vectors)
	{
		return row_space(Matrix<S>::from_rows(vectors, ambient));
	}

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return pivots_.size(); }
	const Matrix<S> &basis() const { return basis_; }
	const std::vector<std::size_t> &pivots() const { return pivots_; }
	Vector<S> basis_vector(std::size_t i) const { return basis_.row_vector(i); }

	std::vector<Vector<S>> basis_vectors() const
	{
		std::vector<Vector<S>> out;
		for (std::size_t i = 0; i < dim(); ++i)
			out.push_back(basis_vector(i));
		return out;
	}

	/// v with every pivot coordinate eliminated; zero iff v lies in the subspace.
	Vector<S> reduce(std::span<const S> v) const
	{
		check_length(v.size());
		Vector<S> w(v.begin(), v.end());
		for (std::size_t i = 0; i < pivots_.size(); ++i) {
			const S c = w[pivots_[i]];
			if (!c.is_zero())
				axpy(w, -c, basis_.row(i));
		}
		return w;
	}

	bool contains(std::span<const S> v) const { return is_zero(std::span<const S>(reduce(v))); }
	bool contains(const Vector<S> &v) const { return contains(std::span<const S>(v)); }

	bool contains(const Subspace &other) const
	{
		check_length(other.ambient_);
		for (std::size_t i = 0; i < other.dim(); ++i)
			if (!contains(other.basis_.row(i)))
				return false;
		return true;
	}

	/// Coefficients of v in the echelon basis; v must lie in the subspace.
	Vector<S> coordinates(std::span<const S> v) const
	{
		if (!contains(v))
			throw MathRejection("vector is not in the subspace");
		Vector<S> c;
		c.reserve(dim());
		for (auto p : pivots_)
			c.push_back(v[p]);
		return c;
	}
	Vector<S> coordinates(const Vector<S> &v) const { return coordinates(std::span<const S>(v)); }

	friend bool operator==(const Subspace &a, const Subspace &b)
	{
		return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
	}

  private:
	void check_length(std::size_t n) const
	{
		if (n != ambient_)
			throw DimensionMismatch("ambient dimension " + std::to_string(n) + " vs " + std::to_string(ambient_));
	}

	std::size_t ambient_ = 0;
	Matrix<S> basis_;
	std::vector<std::size_t> pivots_;
};

template <FieldScalar S>
Subspace<S> kernel(const Matrix<S> &m)
{
	auto e = echelon(m);
	const std::size_t cols = m.cols();
	std::vector<bool> is_pivot(cols, false);
	for (auto p : e.pivots)
		is_pivot[p] = true;
	std::vector<Vector<S>> vs;
	for (std::size_t f = 0; f < cols; ++f) {
		if (is_pivot[f])
			continue;
		Vector<S> v(cols, S(0));
		v[f] = S(1);
		for (std::size_t i = 0; i < e.pivots.size(); ++i)
			v[e.pivots[i]] = -e.matrix(i, f);
		vs.push_back(std::move(v));
	}
	return Subspace<S>::span(cols, vs);
}

template <FieldScalar S>
Subspace<S> subspace_sum(const Subspace<S> &a, const Subspace<S> &b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw DimensionMismatch("subspace sum across ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
		                        std::to_string(b.ambient_dim()));
	Matrix<S> m = a.basis();
	m.append_rows(b.basis());
	return Subspace<S>::row_space(m);
}

/// Zassenhaus: rref of [[a, a], [b, 0]]; rows with zero left half span a ∩ b.
template <FieldScalar S>
Subspace<S> subspace_intersect(const Subspace<S> &a, const Subspace<S> &b)
{
	const std::size_t d = a.ambient_dim();
	if (d != b.ambient_dim())
		throw DimensionMismatch("subspace intersection across ambient dimensions " + std::to_string(d) + " and " +
		                        std::to_string(b.ambient_dim()));
	Matrix<S> z(0, 2 * d);
	Vector<S> row(2 * d);
	for (std::size_t i = 0; i < a.dim(); ++i) {
		auto r = a.basis().row(i);
		std::copy(r.begin(), r.end(), row.begin());
		std::copy(r.begin(), r.end(), row.begin() + d);
		z.append_row(row);
	}
	for (std::size_t i = 0; i < b.dim(); ++i) {
		auto r = b.basis().row(i);
		std::copy(r.begin(), r.end(), row.begin());
		std::fill(row.begin() + d, row.end(), S(0));
		z.append_row(row);
	}
	auto e = echelon(std::move(z));
	std::vector<Vector<S>> vs;
	for (std::size_t i = 0; i < e.pivots.size(); ++i)
		if (e.pivots[i] >= d) {
			auto r = e.matrix.row(i);
			vs.emplace_back(r.begin() + d, r.end());
		}
	return Subspace<S>::span(d, vs);
}

template <FieldScalar S>
bool contains(const Subspace<S> &a, std::span<const S> v)
{
	return a.contains(v);
}

/// Coordinates on ambient / sub. Representatives are the standard basis
/// vectors at the non-pivot columns of sub; `map` sends an ambient vector to
/// its coordinates against those representatives.
template <FieldScalar S>
struct QuotientCoordinates {
	std::size_t ambient_dim = 0;
	std::vector<std::size_t> representatives;
	Matrix<S> map;

	std::size_t dim() const { return representatives.size(); }

	Vector<S> project(std::span<const S> v) const { return map.apply(v); }
	Vector<S> project(const Vector<S> &v) const { return map.apply(v); }

	Vector<S> lift(std::span<const S> coords) const
	{
		if (coords.size() != representatives.size())
			throw DimensionMismatch("quotient coordinates of wrong length");
		Vector<S> v(ambient_dim, S(0));
		for (std::size_t i = 0; i < coords.size(); ++i)
			v[representatives[i]] = coords[i];
		return v;
	}
	Vector<S> lift(const Vector<S> &coords) const { return lift(std::span<const S>(coords)); }

	Vector<S> representative(std::size_t i) const { return unit_vector<S>(ambient_dim, representatives.at(i)); }
};

template <FieldScalar S>
QuotientCoordinates<S> quotient_coordinates(std::size_t ambient_dim, const Subspace<S> &sub)
{
	if (sub.ambient_dim() != ambient_dim)
		throw DimensionMismatch("quotient of " + std::to_string(ambient_dim) + "-dim space by subspace of " +
		                        std::to_string(sub.ambient_dim()) + "-dim space");
	QuotientCoordinates<S> q;
	q.ambient_dim = ambient_dim;
	std::vector<bool> is_pivot(ambient_dim, false);
	for (auto p : sub.pivots())
		is_pivot[p] = true;
	for (std::size_t j = 0; j < ambient_dim; ++j)
		if (!is_pivot[j])
			q.representatives.push_back(j);
	// v ↦ (v - Σ v[p_i] b_i)[non-pivots]; column j of the map is the image of e_j.
	q.map = Matrix<S>(q.representatives.size(), ambient_dim);
	for (std::size_t r = 0; r < q.representatives.size(); ++r)
		q.map(r, q.representatives[r]) = S(1);
	for (std::size_t i = 0; i < sub.dim(); ++i)
		for (std::size_t r = 0; r < q.representatives.size(); ++r)
			q.map(r, sub.pivots()[i]) = -sub.basis()(i, q.representatives[r]);
	return q;
}

} // namespace leibniz
