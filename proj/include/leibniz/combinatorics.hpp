#pragma once

#include "leibniz/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace leibniz {

using Index = std::size_t;
using IndexTuple = std::vector<Index>;

/// Calls f(tuple) for every tuple in [0, base)^length, lexicographically.
template <class F>
void for_each_tuple(std::size_t base, std::size_t length, F &&f)
{
	if (base == 0 && length > 0)
		return;
	IndexTuple t(length, 0);
	while (true) {
		f(static_cast<const IndexTuple &>(t));
		std::size_t pos = length;
		while (pos > 0) {
			--pos;
			if (++t[pos] < base)
				break;
			t[pos] = 0;
			if (pos == 0)
				return;
		}
		if (length == 0)
			return;
	}
}

/// Calls f(tuple) for every non-decreasing tuple in [0, base)^length, i.e.
/// every multiset of that size, lexicographically.
template <class F>
void for_each_multiset(std::size_t base, std::size_t length, F &&f)
{
	if (base == 0 && length > 0)
		return;
	IndexTuple t(length, 0);
	while (true) {
		f(static_cast<const IndexTuple &>(t));
		std::size_t pos = length;
		while (pos > 0 && t[pos - 1] == base - 1)
			--pos;
		if (pos == 0)
			return;
		Index v = ++t[pos - 1];
		for (std::size_t i = pos; i < length; ++i)
			t[i] = v;
	}
}

inline std::vector<IndexTuple> multisets(std::size_t base, std::size_t length)
{
	std::vector<IndexTuple> out;
	for_each_multiset(base, length, [&](const IndexTuple &t) { out.push_back(t); });
	return out;
}

inline std::vector<IndexTuple> tuples(std::size_t base, std::size_t length)
{
	std::vector<IndexTuple> out;
	for_each_tuple(base, length, [&](const IndexTuple &t) { out.push_back(t); });
	return out;
}

/// All n! orderings of the positions 0..n-1.
inline std::vector<IndexTuple> permutations(std::size_t n)
{
	IndexTuple p(n);
	std::iota(p.begin(), p.end(), Index{0});
	std::vector<IndexTuple> out;
	do
		out.push_back(p);
	while (std::next_permutation(p.begin(), p.end()));
	return out;
}

inline BigInt binomial(unsigned long n, unsigned long k)
{
	BigInt r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

inline BigInt power(unsigned long base, unsigned long exp)
{
	BigInt r;
	mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
	return r;
}

} // namespace leibniz
