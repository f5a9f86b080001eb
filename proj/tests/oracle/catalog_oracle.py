#!/usr/bin/env python3
"""Brute-force reference values for the built-in catalog.

Deliberately naive and independent of the C++ library: every quantity is
computed from full basis-tuple enumeration (no multiset shortcuts, no
first-slot reductions) with sympy's exact rank/nullspace. The printed table
is what include/leibniz/catalog.hpp freezes as expected values.
"""
import itertools
from fractions import Fraction

import sympy


def algebra(n, d, entries):
    t = {}
    for args, vec in entries:
        t[tuple(args)] = [Fraction(x) for x in vec]
    return n, d, t


def unit(d, i):
    v = [Fraction(0)] * d
    v[i] = Fraction(1)
    return v


def bracket(alg, vs):
    n, d, t = alg
    out = [Fraction(0)] * d
    for idx in itertools.product(range(d), repeat=n):
        c = Fraction(1)
        for s, i in enumerate(idx):
            c *= vs[s][i]
        if c and idx in t:
            out = [o + c * x for o, x in zip(out, t[idx])]
    return out


def add(u, v):
    return [a + b for a, b in zip(u, v)]


def lie(alg, vs):
    n, d, _ = alg
    out = [Fraction(0)] * d
    for p in itertools.permutations(range(n)):
        out = add(out, bracket(alg, [vs[i] for i in p]))
    return out


def rank(vectors, d):
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in vectors]).rank()


def nullity(rows, d):
    if not rows:
        return d
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    return len(m.nullspace())


def basis_of(vectors, d):
    if not vectors:
        return []
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in vectors])
    r = m.rref()[0]
    out = []
    for i in range(r.rows):
        row = [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in r.row(i)]
        if any(row):
            out.append(row)
    return out


def closure(alg, vectors):
    n, d, _ = alg
    cur = basis_of(vectors, d)
    while True:
        new = list(cur)
        for v in cur:
            for p in range(n):
                for rest in itertools.product(range(d), repeat=n - 1):
                    args = [unit(d, i) for i in rest]
                    args.insert(p, v)
                    new.append(bracket(alg, args))
        nb = basis_of(new, d)
        if len(nb) == len(cur):
            return cur
        cur = nb


def valid(alg):
    n, d, _ = alg
    for xs in itertools.product(range(d), repeat=n):
        for ys in itertools.product(range(d), repeat=n - 1):
            X = [unit(d, i) for i in xs]
            Y = [unit(d, i) for i in ys]
            lhs = bracket(alg, [bracket(alg, X)] + Y)
            rhs = [Fraction(0)] * d
            for i in range(n):
                Z = list(X)
                Z[i] = bracket(alg, [X[i]] + Y)
                rhs = add(rhs, bracket(alg, Z))
            if lhs != rhs:
                return False
    return True


def invariants(alg):
    n, d, _ = alg
    E = [unit(d, i) for i in range(d)]
    res = {"valid": valid(alg)}
    if not res["valid"]:
        return res
    # Lie-commutator: every basis tuple, every ordering
    lc = [lie(alg, [E[i] for i in t]) for t in itertools.product(range(d), repeat=n)]
    res["dim_lie_commutator"] = rank(lc, d)
    # Lie-center: x with [.., x at slot p, ..]_Lie = 0 for every slot and filling
    rows = []
    for p in range(n):
        for rest in itertools.product(range(d), repeat=n - 1):
            cols = []
            for i in range(d):
                args = [E[j] for j in rest]
                args.insert(p, E[i])
                cols.append(lie(alg, args))
            rows.extend([[cols[i][r] for i in range(d)] for r in range(d)])
    res["dim_lie_center"] = nullity(rows, d)
    rows = []
    for p in range(n):
        for rest in itertools.product(range(d), repeat=n - 1):
            cols = []
            for i in range(d):
                args = [E[j] for j in rest]
                args.insert(p, E[i])
                cols.append(bracket(alg, args))
            rows.extend([[cols[i][r] for i in range(d)] for r in range(d)])
    res["dim_center"] = nullity(rows, d)
    res["dim_commutator"] = len(closure(alg, [bracket(alg, [E[i] for i in t]) for t in itertools.product(range(d), repeat=n)]))
    # repeated-argument brackets with u in {e_k, e_k + e_l}
    us = E + [add(E[k], E[l]) for k in range(d) for l in range(k + 1, d)]
    gens = []
    for p, q in itertools.combinations(range(n), 2):
        for u in us:
            for rest in itertools.product(range(d), repeat=n - 2):
                args = [E[j] for j in rest]
                full = []
                it = iter(args)
                for s in range(n):
                    full.append(u if s in (p, q) else next(it))
                gens.append(bracket(alg, full))
    res["dim_n_leib"] = len(closure(alg, gens))
    anti = True
    for t in itertools.product(range(d), repeat=n):
        b = bracket(alg, [E[i] for i in t])
        for p, q in itertools.combinations(range(n), 2):
            s = list(t)
            s[p], s[q] = s[q], s[p]
            if add(b, bracket(alg, [E[i] for i in s])) != [0] * d:
                anti = False
    res["n_lie"] = anti
    return res


def antisym(n, d, entries):
    out = []
    for args, vec in entries:
        for p in itertools.permutations(range(n)):
            sign = 1
            for a in range(n):
                for b in range(a + 1, n):
                    if p[a] > p[b]:
                        sign = -sign
            out.append(([args[i] for i in p], [sign * x for x in vec]))
    return algebra(n, d, out)


CATALOG = {
    "paper-ex-1": algebra(3, 2, [((0, 1, 1), (-2, 0)), ((1, 1, 0), (1, 0)), ((1, 0, 1), (1, 0))]),
    "paper-ex-23": algebra(3, 2, [((0, 0, 1), (0, 1)), ((1, 0, 0), (0, -1))]),
    "abelian(2,3)": algebra(2, 3, []),
    "abelian(3,2)": algebra(3, 2, []),
    "heis3": antisym(2, 3, [((0, 1), (0, 0, 1))]),
    "sl2": antisym(2, 3, [((0, 1), (0, 2, 0)), ((0, 2), (0, 0, -2)), ((1, 2), (1, 0, 0))]),
    "simple-3-lie-4d": antisym(3, 4, [((1, 2, 3), (-1, 0, 0, 0)), ((0, 2, 3), (0, 1, 0, 0)),
                                      ((0, 1, 3), (0, 0, -1, 0)), ((0, 1, 2), (0, 0, 0, 1))]),
    "sq(1)": algebra(2, 2, [((0, 0), (0, 1))]),
    "sq(2)": algebra(2, 4, [((0, 0), (0, 0, 1, 0)), ((1, 1), (0, 0, 0, 1))]),
    "bad-identity": algebra(2, 1, [((0, 0), (1,))]),
}

if __name__ == "__main__":
    for name, alg in CATALOG.items():
        print(name, invariants(alg))
