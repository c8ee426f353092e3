"""Hilbert series of monomial ideals via the pivot recursion on K-polynomials.

For a monomial ideal M in n variables the Hilbert series of S/M is
K(t) / (1 - t)^n.  The K-polynomial obeys

    K(M) = K(M + (x)) + t * K(M : x)

for any variable x, and is a product of (1 - t^a) factors once every minimal
generator is a pure power.  Polynomials in t are lists of ints, lowest degree
first.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from .poly import mono_divides

TPoly = list[int]


def _add(a: TPoly, b: TPoly) -> TPoly:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _mul(a: TPoly, b: TPoly) -> TPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _shift(a: TPoly, k: int) -> TPoly:
    return [0] * k + a if a else []


def minimalize(gens: Iterable[tuple]) -> list[tuple]:
    """Minimal generators of a monomial ideal, sorted."""
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out: list[tuple] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return sorted(out)


def k_polynomial(gens: Sequence[tuple], nvars: int) -> TPoly:
    """Numerator of the Hilbert series of S/M, M generated by the monomials ``gens``."""
    memo: dict = {}
    return _kpoly(tuple(minimalize(gens)), nvars, memo)


def _kpoly(gens: tuple, nvars: int, memo: dict) -> TPoly:
    if gens in memo:
        return memo[gens]
    if not gens:
        return [1]
    support = [[i for i, x in enumerate(g) if x] for g in gens]
    if any(not s for s in support):
        return []  # unit ideal
    mixed = [i for i, s in enumerate(support) if len(s) > 1]
    if not mixed:
        out: TPoly = [1]
        for g in gens:
            a = sum(g)
            out = _mul(out, [1] + [0] * (a - 1) + [-1])
        memo[gens] = out
        return out
    # pivot on the variable that occurs in the most mixed generators
    counts = [0] * nvars
    for i in mixed:
        for v in support[i]:
            counts[v] += 1
    x = max(range(nvars), key=lambda v: (counts[v], -v))
    unit = tuple(1 if i == x else 0 for i in range(nvars))
    with_x = tuple(minimalize([g for g in gens if g[x] == 0] + [unit]))
    colon = tuple(minimalize([tuple(c - 1 if i == x and c > 0 else c for i, c in enumerate(g)) for g in gens]))
    out = _add(_kpoly(with_x, nvars, memo), _shift(_kpoly(colon, nvars, memo), 1))
    memo[gens] = out
    return out


def hilbert_function_from_kpoly(k: TPoly, nvars: int, upto: int) -> list[int]:
    """Values of dim (S/M)_d for d = 0..upto."""
    out = []
    for d in range(upto + 1):
        v = 0
        for i, c in enumerate(k):
            if c and i <= d:
                v += c * comb(d - i + nvars - 1, nvars - 1)
        out.append(v)
    return out


def dimension_degree_from_kpoly(k: TPoly, nvars: int) -> tuple[int, int]:
    """(Krull dimension, multiplicity) from K(t)/(1-t)^n; the unit ideal gives (-1, 0)."""
    if not k:
        return -1, 0
    h = list(k)
    divisions = 0
    while sum(h) == 0:
        # synthetic division by (1 - t)
        q = []
        acc = 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = q
        divisions += 1
    return nvars - divisions, sum(h)
