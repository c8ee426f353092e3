"""Buchberger's algorithm with the Gebauer-Moeller criteria and sugar pair selection."""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from typing import Sequence

from ..exactfield import Field
from .poly import (MonomialOrder, Poly, mono_coprime, mono_div, mono_divides, mono_lcm,
                   mono_mul)


class _Elt:
    """A monic basis element: leading monomial, tail terms, full terms, sugar degree."""

    __slots__ = ("lm", "tail", "terms", "sugar")

    def __init__(self, lm, terms: dict, sugar: int, order: MonomialOrder):
        self.lm = lm
        self.terms = terms
        self.sugar = sugar
        self.tail = sorted(((e, c) for e, c in terms.items() if e != lm),
                           key=lambda it: order.key(it[0]), reverse=True)


def _neg(t: tuple) -> tuple:
    return tuple(-x for x in t)


def reduce_terms(terms: dict, divisors: Sequence[_Elt], order: MonomialOrder, f: Field,
                 full: bool = True) -> dict:
    """Remainder of ``terms`` on division by monic ``divisors`` (full or top reduction)."""
    key = order.key
    p = dict(terms)
    heap = [(_neg(key(e)), e) for e in p]
    heapify(heap)
    queued = set(p)
    rem: dict = {}
    prime = f.is_prime_field
    P = f.p
    while heap:
        _, m = heappop(heap)
        c = p.pop(m, None)
        if c is None:
            queued.discard(m)
            continue
        queued.discard(m)
        for g in divisors:
            lm = g.lm
            if all(a <= b for a, b in zip(lm, m)):
                q = tuple(b - a for a, b in zip(lm, m))
                for e, gc in g.tail:
                    em = tuple(a + b for a, b in zip(e, q))
                    v = p.get(em)
                    if prime:
                        d = c * gc % P
                        if v is None:
                            p[em] = P - d
                        else:
                            v = (v - d) % P
                            if v:
                                p[em] = v
                            else:
                                del p[em]
                                continue
                    else:
                        d = f.mul(c, gc)
                        if v is None:
                            p[em] = f.neg(d)
                        else:
                            v = f.sub(v, d)
                            if v != 0:
                                p[em] = v
                            else:
                                del p[em]
                                continue
                    if em not in queued:
                        queued.add(em)
                        heappush(heap, (_neg(key(em)), em))
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def _make_monic(terms: dict, order: MonomialOrder, f: Field) -> tuple[tuple, dict]:
    lm = max(terms, key=order.key)
    lc = terms[lm]
    if lc != f.one:
        inv = f.inv(lc)
        terms = {e: f.mul(inv, c) for e, c in terms.items()}
    return lm, terms


def _spoly(a: _Elt, b: _Elt, f: Field) -> tuple[dict, int]:
    lcm = mono_lcm(a.lm, b.lm)
    ma = mono_div(lcm, a.lm)
    mb = mono_div(lcm, b.lm)
    out: dict = {}
    for e, c in a.tail:
        out[mono_mul(e, ma)] = c
    for e, c in b.tail:
        em = mono_mul(e, mb)
        v = out.get(em)
        if v is None:
            out[em] = f.neg(c)
        else:
            v = f.sub(v, c)
            if v != 0:
                out[em] = v
            else:
                del out[em]
    sugar = max(a.sugar + sum(ma), b.sugar + sum(mb))
    return out, sugar


class BuchbergerStats:
    __slots__ = ("pairs_considered", "zero_reductions", "basis_size")

    def __init__(self):
        self.pairs_considered = 0
        self.zero_reductions = 0
        self.basis_size = 0


def groebner_basis(polys: Sequence[Poly], order: MonomialOrder,
                   stats: BuchbergerStats | None = None) -> list[Poly]:
    """The reduced Groebner basis of the ideal generated by ``polys``.

    Elements are monic and listed by decreasing leading monomial.  The zero
    ideal gives ``[]``; the unit ideal gives ``[1]``.
    """
    polys = [q for q in polys if q]
    if not polys:
        return []
    f = polys[0].field
    nvars = polys[0].nvars
    for q in polys:
        if q.field != f or q.nvars != nvars:
            raise ValueError("generators live in different rings")

    elts: list[_Elt] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []

    def add(terms: dict, sugar: int) -> bool:
        lm, terms = _make_monic(terms, order, f)
        h = len(elts)
        elts.append(_Elt(lm, terms, sugar, order))
        if not any(lm):
            active[:] = [h]
            pairs.clear()
            return True
        _update(h)
        return False

    def _update(h: int) -> None:
        nonlocal pairs, active
        hl = elts[h].lm
        cands = [(g, mono_lcm(hl, elts[g].lm)) for g in active]
        kept = []
        for idx, (g, lg) in enumerate(cands):
            if mono_coprime(hl, elts[g].lm):
                kept.append((g, lg))
                continue
            others = cands[idx + 1:]
            if any(mono_divides(l2, lg) for _, l2 in others) or any(mono_divides(l2, lg) for _, l2 in kept):
                continue
            kept.append((g, lg))
        new_pairs = [(g, h) for g, _ in kept if not mono_coprime(hl, elts[g].lm)]
        survivors = []
        for a, b in pairs:
            lab = mono_lcm(elts[a].lm, elts[b].lm)
            if (not mono_divides(hl, lab) or mono_lcm(elts[a].lm, hl) == lab
                    or mono_lcm(elts[b].lm, hl) == lab):
                survivors.append((a, b))
        pairs = survivors + new_pairs
        active = [g for g in active if not mono_divides(hl, elts[g].lm)] + [h]

    # Feed generators smallest first so that early reductions stay cheap.
    start = sorted(polys, key=lambda q: (q.degree(), order.key(q.lm(order))))
    for q in start:
        r = reduce_terms(q.terms, [elts[i] for i in active], order, f)
        if r and add(r, q.degree()):
            return [Poly.constant(f, nvars, f.one)]

    key = order.key
    while pairs:
        best = min(range(len(pairs)), key=lambda i: _pair_rank(pairs[i], elts, key))
        a, b = pairs.pop(best)
        if stats:
            stats.pairs_considered += 1
        s, sugar = _spoly(elts[a], elts[b], f)
        if s:
            s = reduce_terms(s, [elts[i] for i in active], order, f)
        if not s:
            if stats:
                stats.zero_reductions += 1
            continue
        if add(s, sugar):
            return [Poly.constant(f, nvars, f.one)]

    basis = [elts[i] for i in active]
    out = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        tail = reduce_terms(dict(g.tail), others, order, f)
        tail[g.lm] = f.one
        out.append(Poly(f, nvars, tail))
    out.sort(key=lambda q: key(q.lm(order)), reverse=True)
    if stats:
        stats.basis_size = len(out)
    return out


def _pair_rank(pair, elts, key):
    a, b = pair
    lcm = mono_lcm(elts[a].lm, elts[b].lm)
    sugar = max(elts[a].sugar + sum(lcm) - sum(elts[a].lm), elts[b].sugar + sum(lcm) - sum(elts[b].lm))
    return (sugar, key(lcm), a, b)


def normal_form(p: Poly, gb: Sequence[Poly], order: MonomialOrder) -> Poly:
    """Remainder of ``p`` modulo a Groebner basis ``gb`` (unique for that order)."""
    f = p.field
    divisors = []
    for g in gb:
        lm, terms = _make_monic(g.terms, order, f)
        divisors.append(_Elt(lm, terms, 0, order))
    return Poly(f, p.nvars, reduce_terms(p.terms, divisors, order, f))


def is_groebner_basis(gb: Sequence[Poly], order: MonomialOrder) -> bool:
    """Buchberger's criterion: every s-polynomial reduces to zero."""
    if not gb:
        return True
    f = gb[0].field
    elts = []
    for g in gb:
        lm, terms = _make_monic(g.terms, order, f)
        elts.append(_Elt(lm, terms, 0, order))
    for i in range(len(elts)):
        for j in range(i + 1, len(elts)):
            s, _ = _spoly(elts[i], elts[j], f)
            if s and reduce_terms(s, elts, order, f):
                return False
    return True
