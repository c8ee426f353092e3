"""Sparse multivariate polynomials with exact coefficients, and monomial orders."""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, Mapping, Sequence

from ..exactfield import Field

Exp = tuple  # exponent vector


ALIASES_5 = ("x", "y", "z", "t", "w")


def default_names(nvars: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(nvars))


class MonomialOrder:
    """``grevlex``, ``lex``, or ``elim`` (block order eliminating the first ``block`` variables).

    ``key(e)`` is a tuple of ints that increases with the monomial.  The
    elimination order compares the first block by grevlex and breaks ties with
    grevlex on the remaining variables.
    """

    __slots__ = ("kind", "block", "_memo")

    def __init__(self, kind: str = "grevlex", block: int = 0):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "elim" and block < 1:
            raise ValueError("elimination order needs block >= 1")
        self.kind = kind
        self.block = block if kind == "elim" else 0
        self._memo: dict = {}

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.block) == (other.kind, other.block)

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.block})" if self.kind == "elim" else f"MonomialOrder({self.kind!r})"

    def key(self, e: Exp) -> tuple:
        k = self._memo.get(e)
        if k is None:
            if self.kind == "grevlex":
                k = (sum(e),) + tuple(-x for x in reversed(e))
            elif self.kind == "lex":
                k = e
            else:
                b = self.block
                head, tail = e[:b], e[b:]
                k = ((sum(head),) + tuple(-x for x in reversed(head))
                     + (sum(tail),) + tuple(-x for x in reversed(tail)))
            self._memo[e] = k
        return k


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def mono_divides(a: Exp, b: Exp) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_mul(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Exp, b: Exp) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class Poly:
    """Polynomial in ``nvars`` variables; ``terms`` maps exponent tuples to nonzero coefficients.

    Instances are treated as immutable.  Plain Python numbers mixed into
    arithmetic (``2 * p``, ``p - 1``) are read as integers/rationals and mapped
    into the field; constructors take field elements directly.
    """

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: Field, nvars: int, terms: Mapping[Exp, object] | None = None):
        self.field = field
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, f: Field, nvars: int) -> "Poly":
        return cls(f, nvars)

    @classmethod
    def constant(cls, f: Field, nvars: int, c) -> "Poly":
        """Constant polynomial; ``c`` is already a field element."""
        return cls(f, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, f: Field, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(f, nvars, {tuple(e): f.one})

    @classmethod
    def linear(cls, f: Field, coeffs: Sequence) -> "Poly":
        """The linear form sum c_i x_i (coefficients are field elements)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(f, n, terms)

    @classmethod
    def parse(cls, text: str, f: Field, nvars: int, names: Sequence[str] | None = None) -> "Poly":
        return _Parser(text, f, nvars, names).parse()

    # -- basic queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading(self, order: MonomialOrder) -> tuple[Exp, object]:
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def lm(self, order: MonomialOrder) -> Exp:
        return max(self.terms, key=order.key)

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Exp, object]]:
        return sorted(self.terms.items(), key=lambda it: order.key(it[0]), reverse=True)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    # -- arithmetic ---------------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.field != other.field or self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self.field, self.nvars, self.field.convert(other))

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                out[e] = f.add(out[e], c)
            else:
                out[e] = c
        return Poly(f, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, self.nvars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(self.field.convert(other))
        self._check(other)
        f = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = f.mul(c1, c2)
                out[e] = f.add(out[e], c) if e in out else c
        return Poly(f, self.nvars, out)

    def __rmul__(self, other) -> "Poly":
        return self.scale(self.field.convert(other))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.field, self.nvars, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        f = self.field
        if c == 0:
            return Poly(f, self.nvars)
        return Poly(f, self.nvars, {e: f.mul(c, v) for e, v in self.terms.items()})

    def mul_monomial(self, m: Exp, c=None) -> "Poly":
        f = self.field
        if c is None:
            return Poly(f, self.nvars, {mono_mul(e, m): v for e, v in self.terms.items()})
        return Poly(f, self.nvars, {mono_mul(e, m): f.mul(c, v) for e, v in self.terms.items()})

    def monic(self, order: MonomialOrder) -> "Poly":
        if not self.terms:
            return self
        _, lc = self.leading(order)
        return self.scale(self.field.inv(lc))

    def evaluate(self, point: Sequence):
        f = self.field
        acc = f.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = f.mul(v, f.pow(x, k))
                    if v == 0:
                        break
            acc = f.add(acc, v)
        return acc

    def embed(self, nvars: int, offset: int) -> "Poly":
        """Same polynomial in a ring with ``nvars`` variables, shifted by ``offset``."""
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return Poly(self.field, nvars, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def drop_leading_vars(self, count: int) -> "Poly":
        """Inverse of :meth:`embed` with offset ``count``; those variables must be absent."""
        out = {}
        for e, c in self.terms.items():
            if any(e[:count]):
                raise ValueError("polynomial involves eliminated variables")
            out[e[count:]] = c
        return Poly(self.field, self.nvars - count, out)

    # -- equality and text -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            if self.terms:
                return len(self.terms) == 1 and (0,) * self.nvars in self.terms and \
                    self.terms[(0,) * self.nvars] == self.field.convert(other)
            return other == 0
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def to_str(self, names: Sequence[str] | None = None, order: MonomialOrder = GREVLEX) -> str:
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        f = self.field
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if f.is_rational:
                neg = c < 0
                mag = -c if neg else c
                cs = str(mag)
            elif f.k == 1:
                # print residues in the symmetric range for readability
                neg = c > f.p // 2
                mag = f.p - c if neg else c
                cs = str(mag)
            else:
                neg = False
                cs = "[" + ",".join(map(str, f.format(c))) + "]"
            if "/" in cs and mono:
                cs = f"({cs})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[1:].lstrip()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"

    __str__ = to_str


def monomials_of_degree(nvars: int, d: int) -> list[Exp]:
    """All exponent vectors of total degree ``d``, in lex-descending order."""
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


def count_monomials(nvars: int, d: int) -> int:
    return comb(nvars + d - 1, d) if d >= 0 else 0


def product(polys: Iterable[Poly]) -> Poly:
    polys = list(polys)
    if not polys:
        raise ValueError("empty product")
    out = polys[0]
    for q in polys[1:]:
        out = out * q
    return out


# ---------------------------------------------------------------------------
# text parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent parser for ``+ - * ^ ( )`` with numeric division only."""

    def __init__(self, text: str, f: Field, nvars: int, names: Sequence[str] | None):
        self.f = f
        self.nvars = nvars
        self.index = {n: i for i, n in enumerate(default_names(nvars))}
        if nvars == 5:
            self.index.update({n: i for i, n in enumerate(ALIASES_5)})
        if names:
            self.index.update({n: i for i, n in enumerate(names)})
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, str]]:
        out = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:pos + 10]!r}")
            num, name, op = m.groups()
            if num is not None:
                out.append(("num", num))
            elif name is not None:
                out.append(("name", name))
            else:
                out.append(("op", "^" if op == "**" else op))
            pos = m.end()
        return out

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", "")

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        if not self.tokens:
            raise ValueError("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                acc = acc * self.power()
            elif tok == ("op", "/"):
                self.take()
                den = self.power()
                if len(den.terms) != 1 or (0,) * self.nvars not in den.terms:
                    raise ValueError("division only by constants")
                acc = acc.scale(self.f.inv(den.terms[(0,) * self.nvars]))
            elif tok[0] in ("num", "name") or tok == ("op", "("):
                acc = acc * self.power()  # implicit multiplication
            else:
                return acc

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.constant(self.f, self.nvars, self.f.from_int(int(val)))
        if kind == "name":
            if val not in self.index:
                raise ValueError(f"unknown variable {val!r}")
            return Poly.variable(self.f, self.nvars, self.index[val])
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("missing ')'")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.power()
        raise ValueError(f"unexpected token {val!r}")
