"""Exact arithmetic over Q and F_{p^k}, and dense linear algebra on top of it.

Field elements are plain Python values so that the hot loops elsewhere stay
cheap:

* over Q an element is a :class:`fractions.Fraction`;
* over F_q (q = p^k) an element is an ``int`` in ``[0, q)`` whose base-``p``
  digits are the coefficients of the residue polynomial, lowest degree first.

The integer encoding doubles as the canonical element ordering used for every
deterministic choice (least primitive root, parameter lists, ...).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterator, Sequence

from sympy import factorint, isprime


class FieldError(ValueError):
    """Invalid field description or an operation the field cannot support."""


# ---------------------------------------------------------------------------
# dense polynomials over F_p (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over F_p (low degree first)."""
    f = _trim([c % p for c in poly])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _pmod(_psub(_ppowmod(x, p**k, f, p), x, p), f, p):
        return False
    for r in factorint(k):
        h = _psub(_ppowmod(x, p ** (k // r), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``k`` over F_p.

    Coefficient vectors are compared lowest degree first; the result includes
    the leading 1.
    """
    for low in itertools.product(range(p), repeat=k):
        cand = list(low) + [1]
        if low[0] != 0 and is_irreducible_mod_p(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Field:
    """A validated field: ``Field.rational()`` or ``Field.finite(p, k)``.

    Two fields compare equal when their descriptions agree.
    """

    kind: str
    p: int = 0
    k: int = 1
    modulus: tuple[int, ...] = field(default=())

    # -- construction -----------------------------------------------------

    @classmethod
    def rational(cls) -> "Field":
        return cls("rational")

    @classmethod
    def finite(cls, p: int, k: int = 1, modulus: Sequence[int] | None = None) -> "Field":
        if not isinstance(p, int) or not isprime(p):
            raise FieldError(f"p={p!r} is not prime")
        if not isinstance(k, int) or k < 1:
            raise FieldError(f"extension degree k={k!r} must be >= 1")
        if k == 1:
            if modulus is not None and len(_trim([c % p for c in modulus])) - 1 != 1:
                raise FieldError("modulus for k=1 must have degree 1")
            return cls("finite", p, 1, ())
        if modulus is None:
            mod = least_irreducible(p, k)
        else:
            mod = tuple(c % p for c in modulus)
            if len(_trim(list(mod))) - 1 != k:
                raise FieldError(f"modulus must have degree exactly {k}")
            if not is_irreducible_mod_p(mod, p):
                raise FieldError(f"modulus {list(mod)} is reducible over F_{p}")
            inv = pow(mod[-1], -1, p)
            mod = tuple(c * inv % p for c in mod)
        return cls("finite", p, k, mod)

    @classmethod
    def from_json(cls, obj: dict) -> "Field":
        kind = obj.get("kind")
        if kind == "rational":
            extra = {"p", "k", "modulus"} & set(obj)
            if extra:
                raise FieldError(f"rational field takes no {sorted(extra)}")
            return cls.rational()
        if kind == "finite":
            if "p" not in obj:
                raise FieldError("finite field needs p")
            return cls.finite(int(obj["p"]), int(obj.get("k", 1)), obj.get("modulus"))
        raise FieldError(f"unknown field kind {kind!r}")

    def to_json(self) -> dict:
        if self.is_rational:
            return {"kind": "rational"}
        out: dict[str, Any] = {"kind": "finite", "p": self.p, "k": self.k}
        if self.k > 1:
            out["modulus"] = list(self.modulus)
        return out

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.kind, self.p, self.k, self.modulus) == (other.kind, other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.is_rational:
            return "QQ"
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "finite" and self.k == 1

    @property
    def order(self) -> int | None:
        """Number of elements, ``None`` for Q."""
        return None if self.is_rational else self.p**self.k

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.p

    @property
    def zero(self):
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rational else 1

    # -- extension-field tables ---------------------------------------------

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        """(exp, log) tables for F_{p^k}, k > 1, built from a primitive element."""
        q = self.p**self.k
        if q > 1 << 22:
            raise FieldError(f"extension field of order {q} too large for table arithmetic")
        for g in range(2, q):
            exp = [0] * (q - 1)
            x = 1
            ok = True
            for i in range(q - 1):
                exp[i] = x
                x = self._slow_mul(x, g)
                if x == 1 and i < q - 2:
                    ok = False
                    break
            if ok:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                return exp, log
        raise FieldError("no primitive element found")  # pragma: no cover

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, ds: Sequence[int]) -> int:
        a = 0
        for c in reversed(ds):
            a = a * self.p + c % self.p
        return a

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pmod(_pmul(self._digits(a), self._digits(b), self.p), list(self.modulus), self.p)
        return self._undigits(prod + [0] * (self.k - len(prod)))

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        if self.kind == "rational":
            return a + b
        if self.k == 1:
            return (a + b) % self.p
        p, out, scale = self.p, 0, 1
        for _ in range(self.k):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a):
        if self.kind == "rational":
            return -a
        if self.k == 1:
            return -a % self.p
        return self._undigits([-c for c in self._digits(a)])

    def sub(self, a, b):
        if self.kind == "rational":
            return a - b
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "rational":
            return a * b
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (len(exp))]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "rational":
            return 1 / a
        if self.k == 1:
            return pow(a, -1, self.p)
        exp, log = self._tables
        return exp[(-log[a]) % len(exp)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.kind == "rational":
            return a**e
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        exp, log = self._tables
        return exp[(log[a] * e) % len(exp)]

    def from_int(self, n: int):
        if self.kind == "rational":
            return Fraction(n)
        return n % self.p

    def convert(self, value):
        """Coerce ints, Fractions, numeric strings or coefficient lists into the field."""
        if isinstance(value, (list, tuple)):
            if self.is_rational:
                raise FieldError("coefficient lists only make sense over F_{p^k}")
            if len(value) > self.k:
                raise FieldError(f"coefficient list longer than k={self.k}")
            return self._undigits(list(value) + [0] * (self.k - len(value)))
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            if self.is_rational:
                return value
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        raise FieldError(f"cannot convert {value!r} into {self!r}")

    def format(self, a) -> Any:
        """JSON-ready form: ``"2/3"`` over Q, ``"4"`` over F_p, digit list over F_{p^k}."""
        if self.is_rational or self.k == 1:
            return str(a)
        return self._digits(a)

    def elements(self) -> Iterator:
        """All elements in canonical order (finite fields only)."""
        if self.is_rational:
            raise FieldError("Q is infinite")
        return iter(range(self.p**self.k))

    def first_elements(self, count: int) -> list:
        """The first ``count`` canonical elements (0, 1, 2, ... for Q)."""
        if self.is_rational:
            return [Fraction(i) for i in range(count)]
        if count > self.p**self.k:
            raise FieldError(f"{self!r} has fewer than {count} elements")
        return list(range(count))

    def sort_key(self, a):
        return a


def field_create(desc: dict | Field) -> Field:
    """Validate a field description (JSON-style dict) and return the field."""
    if isinstance(desc, Field):
        return desc
    return Field.from_json(desc)


def multiplicative_order(f: Field, a) -> int:
    if f.is_rational:
        raise FieldError("multiplicative order only defined here for finite fields")
    if a == 0:
        raise FieldError("zero has no multiplicative order")
    n = f.order - 1
    order = n
    for r, e in factorint(n).items():
        for _ in range(e):
            if order % r == 0 and f.pow(a, order // r) == 1:
                order //= r
    return order


def primitive_root_of_unity(f: Field, m: int):
    """Least element (canonical order) of multiplicative order exactly ``m``."""
    if f.is_rational:
        raise FieldError("roots of unity are only provided over finite fields")
    if m < 1 or (f.order - 1) % m:
        raise FieldError(f"{m} does not divide {f.order} - 1 in {f!r}")
    for a in range(1, f.order):
        if f.pow(a, m) == 1 and multiplicative_order(f, a) == m:
            return a
    raise FieldError("no primitive root found")  # pragma: no cover


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix over one field; ``rows`` is a tuple of tuples."""

    field: Field
    rows: tuple[tuple, ...]
    ncols: int

    @classmethod
    def of(cls, f: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(f.convert(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls(f, data, ncols)

    @classmethod
    def zeros(cls, f: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(f, tuple((f.zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, f: Field, n: int) -> "Matrix":
        return cls(f, tuple(tuple(f.one if i == j else f.zero for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "Matrix":
        cols = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return Matrix(self.field, cols, self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        f = self.field
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for r in self.rows:
            out.append(tuple(_dot(f, r, c) for c in cols))
        return Matrix(f, tuple(out), other.ncols)


def _dot(f: Field, u: Sequence, v: Sequence):
    acc = f.zero
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            acc = f.add(acc, f.mul(a, b))
    return acc


def rref_rows(f: Field, rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a list of rows; returns (nonzero rows, pivots).

    Pivot rule: scan columns left to right, take the first row (top to bottom)
    with a nonzero entry in that column.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    if f.is_prime_field:
        p = f.p
        for c in range(ncols):
            piv = next((i for i in range(r, nrows) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = pow(m[r][c], -1, p)
            row = [x * inv % p for x in m[r]]
            m[r] = row
            for i in range(nrows):
                if i != r:
                    fac = m[i][c]
                    if fac:
                        other = m[i]
                        m[i] = [(x - fac * y) % p for x, y in zip(other, row)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
    else:
        for c in range(ncols):
            piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = f.inv(m[r][c])
            row = [f.mul(x, inv) for x in m[r]]
            m[r] = row
            for i in range(nrows):
                if i != r:
                    fac = m[i][c]
                    if fac != 0:
                        m[i] = [f.sub(x, f.mul(fac, y)) for x, y in zip(m[i], row)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
    return m[:r], pivots


def mat_rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """(rref, rank, pivot columns); the rref keeps the original row count."""
    rows, pivots = rref_rows(m.field, m.rows, m.ncols)
    zero_row = (m.field.zero,) * m.ncols
    full = tuple(tuple(r) for r in rows) + (zero_row,) * (m.nrows - len(rows))
    return Matrix(m.field, full, m.ncols), len(pivots), pivots


def rank_rows(f: Field, rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref_rows(f, rows, ncols)[1])


def mat_rank(m: Matrix) -> int:
    return rank_rows(m.field, m.rows, m.ncols)


def kernel_rows(f: Field, rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of the right null space, one row per free column, in RREF."""
    red, pivots = rref_rows(f, rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [f.zero] * ncols
        v[free] = f.one
        for row, pc in zip(red, pivots):
            if row[free] != 0:
                v[pc] = f.neg(row[free])
        basis.append(v)
    out, _ = rref_rows(f, basis, ncols)
    return [tuple(r) for r in out]


def mat_kernel(m: Matrix) -> Matrix:
    """Kernel basis as the rows of a matrix (each row starts with a leading 1)."""
    return Matrix(m.field, tuple(kernel_rows(m.field, m.rows, m.ncols)), m.ncols)
