"""Exact scalars and exact linear algebra.

Three coefficient fields are supported: the rationals, prime fields F_p and
extension fields F_{p^m} given by an irreducible monic minimal polynomial.
Field elements are plain Python values (``Fraction``, ``int``, ``tuple`` of
ints) operated on through a :class:`Field` object, so hot loops never pay for
per-element wrappers; a :class:`Scalar` wrapper exists for API boundaries.

Row reduction follows the first-nonzero pivot rule with columns processed left
to right, which makes every echelon form (and therefore every quotient basis
built on top of it) canonical and reproducible.  Over the rationals the
forward pass is fraction-free (integer rows, periodic gcd normalization);
over finite fields it is plain Gaussian elimination.  No floating point
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import FieldError

# ---------------------------------------------------------------------------
# field descriptions


@dataclass(frozen=True)
class FieldDesc:
    """Serializable description of a coefficient field.

    kind is one of "rationals", "prime-field", "extension-field"; p/m/minpoly
    are populated for the finite kinds.  minpoly is the coefficient tuple
    (c_0, ..., c_{m-1}) of the monic minimal polynomial c_0 + c_1 a + ... + a^m.
    """

    kind: str
    p: int | None = None
    m: int | None = None
    minpoly: tuple[int, ...] | None = None

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rationals" else int(self.p)  # type: ignore[arg-type]

    def label(self) -> str:
        if self.kind == "rationals":
            return "Q"
        if self.kind == "prime-field":
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- dense F_p[x] helpers for minimal polynomials (coefficient lists, low first)


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _fp_trim(out)


def _fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder in F_p[x]; b need not be monic."""
    r = _fp_trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(r) - db, 1)
    while r and len(r) - 1 >= db:
        coef = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - db
        q[shift] = coef
        if coef:
            for i in range(db + 1):
                r[shift + i] = (r[shift + i] - coef * b[i]) % p
        r.pop()
        _fp_trim(r)
    return _fp_trim(q), r


def _fp_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    return _fp_divmod(a, mod, p)[1]


def _fp_monic_polys(deg: int, p: int) -> Iterable[list[int]]:
    # all monic polynomials of the given degree, in integer-encoding order of
    # the low coefficients (c_0 least significant)
    total = p**deg
    for code in range(total):
        c = []
        v = code
        for _ in range(deg):
            c.append(v % p)
            v //= p
        yield c + [1]


def _fp_is_irreducible(poly: Sequence[int], p: int) -> bool:
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _fp_monic_polys(d, p):
            if not _fp_mod(poly, cand, p):
                return False
    return True


def canonical_minpoly(p: int, m: int) -> tuple[int, ...]:
    """First irreducible monic polynomial of degree m over F_p, by integer encoding."""
    for cand in _fp_monic_polys(m, p):
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# fields


class Field:
    """Arithmetic on raw field-element values; subclasses fix the representation."""

    desc: FieldDesc

    # subclasses implement: zero one add sub neg mul inv is_zero from_int to_str
    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return a == b

    def sum(self, values) -> object:
        acc = self.zero()
        for v in values:
            acc = self.add(acc, v)
        return acc

    # small vector conveniences shared by the algebra layers
    def vec_zero(self, n: int) -> list:
        z = self.zero()
        return [z] * n

    def vec_add(self, u: Sequence, v: Sequence) -> list:
        return [self.add(a, b) for a, b in zip(u, v)]

    def vec_sub(self, u: Sequence, v: Sequence) -> list:
        return [self.sub(a, b) for a, b in zip(u, v)]

    def vec_scale(self, c, u: Sequence) -> list:
        return [self.mul(c, a) for a in u]

    def vec_is_zero(self, u: Sequence) -> bool:
        return all(self.is_zero(a) for a in u)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.desc == other.desc

    def __hash__(self) -> int:
        return hash(self.desc)

    def __repr__(self) -> str:
        return f"Field({self.desc.label()})"


class RationalField(Field):
    def __init__(self):
        self.desc = FieldDesc(kind="rationals")

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n: int):
        return Fraction(n)

    def to_str(self, a) -> str:
        return str(a)


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.desc = FieldDesc(kind="prime-field", p=p, m=1)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, n: int):
        return n % self.p

    def to_str(self, a) -> str:
        return str(a % self.p)

    def elements(self) -> Iterable[int]:
        return range(self.p)

    @property
    def order(self) -> int:
        return self.p


class ExtensionField(Field):
    """F_{p^m} with elements as coefficient tuples (c_0, ..., c_{m-1}) over F_p."""

    def __init__(self, p: int, m: int, minpoly: Sequence[int] | None = None):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if m < 2:
            raise FieldError("extension degree must be at least 2 (use a prime field)")
        if minpoly is None:
            minpoly = canonical_minpoly(p, m)
        mp = tuple(c % p for c in minpoly)
        if len(mp) != m + 1 or mp[-1] != 1:
            raise FieldError("minimal polynomial must be monic of degree m")
        if not _fp_is_irreducible(mp, p):
            raise FieldError(f"minimal polynomial {list(mp)} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.minpoly = mp
        self.desc = FieldDesc(kind="extension-field", p=p, m=m, minpoly=mp)
        # reduction table: a^k for k in [m, 2m-2] as length-m tuples
        self._red: list[tuple[int, ...]] = []
        cur = [(-c) % p for c in mp[:-1]]  # a^m
        self._red.append(tuple(cur))
        for _ in range(m - 2):
            nxt = [0] + cur[:-1]
            lead = cur[-1]
            if lead:
                top = self._red[0]
                nxt = [(x + lead * t) % p for x, t in zip(nxt, top)]
            cur = nxt
            self._red.append(tuple(cur))

    def zero(self):
        return (0,) * self.m

    def one(self):
        return (1,) + (0,) * (self.m - 1)

    def generator(self):
        return tuple(1 if i == 1 else 0 for i in range(self.m))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        out = prod[:m]
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                red = self._red[k - m]
                for i in range(m):
                    out[i] = (out[i] + c * red[i]) % p
        return tuple(out)

    def inv(self, a):
        # extended Euclid in F_p[x] against the minimal polynomial
        p = self.p
        if all(x == 0 for x in a):
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = list(self.minpoly), _fp_trim(list(a))
        t0, t1 = [], [1]
        while r1:
            q, r = _fp_divmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _fp_sub(t0, _fp_mul(q, t1, p), p)
        # r0 is the gcd, a nonzero constant since the minimal polynomial is irreducible
        scale = pow(r0[0], p - 2, p)
        out = [(c * scale) % p for c in t0]
        out = out[: self.m] + [0] * max(0, self.m - len(out))
        return tuple(out)

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.m - 1)

    def to_str(self, a) -> str:
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                pw = "a" if i == 1 else f"a^{i}"
                terms.append(pw if c == 1 else f"{c}*{pw}")
        return "+".join(terms) if terms else "0"

    def elements(self) -> Iterable[tuple[int, ...]]:
        """All field elements in integer-encoding order (c_0 least significant)."""
        p, m = self.p, self.m
        for code in range(p**m):
            v = code
            out = []
            for _ in range(m):
                out.append(v % p)
                v //= p
            yield tuple(out)

    @property
    def order(self) -> int:
        return self.p**self.m


_RATIONALS = RationalField()


def rationals() -> RationalField:
    return _RATIONALS


def field_from_desc(desc: FieldDesc) -> Field:
    if desc.kind == "rationals":
        return _RATIONALS
    if desc.kind == "prime-field":
        return PrimeField(desc.p)  # type: ignore[arg-type]
    if desc.kind == "extension-field":
        return ExtensionField(desc.p, desc.m, desc.minpoly)  # type: ignore[arg-type]
    raise FieldError(f"unknown field kind {desc.kind!r}")


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field — convenience wrapper for API edges."""

    field: Field
    value: object

    def _check(self, other: "Scalar"):
        if self.field != other.field:
            raise FieldError("scalars from different fields")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, self.field.neg(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __str__(self) -> str:
        return self.field.to_str(self.value)


# ---------------------------------------------------------------------------
# exact matrices


@dataclass
class RrefResult:
    rows: list[list]          # the nonzero reduced rows, in echelon order
    pivots: list[int]         # pivot column of each row, strictly increasing
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self) -> list[int]:
        pset = set(self.pivots)
        return [c for c in range(self.ncols) if c not in pset]


class ExactMatrix:
    """Dense exact matrix over a :class:`Field`; rows are plain lists of raw values."""

    def __init__(self, field: Field, rows: list[list], ncols: int):
        self.field = field
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(field, rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rref(self) -> RrefResult:
        if isinstance(self.field, RationalField):
            return _rref_rational(self.rows, self.ncols)
        return _rref_generic(self.field, self.rows, self.ncols)

    def rank(self) -> int:
        return self.rref().rank

    def kernel_basis(self) -> list[list]:
        """Canonical kernel basis: one vector per free column, free variable set to 1.

        Vectors are returned in ascending free-column order; entries at pivot
        columns are the negated reduced-row entries.
        """
        red = self.rref()
        f = self.field
        one, zero = f.one(), f.zero()
        basis = []
        for free in red.free_columns():
            vec = [zero] * self.ncols
            vec[free] = one
            for row, pc in zip(red.rows, red.pivots):
                entry = row[free]
                if not f.is_zero(entry):
                    vec[pc] = f.neg(entry)
            basis.append(vec)
        return basis

    def mul_vec(self, vec: Sequence) -> list:
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero()
            for a, x in zip(row, vec):
                if not (f.is_zero(a) or f.is_zero(x)):
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out


def _rref_generic(field: Field, in_rows: list[list], ncols: int) -> RrefResult:
    rows = [list(r) for r in in_rows if not field.vec_is_zero(r)]
    pivots: list[int] = []
    piv_r = 0
    for col in range(ncols):
        sel = None
        for r in range(piv_r, len(rows)):
            if not field.is_zero(rows[r][col]):
                sel = r
                break
        if sel is None:
            continue
        rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
        inv = field.inv(rows[piv_r][col])
        rows[piv_r] = [field.mul(inv, a) for a in rows[piv_r]]
        prow = rows[piv_r]
        for r in range(len(rows)):
            if r != piv_r:
                c = rows[r][col]
                if not field.is_zero(c):
                    rows[r] = [field.sub(a, field.mul(c, b)) for a, b in zip(rows[r], prow)]
        pivots.append(col)
        piv_r += 1
        if piv_r == len(rows):
            break
    return RrefResult(rows=rows[:piv_r], pivots=pivots, ncols=ncols)


def _row_to_int(row: Sequence) -> list[int] | None:
    """Clear denominators of a rational row; returns integer row of the same span."""
    den = 1
    for a in row:
        if isinstance(a, Fraction):
            den = den * a.denominator // gcd(den, a.denominator)
    out = [int(a * den) if isinstance(a, Fraction) else int(a) * den for a in row]
    g = 0
    for a in out:
        g = gcd(g, abs(a))
    if g == 0:
        return None
    if g > 1:
        out = [a // g for a in out]
    return out


def _rref_rational(in_rows: list[list], ncols: int) -> RrefResult:
    """RREF over Q: fraction-free integer forward pass, exact back substitution.

    Each combined row is renormalized by its gcd to keep entries bounded
    (the "periodic normalization" that makes Bareiss-style growth manageable).
    """
    rows: list[list[int]] = []
    for r in in_rows:
        ir = _row_to_int(r)
        if ir is not None:
            rows.append(ir)
    pivots: list[int] = []
    piv_r = 0
    for col in range(ncols):
        sel = None
        for r in range(piv_r, len(rows)):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
        prow = rows[piv_r]
        p = prow[col]
        for r in range(piv_r + 1, len(rows)):
            a = rows[r][col]
            if a == 0:
                continue
            cur = rows[r]
            new = [p * x - a * y for x, y in zip(cur, prow)]
            g = 0
            for v in new:
                g = gcd(g, abs(v))
            if g > 1:
                new = [v // g for v in new]
            rows[r] = new
        pivots.append(col)
        piv_r += 1
        if piv_r == len(rows):
            break
    # back substitution on the pivot rows, producing exact rational RREF
    red: list[list[Fraction]] = [[Fraction(v) for v in rows[i]] for i in range(piv_r)]
    for i in range(piv_r - 1, -1, -1):
        pc = pivots[i]
        lead = red[i][pc]
        red[i] = [a / lead for a in red[i]]
        for j in range(i):
            c = red[j][pc]
            if c != 0:
                red[j] = [a - c * b for a, b in zip(red[j], red[i])]
    return RrefResult(rows=red, pivots=pivots, ncols=ncols)


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank of a matrix over F_2 with rows encoded as bitmasks (bit i = column i)."""
    piv: dict[int, int] = {}  # lowest set bit -> reduced row with that pivot
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            b = piv.get(low)
            if b is None:
                piv[low] = row
                rank += 1
                break
            row ^= b
    return rank
