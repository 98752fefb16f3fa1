"""Quasi-slopes of local algebras from jet lengths.

delta0 compares an Artinian algebra with its half-order truncation on a log
scale and converges to the Krull dimension along jets; eps0 compares the
square of the root-order truncation length with the full length and converges
to multiplicity/dim!.  rho is the exact sup-norm defect of the jet-length
sequence against its leading-term asymptotics, and the rounding certificate
turns delta0 at a single sufficiently large even order (n >= 10*rho) into the
dimension itself.

All values are exact rationals; the only decimals are reporting artifacts
(log2 printed to 12 places).  Decisions — in particular the half-integer
rounding of log2 — are made by integer comparisons against powers of two, not
by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from math import ceil, comb, factorial, isqrt
from typing import Optional, Sequence, Union

from .artin import ArtinAlgebra, jet, nilpotency_index
from .errors import (
    DimensionZeroError,
    InternalInconsistencyError,
    NilpotencyOneError,
    NotStabilizedError,
    WindowTooSmallError,
    ZeroRingError,
)
from .hilbert import (
    hilbert_series,
    hs_polynomial_from_jets,
    poly_add,
    poly_eval,
    poly_mul,
    poly_scale,
)
from .poly import DEFAULT_CAPACITY
from .presentation import Presentation


# ---------------------------------------------------------------------------
# exact log2 reporting and rounding


def log2_decimal(ratio: Fraction, digits: int = 12) -> str:
    """log2 of a positive rational as a decimal string with `digits` places."""
    if ratio <= 0:
        raise ValueError("log2 of a non-positive ratio")
    with localcontext() as ctx:
        ctx.prec = digits + 20
        v = (Decimal(ratio.numerator).ln() - Decimal(ratio.denominator).ln()) \
            / Decimal(2).ln()
        q = v.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    return str(q)


def round_log2(ratio: Fraction) -> int:
    """The integer k with log2(ratio) in [k - 1/2, k + 1/2), decided exactly.

    Equivalent to 2^(2k-1) <= ratio^2 < 2^(2k+1); only integer arithmetic.
    """
    if ratio <= 0:
        raise ValueError("log2 of a non-positive ratio")
    r2 = ratio * ratio
    k = ratio.numerator.bit_length() - ratio.denominator.bit_length()
    while r2 >= Fraction(2) ** (2 * k + 1):
        k += 1
    while r2 < Fraction(2) ** (2 * k - 1):
        k -= 1
    return k


# ---------------------------------------------------------------------------
# jet-length model: exact lengths at every order without building big algebras


@dataclass
class LengthModel:
    """Exact jet lengths of a presentation at all orders.

    Below `poly_from` the lengths are raw data (series partial sums, or jet
    dimensions for a local presentation); from `poly_from` on they follow the
    cumulative polynomial.  `dim` is its degree and `mult` is dim! times its
    leading coefficient; dim 0 means the quotient is already Artinian.
    """

    presentation: Presentation
    cumulative: list[Fraction]
    poly_from: int
    low_lengths: list[int]          # lengths at orders 0 .. poly_from - 1
    dim: int
    mult: int
    source: str

    def length(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative jet order")
        if n < self.poly_from:
            return self.low_lengths[n]
        v = poly_eval(self.cumulative, n)
        if v.denominator != 1:
            raise InternalInconsistencyError(f"non-integral length {v} at order {n}")
        return int(v)

    def hf_prefix(self, n: int) -> list[int]:
        """Hilbert function of the order-n jet (length differences)."""
        return [self.length(i + 1) - self.length(i) for i in range(n)]

    def nilpotency_at(self, n: int) -> int:
        """Nilpotency index of the order-n jet (n, unless lengths saturate)."""
        if n < 1:
            raise ZeroRingError("order-0 jet is the zero ring")
        if self.dim >= 1 or n <= self.poly_from:
            lo, hi = 1, n
            while lo < hi:          # smallest t with length(t) == length(n)
                mid = (lo + hi) // 2
                if self.length(mid) == self.length(n):
                    hi = mid
                else:
                    lo = mid + 1
            return lo
        return self.nilpotency_at(self.poly_from)


def length_model(p: Presentation, capacity: int = DEFAULT_CAPACITY) -> LengthModel:
    """Build the exact length model: series-based when graded, fitted and
    verified against extra jet orders when local."""
    if p.mode == "graded":
        hd = hilbert_series(p)
        partial = [0]
        for h in hd.series_prefix:
            partial.append(partial[-1] + h)
        poly_from = max(len(hd.numerator) - 1 - hd.pole_order + 1, 1)
        for n in range(poly_from, len(partial)):
            if poly_eval(hd.cumulative, n) != partial[n]:
                raise InternalInconsistencyError(
                    f"series/polynomial length mismatch at order {n}")
        return LengthModel(p, hd.cumulative, poly_from, partial[:poly_from],
                           hd.dim, hd.mult, "graded-exact")

    last_error: Optional[Exception] = None
    for k in range(6):
        w1 = 2 + 2 * k
        w2 = w1 + 6 + k
        try:
            coeffs, certified = hs_polynomial_from_jets(
                p, (w1, w2), verify_window=(w2 + 1, w2 + 2), capacity=capacity)
        except (NotStabilizedError, WindowTooSmallError) as e:
            last_error = e
            continue
        if not certified:
            last_error = NotStabilizedError(
                f"fit over [{w1}, {w2}] failed its verification window")
            continue
        d = len(coeffs) - 1 if coeffs else 0
        lead = coeffs[-1] if coeffs else Fraction(0)
        mult = factorial(d) * lead if d >= 1 else poly_eval(coeffs, w2)
        if mult.denominator != 1:
            raise InternalInconsistencyError(f"non-integral multiplicity {mult}")
        low = [jet(p, n, capacity=capacity).dim if n else 0 for n in range(w1)]
        return LengthModel(p, coeffs, w1, low, d, int(mult), "local-fitted")
    raise NotStabilizedError(
        f"jet lengths never settled onto a polynomial: {last_error}")


# ---------------------------------------------------------------------------
# delta0 and eps0


@dataclass(frozen=True)
class Delta0Value:
    """Lengths of the algebra and its half-order truncation, their ratio, and
    log2 of the ratio to 12 decimal places."""

    length: int
    half_length: int
    ratio: Fraction
    log2: str

    def rounded(self) -> int:
        return round_log2(self.ratio)


def _truncation_length(A: ArtinAlgebra, r: int) -> int:
    """Length of A / m^r: basis monomials of degree below r."""
    return sum(1 for d in A.degrees() if d < r)


def delta0(A: ArtinAlgebra) -> Delta0Value:
    """Log2 of length(A) / length(A/m^(n/2)), n the nilpotency index."""
    n = nilpotency_index(A)
    if n == 1:
        raise NilpotencyOneError("half-order truncation of a field is the zero ring")
    half = _truncation_length(A, n // 2)
    ratio = Fraction(A.dim, half)
    return Delta0Value(A.dim, half, ratio, log2_decimal(ratio))


def eps0(A: ArtinAlgebra) -> Fraction:
    """length(A/m^isqrt(n))^2 / length(A), n the nilpotency index."""
    n = nilpotency_index(A)
    root = _truncation_length(A, isqrt(n))
    return Fraction(root * root, A.dim)


def delta0_at_order(model: LengthModel, n: int) -> Delta0Value:
    """delta0 of the order-n jet, from lengths alone."""
    nilp = model.nilpotency_at(n)
    if nilp == 1:
        raise NilpotencyOneError("half-order truncation of a field is the zero ring")
    top = model.length(min(n, nilp))
    half = model.length(nilp // 2)
    ratio = Fraction(top, half)
    return Delta0Value(top, half, ratio, log2_decimal(ratio))


def eps0_at_order(model: LengthModel, n: int) -> Fraction:
    nilp = model.nilpotency_at(n)
    root = model.length(isqrt(nilp))
    return Fraction(root * root, model.length(min(n, nilp)))


# ---------------------------------------------------------------------------
# rho: exact sup-norm defect of jet lengths against n^d


def _root_bound(coeffs: Sequence[Fraction]) -> int:
    """Integer B with all real roots of the polynomial in [-B, B] (Cauchy)."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return 0
    lead = abs(cs[-1])
    return ceil(1 + max(abs(c) / lead for c in cs[:-1]))


def _poly_shift_one(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """p(n + 1) from p(n)."""
    out: list[Fraction] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        binom_row = [Fraction(comb(k, i)) for i in range(k + 1)]
        out = poly_add(out, poly_scale(binom_row, c))
    return out


@dataclass(frozen=True)
class RhoResult:
    """sup_n of the defect |d! * length(n) / (e * n^(d-1)) - n|.

    When the sup is attained at a finite order, `attained` is true and
    `argmax_n` records the first such order; otherwise the value is the
    (one-sided) limit `tail_limit` in absolute value.  `scan_bound` is the
    order up to which the defect was evaluated exactly, chosen past every root
    of the defect and of its forward difference so the tail is certified
    monotone of constant sign.
    """

    value: Fraction
    attained: bool
    argmax_n: Optional[int]
    tail_limit: Fraction
    scan_bound: int


def rho(p: Presentation, capacity: int = DEFAULT_CAPACITY) -> RhoResult:
    model = length_model(p, capacity)
    d, e = model.dim, model.mult
    if d == 0:
        raise DimensionZeroError(
            "the defect normalizes by n^(dim-1); the quotient is Artinian")

    # f(n) = d! * length(n) / (e * n^(d-1)) - n; on the polynomial range this
    # is N(n) / (e * n^(d-1)) with N of degree <= d - 1.
    dfac = factorial(d)
    numer = poly_scale(model.cumulative, Fraction(dfac))
    monic = [Fraction(0)] * d + [Fraction(e)]
    numer = poly_add(numer, poly_scale(monic, Fraction(-1)))
    if len(numer) > d:
        raise InternalInconsistencyError("defect numerator has full degree")
    tail_limit = (numer[d - 1] if len(numer) == d else Fraction(0)) / e

    # difference numerator: N(n+1) * n^(d-1) - N(n) * (n+1)^(d-1)
    n_pow = [Fraction(0)] * (d - 1) + [Fraction(1)]
    diff = poly_add(poly_mul(_poly_shift_one(numer), n_pow),
                    poly_scale(poly_mul(numer, _poly_shift_one(n_pow)), Fraction(-1)))
    scan_bound = max(model.poly_from + d + 2, _root_bound(numer),
                     _root_bound(diff), 12)

    best = Fraction(0)
    argmax: Optional[int] = None
    for n in range(1, scan_bound + 1):
        f = Fraction(dfac * model.length(n), e * n ** (d - 1)) - n
        if abs(f) > best or argmax is None:
            best, argmax = abs(f), n
    if best >= abs(tail_limit):
        return RhoResult(best, True, argmax, tail_limit, scan_bound)
    return RhoResult(abs(tail_limit), False, None, tail_limit, scan_bound)


def defect_at(model: LengthModel, n: int) -> Fraction:
    """The signed defect f(n); rho is the sup of its absolute value."""
    d, e = model.dim, model.mult
    if d == 0:
        raise DimensionZeroError("defect undefined for an Artinian quotient")
    return Fraction(factorial(d) * model.length(n), e * n ** (d - 1)) - n


# ---------------------------------------------------------------------------
# quasi-dimension via the rounding certificate


def quasi_dimension(p: Presentation, capacity: int = DEFAULT_CAPACITY
                    ) -> tuple[int, dict]:
    """Round delta0 of a single jet of even order n >= 10*rho to the nearest
    integer (half-integers round up); certified to equal the dimension."""
    r = rho(p, capacity)
    ten_rho = 10 * r.value
    n = max(2, ceil(ten_rho))
    if n % 2:
        n += 1
    model = length_model(p, capacity)
    value = delta0_at_order(model, n)
    rounded = round_log2(value.ratio)
    if rounded != model.dim:
        raise InternalInconsistencyError(
            f"rounded delta0 {rounded} at order {n} disagrees with dimension {model.dim}")
    certificate = {"n_used": n, "rho_value": r.value,
                   "satisfied": Fraction(n) >= ten_rho}
    return rounded, certificate


# ---------------------------------------------------------------------------
# convergence traces


@dataclass(frozen=True)
class SlopeTrace:
    """Values of one slope on jets at increasing orders.

    For delta0 the values are Delta0Value entries (length pair, exact ratio,
    decimal log2); for eps0 exact rationals; for hilbert the per-jet Hilbert
    function prefixes together with the largest order up to which consecutive
    prefixes agree."""

    slope: str
    orders: list[int]
    values: list
    limit_claim: Optional[tuple]
    agreement_order: Optional[int] = None


def slope_trace(p: Presentation, slope: str, orders: Sequence[int],
                capacity: int = DEFAULT_CAPACITY) -> SlopeTrace:
    orders = list(orders)
    if not orders or any(b <= a for a, b in zip(orders, orders[1:])) or orders[0] < 1:
        raise ValueError("orders must be nonempty, positive, and increasing")
    model = length_model(p, capacity)
    claim: Optional[tuple] = None
    agreement: Optional[int] = None
    values: list = []
    if slope == "delta0":
        values = [delta0_at_order(model, n) for n in orders]
        if model.dim >= 1:
            claim = (Fraction(model.dim), "dimension")
    elif slope == "eps0":
        values = [eps0_at_order(model, n) for n in orders]
        if model.dim >= 1:
            claim = (Fraction(model.mult, factorial(model.dim)),
                     "multiplicity over dim factorial")
    elif slope == "hilbert":
        values = [model.hf_prefix(n) for n in orders]
        agreement = min(len(v) for v in values)
        for a, b in zip(values, values[1:]):
            t = 0
            while t < min(len(a), len(b)) and a[t] == b[t]:
                t += 1
            agreement = min(agreement, t)
    else:
        raise ValueError(f"unknown slope {slope!r}")
    return SlopeTrace(slope, orders, values, claim, agreement)
