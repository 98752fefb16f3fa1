"""Artinian algebra model: jets, lengths, Hilbert functions, socles.

An ArtinAlgebra is a finite-dimensional local algebra presented by a monomial
normal-form basis coming from a truncated quotient k[x]/(I + m^cap).  Because
the basis consists of monomials closed under divisors, multiplication is
monomial concatenation followed by a normal-form lookup; products of basis
pairs are memoized on first use instead of being tabulated up front, which
keeps large jets affordable.

Soundness note for local (non-graded) inputs: R/(I + m^n) is supported only
at the origin, so the globally computed truncated quotient already equals the
jet of the localization — no standard-basis machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .errors import CapacityError, NotPrimaryError, RangeError, TupleError, ZeroRingError
from .exactcore import ExactMatrix, Field
from .poly import (
    DEFAULT_CAPACITY,
    Poly,
    TruncatedQuotient,
    count_monomials_below,
    mono_deg,
    mono_mul,
    truncated_quotient,
)
from .presentation import Presentation


@dataclass
class AlgebraOrigin:
    """How an ArtinAlgebra was built: which presentation, which order."""

    presentation: Optional[Presentation]
    order: int
    kind: str = "jet"          # "jet" | "defpair"
    internal_cap: int = 0


class ArtinAlgebra:
    """Finite-dimensional local algebra with a monomial normal-form basis."""

    def __init__(self, field: Field, nvars: int, tq: TruncatedQuotient,
                 relations: Sequence[Poly], origin: Optional[AlgebraOrigin] = None,
                 tuple_images: Optional[list[list]] = None):
        self.field = field
        self.nvars = nvars
        self.cap = tq.cap
        self.basis = tq.basis
        self.nf = tq.nf
        self.relations = list(relations)
        self.origin = origin
        self.tuple_images = tuple_images
        self._index = {m: i for i, m in enumerate(self.basis)}
        self._degrees = [mono_deg(m) for m in self.basis]
        self._pair_cache: dict[tuple[int, int], list] = {}
        self._var_matrices: dict[int, list[list]] = {}

    # -- basic structure ---------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero_ring(self) -> bool:
        return self.dim == 0

    def degrees(self) -> list[int]:
        return list(self._degrees)

    @property
    def maxideal_basis(self) -> list[int]:
        return [i for i, d in enumerate(self._degrees) if d > 0]

    def one_vec(self) -> list:
        v = self.field.vec_zero(self.dim)
        if self.dim:
            v[self._index[(0,) * self.nvars]] = self.field.one()
        return v

    def unit_vec(self, i: int) -> list:
        v = self.field.vec_zero(self.dim)
        v[i] = self.field.one()
        return v

    def reduce_monomial(self, m) -> list:
        """Coordinates of the class of the monomial m."""
        if mono_deg(m) >= self.cap:
            return self.field.vec_zero(self.dim)
        if m in self._index:
            return self.unit_vec(self._index[m])
        return list(self.nf[m])

    def var_image(self, k: int) -> list:
        e = [0] * self.nvars
        e[k] = 1
        return self.reduce_monomial(tuple(e))

    # -- multiplication ----------------------------------------------------

    def mult_basis(self, i: int, j: int) -> list:
        """Coordinates of basis[i] * basis[j]."""
        key = (i, j) if i <= j else (j, i)
        got = self._pair_cache.get(key)
        if got is None:
            got = self.reduce_monomial(mono_mul(self.basis[i], self.basis[j]))
            self._pair_cache[key] = got
        return got

    def multiply(self, u: Sequence, v: Sequence) -> list:
        f = self.field
        out = f.vec_zero(self.dim)
        nz_u = [(i, c) for i, c in enumerate(u) if not f.is_zero(c)]
        nz_v = [(j, c) for j, c in enumerate(v) if not f.is_zero(c)]
        for i, ci in nz_u:
            for j, cj in nz_v:
                c = f.mul(ci, cj)
                for k, w in enumerate(self.mult_basis(i, j)):
                    if not f.is_zero(w):
                        out[k] = f.add(out[k], f.mul(c, w))
        return out

    def var_mult_matrix(self, k: int) -> list[list]:
        """Row-major matrix of multiplication by the class of variable k."""
        got = self._var_matrices.get(k)
        if got is None:
            f = self.field
            e = [0] * self.nvars
            e[k] = 1
            ek = tuple(e)
            cols = [self.reduce_monomial(mono_mul(ek, b)) for b in self.basis]
            got = [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]
            self._var_matrices[k] = got
        return got

    def mult_matrix(self, u: Sequence) -> list[list]:
        """Row-major matrix of multiplication by the element u."""
        cols = [self.multiply(u, self.unit_vec(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def power(self, u: Sequence, k: int) -> list:
        out = self.one_vec()
        for _ in range(k):
            out = self.multiply(out, u)
        return out

    def evaluate(self, g: Poly, images: Sequence[Sequence]) -> list:
        """Evaluate the polynomial g at algebra elements (one per variable)."""
        f = self.field
        out = f.vec_zero(self.dim)
        pow_cache: dict[tuple[int, int], list] = {}

        def var_pow(k: int, e: int) -> list:
            got = pow_cache.get((k, e))
            if got is None:
                got = self.power(list(images[k]), e)
                pow_cache[(k, e)] = got
            return got

        for mono, c in g.terms.items():
            term = self.one_vec()
            for k, e in enumerate(mono):
                if e:
                    term = self.multiply(term, var_pow(k, e))
            for i, w in enumerate(term):
                if not f.is_zero(w):
                    out[i] = f.add(out[i], f.mul(c, w))
        return out


# ---------------------------------------------------------------------------
# constructors


def jet(p: Presentation, n: int, capacity: int = DEFAULT_CAPACITY) -> ArtinAlgebra:
    """The n-th jet R/(I + m^n) of a presented algebra R = k[x]/I."""
    if n < 0:
        raise RangeError("jet order must be nonnegative")
    fld = p.base_field()
    tq = truncated_quotient(fld, p.nvars, p.gens, n, capacity=capacity)
    origin = AlgebraOrigin(presentation=p, order=n, kind="jet", internal_cap=n)
    return ArtinAlgebra(fld, p.nvars, tq, relations=p.gens, origin=origin)


def hilbert_function(A: ArtinAlgebra) -> tuple[int, list[int]]:
    """(length, hf) with hf[i] = dim m^i/m^{i+1}.

    The powers m^i are computed literally, as iterated products of the span of
    the maximal ideal by the variable classes (which generate it); each step
    measures the dimension by exact rank.
    """
    if A.is_zero_ring():
        return 0, []
    f = A.field
    var_vecs = [A.var_image(k) for k in range(A.nvars)]
    current = [A.unit_vec(i) for i in A.maxideal_basis]  # basis of m^1
    dims = [A.dim]
    while current:
        dims.append(len(current))
        nxt_rows = []
        for v in current:
            for xk in var_vecs:
                w = A.multiply(xk, v)
                if not f.vec_is_zero(w):
                    nxt_rows.append(w)
        if nxt_rows:
            red = ExactMatrix(f, nxt_rows, A.dim).rref()
            current = [list(r) for r in red.rows]
        else:
            current = []
    hf = [dims[i] - (dims[i + 1] if i + 1 < len(dims) else 0) for i in range(len(dims))]
    while hf and hf[-1] == 0:
        hf.pop()
    return A.dim, hf


def hf_by_degree_count(A: ArtinAlgebra) -> list[int]:
    """Hilbert function read off the graded basis-monomial counts.

    Agrees with hilbert_function (property-tested); this one is O(dim).
    """
    if A.is_zero_ring():
        return []
    top = max(A._degrees)
    hf = [0] * (top + 1)
    for d in A._degrees:
        hf[d] += 1
    return hf


def nilpotency_index(A: ArtinAlgebra) -> int:
    """Least n with m^n = 0; equals 1 + top basis-monomial degree."""
    if A.is_zero_ring():
        raise ZeroRingError("nilpotency index of the zero ring")
    return 1 + max(A._degrees)


def socle(A: ArtinAlgebra) -> tuple[int, list[list]]:
    """The annihilator of the maximal ideal: dimension and a basis."""
    if A.is_zero_ring():
        raise ZeroRingError("socle of the zero ring")
    stacked: list[list] = []
    for k in range(A.nvars):
        stacked.extend(A.var_mult_matrix(k))
    if not stacked:
        return A.dim, [A.unit_vec(i) for i in range(A.dim)]
    kern = ExactMatrix(A.field, stacked, A.dim).kernel_basis()
    return len(kern), kern


# ---------------------------------------------------------------------------
# deformation pairs


def _colength(fld: Field, nvars: int, gens: list[Poly], capacity: int) -> int:
    """Length of k[x]/J, certified by a degree with no surviving monomials.

    Works at doubling caps; a degree whose monomials are all in the initial
    ideal certifies stabilization (everything above is then divisible by a
    leading monomial).  If the dimension keeps growing until the capacity is
    reached, the ideal is not primary to the maximal ideal at this scale.
    """
    cap = 2
    while count_monomials_below(nvars, cap) <= capacity:
        tq = truncated_quotient(fld, nvars, gens, cap, capacity=capacity)
        present = {mono_deg(m) for m in tq.basis}
        missing = [d for d in range(cap) if d not in present]
        if missing:
            return tq.dim
        cap *= 2
    raise NotPrimaryError(
        "ideal plus tuple powers failed to stabilize within capacity; "
        "the tuple is not primary to the maximal ideal at this scale")


def defpair_jet(p: Presentation, n: int, capacity: int = DEFAULT_CAPACITY) -> ArtinAlgebra:
    """The n-th deformation R/(I + (t_1^n, ..., t_s^n)) of a pair (R, t)."""
    if p.tuple is None:
        raise TupleError("presentation has no deformation tuple")
    if n < 0:
        raise RangeError("deformation order must be nonnegative")
    fld = p.base_field()
    for t in p.tuple:
        if not t.is_zero() and not fld.is_zero(t.constant_term()):
            raise TupleError("deformation tuple entries must lie in the maximal ideal")
    s = len(p.tuple)
    if n == 0:
        tq = truncated_quotient(fld, p.nvars, p.gens, 0, capacity=capacity)
        origin = AlgebraOrigin(presentation=p, order=0, kind="defpair", internal_cap=0)
        return ArtinAlgebra(fld, p.nvars, tq, relations=p.gens, origin=origin,
                            tuple_images=[])
    colength = _colength(fld, p.nvars, p.gens + list(p.tuple), capacity)
    powered = [t.pow(n) for t in p.tuple]
    gens_n = p.gens + powered
    cap = colength * s * n + 1
    while True:
        if count_monomials_below(p.nvars, cap) > capacity:
            raise CapacityError(count_monomials_below(p.nvars, cap), capacity,
                                f"deformation order {n} needs internal cap {cap}")
        tq = truncated_quotient(fld, p.nvars, gens_n, cap, capacity=capacity)
        present = {mono_deg(m) for m in tq.basis}
        if any(d not in present for d in range(cap)):
            break
        cap *= 2  # defensive; the colength bound should already suffice
    origin = AlgebraOrigin(presentation=p, order=n, kind="defpair", internal_cap=cap)
    A = ArtinAlgebra(fld, p.nvars, tq, relations=gens_n, origin=origin)
    A.tuple_images = [A.evaluate(t, [A.var_image(k) for k in range(p.nvars)])
                      for t in p.tuple]
    return A
