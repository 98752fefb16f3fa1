"""Isomorphism testing for Artinian algebras over a common coefficient field.

Verdicts are tri-state.  NOT_ISO is only ever produced by a separating
invariant whose value is stable under coefficient-field extension (lengths,
Hilbert function, nilpotency, socle dimension, embedding dimension,
multiplication-rank profile), so a NOT_ISO verdict rules out isomorphism
after any base change as well.  ISO comes with an explicit generator-image
witness that is re-verified mechanically.  Exhausting the search space over
the allowed extensions without finding a witness yields UNKNOWN — the honest
outcome, since bigger coefficient fields might still glue the two algebras.

Over finite fields the search enumerates candidate images of the source
variables in a deterministic integer-encoding order: linear images first
(complete for graded algebras, where an isomorphism can always be chosen
degree-preserving), then images with higher-order terms for local inputs.
Over the rationals only variable permutations combined with a fixed set of
scalings are tried.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import lcm
from typing import Optional, Sequence

from .artin import ArtinAlgebra, hf_by_degree_count, nilpotency_index, socle
from .errors import FieldError, FieldMismatchError, InternalInconsistencyError
from .exactcore import (
    ExactMatrix,
    ExtensionField,
    Field,
    PrimeField,
    RationalField,
)
from .poly import TruncatedQuotient, mono_deg
from .presentation import poly_to_str

QQ_SCALINGS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
               Fraction(1, 2), Fraction(-1, 2), Fraction(3), Fraction(-3),
               Fraction(1, 3), Fraction(-1, 3))


# ---------------------------------------------------------------------------
# invariant signature


@dataclass(frozen=True)
class InvariantSignature:
    length: int
    hf: tuple[int, ...]
    nilpotency: int
    socle_dim: int
    embdim: int
    mult_rank_profile: tuple[int, ...]
    betti_prefix: Optional[tuple[int, ...]] = None


def _mult_rank_profile(A: ArtinAlgebra) -> tuple[int, ...]:
    """For each degree d >= 1, the rank of the multiplication pairing
    (m/m^2) x (m^d/m^{d+1}) -> m^{d+1}/m^{d+2} in the associated graded."""
    if A.is_zero_ring():
        return ()
    degs = A.degrees()
    top = max(degs)
    by_deg: dict[int, list[int]] = {}
    for i, d in enumerate(degs):
        by_deg.setdefault(d, []).append(i)
    profile = []
    f = A.field
    for d in range(1, top):
        lin = by_deg.get(1, [])
        mid = by_deg.get(d, [])
        out = by_deg.get(d + 1, [])
        if not lin or not mid or not out:
            profile.append(0)
            continue
        pos = {i: j for j, i in enumerate(out)}
        rows = []
        for i in lin:
            for j in mid:
                prod_vec = A.mult_basis(i, j)
                row = [f.zero()] * len(out)
                nonzero = False
                for k, c in enumerate(prod_vec):
                    if not f.is_zero(c) and k in pos:
                        row[pos[k]] = c
                        nonzero = True
                if nonzero:
                    rows.append(row)
        profile.append(ExactMatrix(f, rows, len(out)).rank() if rows else 0)
    return tuple(profile)


def invariant_signature(A: ArtinAlgebra) -> InvariantSignature:
    if A.is_zero_ring():
        return InvariantSignature(0, (), 0, 0, 0, ())
    hf = hf_by_degree_count(A)
    soc_dim, _ = socle(A)
    return InvariantSignature(
        length=A.dim,
        hf=tuple(hf),
        nilpotency=nilpotency_index(A),
        socle_dim=soc_dim,
        embdim=hf[1] if len(hf) > 1 else 0,
        mult_rank_profile=_mult_rank_profile(A),
    )


def find_separator(A: ArtinAlgebra, B: ArtinAlgebra) -> Optional[tuple[str, object, object]]:
    """First differing invariant between the two signatures, or None."""
    sa, sb = invariant_signature(A), invariant_signature(B)
    checks = [
        ("length", sa.length, sb.length),
        ("hilbert_function", sa.hf, sb.hf),
        ("nilpotency_index", sa.nilpotency, sb.nilpotency),
        ("socle_dimension", sa.socle_dim, sb.socle_dim),
        ("embedding_dimension", sa.embdim, sb.embdim),
        ("multiplication_rank_profile", sa.mult_rank_profile, sb.mult_rank_profile),
    ]
    for name, va, vb in checks:
        if va != vb:
            return (name, va, vb)
    return None


# ---------------------------------------------------------------------------
# base change


def embed_scalar(src: Field, dst: Field, root, c):
    """Image of c under the embedding sending the source generator to root."""
    if isinstance(src, PrimeField):
        return dst.from_int(c)
    out = dst.zero()
    for coeff in reversed(c):
        out = dst.add(dst.mul(out, root), dst.from_int(coeff))
    return out


def embedding_root(src: Field, dst: Field):
    """First root (in element-encoding order) of the source minimal polynomial
    inside the destination field; defines the canonical embedding."""
    if isinstance(src, PrimeField):
        return dst.one()
    mp = src.desc.minpoly
    for cand in dst.elements():
        acc = dst.zero()
        for coeff in reversed(mp):
            acc = dst.add(dst.mul(acc, cand), dst.from_int(coeff))
        if dst.is_zero(acc):
            return cand
    raise FieldError("minimal polynomial has no root in the target field")


def base_change(A: ArtinAlgebra, m_prime: int) -> ArtinAlgebra:
    """Extend coefficients from F_{p^m} to F_{p^{m'}} (m | m'); the basis,
    normal forms, and every rank-type invariant are unchanged."""
    f = A.field
    if isinstance(f, RationalField):
        raise FieldError("base change along extensions of Q is out of scope")
    m = 1 if isinstance(f, PrimeField) else f.m
    if m_prime % m != 0:
        raise FieldError(f"extension degree {m_prime} is not a multiple of {m}")
    if m_prime == m:
        return A
    dst = ExtensionField(f.p, m_prime) if m_prime > 1 else PrimeField(f.p)
    root = embedding_root(f, dst)

    def emb(c):
        return embed_scalar(f, dst, root, c)

    nf = {mono: [emb(c) for c in vec] for mono, vec in A.nf.items()}
    tq = TruncatedQuotient(field=dst, nvars=A.nvars, cap=A.cap,
                           basis=list(A.basis), nf=nf,
                           pivots=sorted(A.nf.keys(), key=lambda mm: (mono_deg(mm), mm)))
    relations = [g.map_coefficients(dst, emb) for g in A.relations]
    out = ArtinAlgebra(dst, A.nvars, tq, relations=relations, origin=A.origin)
    if A.tuple_images is not None:
        out.tuple_images = [[emb(c) for c in vec] for vec in A.tuple_images]
    return out


# ---------------------------------------------------------------------------
# witnesses


@dataclass
class Witness:
    """Generator-image description of an algebra map: for each source
    variable, the coordinate vector of its image in the target."""

    images: list[list]
    ext_multiple: int = 1     # base-change factor applied to both sides


@dataclass
class IsoVerdict:
    status: str                                            # ISO | NOT_ISO | UNKNOWN
    witness: Optional[Witness] = None
    separator: Optional[tuple[str, object, object]] = None
    search_bounds: Optional[dict] = None


def linear_map_matrix(A: ArtinAlgebra, B: ArtinAlgebra, images: Sequence[Sequence]) -> list[list]:
    """Row-major matrix (B.dim x A.dim) of the linear map sending the class of
    each basis monomial x^a of A to the corresponding product of images."""
    f = B.field
    cols: list[list] = []
    cache: dict[tuple[int, int], list] = {}

    def img_pow(k: int, e: int) -> list:
        got = cache.get((k, e))
        if got is None:
            got = B.power(list(images[k]), e)
            cache[(k, e)] = got
        return got

    for mono in A.basis:
        vec = B.one_vec()
        for k, e in enumerate(mono):
            if e:
                vec = B.multiply(vec, img_pow(k, e))
        cols.append(vec)
    return [[cols[j][i] for j in range(A.dim)] for i in range(B.dim)]


def apply_linear_map(A: ArtinAlgebra, B: ArtinAlgebra, images: Sequence[Sequence],
                     v: Sequence) -> list:
    """Image of the element v of A under the map defined by the images."""
    f = B.field
    out = f.vec_zero(B.dim)
    cache: dict[tuple[int, int], list] = {}

    def img_pow(k: int, e: int) -> list:
        got = cache.get((k, e))
        if got is None:
            got = B.power(list(images[k]), e)
            cache[(k, e)] = got
        return got

    for j, c in enumerate(v):
        if A.field.is_zero(c):
            continue
        vec = B.one_vec()
        for k, e in enumerate(A.basis[j]):
            if e:
                vec = B.multiply(vec, img_pow(k, e))
        for i, w in enumerate(vec):
            if not f.is_zero(w):
                out[i] = f.add(out[i], f.mul(c, w))
    return out


def verify_witness(A: ArtinAlgebra, B: ArtinAlgebra, w: Witness) -> bool:
    """Mechanical check that w defines an isomorphism A -> B (after the
    recorded base change): images lie in the maximal ideal, relations die,
    the truncation ideal dies, and the induced linear map is bijective."""
    if w.ext_multiple != 1:
        f = A.field
        if isinstance(f, RationalField):
            return False
        m = 1 if isinstance(f, PrimeField) else f.m
        A = base_change(A, m * w.ext_multiple)
        B = base_change(B, m * w.ext_multiple)
    if A.dim != B.dim:
        return False
    if A.dim == 0:
        return True
    if len(w.images) != A.nvars:
        return False
    one_idx = B.basis.index((0,) * B.nvars)
    for img in w.images:
        if len(img) != B.dim or not B.field.is_zero(img[one_idx]):
            return False
    if nilpotency_index(B) > A.cap:
        return False
    for rel in A.relations:
        if not B.field.vec_is_zero(B.evaluate(rel, w.images)):
            return False
    L = linear_map_matrix(A, B, w.images)
    return ExactMatrix(B.field, L, A.dim).rank() == A.dim


def invert_witness(A: ArtinAlgebra, B: ArtinAlgebra, w: Witness) -> Witness:
    """Witness for B -> A inverse to w (both sides base-changed as recorded)."""
    A0, B0 = A, B
    if w.ext_multiple != 1:
        f = A.field
        m = 1 if isinstance(f, PrimeField) else f.m
        A0 = base_change(A, m * w.ext_multiple)
        B0 = base_change(B, m * w.ext_multiple)
    L = linear_map_matrix(A0, B0, w.images)     # B0.dim x A0.dim, square
    f = B0.field
    n = A0.dim
    # solve L * X = I by rref of [L | I]
    aug = [list(L[i]) + [f.one() if i == j else f.zero() for j in range(n)]
           for i in range(n)]
    red = ExactMatrix(f, aug, 2 * n).rref()
    inv_rows = [row[n:] for row in red.rows]
    images = []
    for k in range(B0.nvars):
        target = B0.var_image(k)              # class of y_k in B0
        img = [f.sum(f.mul(inv_rows[i][j], target[j]) for j in range(n))
               for i in range(n)]
        images.append(img)
    return Witness(images=images, ext_multiple=w.ext_multiple)


def _lift_images(w: Witness, m0: int, mult: int, dstf: Field) -> list[list]:
    """Lift witness coordinates from F_{p^{m0*k}} into F_{p^{m0*mult}}."""
    if w.ext_multiple == mult:
        return w.images
    deg = m0 * w.ext_multiple
    src: Field = PrimeField(dstf.p) if deg == 1 else ExtensionField(dstf.p, deg)
    root = embedding_root(src, dstf)
    return [[embed_scalar(src, dstf, root, c) for c in img] for img in w.images]


def compose_witnesses(A: ArtinAlgebra, B: ArtinAlgebra, C: ArtinAlgebra,
                      w1: Witness, w2: Witness) -> Witness:
    """Witness for A -> C obtained by following w1: A -> B with w2: B -> C."""
    mult = lcm(w1.ext_multiple, w2.ext_multiple)
    f = A.field
    if mult != 1:
        if isinstance(f, RationalField):
            raise FieldError("rational witnesses never carry an extension")
        m0 = 1 if isinstance(f, PrimeField) else f.m
        Be = base_change(B, m0 * mult)
        Ce = base_change(C, m0 * mult)
        w1i = _lift_images(w1, m0, mult, Be.field)
        w2i = _lift_images(w2, m0, mult, Ce.field)
        images = [apply_linear_map(Be, Ce, w2i, img) for img in w1i]
    else:
        images = [apply_linear_map(B, C, w2.images, img) for img in w1.images]
    return Witness(images=images, ext_multiple=mult)


def project_witness(w: Witness, B_high: ArtinAlgebra, B_low: ArtinAlgebra) -> Witness:
    """Push a witness at a higher order down to a lower order of the same
    presentation: compose with the quotient map B_high -> B_low, which sends
    each basis monomial of B_high to its normal form in B_low.  (For plain
    jets this is coordinate truncation by degree; for deformation pairs the
    ideals genuinely grow, so reduction is needed.)"""
    if w.ext_multiple != 1:
        f = B_high.field
        if isinstance(f, RationalField):
            raise FieldError("rational witnesses never carry an extension")
        m = 1 if isinstance(f, PrimeField) else f.m
        B_high = base_change(B_high, m * w.ext_multiple)
        B_low = base_change(B_low, m * w.ext_multiple)
    if not set(B_low.basis) <= set(B_high.basis):
        raise InternalInconsistencyError("jet bases are not nested")
    f = B_low.field
    images = []
    for img in w.images:
        vec = f.vec_zero(B_low.dim)
        for j, c in enumerate(img):
            if f.is_zero(c):
                continue
            red = B_low.reduce_monomial(B_high.basis[j])
            for i, r in enumerate(red):
                if not f.is_zero(r):
                    vec[i] = f.add(vec[i], f.mul(c, r))
        images.append(vec)
    return Witness(images=images, ext_multiple=w.ext_multiple)


# ---------------------------------------------------------------------------
# search


@dataclass
class SearchBudget:
    ext_degree_max: int = 1
    effort: int = 1_000_000


def _algebra_key(A: ArtinAlgebra) -> tuple:
    nf_items = tuple(sorted(
        (mono, tuple(A.field.to_str(c) for c in vec)) for mono, vec in A.nf.items()))
    rels = tuple(poly_to_str(g, tuple(f"v{i}" for i in range(A.nvars)))
                 for g in A.relations)
    return (A.nvars, A.cap, tuple(A.basis), nf_items, rels)


def _is_graded_input(A: ArtinAlgebra) -> bool:
    if A.origin is not None and A.origin.presentation is not None:
        if A.origin.kind != "jet":
            return False
        return A.origin.presentation.mode == "graded"
    return all(g.is_homogeneous() for g in A.relations)


class _EffortExceeded(Exception):
    pass


class _Searcher:
    """Deterministic witness search from A to B over one coefficient field."""

    def __init__(self, A: ArtinAlgebra, B: ArtinAlgebra, effort_left: int,
                 tuple_constraint: bool):
        self.A = A
        self.B = B
        self.field = B.field
        self.effort_left = effort_left
        self.tried = 0
        self.tuple_constraint = tuple_constraint
        self.embdim = sum(1 for d in B.degrees() if d == 1)
        self.lin_idx = [i for i, d in enumerate(B.degrees()) if d == 1]
        self.max_idx = [i for i, d in enumerate(B.degrees()) if d > 0]

    def _charge(self):
        if self.effort_left <= 0:
            raise _EffortExceeded
        self.effort_left -= 1
        self.tried += 1

    def _check(self, images: list[list]) -> bool:
        A, B, f = self.A, self.B, self.field
        # cheap surjectivity filter: degree-1 coordinates must span
        lin_rows = [[img[i] for i in self.lin_idx] for img in images]
        if ExactMatrix(f, lin_rows, len(self.lin_idx)).rank() != self.embdim:
            return False
        for rel in A.relations:
            if not f.vec_is_zero(B.evaluate(rel, images)):
                return False
        if self.tuple_constraint:
            for va, vb in zip(A.tuple_images, B.tuple_images):
                if not f.vec_is_zero(f.vec_sub(apply_linear_map(A, B, images, va), vb)):
                    return False
        L = linear_map_matrix(A, B, images)
        return ExactMatrix(f, L, A.dim).rank() == A.dim

    def _try(self, images: list[list]) -> Optional[Witness]:
        self._charge()
        if self._check(images):
            return Witness(images=[list(v) for v in images])
        return None

    def identity_candidate(self) -> Optional[list[list]]:
        if self.A.nvars != self.B.nvars:
            return None
        return [self.B.var_image(k) for k in range(self.B.nvars)]

    def permutation_candidates(self):
        """Variable permutations (finite and rational fields; cheap first pass)."""
        r = self.A.nvars
        if r != self.B.nvars or r > 6:
            return
        var_vecs = [self.B.var_image(k) for k in range(r)]
        for perm in permutations(range(r)):
            yield [var_vecs[perm[k]] for k in range(r)]

    def rational_candidates(self):
        """Permutations combined with per-variable scalings from a fixed set."""
        r = self.A.nvars
        if r != self.B.nvars or r > 6:
            return
        f = self.field
        var_vecs = [self.B.var_image(k) for k in range(r)]
        for perm in permutations(range(r)):
            for scals in product(QQ_SCALINGS, repeat=r):
                yield [f.vec_scale(scals[k], var_vecs[perm[k]]) for k in range(r)]

    def _vec_from_digits(self, digits: list, idx: list[int]) -> list:
        v = self.field.vec_zero(self.B.dim)
        for d, i in zip(digits, idx):
            v[i] = d
        return v

    def coordinate_candidates(self, coords_idx: list[int]):
        """All image tuples with coordinates over the given basis positions,
        in integer-encoding order (first coordinate least significant)."""
        elements = list(self.field.elements())
        q = len(elements)
        r = self.A.nvars
        width = len(coords_idx)
        total_digits = r * width
        if total_digits == 0:
            return
        code = 0
        space = q ** total_digits
        while code < space:
            digits = []
            v = code
            for _ in range(total_digits):
                digits.append(elements[v % q])
                v //= q
            images = [self._vec_from_digits(digits[k * width:(k + 1) * width], coords_idx)
                      for k in range(r)]
            yield images
            code += 1

    def space_size(self, coords_idx: list[int]) -> int:
        q = self.field.order
        return q ** (self.A.nvars * len(coords_idx))

    def run(self, graded: bool) -> tuple[Optional[Witness], bool]:
        """(witness or None, whole space exhausted?)"""
        ident = self.identity_candidate()
        if ident is not None:
            w = self._try(ident)
            if w is not None:
                return w, False
        for images in self.permutation_candidates():
            w = self._try(images)
            if w is not None:
                return w, False
        if isinstance(self.field, RationalField):
            for images in self.rational_candidates():
                w = self._try(images)
                if w is not None:
                    return w, False
            return None, False  # rational search is never exhaustive
        coords = self.lin_idx if graded else self.max_idx
        seen_all = self.space_size(coords) <= self.effort_left
        for images in self.coordinate_candidates(coords):
            w = self._try(images)
            if w is not None:
                return w, False
        return None, seen_all


def decide_isomorphism(A: ArtinAlgebra, B: ArtinAlgebra,
                       budget: Optional[SearchBudget] = None,
                       match_tuples: bool = False) -> IsoVerdict:
    """Tri-state isomorphism decision; see the module docstring.

    With match_tuples=True the search is constrained to maps carrying the
    recorded deformation-tuple images of A to those of B, the morphism
    condition for deformation pairs.
    """
    if budget is None:
        budget = SearchBudget()
    if A.field.desc != B.field.desc:
        raise FieldMismatchError(
            f"cannot compare algebras over {A.field.desc.label()} and {B.field.desc.label()}")
    sep = find_separator(A, B)
    if sep is not None:
        return IsoVerdict(status="NOT_ISO", separator=sep)
    if A.dim == 0:
        return IsoVerdict(status="ISO", witness=Witness(images=[]))
    if A.dim == 1:
        w = Witness(images=[B.field.vec_zero(1) for _ in range(A.nvars)])
        if verify_witness(A, B, w):
            return IsoVerdict(status="ISO", witness=w)
        raise InternalInconsistencyError("one-dimensional algebras failed to match")

    if match_tuples:
        ta = A.tuple_images or []
        tb = B.tuple_images or []
        if len(ta) != len(tb):
            return IsoVerdict(status="NOT_ISO",
                              separator=("tuple_length", len(ta), len(tb)))

    swapped = _algebra_key(B) < _algebra_key(A)
    first, second = (B, A) if swapped else (A, B)
    verdict = _decide_oriented(first, second, budget, match_tuples)
    if swapped and verdict.status == "ISO":
        inv = invert_witness(first, second, verdict.witness)
        if not verify_witness(A, B, inv):
            raise InternalInconsistencyError("witness inversion failed verification")
        verdict = IsoVerdict(status="ISO", witness=inv,
                             search_bounds=verdict.search_bounds)
    return verdict


def _decide_oriented(A: ArtinAlgebra, B: ArtinAlgebra, budget: SearchBudget,
                     match_tuples: bool) -> IsoVerdict:
    graded = _is_graded_input(A) and _is_graded_input(B) and not match_tuples
    f = A.field
    effort_left = budget.effort
    tried_total = 0

    if isinstance(f, RationalField):
        searcher = _Searcher(A, B, effort_left, match_tuples)
        try:
            w, _ = searcher.run(graded)
        except _EffortExceeded:
            w = None
        tried_total = searcher.tried
        if w is not None:
            if not verify_witness(A, B, w):
                raise InternalInconsistencyError("search produced an invalid witness")
            return IsoVerdict(status="ISO", witness=w)
        return IsoVerdict(status="UNKNOWN",
                          search_bounds={"ext_degree_tried": 1,
                                         "candidates_tried": tried_total,
                                         "space_exhausted": False})

    m0 = 1 if isinstance(f, PrimeField) else f.m
    exhausted_all = True
    ext_tried = 0
    for k in range(1, budget.ext_degree_max + 1):
        m_prime = m0 * k
        Ak = base_change(A, m_prime)
        Bk = base_change(B, m_prime)
        ext_tried = m_prime
        searcher = _Searcher(Ak, Bk, effort_left, match_tuples)
        try:
            w, seen_all = searcher.run(graded)
        except _EffortExceeded:
            w, seen_all = None, False
        tried_total += searcher.tried
        effort_left -= searcher.tried
        if w is not None:
            w = Witness(images=w.images, ext_multiple=k)
            if not verify_witness(A, B, w):
                raise InternalInconsistencyError("search produced an invalid witness")
            return IsoVerdict(status="ISO", witness=w,
                              search_bounds={"ext_degree_tried": m_prime,
                                             "candidates_tried": tried_total,
                                             "space_exhausted": False})
        if not seen_all:
            exhausted_all = False
        if effort_left <= 0:
            exhausted_all = False
            break
    return IsoVerdict(status="UNKNOWN",
                      search_bounds={"ext_degree_tried": ext_tried,
                                     "candidates_tried": tried_total,
                                     "space_exhausted": exhausted_all})
