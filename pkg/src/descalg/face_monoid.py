"""Set compositions of [n] ("faces"), their monoid and the face algebra kF.

A face is stored as a tuple of block bit masks (bit ``i - 1`` is the element
``i``). The canonical order on faces -- by number of blocks, then
lexicographically on the tuple of block masks -- is part of the public
contract: right multiplication by ``w0~ * B~_alpha`` is lower triangular in
this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from . import combinatorics as cb
from .algebra import AlgebraElement, MonoidBasis
from .combinatorics import Composition, Permutation
from .fields import QQ, Field

# Beyond this the face algebra has 47293+ basis vectors.
MAX_FACE_ALGEBRA_N = 6


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


@dataclass(frozen=True, slots=True)
class Face:
    """An ordered set partition of [n], blocks given as bit masks."""

    blocks: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> Face:
        """Build a face from explicit blocks, validating that they partition [n]."""
        masks = []
        seen = 0
        for block in blocks:
            block = list(block)
            if not block:
                raise ValueError("faces have no empty blocks")
            for e in block:
                if e < 1:
                    raise ValueError(f"element {e} is not a positive integer")
                if seen >> (e - 1) & 1:
                    raise ValueError(f"element {e} appears in more than one block")
                seen |= 1 << (e - 1)
            masks.append(_mask(block))
        size = seen.bit_length() if n is None else n
        missing = [e for e in range(1, size + 1) if not seen >> (e - 1) & 1]
        if missing:
            raise ValueError(f"element {missing[0]} is missing from the blocks")
        if seen >> size:
            raise ValueError(f"element {seen.bit_length()} exceeds n={size}")
        return cls(tuple(masks))

    @property
    def n(self) -> int:
        union = 0
        for b in self.blocks:
            union |= b
        return union.bit_length()

    def __len__(self) -> int:
        return len(self.blocks)

    def block_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(b)) for b in self.blocks)

    def __mul__(self, other: Face) -> Face:
        return face_product(self, other)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, _bits(b))) for b in self.blocks)

    def __repr__(self) -> str:
        return f"Face({self})"


def parse_face(text: str, n: int | None = None) -> Face:
    """Parse ``"1,2|3"`` into the face (12, 3)."""
    text = text.strip()
    if not text:
        return Face.from_blocks([], n)
    blocks = []
    for part in text.split("|"):
        try:
            blocks.append([int(t) for t in part.split(",") if t.strip()])
        except ValueError:
            raise ValueError(f"cannot parse block {part!r}") from None
    return Face.from_blocks(blocks, n)


def face_type(F: Face) -> Composition:
    return tuple(bin(b).count("1") for b in F.blocks)


def face_product(F: Face, G: Face) -> Face:
    """Pairwise intersections F_i & G_j in lexicographic (i, j) order, empties dropped."""
    return Face(tuple(x for f in F.blocks for g in G.blocks if (x := f & g)))


def contains(F: Face, G: Face) -> bool:
    """True iff every block of ``F`` lies inside some block of ``G``."""
    return all(any(f & ~g == 0 for g in G.blocks) for f in F.blocks)


def containment_bijection(F: Face, G: Face) -> Face:
    """Encode ``G`` as a set composition of ``[len(F)]`` naming which blocks of F merge where."""
    if not contains(F, G):
        raise ValueError(f"{F} is not contained in {G}")
    return Face(tuple(
        _mask(j + 1 for j, f in enumerate(F.blocks) if f & ~g == 0) for g in G.blocks
    ))


def act(w: Permutation, F: Face) -> Face:
    """Apply ``w`` to every entry of every block."""
    if len(w) != F.n:
        raise ValueError("permutation and face have different n")
    return Face(tuple(_mask(w[e - 1] for e in _bits(b)) for b in F.blocks))


def face_of_permutation(w: Permutation) -> Face:
    """The all-singleton face ({w(1)}, ..., {w(n)})."""
    return Face(tuple(1 << (x - 1) for x in w))


def interval_face(alpha: Composition) -> Face:
    """The face of type ``alpha`` whose blocks are consecutive intervals, left to right."""
    blocks, start = [], 0
    for a in alpha:
        blocks.append(((1 << a) - 1) << start)
        start += a
    return Face(tuple(blocks))


def omega_bijection(alpha: Composition, w: Permutation) -> Face:
    """Map ``w`` (increasing on each interval block of alpha) to ``(w(I_1), ..., w(I_k))``."""
    alpha = cb.check_composition(alpha, len(w))
    if not cb.descent_set(w).issubset(cb.gaps_inv(alpha)):
        raise ValueError(f"descent set of {w} is not inside gaps^-1({alpha})")
    return act(w, interval_face(alpha))


def _submasks_ascending(mask: int) -> list[int]:
    subs = []
    s = mask
    while s:
        subs.append(s)
        s = (s - 1) & mask
    subs.reverse()
    return subs


def _faces_of_length(remaining: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (remaining,)
        return
    need = k - 1  # remaining blocks need at least this many elements
    for s in _submasks_ascending(remaining):
        rest = remaining & ~s
        if bin(rest).count("1") >= need:
            for tail in _faces_of_length(rest, k - 1):
                yield (s, *tail)


def enumerate_faces(n: int) -> Iterator[Face]:
    """All set compositions of [n], by length and then lexicographically on block masks."""
    cb.check_n(n)
    if n == 0:
        yield Face(())
        return
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for blocks in _faces_of_length(full, k):
            yield Face(blocks)


def enumerate_faces_of_type(alpha: Composition) -> Iterator[Face]:
    """Faces of type ``alpha`` (lexicographic order on block masks)."""
    alpha = cb.check_composition(alpha)

    def rec(remaining: int, parts: tuple[int, ...]):
        if not parts:
            yield ()
            return
        for s in _submasks_ascending(remaining):
            if bin(s).count("1") == parts[0]:
                for tail in rec(remaining & ~s, parts[1:]):
                    yield (s, *tail)

    n = sum(alpha)
    for blocks in rec((1 << n) - 1, alpha):
        yield Face(blocks)


@lru_cache(maxsize=64)
def faces_of_type(alpha: Composition) -> tuple[Face, ...]:
    return tuple(enumerate_faces_of_type(alpha))


def ordered_bell(n: int) -> int:
    """Number of set compositions of [n], via the recurrence a(n) = sum C(n,k) a(n-k)."""
    from math import comb

    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


# -- the face algebra --------------------------------------------------------


class FaceBasis(MonoidBasis):
    """CF(n) in canonical order; unit is the one-block face ([n])."""

    def __init__(self, n: int):
        cb.check_n(n)
        if n > MAX_FACE_ALGEBRA_N:
            raise ValueError(f"face algebra for n={n} is too large (max n={MAX_FACE_ALGEBRA_N})")
        self.n = n
        super().__init__(enumerate_faces(n))
        self.lengths = np.array([len(F) for F in self.elements], dtype=np.int64)

    @property
    def unit(self) -> Face:
        return Face(((1 << self.n) - 1,)) if self.n else Face(())

    def _product(self, a, b):
        return face_product(a, b)

    def __repr__(self) -> str:
        return f"FaceBasis({self.n})"


@lru_cache(maxsize=None)
def face_basis(n: int) -> FaceBasis:
    return FaceBasis(n)


class FaceAlgebraElement(AlgebraElement):
    """Element of the face algebra kF; keys are :class:`Face` objects."""

    __slots__ = ()

    @property
    def n(self) -> int:
        return self.basis.n


def face_element(n: int, mapping, field: Field = QQ) -> FaceAlgebraElement:
    return FaceAlgebraElement.from_dict(face_basis(n), mapping, field)


def btilde(alpha: Composition, field: Field = QQ) -> FaceAlgebraElement:
    """Sum of all faces of type ``alpha`` (an S_n orbit sum)."""
    alpha = cb.check_composition(alpha)
    return FaceAlgebraElement.sum_of(face_basis(sum(alpha)), faces_of_type(alpha), field)


def w0tilde(n: int, field: Field = QQ) -> FaceAlgebraElement:
    """``sum_F (-1)^(n - len F) F``."""
    basis = face_basis(n)
    signs = np.where((n - basis.lengths) % 2 == 0, 1, -1)
    return FaceAlgebraElement(basis, field, field.array(signs.tolist()))


def act_on_element(w: Permutation, y: FaceAlgebraElement) -> FaceAlgebraElement:
    """Linear extension of :func:`act` to kF."""
    basis = y.basis
    out = y.field.zeros(len(basis))
    for i in y.nonzero_indices():
        out[basis.index[act(w, basis.elements[i])]] += y.coeffs[i]
    return FaceAlgebraElement(basis, y.field, out)


def group_element_act(a, y: FaceAlgebraElement) -> FaceAlgebraElement:
    """Action of a group-algebra element ``a`` on kF, extending :func:`act` linearly."""
    out = FaceAlgebraElement.zero(y.basis, y.field)
    for w, c in a.items():
        out = out + act_on_element(w, y).scale(c)
    return out
