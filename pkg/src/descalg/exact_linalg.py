"""Exact linear algebra over QQ and GF(p), polynomials, and Krylov minimal polynomials.

Rational matrices are cleared of denominators row by row and eliminated with
fraction-free (Bareiss) steps; prime-field matrices use plain vectorized
Gaussian elimination. Ranks of large rational matrices (the 541 x 541 face
operators) go to FLINT's ``fmpz_mat.rank`` unless ``method="bareiss"`` is
forced.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import AlgebraElement
from .fields import QQ, Field, PrimeField

try:
    import flint
except ImportError:  # pragma: no cover - flint is a declared dependency
    flint = None

# rows * cols * min(rows, cols) above which "auto" hands QQ ranks to FLINT.
BAREISS_WORK_LIMIT = 2_000_000


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    field: Field
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.ndim != 2:
            raise ValueError("ExactMatrix needs a 2-d array")
        object.__setattr__(self, "entries", self.field.reduce(np.array(self.entries, copy=True)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ) -> ExactMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows have different lengths")
        arr = field.zeros((len(rows), ncols))
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                arr[i, j] = field(v)
        return cls(field, arr)

    @classmethod
    def identity(cls, d: int, field: Field = QQ) -> ExactMatrix:
        arr = field.zeros((d, d))
        for i in range(d):
            arr[i, i] = 1
        return cls(field, arr)

    @classmethod
    def zero(cls, rows: int, cols: int, field: Field = QQ) -> ExactMatrix:
        return cls(field, field.zeros((rows, cols)))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __getitem__(self, ij):
        return self.entries[ij]

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self.field, self.entries - other.entries)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self.field, self.entries + other.entries)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        return ExactMatrix(self.field, self.entries.dot(other.entries))

    def shift(self, lam) -> ExactMatrix:
        """``M - lam * I``."""
        if self.rows != self.cols:
            raise ValueError("shift needs a square matrix")
        arr = self.entries.copy()
        lam = self.field(lam)
        for i in range(self.rows):
            arr[i, i] = arr[i, i] - lam
        return ExactMatrix(self.field, arr)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactMatrix) and other.field == self.field
                and self.entries.shape == other.entries.shape
                and bool(np.all(self.entries == other.entries)))


# -- elimination -----------------------------------------------------------------


def _integer_rows(arr: np.ndarray) -> np.ndarray:
    """Scale each row of a rational matrix by the lcm of its denominators."""
    out = np.empty(arr.shape, dtype=object)
    for i, row in enumerate(arr):
        den = 1
        for v in row:
            if type(v) is not int:
                den = math.lcm(den, Fraction(v).denominator)
        for j, v in enumerate(row):
            out[i, j] = int(v * den) if den != 1 or type(v) is not int else v
    return out


def bareiss_echelon(A: np.ndarray) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the transformed matrix and the list of ``(row, column)`` pivots.
    Every intermediate entry is a minor of ``A``, so the divisions are exact.
    """
    A = A.copy()
    rows, cols = A.shape
    pivots: list[tuple[int, int]] = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if A[i, c] != 0]
        if not nz:
            continue
        p = nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        if r + 1 < rows:
            below = A[r + 1:, c].copy()
            A[r + 1:, c + 1:] = (piv * A[r + 1:, c + 1:] - np.multiply.outer(below, A[r, c + 1:])) // prev
            A[r + 1:, c] = 0
        pivots.append((r, c))
        prev = piv
        r += 1
    return A, pivots


def modp_echelon(A: np.ndarray, p: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Reduced row echelon form over GF(p)."""
    A = np.mod(np.array(A, dtype=np.int64), p)
    rows, cols = A.shape
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        factors = A[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if len(hit):
            A[hit] = (A[hit] - np.multiply.outer(factors[hit], A[r]) % p) % p
        pivots.append((r, c))
        r += 1
    return A, pivots


def rank(M: ExactMatrix, method: str = "auto") -> int:
    """Exact rank. ``method`` is ``"auto"``, ``"bareiss"`` or ``"flint"`` (QQ only)."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if isinstance(M.field, PrimeField):
        return len(modp_echelon(M.entries, M.field.p)[1])
    ints = _integer_rows(M.entries)
    if method == "auto":
        work = M.rows * M.cols * min(M.rows, M.cols)
        method = "flint" if flint is not None and work > BAREISS_WORK_LIMIT else "bareiss"
    if method == "flint":
        return flint.fmpz_mat(ints.tolist()).rank()
    if method == "bareiss":
        return len(bareiss_echelon(ints)[1])
    raise ValueError(f"unknown rank method {method!r}")


def kernel_dim(M: ExactMatrix, method: str = "auto") -> int:
    return M.cols - rank(M, method)


def solve(M: ExactMatrix, b: Sequence) -> list | None:
    """Some ``x`` with ``M x = b``, or None when the system is inconsistent."""
    if len(b) != M.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {M.rows}")
    field = M.field
    aug = field.zeros((M.rows, M.cols + 1))
    aug[:, :M.cols] = M.entries
    aug[:, M.cols] = field.array(b) if M.rows else aug[:, M.cols]
    if isinstance(field, PrimeField):
        E, pivots = modp_echelon(aug, field.p)
        if any(c == M.cols for _, c in pivots):
            return None
        x = [0] * M.cols
        for r, c in pivots:
            x[c] = int(E[r, M.cols])
        return x
    E, pivots = bareiss_echelon(_integer_rows(aug))
    if any(c == M.cols for _, c in pivots):
        return None
    x: list = [0] * M.cols
    for r, c in reversed(pivots):
        acc = Fraction(E[r, M.cols])
        for j in range(c + 1, M.cols):
            if x[j] and E[r, j]:
                acc -= E[r, j] * x[j]
        x[c] = QQ(acc / E[r, c])
    return x


def eigen_multiplicity(M: ExactMatrix, lam, method: str = "auto") -> int:
    """Dimension of the ``lam``-eigenspace, ``kernel_dim(M - lam I)``."""
    return kernel_dim(M.shift(lam), method)


def right_mult_matrix(a: AlgebraElement) -> ExactMatrix:
    """Matrix of ``x -> x * a`` on the ambient basis; column j holds ``b_j * a``."""
    basis, field = a.basis, a.field
    d = len(basis)
    arr = field.zeros((d, d))
    cols = np.arange(d)
    for g in a.nonzero_indices():
        np.add.at(arr, (basis.right_column(int(g)), cols), a.coeffs[g])
    return ExactMatrix(field, arr)


# -- polynomials -----------------------------------------------------------------


class Polynomial:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Iterable, field: Field = QQ):
        cs = [field(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field: Field = QQ) -> Polynomial:
        return cls([0, 1], field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> Polynomial:
        return cls([c], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        return Polynomial([other], self.field)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)], self.field)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs], self.field)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial([], self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, self.field)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __call__(self, value):
        """Horner evaluation at a scalar or an algebra element."""
        if isinstance(value, AlgebraElement):
            return poly_eval_at_element(self, value)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return self.field(acc)

    def divmod_linear(self, root) -> tuple[Polynomial, object]:
        """Synthetic division by ``x - root``: quotient and remainder."""
        if not self.coeffs:
            return self, 0
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.field(acc * root + c)
            out.append(acc)
        rem = out.pop()
        return Polynomial(reversed(out), self.field), rem

    def integer_roots(self) -> list[int] | None:
        """Roots with multiplicity when the polynomial splits into integer linear factors over QQ."""
        if self.field != QQ or not self.is_monic():
            return None
        roots: list[int] = []
        f = self
        while f.degree > 0:
            low = next((c for c in f.coeffs if c != 0), None)
            if any(type(c) is not int for c in f.coeffs):
                return None
            if f.coeffs[0] == 0:
                root = 0
            else:
                root = next((r for r in _divisor_candidates(abs(low)) if f(r) == 0), None)
                if root is None:
                    return None
            f, _ = f.divmod_linear(root)
            roots.append(root)
        return sorted(roots)

    def factored(self) -> str | None:
        """``"(x + 2)*x*(x - 1)^2"`` style, or None unless every root is an integer."""
        roots = self.integer_roots()
        if roots is None:
            return None
        if not roots:
            return "1"
        parts = []
        for r in sorted(set(roots)):
            base = "x" if r == 0 else f"(x {'-' if r > 0 else '+'} {abs(r)})"
            mult = roots.count(r)
            parts.append(base if mult == 1 else f"{base}^{mult}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if self.field.is_zero(c):
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            neg = self.field == QQ and c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{self.field.to_str(mag)}*{mono}"
            else:
                body = self.field.to_str(mag)
            terms.append(("- " if neg else "+ ") + body)
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {self.field!r})"

    def to_json(self) -> dict:
        out = {"field": self.field.name, "coefficients": [self.field.to_str(c) for c in self.coeffs]}
        factored = self.factored()
        if factored is not None:
            out["factored"] = factored
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _divisor_candidates(m: int) -> Iterable[int]:
    for d in range(1, m + 1):
        if m % d == 0:
            yield d
            yield -d


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_from_roots(roots: Iterable, field: Field = QQ) -> Polynomial:
    """``prod (x - k)`` over the distinct values in ``roots``."""
    out = Polynomial([1], field)
    for k in sorted({field(r) for r in roots}):
        out = out * Polynomial([-k, 1], field)
    return out


def poly_eval_at_element(f: Polynomial, a: AlgebraElement) -> AlgebraElement:
    result = type(a).zero(a.basis, a.field)
    for c in reversed(f.coeffs):
        result = result * a + c
    return result


def evaluate_root_product(roots: Iterable, a: AlgebraElement) -> AlgebraElement:
    """``(a - k_1)(a - k_2)...`` multiplied left to right, one factor per listed root."""
    result = type(a).one(a.basis, a.field)
    for k in roots:
        result = result * (a - k)
    return result


# -- minimal polynomials ---------------------------------------------------------


class _EchelonBasis:
    """Incrementally reduced vectors with their expansion in the inserted vectors."""

    def __init__(self, field: Field):
        self.field = field
        self.rows: list[tuple[int, np.ndarray, list]] = []

    def reduce(self, v: np.ndarray, combo: list) -> tuple[np.ndarray, list]:
        f = self.field
        v = v.copy()
        combo = list(combo)
        for pivot, row, row_combo in self.rows:
            c = v[pivot]
            if f.is_zero(c):
                continue
            v = f.reduce(v - row * c)
            width = max(len(combo), len(row_combo))
            combo += [0] * (width - len(combo))
            for i, rc in enumerate(row_combo):
                combo[i] = f(combo[i] - c * rc)
        return v, combo

    def insert(self, v: np.ndarray, combo: list) -> None:
        f = self.field
        pivot = int(np.flatnonzero(v != 0)[0])
        inv = f.inv(v[pivot])
        self.rows.append((pivot, f.reduce(v * inv), [f(c * inv) for c in combo]))


def krylov_min_poly(a: AlgebraElement) -> Polynomial:
    """Minimal polynomial of ``a`` from the first linear dependence among 1, a, a^2, ..."""
    field = a.field
    echelon = _EchelonBasis(field)
    power = type(a).one(a.basis, a.field)
    for k in range(len(a.basis) + 1):
        vec, combo = echelon.reduce(power.coeffs, [0] * k + [1])
        if not np.any(vec != 0):
            return Polynomial(combo, field)
        echelon.insert(vec, combo)
        power = power * a
    raise AssertionError("no linear dependence found; dimension bound violated")


def matrix_min_poly(M: ExactMatrix) -> Polynomial:
    """Minimal polynomial of a square matrix via the Krylov sequence of its powers."""
    if M.rows != M.cols:
        raise ValueError("matrix must be square")
    field = M.field
    echelon = _EchelonBasis(field)
    power = ExactMatrix.identity(M.rows, field)
    for k in range(M.rows * M.rows + 2):
        vec, combo = echelon.reduce(power.entries.reshape(-1), [0] * k + [1])
        if not np.any(vec != 0):
            return Polynomial(combo, field)
        echelon.insert(vec, combo)
        power = ExactMatrix(field, power.entries.dot(M.entries))
    raise AssertionError("no linear dependence found")
