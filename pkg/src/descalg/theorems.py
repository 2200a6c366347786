"""Executable checks of the annihilation, minimal-polynomial and spectrum results.

Every verifier returns a :class:`VerificationReport`. A failing report carries
a witness: the first nonzero coefficient of the product that should have
vanished, or the first mismatching value. Preconditions that the input
violates raise ``ValueError``; inputs beyond the configured desk-scale bounds
raise :class:`BoundExceeded`.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import combinatorics as cb
from . import face_monoid as fm
from . import group_algebra as ga
from . import knapsack as ks
from .algebra import AlgebraElement
from .bidigare import _coordinate_matrix, from_group_algebra, rho_inv
from .combinatorics import Composition
from .exact_linalg import (ExactMatrix, Polynomial, eigen_multiplicity, evaluate_root_product,
                           krylov_min_poly, poly_from_roots, rank, right_mult_matrix)
from .fields import QQ, Field, GF
from .knapsack import WeightVector


class BoundExceeded(Exception):
    """The requested size is beyond the configured desk-scale bounds."""


@dataclass(frozen=True)
class Bounds:
    group: int = 6
    face: int = 5
    combinatorics: int = 8

    @classmethod
    def override(cls, n_max: int) -> Bounds:
        return cls(group=n_max, face=n_max, combinatorics=n_max)

    def check(self, kind: str, n: int) -> None:
        limit = getattr(self, kind)
        hard = {"group": ga.MAX_GROUP_N, "face": fm.MAX_FACE_ALGEBRA_N, "combinatorics": cb.MAX_N}[kind]
        if n > min(limit, hard):
            raise BoundExceeded(f"n={n} exceeds the {kind} bound n <= {min(limit, hard)}")


DEFAULT_BOUNDS = Bounds()


@dataclass
class VerificationReport:
    claim: str
    params: dict
    passed: bool
    witness: str | None = None
    millis: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing report needs a witness")

    def to_dict(self, timing: bool = True) -> dict:
        out = {"claim": self.claim, "params": self.params, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        if timing:
            out["millis"] = round(self.millis, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing))


class _Check:
    """Collects sub-checks; the first failure becomes the witness."""

    def __init__(self):
        self.witness: str | None = None
        self.details: dict = {}

    def require(self, ok: bool, witness: Callable[[], str] | str) -> bool:
        if not ok and self.witness is None:
            self.witness = witness() if callable(witness) else witness
        return ok

    def vanishes(self, label: str, value: AlgebraElement) -> bool:
        return self.require(value.is_zero(), lambda: f"{label}: {describe_first_term(value)}")

    def equal(self, label: str, got, want) -> bool:
        return self.require(got == want, lambda: f"{label}: got {got}, expected {want}")


def _format_key(key) -> str:
    if isinstance(key, fm.Face):
        return f"({key})"
    return "[" + ",".join(map(str, key)) + "]"


def describe_first_term(value: AlgebraElement) -> str:
    term = value.first_nonzero()
    if term is None:
        return "0"
    key, c = term
    return f"{value.field.to_str(c)}*{_format_key(key)}"


def _report(claim: str, params: dict, started: float, check: _Check) -> VerificationReport:
    return VerificationReport(claim, params, check.witness is None, check.witness,
                              (time.perf_counter() - started) * 1000, check.details)


def _alpha_params(alpha: Composition, field: Field = QQ) -> dict:
    return {"n": sum(alpha), "alpha": cb.format_composition(alpha), "field": field.name}


def _spectrum_str(values: Iterable) -> list[str]:
    return [str(v) for v in sorted(values)]


def long_product(a: AlgebraElement, spectrum: Iterable) -> AlgebraElement:
    """``a * prod_{k != 0} (a + k)(a - k)``."""
    out = a
    for k in sorted(spectrum):
        if k != 0:
            out = out * (a + k) * (a - k)
    return out


def _dropped_factor_survives(check: _Check, label: str, a: AlgebraElement, roots: list) -> None:
    for k in roots:
        rest = [r for r in roots if r != k]
        value = evaluate_root_product(rest, a)
        check.require(not value.is_zero(), f"{label}: product still vanishes without the factor (x - {k})")


# -- single-alpha verifiers ----------------------------------------------------------


def verify_annihilation_Balpha(alpha: Composition, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    alpha = cb.check_composition(alpha)
    bounds.check("group", sum(alpha))
    started = time.perf_counter()
    check = _Check()
    roots = ks.knapsack_spectrum(alpha)
    check.details["roots"] = _spectrum_str(roots)
    check.vanishes("prod (B_alpha - k)", evaluate_root_product(roots, ga.basis_B_comp(alpha)))
    return _report("annihilation_Balpha", _alpha_params(alpha), started, check)


def verify_annihilation_w0Balpha_long(alpha: Composition, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    alpha = cb.check_composition(alpha)
    n = sum(alpha)
    bounds.check("group", n)
    started = time.perf_counter()
    check = _Check()
    spectrum = ks.knapsack_spectrum(alpha)
    check.details["roots"] = _spectrum_str(spectrum)
    a = ga.w0(n) * ga.basis_B_comp(alpha)
    check.vanishes("w0B_alpha prod (w0B_alpha + k)(w0B_alpha - k)", long_product(a, spectrum))
    return _report("annihilation_w0Balpha_long", _alpha_params(alpha), started, check)


def verify_annihilation_optimal(alpha: Composition, bounds: Bounds = DEFAULT_BOUNDS,
                                minimality: bool = True) -> VerificationReport:
    """Both reverse shuffles vanish on the signed-spectrum product, and no factor can be dropped."""
    alpha = cb.check_composition(alpha)
    n = sum(alpha)
    bounds.check("group", n)
    started = time.perf_counter()
    check = _Check()
    roots = ks.signed_spectrum(alpha)
    check.details["roots"] = _spectrum_str(roots)
    B, w0 = ga.basis_B_comp(alpha), ga.w0(n)
    for label, a in (("w0B_alpha", w0 * B), ("B_alpha w0", B * w0)):
        check.vanishes(f"prod ({label} - k)", evaluate_root_product(roots, a))
        if minimality:
            _dropped_factor_survives(check, label, a, roots)
    return _report("annihilation_optimal", _alpha_params(alpha), started, check)


def verify_min_poly(alpha: Composition, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    """Krylov minimal polynomials of w0B_alpha, B_alpha w0 and (when small) w0~B~_alpha."""
    alpha = cb.check_composition(alpha)
    n = sum(alpha)
    bounds.check("group", n)
    started = time.perf_counter()
    check = _Check()
    expected = poly_from_roots(ks.signed_spectrum(alpha))
    B, w0 = ga.basis_B_comp(alpha), ga.w0(n)
    mu = krylov_min_poly(w0 * B)
    check.details["min_poly"] = mu.to_json()
    check.equal("mu(w0B_alpha)", mu, expected)
    check.equal("mu(B_alpha w0)", krylov_min_poly(B * w0), expected)
    if n <= min(bounds.face, fm.MAX_FACE_ALGEBRA_N):
        face_mu = krylov_min_poly(fm.w0tilde(n) * fm.btilde(alpha))
        check.equal("mu(w0~B~_alpha)", face_mu, expected)
        check.details["face_algebra_checked"] = True
    else:
        check.details["face_algebra_checked"] = False
    return _report("min_poly", _alpha_params(alpha), started, check)


def _face_operator_checks(check: _Check, element: fm.FaceAlgebraElement, signed_values: list,
                          method: str = "auto") -> None:
    """Triangularity, eigenspace dimensions and diagonalizability of right multiplication."""
    n = element.n
    M = right_mult_matrix(element)
    strict_upper = np.triu(M.entries != 0, k=1)
    if check.require(not strict_upper.any(), lambda: _upper_witness(M, strict_upper)):
        diag = [QQ(v) for v in np.diagonal(M.entries)]
        for F, got, want in zip(element.basis.elements, diag, signed_values):
            if not check.require(got == want, f"diagonal entry at ({F}) is {got}, expected {want}"):
                break
    counts = Counter(signed_values)
    mults = {}
    for lam in sorted(counts):
        mults[lam] = eigen_multiplicity(M, lam, method)
        check.require(mults[lam] == counts[lam],
                      f"eigenvalue {lam}: kernel dimension {mults[lam]}, {counts[lam]} faces")
    total = sum(mults.values())
    check.require(total == fm.ordered_bell(n), f"multiplicities sum to {total}, not {fm.ordered_bell(n)}")
    check.details["multiplicities"] = {str(k): v for k, v in mults.items()}


def _upper_witness(M: ExactMatrix, mask: np.ndarray) -> str:
    i, j = map(int, np.argwhere(mask)[0])
    return f"entry above the diagonal at row {i}, column {j}: {M.entries[i, j]}"


def verify_face_spectrum(alpha: Composition, bounds: Bounds = DEFAULT_BOUNDS,
                         method: str = "auto") -> VerificationReport:
    alpha = cb.check_composition(alpha)
    n = sum(alpha)
    bounds.check("face", n)
    started = time.perf_counter()
    check = _Check()
    element = fm.w0tilde(n) * fm.btilde(alpha)
    signed = [ks.sign(F) * k for F, k in zip(element.basis.elements, ks.knapsack_table(alpha))]
    _face_operator_checks(check, element, signed, method)
    return _report("face_spectrum", _alpha_params(alpha), started, check)


# -- top-to-random -------------------------------------------------------------------


def _need_n_above_one(n: int) -> None:
    if n <= 1:
        raise ValueError(f"the top-to-random statements need n > 1, got n={n}")


def verify_ttr_baseline(n: int, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    """mu(T_1) = prod over k in {0, ..., n-2, n} of (x - k)."""
    _need_n_above_one(n)
    bounds.check("group", n)
    started = time.perf_counter()
    check = _Check()
    T = ga.top_to_random(n, 1)
    check.equal("T_1 vs sum of cycles", T, ga.top_to_random_cycles(n))
    mu = krylov_min_poly(T)
    check.details["min_poly"] = mu.to_json()
    check.equal("mu(T_1)", mu, poly_from_roots([*range(n - 1), n]))
    return _report("ttr_baseline", {"n": n, "field": "Q"}, started, check)


def verify_ttr(n: int, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    _need_n_above_one(n)
    bounds.check("group", n)
    started = time.perf_counter()
    check = _Check()
    T, w0 = ga.top_to_random(n, 1), ga.w0(n)
    expected = poly_from_roots(ks.L_set(n))
    mu = krylov_min_poly(w0 * T)
    check.details["min_poly"] = mu.to_json()
    check.equal("mu(w0 T_1)", mu, expected)
    check.equal("mu(T_1 w0)", krylov_min_poly(T * w0), expected)
    check.equal("S(T_1 w0) vs w0 B_(1,n-1)", ga.antipode(T * w0), w0 * ga.basis_B_comp((1, n - 1)))
    return _report("ttr", {"n": n, "field": "Q"}, started, check)


def verify_ttr_spectrum(n: int, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    """Brute-force signed spectrum of (1, n-1) against the closed-form set L(n)."""
    _need_n_above_one(n)
    bounds.check("combinatorics", n)
    started = time.perf_counter()
    check = _Check()
    got = ks.signed_spectrum((1, n - 1))
    check.details["spectrum"] = _spectrum_str(got)
    check.equal("signed spectrum of (1,n-1)", got, ks.L_set(n))
    return _report("ttr_spectrum", {"n": n}, started, check)


# x(x - 1)^2 = x^3 - 2x^2 + x, the reported answer for n = 4 over F_3.
KNOWN_FINITE_FIELD = {(4, 3): [0, 1, -2, 1]}


def verify_ttr_finite_field(n: int, p: int, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    """Minimal polynomial of w0 T_1 over GF(p); asserted only where a value is known."""
    _need_n_above_one(n)
    bounds.check("group", n)
    field = GF(p)
    started = time.perf_counter()
    check = _Check()
    mu = krylov_min_poly(ga.w0(n, field) * ga.top_to_random(n, 1, field))
    check.details["min_poly"] = mu.to_json()
    reduced = Polynomial(poly_from_roots(ks.L_set(n)).coeffs, field)
    check.details["equals_rational_reduction"] = mu == reduced
    known = KNOWN_FINITE_FIELD.get((n, p))
    check.details["asserted"] = known is not None
    if known is not None:
        check.equal("mu(w0 T_1) over F_p", mu, Polynomial(known, field))
    return _report("ttr_finite_field", {"n": n, "field": field.name}, started, check)


# -- weighted ------------------------------------------------------------------------


def verify_weighted(gamma: WeightVector, bounds: Bounds = DEFAULT_BOUNDS,
                    method: str = "auto") -> VerificationReport:
    n = gamma.n
    bounds.check("group", n)
    started = time.perf_counter()
    check = _Check()
    params = {"n": n, "gamma": json.loads(gamma.to_json()), "field": "Q"}
    plain = ks.weighted_spectrum(gamma)
    signed = ks.weighted_signed_spectrum(gamma)
    check.details["roots"] = _spectrum_str(plain)
    check.details["signed_roots"] = _spectrum_str(signed)
    Bg, w0 = ga.weighted_B(gamma), ga.w0(n)
    check.vanishes("prod (B_gamma - k)", evaluate_root_product(plain, Bg))
    for label, a in (("w0B_gamma", w0 * Bg), ("B_gamma w0", Bg * w0)):
        check.vanishes(f"prod ({label} - k)", evaluate_root_product(signed, a))
    mu = krylov_min_poly(w0 * Bg)
    check.details["min_poly"] = mu.to_json()
    check.equal("mu(w0B_gamma)", mu, poly_from_roots(signed))
    if n <= min(bounds.face, fm.MAX_FACE_ALGEBRA_N):
        Bt = fm.FaceAlgebraElement.zero(fm.face_basis(n))
        for alpha, g in gamma.items():
            Bt = Bt + fm.btilde(alpha).scale(g)
        element = fm.w0tilde(n) * Bt
        values = [QQ(ks.sign(F) * v) for F, v in zip(element.basis.elements, ks.weighted_table(gamma))]
        _face_operator_checks(check, element, values, method)
    return _report("weighted", params, started, check)


# -- pure combinatorics --------------------------------------------------------------


def verify_altsum(n: int, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    """Global and relative alternating sums of faces.

    The relative sum over all G containing F depends on F only through its
    unordered blocks, so faces are grouped by block set before pairing.
    """
    bounds.check("combinatorics", n)
    started = time.perf_counter()
    check = _Check()
    by_blocks = Counter()
    total = 0
    for F in fm.enumerate_faces(n):
        total += (-1) ** len(F)
        by_blocks[frozenset(F.blocks)] += 1
    check.equal("sum (-1)^len(G)", total, (-1) ** n)
    partitions = list(by_blocks.items())
    for blocks_f, count_f in partitions:
        rel = sum(count_g * (-1) ** (n - len(blocks_g)) for blocks_g, count_g in partitions
                  if all(any(f & ~g == 0 for g in blocks_g) for f in blocks_f))
        want = (-1) ** (n - len(blocks_f))
        if not check.require(rel == want, lambda: f"relative sum at {sorted(blocks_f)} is {rel}, expected {want}"):
            break
    check.details["faces"] = sum(by_blocks.values())
    check.details["set_partitions"] = len(partitions)
    return _report("altsum", {"n": n}, started, check)


def verify_descent_combinatorics(n: int, bounds: Bounds = DEFAULT_BOUNDS) -> VerificationReport:
    bounds.check("group", n)
    started = time.perf_counter()
    check = _Check()
    w0p = cb.longest_word(n)
    for s in cb.enumerate_permutations(n):
        des = cb.descent_set(cb.compose(cb.compose(w0p, s), w0p))
        if not check.equal(f"Des(w0 {s} w0)", des, cb.sub(cb.descent_set(s))):
            break
    index_sets = list(cb.enumerate_index_sets(n))
    for J in index_sets:
        check.equal(f"sub({J})", cb.sub(J), cb.gaps_inv(cb.rev(cb.gaps(J))))

    B = {J.mask: ga.basis_B(J) for J in index_sets}
    D = {J.mask: ga.basis_D(J) for J in index_sets}
    w0 = ga.w0(n)
    for I in index_sets:
        subsets = [J for J in index_sets if J.issubset(I)]
        check.equal(f"B_{I} from D", B[I.mask], _linear(n, [(D[J.mask], 1) for J in subsets]))
        check.equal(f"D_{I} from B", D[I.mask],
                    _linear(n, [(B[J.mask], (-1) ** (len(I) - len(J))) for J in subsets]))
        check.equal(f"w0 B_{I} w0", w0 * B[I.mask] * w0, B[cb.sub(I).mask])
    if n >= 1:
        check.equal("alternating B-sum", w0,
                    _linear(n, [(B[I.mask], (-1) ** (n - len(I) - 1)) for I in index_sets]))
        for alpha in cb.enumerate_compositions(n):
            check.equal(f"w0 B_{alpha} w0", w0 * ga.basis_B_comp(alpha) * w0, ga.basis_B_comp(cb.rev(alpha)))
    if n >= 2:
        SA = ga.antipode(ga.top_to_random(n, 1))
        check.equal("S(T_1)", SA, ga.basis_B_comp((1, n - 1)))
        down_cycles = {cb.cycle(n, *range(i, 0, -1)) for i in range(1, n + 1)}
        check.equal("support of S(T_1)", set(SA.support()), down_cycles)

    comps = list(cb.enumerate_compositions(n))
    if n <= 5:
        for a in comps:
            for b in comps:
                product = ga.basis_B_comp(a) * ga.basis_B_comp(b)
                check.require(from_group_algebra(product) is not None,
                              f"B_{a} B_{b} leaves the span of the B-basis")
    if n <= min(bounds.face, 4):
        _orbit_sum_checks(check, n, comps)
    return _report("descent_combinatorics", {"n": n}, started, check)


def _linear(n: int, terms) -> ga.GroupAlgebraElement:
    out = ga.zero(n)
    for x, c in terms:
        out = out + x.scale(c)
    return out


def _orbit_sum_checks(check: _Check, n: int, comps: list[Composition]) -> None:
    """Symmetrized faces solve uniquely against the orbit sums B~_alpha."""
    M, _ = _coordinate_matrix("face", n, QQ)
    check.require(rank(M) == len(comps), "orbit sums are linearly dependent")
    basis = fm.face_basis(n)
    perms = list(cb.enumerate_permutations(n))
    for F in basis.elements:
        orbit = fm.FaceAlgebraElement.sum_of(basis, (fm.act(w, F) for w in perms))
        try:
            x = rho_inv(orbit)
        except ValueError:
            check.require(False, f"symmetrization of ({F}) is not an orbit-sum combination")
            return
        check.require(list(x.coords) == [fm.face_type(F)], f"symmetrization of ({F}) has coordinates {x}")


# -- registry ------------------------------------------------------------------------

ALPHA_CLAIMS = {
    "annihilation_Balpha": verify_annihilation_Balpha,
    "annihilation_w0Balpha_long": verify_annihilation_w0Balpha_long,
    "annihilation_optimal": verify_annihilation_optimal,
    "min_poly": verify_min_poly,
    "face_spectrum": verify_face_spectrum,
}
N_CLAIMS = {
    "ttr_baseline": verify_ttr_baseline,
    "ttr": verify_ttr,
    "ttr_spectrum": verify_ttr_spectrum,
    "altsum": verify_altsum,
    "descent_combinatorics": verify_descent_combinatorics,
}
OTHER_CLAIMS = ("ttr_finite_field", "weighted")
CLAIMS = (*ALPHA_CLAIMS, *N_CLAIMS, *OTHER_CLAIMS)


def default_gamma(n: int) -> WeightVector:
    """Deterministic weights used by ``--all`` when no weight file is given."""
    return WeightVector.random(n, random.Random(n))


def run_claim(claim: str, n: int, alpha: Composition | None = None, gamma: WeightVector | None = None,
              p: int = 3, bounds: Bounds = DEFAULT_BOUNDS) -> list[VerificationReport]:
    """Run one claim; alpha-indexed claims cover every composition of n unless ``alpha`` is given."""
    if claim in ALPHA_CLAIMS:
        comps = [alpha] if alpha is not None else list(cb.enumerate_compositions(n))
        return [ALPHA_CLAIMS[claim](a, bounds) for a in comps]
    if claim in N_CLAIMS:
        return [N_CLAIMS[claim](n, bounds)]
    if claim == "ttr_finite_field":
        return [verify_ttr_finite_field(n, p, bounds)]
    if claim == "weighted":
        return [verify_weighted(gamma if gamma is not None else default_gamma(n), bounds)]
    raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
