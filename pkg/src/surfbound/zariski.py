"""Zariski decomposition of pseudo-effective divisor classes.

Two independent routes compute the same decomposition D = P + N:

  * zariski_decompose grows the support of N from the curves the positive
    part still meets negatively, re-solving until P is nef on the model;
  * zariski_oracle tries every curve subset with negative definite Gram and
    keeps the unique candidate satisfying the defining conditions.

Both enforce the full contract before returning: P nef against the model,
N effective with negative definite support, and P orthogonal to every
support curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import lattice
from .errors import (
    AmbiguousDecomposition,
    ModelInconsistent,
    NotPseudoEffective,
)
from .surface import DivisorClass, SurfaceModel

Q = Fraction


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: DivisorClass
    negative: DivisorClass
    support: tuple[int, ...]
    coefficients: tuple[Fraction, ...]  # aligned with support


@dataclass(frozen=True)
class H1Correction:
    """Cohomological correction data attached to the negative part F = N.

    The leading coefficient is c2 = -F^2/2, the linear one c1 = F.K/2, and
    the sliding constant is the callable c0(b) = -(b*F.K/2 - b^2*F^2/2).
    """

    c2: Fraction
    c1: Fraction

    def c0(self, b) -> Fraction:
        b = Q(b)
        return -self.c1 * b - self.c2 * b * b


def _pseudo_effective_precheck(model: SurfaceModel, d: DivisorClass) -> None:
    if model.ample_reference is not None:
        href = model.divisor(model.ample_reference)
        if model.intersect(d, href) < 0:
            raise NotPseudoEffective(
                "divisor pairs negatively with the ample reference class"
            )


def _solve_support(
    model: SurfaceModel, d: DivisorClass, support: tuple[int, ...]
) -> list[Fraction]:
    gram = model.curve_gram(support)
    rhs = [model.pair_curve(d, i) for i in support]
    return lattice.solve_linear(gram, rhs)


def _finalize(
    model: SurfaceModel, d: DivisorClass, solved: dict[int, Fraction]
) -> ZariskiDecomposition:
    support = tuple(i for i in sorted(solved) if solved[i] != 0)
    coeffs = tuple(solved[i] for i in support)
    if any(c < 0 for c in coeffs):
        raise NotPseudoEffective(
            "negative part acquired a negative coefficient; the divisor is "
            "not pseudo-effective on this model or the curve list is incomplete"
        )
    negative = model.divisor_from_curves(dict(zip(support, coeffs)))
    positive = d - negative
    for i in range(len(model.curves)):
        p = model.pair_curve(positive, i)
        if p < 0:
            raise ModelInconsistent("positive part is not nef after stabilizing")
        if i in support and p != 0:
            raise ModelInconsistent("positive part meets its own support")
    if not lattice.is_negative_definite(model.curve_gram(support)):
        raise ModelInconsistent("support Gram lost negative definiteness")
    return ZariskiDecomposition(positive, negative, support, coeffs)


def zariski_decompose(model: SurfaceModel, d: DivisorClass) -> ZariskiDecomposition:
    """Support-growth decomposition.

    Starting from an empty support, repeatedly add every curve the current
    positive part meets negatively and re-solve (D - N).C_j = 0 on the
    enlarged support. The support only grows, so the loop ends after at most
    one pass per curve.
    """
    if d.rank != model.rank:
        d = model.divisor(d.coords)
    _pseudo_effective_precheck(model, d)
    support: tuple[int, ...] = ()
    solved: dict[int, Fraction] = {}
    for _ in range(len(model.curves) + 1):
        negative = model.divisor_from_curves(solved)
        positive = d - negative
        violators = [
            i
            for i in range(len(model.curves))
            if i not in solved and model.pair_curve(positive, i) < 0
        ]
        if not violators:
            return _finalize(model, d, solved)
        support = tuple(sorted(set(support) | set(violators)))
        if not lattice.is_negative_definite(model.curve_gram(support)):
            raise NotPseudoEffective(
                "candidate support is not negative definite; the divisor is "
                "not pseudo-effective on this model or the curve list is "
                "incomplete"
            )
        solved = dict(zip(support, _solve_support(model, d, support)))
    raise ModelInconsistent("support iteration failed to stabilize")


@lru_cache(maxsize=None)
def _negative_definite_subsets(model: SurfaceModel) -> tuple[tuple[int, ...], ...]:
    indices = range(len(model.curves))
    out = []
    for size in range(len(model.curves) + 1):
        for subset in combinations(indices, size):
            if lattice.is_negative_definite(model.curve_gram(subset)):
                out.append(subset)
    return tuple(out)


@lru_cache(maxsize=None)
def _subset_inverse(
    model: SurfaceModel, subset: tuple[int, ...]
) -> tuple[tuple[Fraction, ...], ...]:
    inv = lattice.matrix_inverse(model.curve_gram(subset))
    return tuple(tuple(row) for row in inv)


def zariski_oracle(model: SurfaceModel, d: DivisorClass) -> ZariskiDecomposition:
    """Exhaustive cross-check: solve on every negative definite subset and
    keep the unique candidate meeting the defining conditions."""
    if d.rank != model.rank:
        d = model.divisor(d.coords)
    _pseudo_effective_precheck(model, d)
    n_curves = len(model.curves)
    candidates: dict[tuple[Fraction, ...], dict[int, Fraction]] = {}
    for subset in _negative_definite_subsets(model):
        if subset:
            inv = _subset_inverse(model, subset)
            rhs = [model.pair_curve(d, i) for i in subset]
            coeffs = [sum(row[j] * rhs[j] for j in range(len(rhs))) for row in inv]
        else:
            coeffs = []
        if any(c < 0 for c in coeffs):
            continue
        solved = dict(zip(subset, coeffs))
        negative = model.divisor_from_curves(solved)
        positive = d - negative
        if any(model.pair_curve(positive, i) < 0 for i in range(n_curves)):
            continue
        key = tuple(solved.get(i, Q(0)) for i in range(n_curves))
        candidates[key] = solved
    if not candidates:
        raise NotPseudoEffective(
            "no subset produced a valid decomposition; the divisor is not "
            "pseudo-effective on this model or the curve list is incomplete"
        )
    if len(candidates) > 1:
        raise AmbiguousDecomposition(
            f"{len(candidates)} distinct decompositions satisfy the defining "
            "conditions; this is a bug"
        )
    (solved,) = candidates.values()
    return _finalize(model, d, solved)


def kappa_is_two(model: SurfaceModel, d: DivisorClass) -> bool:
    """True when the positive part is big, the numerical stand-in for
    maximal Kodaira dimension."""
    decomposition = zariski_decompose(model, d)
    return model.self_intersection(decomposition.positive) > 0


def h1_correction(model: SurfaceModel, d: DivisorClass) -> H1Correction:
    """Correction coefficients attached to the negative part of d."""
    decomposition = zariski_decompose(model, d)
    f = decomposition.negative
    c2 = -model.self_intersection(f) / 2
    c1 = model.intersect(f, model.canonical_class) / 2
    return H1Correction(c2=c2, c1=c1)
