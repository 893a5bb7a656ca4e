# schubert_app/cohomology.py
"""H*(Fl_n) in the Schubert basis.

Public classes use dimension indexing: ``terms[w]`` is the coefficient on
[X_w], and dim X_w = ℓ(w). The polynomial engine works in codimension
indices; [X_w] is represented by S_{w_o·w}.
"""

import logging
from collections import namedtuple
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from .conf import engine_setting
from .exceptions import InvalidWeight, NegativityViolation, WindowMismatch
from .polyring import CoinvariantRing, Family, schubert_poly, stable_product_expand
from .weyl import (
    Permutation,
    all_permutations,
    covers_with_transpositions,
    longest_element,
    support,
)

logger = logging.getLogger(__name__)

Term = namedtuple("Term", "perm coeff")


def _clean_terms(window, terms):
    clean = {}
    for w, c in dict(terms).items():
        if w.window != window:
            raise WindowMismatch(f"{w} is not in S_{window}")
        total = clean.get(w, 0) + int(c)
        if total:
            clean[w] = total
        else:
            clean.pop(w, None)
    return dict(sorted(clean.items(), key=lambda item: item[0].sort_key))


@dataclass(frozen=True)
class CohClass:
    window: int
    terms: dict = field(default_factory=dict)

    convention = "dimension"

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean_terms(self.window, self.terms))

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    def coefficient(self, w):
        return self.terms.get(w, 0)

    def support(self):
        return list(self.terms)

    @property
    def term_list(self):
        return [Term(w, c) for w, c in self.terms.items()]

    def __bool__(self):
        return bool(self.terms)

    def is_pure(self):
        return len({w.length() for w in self.terms}) <= 1

    def _check(self, other):
        if self.window != other.window:
            raise WindowMismatch(f"classes live in S_{self.window} and S_{other.window}")

    def __add__(self, other):
        self._check(other)
        merged = dict(self.terms)
        for w, c in other.terms.items():
            merged[w] = merged.get(w, 0) + c
        return CohClass(self.window, merged)

    def __neg__(self):
        return CohClass(self.window, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return CohClass(self.window, {w: scalar * c for w, c in self.terms.items()})

    __rmul__ = __mul__


# --- constructors ---


def schubert_class(w):
    return CohClass(w.window, {w: 1})


def opposite_class(w):
    return schubert_class(longest_element(w.window) * w)


def class_constructors(w, kind="schubert"):
    if kind == "schubert":
        return schubert_class(w)
    if kind == "opposite":
        return opposite_class(w)
    raise ValueError(f"unknown class kind {kind!r}")


def fundamental_class(n):
    return schubert_class(longest_element(n))


def point_class(n):
    return schubert_class(Permutation.identity(n))


# --- products ---


def _route(route):
    route = route or engine_setting("product_route")
    if route not in ("reduced", "stable"):
        raise ValueError(f"unknown product route {route!r}")
    return route


@lru_cache(maxsize=None)
def _basis_cup(v_images, w_images, route):
    v, w = Permutation(v_images), Permutation(w_images)
    n = v.window
    w0 = longest_element(n)
    u1, u2 = w0 * v, w0 * w
    if route == "stable":
        expansion = stable_product_expand(u1, u2, Family.SCHUBERT)
        # classes outside S_n vanish in H*(Fl_n)
        codim = {x.trim().embed(n): c for x, c in expansion.items() if x.trim().window <= n}
    else:
        ring = CoinvariantRing.of(n)
        codim = ring.schubert_expand(ring.multiply(schubert_poly(u1), schubert_poly(u2)))
    return {w0 * x: c for x, c in codim.items()}


def basis_cup(v, w, route=None):
    """{x: a_vw^x} for [X_v] ∪ [X_w]."""
    if v.window != w.window:
        raise WindowMismatch(f"windows differ: {v.window} vs {w.window}")
    first, second = sorted((v.images, w.images))
    return _basis_cup(first, second, _route(route))


def cup(alpha, beta, route=None):
    alpha._check(beta)
    total = {}
    for v, a in alpha.terms.items():
        for w, b in beta.terms.items():
            for x, c in basis_cup(v, w, route).items():
                total[x] = total.get(x, 0) + a * b * c
    return CohClass(alpha.window, total)


def pairing(alpha, beta, route=None):
    return cup(alpha, beta, route).coefficient(Permutation.identity(alpha.window))


def structure_constant(v, w, x, route=None):
    if not (v.window == w.window == x.window):
        raise WindowMismatch("structure constants need a common window")
    value = basis_cup(v, w, route).get(x, 0)
    if value < 0:
        witness = {"v": v.to_list(), "w": w.to_list(), "x": x.to_list(), "value": value}
        logger.warning("negative cohomology structure constant %s", witness)
        raise NegativityViolation("negative structure constant a_vw^x", witness)
    return value


def structure_constants(n, route=None):
    """Full table {(v, w): {x: a_vw^x}} for S_n."""
    perms = all_permutations(n)
    table = {(v, w): basis_cup(v, w, route) for v in perms for w in perms}
    logger.debug("cohomology table for n=%d: %d products", n, len(table))
    return table


# --- Chevalley formula and the Picard group ---


def chevalley_cup(weight, w):
    """c_1(L_λ) ∪ [X_w] = Σ (λ_i − λ_j) [X_{w·s_ij}] over the covers of w."""
    if weight.window != w.window:
        raise WindowMismatch(f"weight of window {weight.window} against {w}")
    lam = weight.entries
    terms = {}
    for i, j, v in covers_with_transpositions(w):
        terms[v] = terms.get(v, 0) + lam[i - 1] - lam[j - 1]
    return CohClass(w.window, terms)


def c1_class(weight):
    n = weight.window
    w0 = longest_element(n)
    lam = weight.entries
    terms = {w0 * Permutation.simple(i, n): lam[i - 1] - lam[i] for i in range(1, n)}
    return CohClass(n, terms)


def divisor_of_section(weight, w):
    """Multiplicity λ_i − λ_j of each Schubert divisor X_{w·s_ij} of X_w."""
    if not weight.is_dominant():
        raise InvalidWeight(f"{weight} is not dominant")
    if weight.window != w.window:
        raise WindowMismatch(f"weight of window {weight.window} against {w}")
    lam = weight.entries
    divisor = {v: lam[i - 1] - lam[j - 1] for i, j, v in covers_with_transpositions(w)}
    return dict(sorted(divisor.items(), key=lambda item: item[0].sort_key))


def canonical_divisor(w):
    divisor = {v: -(j - i + 1) for i, j, v in covers_with_transpositions(w)}
    return dict(sorted(divisor.items(), key=lambda item: item[0].sort_key))


class Positivity(str, Enum):
    AMPLE = "ample"
    GLOBALLY_GENERATED = "globally_generated"
    NEITHER = "neither"


def line_bundle_positivity(weight):
    if weight.is_regular_dominant():
        return Positivity.AMPLE
    if weight.is_dominant():
        return Positivity.GLOBALLY_GENERATED
    return Positivity.NEITHER


def pic_kernel_check(w, weight):
    """True iff L_λ restricts trivially to X_w."""
    lam = weight.entries
    return all(lam[i - 1] == lam[i] for i in support(w))


# --- diagonal and duality ---


def diagonal_class_cohomology(n):
    """[diag] = Σ_w [X_w × X^w], as {(w, w): 1}."""
    return {(w, w): 1 for w in all_permutations(n)}


def diagonal_contraction(n, route=None):
    """⟨[diag], [X^w] × [X_v]⟩ for all pairs, which must be δ_wv."""
    perms = all_permutations(n)
    result = {}
    for w in perms:
        for v in perms:
            total = 0
            for (x, _), coeff in diagonal_class_cohomology(n).items():
                total += (
                    coeff
                    * pairing(schubert_class(x), opposite_class(w), route)
                    * pairing(opposite_class(x), schubert_class(v), route)
                )
            result[(w, v)] = total
    return result


def poincare_matrix(n):
    """Matrix of ⟨[X_w], [X^v]⟩ over S_n in canonical order (numpy, object dtype)."""
    ring = CoinvariantRing.of(n)
    perms = all_permutations(n)
    w0 = longest_element(n)
    staircase = ring.staircase()
    index = {m: k for k, m in enumerate(staircase)}
    top = staircase[0]
    top_degree = sum(top)

    def vectors(polys):
        rows = np.zeros((len(polys), len(staircase)), dtype=object)
        for r, poly in enumerate(polys):
            for exps, coeff in poly.items():
                rows[r, index[exps]] = coeff
        return rows

    codim_rows = vectors([schubert_poly(w0 * w) for w in perms])
    opposite_rows = vectors([schubert_poly(v) for v in perms])
    pair = np.zeros((len(staircase), len(staircase)), dtype=object)
    for a, m1 in enumerate(staircase):
        for b, m2 in enumerate(staircase):
            if sum(m1) + sum(m2) == top_degree:
                summed = tuple(x + y for x, y in zip(m1 + (0,) * n, m2 + (0,) * n))
                pair[a, b] = ring.monomial_normal_form(summed).get(top, 0)
    logger.debug("Poincaré matrix for n=%d over %d monomials", n, len(staircase))
    return codim_rows.dot(pair).dot(opposite_rows.T)
