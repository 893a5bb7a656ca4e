# schubert_app/grassmann.py
"""Grassmannians Gr(d, n) and projective spaces.

A Schubert variety of Gr(d, n) is indexed by I = (i_1 < ⋯ < i_d) with
dim X_I = Σ (i_j − j). Pullback to Fl_n sends X_I to X_w for the maximal
coset representative w of I, and every full-flag computation here runs on
those representatives.

Partitions come in two tagged conventions:

* ``dimension``: λ_j = i_j − j, weakly increasing, area = dim X_I;
* ``codimension``: (n − d) − λ_j, weakly decreasing, area = codim X_I.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

import numpy as np
from sympy import Poly, Rational, Symbol, factorial, interpolate

from . import cohomology, ktheory
from .exceptions import (
    ConventionViolation,
    DegreeTooLarge,
    InvalidIndex,
    NegativityViolation,
    NotIntegerValued,
    SignViolation,
)
from .weyl import BruhatPoset, Permutation, _parse_int_list, fundamental_weight

logger = logging.getLogger(__name__)


class Convention(str, Enum):
    DIMENSION = "dimension"
    CODIMENSION = "codimension"


@dataclass(frozen=True)
class GrassIndex:
    d: int
    n: int
    indices: tuple

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        if not 1 <= self.d <= self.n:
            raise InvalidIndex(f"Gr({self.d},{self.n}) needs 1 ≤ d ≤ n")
        if len(indices) != self.d:
            raise InvalidIndex(f"{indices} does not have {self.d} entries")
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise InvalidIndex(f"{indices} is not strictly increasing")
        if indices[0] < 1 or indices[-1] > self.n:
            raise InvalidIndex(f"{indices} leaves 1..{self.n}")
        object.__setattr__(self, "indices", indices)

    @classmethod
    def from_string(cls, text, n):
        indices = _parse_int_list(text, InvalidIndex)
        return cls(len(indices), n, indices)

    @classmethod
    def bottom(cls, d, n):
        return cls(d, n, tuple(range(1, d + 1)))

    @classmethod
    def top(cls, d, n):
        return cls(d, n, tuple(range(n - d + 1, n + 1)))

    @classmethod
    def from_partition(cls, partition):
        dims = partition.as_convention(Convention.DIMENSION).parts
        return cls(partition.d, partition.n, tuple(lam + j for j, lam in enumerate(dims, start=1)))

    @classmethod
    def from_permutation(cls, w, d):
        """Index of the coset w·P: the first d images, sorted."""
        if not 1 <= d <= w.window:
            raise InvalidIndex(f"d={d} does not fit S_{w.window}")
        return cls(d, w.window, tuple(sorted(w.images[:d])))

    def __str__(self):
        return ",".join(str(i) for i in self.indices)

    def to_list(self):
        return list(self.indices)

    @property
    def dimension(self):
        return sum(i - j for j, i in enumerate(self.indices, start=1))

    @property
    def sort_key(self):
        return (self.dimension, self.indices)

    def partition(self, convention=Convention.DIMENSION):
        dims = tuple(i - j for j, i in enumerate(self.indices, start=1))
        return Partition(dims, self.d, self.n, Convention.DIMENSION).as_convention(convention)

    def min_rep(self):
        rest = [k for k in range(1, self.n + 1) if k not in self.indices]
        return Permutation(self.indices + tuple(rest))

    def max_rep(self):
        rest = [k for k in range(self.n, 0, -1) if k not in self.indices]
        return Permutation(tuple(reversed(self.indices)) + tuple(rest))

    def _same_shape(self, other):
        if (self.d, self.n) != (other.d, other.n):
            raise InvalidIndex(f"Gr({self.d},{self.n}) index against Gr({other.d},{other.n})")

    def contains(self, other):
        """X_other ⊆ X_self."""
        self._same_shape(other)
        return all(j <= i for j, i in zip(other.indices, self.indices))

    def covers(self):
        found = []
        for k, i in enumerate(self.indices):
            floor = self.indices[k - 1] if k else 0
            if i - 1 > floor:
                lowered = self.indices[:k] + (i - 1,) + self.indices[k + 1:]
                found.append(GrassIndex(self.d, self.n, lowered))
        return sorted(found, key=lambda index: index.sort_key)


@dataclass(frozen=True)
class Partition:
    parts: tuple
    d: int
    n: int
    convention: Convention = Convention.DIMENSION

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "convention", Convention(self.convention))
        if len(parts) != self.d:
            raise InvalidIndex(f"partition {parts} needs {self.d} parts")
        if any(p < 0 or p > self.n - self.d for p in parts):
            raise InvalidIndex(f"partition {parts} does not fit a {self.d}×{self.n - self.d} box")
        pairs = list(zip(parts, parts[1:]))
        if self.convention is Convention.DIMENSION and any(a > b for a, b in pairs):
            raise InvalidIndex(f"dimension partitions increase weakly, got {parts}")
        if self.convention is Convention.CODIMENSION and any(a < b for a, b in pairs):
            raise InvalidIndex(f"codimension partitions decrease weakly, got {parts}")

    @classmethod
    def from_string(cls, text, d, n, convention=Convention.DIMENSION):
        """Short input is padded with zeros on the small end: "1" in Gr(2,4)
        is (0,1) for dimension and (1,0) for codimension."""
        convention = Convention(convention)
        parts = _parse_int_list(text, InvalidIndex)
        if len(parts) > d:
            raise InvalidIndex(f"{text!r} has more than {d} parts")
        padding = (0,) * (d - len(parts))
        parts = padding + parts if convention is Convention.DIMENSION else parts + padding
        return cls(parts, d, n, convention)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    @property
    def area(self):
        return sum(self.parts)

    def dual(self):
        other = (
            Convention.CODIMENSION
            if self.convention is Convention.DIMENSION
            else Convention.DIMENSION
        )
        return Partition(tuple(self.n - self.d - p for p in self.parts), self.d, self.n, other)

    def as_convention(self, convention):
        return self if self.convention is Convention(convention) else self.dual()


def index_dictionaries(x, d=None):
    """The index, both partitions and the minimal coset representative of a
    Schubert variety of Gr(d, n), from any one of them."""
    if isinstance(x, Permutation):
        if d is None:
            raise InvalidIndex("a permutation needs d to name a Grassmannian")
        index = GrassIndex.from_permutation(x, d)
        if index.min_rep() != x:
            raise InvalidIndex(f"{x} is not a minimal representative for Gr({d},{x.window})")
    elif isinstance(x, Partition):
        index = GrassIndex.from_partition(x)
    elif isinstance(x, GrassIndex):
        index = x
    else:
        raise InvalidIndex(f"cannot read a Grassmannian index from {x!r}")
    return {
        "index": index,
        "partition": index.partition(Convention.DIMENSION),
        "dual": index.partition(Convention.CODIMENSION),
        "min_rep": index.min_rep(),
        "max_rep": index.max_rep(),
    }


def schubert_dim(index):
    return index.dimension


def contains(index, other):
    return index.contains(other)


@lru_cache(maxsize=None)
def grass_indices(d, n):
    if not 1 <= d <= n:
        raise InvalidIndex(f"Gr({d},{n}) needs 1 ≤ d ≤ n")
    found = [GrassIndex(d, n, c) for c in combinations(range(1, n + 1), d)]
    return tuple(sorted(found, key=lambda index: index.sort_key))


def grass_poset(d, n):
    return BruhatPoset.from_covers(grass_indices(d, n), GrassIndex.covers)


@lru_cache(maxsize=None)
def _grass_mobius(d, n, low, high):
    low, high = GrassIndex(d, n, low), GrassIndex(d, n, high)
    if not high.contains(low):
        return 0
    if low == high:
        return 1
    return -sum(
        _grass_mobius(d, n, low.indices, mid.indices)
        for mid in grass_indices(d, n)
        if mid != high and mid.contains(low) and high.contains(mid)
    )


def grass_mobius(low, high):
    """Möbius function μ(low, high) of the Grassmannian Bruhat order."""
    low._same_shape(high)
    return _grass_mobius(low.d, low.n, low.indices, high.indices)


def is_rook_strip(low, high):
    """True iff the skew diagram between the two partitions has no two boxes
    in a row or a column."""
    if not high.contains(low):
        return False
    inner = low.partition().parts
    outer = high.partition().parts
    columns = []
    for a, b in zip(inner, outer):
        if b - a > 1:
            return False
        if b > a:
            columns.append(b)
    return len(columns) == len(set(columns))


# --- Pieri formulas and the pullback route ---


def _from_full_flag(terms, d):
    found = {}
    for w, c in terms.items():
        index = GrassIndex.from_permutation(w, d)
        if index.max_rep() != w:
            raise ConventionViolation(
                f"{w} is not a maximal representative for Gr({d},{w.window})", {"perm": w.to_list()}
            )
        found[index] = c
    return dict(sorted(found.items(), key=lambda item: item[0].sort_key))


def pieri_divisor_cohomology(index):
    """c_1(O(1)) ∪ [X_I] = Σ_{J ⋖ I} [X_J]."""
    return {J: 1 for J in index.covers()}


def pieri_divisor_full_flag(index):
    w = index.max_rep()
    product = cohomology.chevalley_cup(fundamental_weight(index.d, index.n), w)
    return _from_full_flag(product.terms, index.d)


def plucker_divisor(index):
    """Divisor of the Plücker coordinate p_I on X_I, each J ⋖ I with multiplicity 1."""
    divisor = cohomology.divisor_of_section(fundamental_weight(index.d, index.n), index.max_rep())
    return _from_full_flag({w: m for w, m in divisor.items() if m}, index.d)


class KPieriMode(str, Enum):
    L = "L"
    L_INVERSE = "L_inverse"
    DIVISOR = "divisor"


def k_pieri(index, mode=KPieriMode.L):
    """[O(1)]·O_I, [O(−1)]·O_I, or (1 − [O(−1)])·O_I in the O basis of K(Gr(d, n)).

    The last two come from Möbius inversion of Σ_{J≤I} O_J, so they only see
    the J whose skew diagram with I is a rook strip.
    """
    mode = KPieriMode(mode)
    lower = [J for J in grass_indices(index.d, index.n) if index.contains(J)]
    if mode is KPieriMode.L:
        return {J: 1 for J in lower}
    if mode is KPieriMode.L_INVERSE:
        terms = {J: grass_mobius(J, index) for J in lower}
    else:
        terms = {J: -grass_mobius(J, index) for J in lower if J != index}
    return {J: c for J, c in terms.items() if c}


def k_pieri_full_flag(index, mode=KPieriMode.L):
    mode = KPieriMode(mode)
    weight = fundamental_weight(index.d, index.n)
    w = index.max_rep()
    if mode is KPieriMode.L:
        terms = ktheory.k_chevalley(weight, w)
    elif mode is KPieriMode.L_INVERSE:
        terms = ktheory.line_bundle_mult(-weight, ktheory.k_class(w)).terms
    else:
        terms = ktheory.o_lambda_mult(weight, w)
    return _from_full_flag(terms, index.d)


class Theory(str, Enum):
    H = "H"
    K = "K"


def lr_coefficients(lam, mu, theory=Theory.H):
    """Structure constants of H*(Gr) or K(Gr) for the Schubert classes of two
    partitions, read off the product of their pullbacks to Fl_n.

    Results are keyed by partitions in the convention of ``lam``.
    """
    theory = Theory(theory)
    if (lam.d, lam.n) != (mu.d, mu.n):
        raise InvalidIndex("partitions come from different Grassmannians")
    d, n = lam.d, lam.n
    v = GrassIndex.from_partition(lam).max_rep()
    w = GrassIndex.from_partition(mu).max_rep()
    if theory is Theory.H:
        product = cohomology.basis_cup(v, w)
    else:
        product = ktheory.basis_product(v, w)
    by_index = _from_full_flag({x: c for x, c in product.items() if c}, d)
    lam_dim = GrassIndex.from_partition(lam).dimension
    mu_dim = GrassIndex.from_partition(mu).dimension
    result = {}
    for index, c in by_index.items():
        witness = {"lam": list(lam.parts), "mu": list(mu.parts), "nu": index.to_list(), "value": c}
        if theory is Theory.H and c < 0:
            raise NegativityViolation("negative Grassmannian structure constant", witness)
        sign = (-1) ** (lam_dim + mu_dim + index.dimension + d * (n - d))
        if theory is Theory.K and sign * c < 0:
            raise SignViolation("Grassmannian K-theory constant has the wrong sign", witness)
        result[index.partition(lam.convention)] = c
    return result


@dataclass(frozen=True)
class IncidenceSingularity:
    singular: bool
    locus: tuple = None


def incidence_singularity(i, j, n):
    """Schubert variety of the point-hyperplane incidence variety indexed by
    (i, j): singular exactly when 1 < j < i < n, along the one indexed by
    (j − 1, i + 1)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidIndex(f"({i},{j}) leaves 1..{n}")
    if i == j:
        raise InvalidIndex("incidence indices must differ")
    if 1 < j < i < n:
        return IncidenceSingularity(True, (j - 1, i + 1))
    return IncidenceSingularity(False)


# --- K(P^n) through Hilbert polynomials ---

T = Symbol("t")


def _qq(expr):
    return Poly(expr, T, domain="QQ")


@lru_cache(maxsize=None)
def _binomial_polynomial(j, shift):
    """binomial(t + shift + j, j) as a polynomial in t."""
    poly = _qq(Rational(1, factorial(j)))
    for i in range(1, j + 1):
        poly *= _qq(T + shift + i)
    return poly


@dataclass(frozen=True)
class HilbertPoly:
    poly: Poly

    def __post_init__(self):
        poly = self.poly.as_expr() if isinstance(self.poly, Poly) else self.poly
        object.__setattr__(self, "poly", _qq(poly))

    @classmethod
    def zero(cls):
        return cls(_qq(0))

    @classmethod
    def from_coefficients(cls, coefficients):
        """Coefficients of 1, t, t², … (ints, Fractions or "p/q" strings)."""
        return cls(_qq(sum(Rational(str(c)) * T ** k for k, c in enumerate(coefficients))))

    @classmethod
    def from_values(cls, values):
        """Interpolating polynomial through ``{k: value}``."""
        points = sorted(values.items())
        if not points:
            return cls.zero()
        return cls(_qq(interpolate([(k, v) for k, v in points], T)))

    @classmethod
    def binomial(cls, j, shift=0):
        return cls(_binomial_polynomial(j, shift))

    def __call__(self, k):
        return self.poly.eval(k)

    def value(self, k):
        result = self(k)
        if not result.is_integer:
            raise NotIntegerValued(f"{self} takes the value {result} at {k}")
        return int(result)

    @property
    def degree(self):
        return None if self.poly.is_zero else self.poly.degree()

    @property
    def coefficients(self):
        return list(reversed(self.poly.all_coeffs())) if not self.poly.is_zero else []

    def is_zero(self):
        return self.poly.is_zero

    def is_integer_valued(self):
        span = (self.degree or 0) + 1
        return all(self(k).is_integer for k in range(span))

    def __add__(self, other):
        return HilbertPoly(self.poly + other.poly)

    def __neg__(self):
        return HilbertPoly(-self.poly)

    def __sub__(self, other):
        return HilbertPoly(self.poly - other.poly)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return HilbertPoly(self.poly * scalar)

    __rmul__ = __mul__

    def shift(self, k):
        """t ↦ t + k."""
        return HilbertPoly(self.poly.compose(_qq(T + k)))

    def __str__(self):
        return str(self.poly.as_expr())


@dataclass(frozen=True)
class ProjectiveKModel:
    """K(P^n) with every class represented by its Hilbert polynomial.

    The basis is [O_{P^j}], 0 ≤ j ≤ n, with Hilbert polynomial binomial(t+j, j).
    """

    n: int

    def _check(self, j):
        if not 0 <= j <= self.n:
            raise InvalidIndex(f"P^{j} is not a linear subspace of P^{self.n}")

    def basis_hilbert(self, j):
        self._check(j)
        return HilbertPoly.binomial(j)

    def linear_class(self, j, k=0):
        """[O_{P^j}(k)]."""
        self._check(j)
        return HilbertPoly.binomial(j, shift=k)

    def line_bundle(self, k):
        return self.linear_class(self.n, k)

    def twist(self, hilbert, k):
        return hilbert.shift(k)

    def euler(self, j, k):
        """χ(O_{P^j}(k)) = binomial(k + j, j), polynomial convention."""
        return self.basis_hilbert(j).value(k)

    def chi(self, hilbert):
        return hilbert.value(0)

    def decompose(self, hilbert):
        """(c_0, …, c_n) with hilbert = Σ c_j binomial(t + j, j)."""
        degree = hilbert.degree
        if degree is not None and degree > self.n:
            raise DegreeTooLarge(f"degree {degree} exceeds dim P^{self.n}")
        remaining = hilbert.poly
        coefficients = [0] * (self.n + 1)
        while not remaining.is_zero:
            j = remaining.degree()
            c = remaining.LC() * factorial(j)
            if not c.is_integer:
                raise NotIntegerValued(f"{hilbert} is not integer-valued")
            coefficients[j] = int(c)
            remaining = remaining - _binomial_polynomial(j, 0) * int(c)
        return tuple(coefficients)

    def compose_class(self, coefficients):
        total = HilbertPoly.zero()
        for j, c in enumerate(coefficients):
            if c:
                total = total + int(c) * self.basis_hilbert(j)
        return total

    def intersect(self, first, second):
        """Product in K(P^n): [O_{P^a}]·[O_{P^b}] = [O_{P^{a+b−n}}] or 0."""
        left, right = self.decompose(first), self.decompose(second)
        product = [0] * (self.n + 1)
        for a, x in enumerate(left):
            for b, y in enumerate(right):
                if x and y and a + b >= self.n:
                    product[a + b - self.n] += x * y
        return self.compose_class(product)

    def dual_basis(self, j):
        """[O_{P^{n−j}}(−1)], dual to [O_{P^j}] under χ(α·β)."""
        self._check(j)
        return self.twist(self.basis_hilbert(self.n - j), -1)

    def dual_pairing_matrix(self):
        size = self.n + 1
        matrix = np.zeros((size, size), dtype=object)
        for i in range(size):
            for j in range(size):
                matrix[i, j] = self.chi(self.intersect(self.basis_hilbert(i), self.dual_basis(j)))
        logger.debug("K(P^%d) pairing matrix computed", self.n)
        return matrix


def projective_k_model(n):
    if n < 0:
        raise InvalidIndex("projective space needs n ≥ 0")
    return ProjectiveKModel(n)
