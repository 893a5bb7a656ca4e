# schubert_app/polyring.py
"""Exact sparse polynomials over the integers, divided differences, and the
Schubert / Grothendieck polynomial bases.

Monomials are exponent tuples with trailing zeros stripped, so plain tuple
comparison is the pinned monomial order (lex with x_1 > x_2 > ⋯). In that
order x^{code(w)} is the smallest monomial of S_w, which drives the greedy
expansion below.

Conventions: S_{w_o} = G_{w_o} = x_1^{n-1} x_2^{n-2} ⋯ x_{n-1};
S_{ws_i} = ∂_i S_w and G_{ws_i} = π_i G_w whenever ℓ(ws_i) = ℓ(w) − 1, with
π_i f = ∂_i((1 − x_{i+1}) f). Polynomials are computed from a dominant
permutation above w, where both equal x^{code(w)}, and are memoized on the
trimmed permutation since they do not depend on the window.
"""

import heapq
import logging
import threading
from enum import Enum
from functools import lru_cache
from types import MappingProxyType

from .conf import engine_setting
from .exceptions import AmbientCapExceeded, ConventionViolation, ExpansionCapExceeded
from .weyl import Permutation

logger = logging.getLogger(__name__)


def _strip(exps):
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return tuple(exps[:end])


def _add_exps(a, b):
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def _accumulate(acc, key, value):
    total = acc.get(key, 0) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


class Poly:
    """Immutable polynomial in x_1, x_2, … with int coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            _accumulate(clean, _strip(exps), int(coeff))
        self._terms = clean

    @classmethod
    def _wrap(cls, clean):
        # caller guarantees stripped keys and no zero coefficients
        poly = cls.__new__(cls)
        poly._terms = clean
        return poly

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def constant(cls, c):
        return cls._wrap({(): int(c)} if c else {})

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def variable(cls, i):
        return cls.monomial((0,) * (i - 1) + (1,))

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): coeff})

    # --- inspection ---

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        # constants compare equal to ints, so they must hash like them
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self._terms.items()))

    def is_constant(self):
        return all(not e for e in self._terms)

    def coefficient(self, exps):
        return self._terms.get(_strip(tuple(exps)), 0)

    def constant_term(self):
        return self._terms.get((), 0)

    def num_variables(self):
        return max((len(e) for e in self._terms), default=0)

    def degree(self):
        return max((sum(e) for e in self._terms), default=None)

    def lowest_degree(self):
        return min((sum(e) for e in self._terms), default=None)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_component(self, d):
        return Poly._wrap({e: c for e, c in self._terms.items() if sum(e) == d})

    def lowest_term(self):
        """(exponents, coefficient) of the lex-smallest monomial."""
        exps = min(self._terms)
        return exps, self._terms[exps]

    def sorted_terms(self):
        return sorted(self._terms.items(), reverse=True)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps, start=1) if e]
            if not factors:
                pieces.append(str(coeff))
            elif coeff in (1, -1):
                pieces.append(("-" if coeff < 0 else "") + "*".join(factors))
            else:
                pieces.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    # --- arithmetic ---

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for exps, coeff in other._terms.items():
            _accumulate(acc, exps, coeff)
        return Poly._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly.zero()
            return Poly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        acc = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                _accumulate(acc, _add_exps(a, b), ca * cb)
        return Poly._wrap(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def swap(self, i):
        """Action of s_i: exchange x_i and x_{i+1}."""
        acc = {}
        for exps, coeff in self._terms.items():
            e = list(exps) + [0] * max(0, i + 1 - len(exps))
            e[i - 1], e[i] = e[i], e[i - 1]
            _accumulate(acc, _strip(e), coeff)
        return Poly._wrap(acc)


# --- operators ---


def divided_difference(i, f):
    """∂_i f = (f − s_i f)/(x_i − x_{i+1}), termwise and exact."""
    if i < 1:
        raise ValueError(f"divided difference index must be ≥ 1, got {i}")
    acc = {}
    for exps, coeff in f.items():
        e = list(exps) + [0] * max(0, i + 1 - len(exps))
        p, q = e[i - 1], e[i]
        if p == q:
            continue
        sign = 1
        if p < q:
            p, q, sign = q, p, -1
        for k in range(p - q):
            e[i - 1] = p - 1 - k
            e[i] = q + k
            _accumulate(acc, _strip(e), sign * coeff)
    return Poly._wrap(acc)


def isobaric_difference(i, f):
    """π_i f = ∂_i((1 − x_{i+1}) f)."""
    return divided_difference(i, f - Poly.variable(i + 1) * f)


class Family(str, Enum):
    SCHUBERT = "S"
    GROTHENDIECK = "G"


@lru_cache(maxsize=None)
def _family_poly(family, images):
    w = Permutation(images)
    c = w.code()
    for i in range(len(c) - 1):
        if c[i] < c[i + 1]:
            parent = _family_poly(family, w.times_transposition(i + 1, i + 2).trim().images)
            if family is Family.SCHUBERT:
                return divided_difference(i + 1, parent)
            return isobaric_difference(i + 1, parent)
    return Poly.monomial(c)


def schubert_poly(w):
    return _family_poly(Family.SCHUBERT, w.trim().images)


def grothendieck_poly(w):
    return _family_poly(Family.GROTHENDIECK, w.trim().images)


def family_poly(family, w):
    return _family_poly(Family(family), w.trim().images)


# --- expansions ---


def _rewindow(coeffs, window):
    if not coeffs:
        return {}
    m = max([window or 1] + [w.window for w in coeffs])
    embedded = {w.embed(m): c for w, c in coeffs.items()}
    return dict(sorted(embedded.items(), key=lambda item: item[0].sort_key))


def _schubert_greedy(terms):
    remaining = dict(terms)
    found = {}
    while remaining:
        exps = min(remaining)
        coeff = remaining[exps]
        w = Permutation.from_code(exps).trim()
        s = schubert_poly(w)
        lead, lead_coeff = s.lowest_term()
        if lead != exps or lead_coeff != 1:
            raise ConventionViolation(
                "smallest monomial of a Schubert polynomial is not x^code",
                {"perm": w.to_list(), "expected": list(exps), "found": list(lead)},
            )
        found[w] = coeff
        for e, c in s.items():
            _accumulate(remaining, e, -coeff * c)
    return found


def expand_schubert(f, window=None):
    """Coefficients of f in the Schubert basis, keyed by permutations of a
    common window (at least ``window``)."""
    return _rewindow(_schubert_greedy(f.terms), window)


def _grothendieck_layers(f, cap):
    remaining = dict(f.terms)
    found = {}
    while remaining:
        d = min(sum(e) for e in remaining)
        if d > cap:
            raise ExpansionCapExceeded(f"Grothendieck expansion passed degree cap {cap}")
        layer = {e: c for e, c in remaining.items() if sum(e) == d}
        for w, coeff in _schubert_greedy(layer).items():
            _accumulate(found, w, coeff)
            for e, c in grothendieck_poly(w).items():
                _accumulate(remaining, e, -coeff * c)
    return found


def expand_grothendieck(f, cap=None, window=None):
    """Coefficients of f in the Grothendieck basis, lowest degree first."""
    if cap is None:
        natural = max(window or 1, f.num_variables() + 1)
        cap = engine_setting("grothendieck_degree_factor") * natural ** 2
    return _rewindow(_grothendieck_layers(f, cap), window)


def expand_in_family(family, f, cap=None, window=None):
    if Family(family) is Family.SCHUBERT:
        return expand_schubert(f, window=window)
    return expand_grothendieck(f, cap=cap, window=window)


def stable_product_expand(u, v, basis=Family.SCHUBERT, cap=None):
    """Expand S_u·S_v (or G_u·G_v) over S_m, growing m from the factors'
    window until no term of the expansion lies outside S_m."""
    family = Family(basis)
    u, v = u.trim(), v.trim()
    product = family_poly(family, u) * family_poly(family, v)
    full = {w.trim(): c for w, c in expand_in_family(family, product).items()}
    ambient_cap = cap if cap is not None else engine_setting("ambient_cap")
    m = max(u.window, v.window)
    # equal restrictions at m and m + 1 are not enough: x_1^4 = S_{51234}
    # skips windows 3 and 4 entirely
    while any(w.window > m for w in full):
        m += 1
        if m > ambient_cap:
            raise AmbientCapExceeded(f"stable expansion of {u} * {v} needs ambient > {ambient_cap}")
    logger.debug("stable %s-product %s * %s settled in ambient %d", family.value, u, v, m)
    return _rewindow(full, m)


# --- the coinvariant quotient ---


def _compositions(total, parts):
    """Exponent vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class CoinvariantRing:
    """Z[x_1..x_n]/(e_1, …, e_n), the ring both H*(Fl_n) and K(Fl_n) are
    presented on.

    Normal forms use the Gröbner basis {h_{n−j+1}(x_1..x_j)} whose leading
    terms are x_j^{n−j+1} for lex with x_n > ⋯ > x_1; standard monomials are
    the staircase a_j ≤ n − j.
    """

    _instances = {}
    _instances_lock = threading.Lock()

    @classmethod
    def of(cls, n):
        with cls._instances_lock:
            ring = cls._instances.get(n)
            if ring is None:
                ring = cls._instances[n] = cls(n)
            return ring

    def __init__(self, n):
        self.n = n
        self._lock = threading.Lock()
        self._normal_forms = {}
        self._tails = {}
        for j in range(1, n + 1):
            k = n - j + 1
            # x_j^k ≡ −(h_k(x_1..x_j) − x_j^k)
            self._tails[j] = [
                _strip(a) for a in _compositions(k, j) if a[j - 1] != k
            ]

    def _order_key(self, exps):
        padded = tuple(exps) + (0,) * (self.n - len(exps))
        return tuple(-e for e in reversed(padded))

    def _violation(self, exps):
        for j in range(len(exps), 0, -1):
            if exps[j - 1] > self.n - j:
                return j
        return None

    def is_standard(self, exps):
        return len(exps) <= self.n and self._violation(exps) is None

    def staircase(self):
        """Standard monomials, in descending monomial order."""
        ranges = [range(self.n - j, -1, -1) for j in range(1, self.n + 1)]
        found = [()]
        for r in ranges:
            found = [prefix + (e,) for prefix in found for e in r]
        return sorted({_strip(e) for e in found}, reverse=True)

    def monomial_normal_form(self, exps):
        exps = _strip(tuple(exps))
        cached = self._normal_forms.get(exps)
        if cached is not None:
            return cached
        if len(exps) > self.n:
            raise ValueError(f"x_{len(exps)} does not exist in the ring of window {self.n}")
        result = {}
        pending = {exps: 1}
        heap = [(self._order_key(exps), exps)]
        while heap:
            _, current = heapq.heappop(heap)
            coeff = pending.pop(current, 0)
            if not coeff:
                continue
            known = self._normal_forms.get(current)
            if known is not None:
                for e, c in known.items():
                    _accumulate(result, e, coeff * c)
                continue
            j = self._violation(current)
            if j is None:
                _accumulate(result, current, coeff)
                continue
            quotient = list(current)
            quotient[j - 1] -= self.n - j + 1
            for tail in self._tails[j]:
                new = _strip(_add_exps(tuple(quotient), tail))
                if new not in pending:
                    heapq.heappush(heap, (self._order_key(new), new))
                # a cancelled entry stays on the heap; popping it finds no coefficient
                _accumulate(pending, new, -coeff)
        with self._lock:
            self._normal_forms.setdefault(exps, result)
        return self._normal_forms[exps]

    def normal_form(self, f):
        acc = {}
        for exps, coeff in f.items():
            for e, c in self.monomial_normal_form(exps).items():
                _accumulate(acc, e, coeff * c)
        return Poly._wrap(acc)

    def multiply(self, f, g):
        """Normal form of f·g without building the unreduced product."""
        acc = {}
        for a, ca in f.items():
            for b, cb in g.items():
                for e, c in self.monomial_normal_form(_add_exps(a, b)).items():
                    _accumulate(acc, e, ca * cb * c)
        return Poly._wrap(acc)

    def _check_window(self, coeffs):
        for w in coeffs:
            if w.window > self.n:
                raise ConventionViolation(
                    f"reduced expansion left S_{self.n}", {"perm": w.to_list()}
                )
        return _rewindow(coeffs, self.n)

    def schubert_expand(self, f):
        return self._check_window(_schubert_greedy(self.normal_form(f).terms))

    def grothendieck_expand(self, f):
        reduced = self.normal_form(f)
        cap = engine_setting("grothendieck_degree_factor") * self.n ** 2
        return self._check_window(_grothendieck_layers(reduced, cap))
