# schubert_app/weyl.py
"""The symmetric group S_n as the Weyl group of GL_n.

Permutations are stored in one-line notation (``images[k-1] == w(k)``) and
are immutable. Right multiplication by a transposition swaps positions, so
``w.times_transposition(i, j)`` is w·s_ij.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .conf import engine_setting
from .exceptions import (
    InvalidComposition,
    InvalidPermutation,
    InvalidWeight,
    WindowMismatch,
    WordLimitExceeded,
)

logger = logging.getLogger(__name__)


def _parse_int_list(text, error_cls):
    try:
        return tuple(int(token) for token in str(text).replace(" ", "").split(",") if token != "")
    except ValueError as exc:
        raise error_cls(f"expected comma-separated integers, got {text!r}") from exc


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if not images or sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(f"{self.images!r} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    # --- constructors ---

    @classmethod
    def identity(cls, n):
        if n < 1:
            raise InvalidPermutation("window must be at least 1")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_string(cls, text):
        """Parse ``"2,3,1"``."""
        return cls(_parse_int_list(text, InvalidPermutation))

    @classmethod
    def transposition(cls, i, j, n):
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise InvalidPermutation(f"no transposition ({i},{j}) in S_{n}")
        return cls.identity(n).times_transposition(i, j)

    @classmethod
    def simple(cls, i, n):
        return cls.transposition(i, i + 1, n)

    @classmethod
    def from_code(cls, code, window=None):
        """Inverse of :meth:`code`; the window is the smallest that fits."""
        code = tuple(int(c) for c in code)
        if any(c < 0 for c in code):
            raise InvalidPermutation(f"code entries must be non-negative: {code}")
        size = max([len(code), 1] + [i + c for i, c in enumerate(code, start=1)])
        if window is not None:
            size = max(size, window)
        available = list(range(1, size + 1))
        images = [available.pop(c) for c in code]
        images.extend(available)
        return cls(tuple(images))

    # --- basic data ---

    @property
    def window(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __str__(self):
        return ",".join(str(i) for i in self.images)

    def to_list(self):
        return list(self.images)

    @property
    def sort_key(self):
        return (self.length(), self.images)

    def length(self):
        imgs = self.images
        n = len(imgs)
        return sum(1 for i in range(n) for j in range(i + 1, n) if imgs[i] > imgs[j])

    def code(self):
        imgs = self.images
        n = len(imgs)
        return tuple(sum(1 for j in range(i + 1, n) if imgs[j] < imgs[i]) for i in range(n))

    def descents(self):
        """Right descents: positions i with w(i) > w(i+1)."""
        imgs = self.images
        return [i for i in range(1, len(imgs)) if imgs[i - 1] > imgs[i]]

    # --- group structure ---

    def inverse(self):
        inv = [0] * self.window
        for position, value in enumerate(self.images, start=1):
            inv[value - 1] = position
        return Permutation(tuple(inv))

    def compose(self, other):
        """``self ∘ other``, i.e. k ↦ self(other(k))."""
        if self.window != other.window:
            raise WindowMismatch(f"cannot compose windows {self.window} and {other.window}")
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    __mul__ = compose

    def times_transposition(self, i, j):
        imgs = list(self.images)
        imgs[i - 1], imgs[j - 1] = imgs[j - 1], imgs[i - 1]
        return Permutation(tuple(imgs))

    # --- windows ---

    def embed(self, m):
        """Image under S_n ↪ S_m fixing the trailing points (or shrink if fixed)."""
        if m >= self.window:
            return Permutation(self.images + tuple(range(self.window + 1, m + 1)))
        trimmed = self.trim()
        if trimmed.window > m:
            raise WindowMismatch(f"{self} does not fit in window {m}")
        return trimmed.embed(m)

    def trim(self):
        imgs = self.images
        end = len(imgs)
        while end > 1 and imgs[end - 1] == end:
            end -= 1
        return Permutation(imgs[:end])


# --- module-level operations ---


def compose(u, v):
    return u.compose(v)


def inverse(w):
    return w.inverse()


def length(w):
    return w.length()


def code(w):
    return w.code()


def longest_element(n):
    if n < 1:
        raise InvalidPermutation("window must be at least 1")
    return Permutation(tuple(range(n, 0, -1)))


def _same_window(v, w):
    if v.window != w.window:
        raise WindowMismatch(f"windows differ: {v.window} vs {w.window}")


def common_window(*perms):
    m = max(p.window for p in perms)
    return tuple(p.embed(m) for p in perms)


@lru_cache(maxsize=None)
def all_permutations(n):
    """S_n in canonical (length, lex) order."""
    perms = [Permutation(images) for images in permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=lambda p: p.sort_key))


def bruhat_leq(v, w):
    """Sorted-prefix criterion: v ≤ w iff every sorted prefix of v is dominated."""
    _same_window(v, w)
    for d in range(1, v.window):
        low = sorted(v.images[:d])
        high = sorted(w.images[:d])
        if any(a > b for a, b in zip(low, high)):
            return False
    return True


def covers_with_transpositions(w):
    """Triples (i, j, w·s_ij) for every element covered by w."""
    imgs = w.images
    n = len(imgs)
    found = []
    for i in range(n):
        for j in range(i + 1, n):
            if imgs[i] > imgs[j] and not any(imgs[j] < imgs[k] < imgs[i] for k in range(i + 1, j)):
                found.append((i + 1, j + 1, w.times_transposition(i + 1, j + 1)))
    return found


def covers(w):
    return sorted((v for _, _, v in covers_with_transpositions(w)), key=lambda p: p.sort_key)


def mobius(v, w):
    v, w = common_window(v, w)
    if not bruhat_leq(v, w):
        return 0
    return (-1) ** (w.length() - v.length())


def bruhat_interval(v, w):
    v, w = common_window(v, w)
    return [x for x in all_permutations(v.window) if bruhat_leq(v, x) and bruhat_leq(x, w)]


# --- reduced words ---


def word_product(word, n):
    """s_{a_1} s_{a_2} ⋯ s_{a_k} in S_n."""
    w = Permutation.identity(n)
    for a in word:
        w = w.times_transposition(a, a + 1)
    return w


@lru_cache(maxsize=None)
def _count_words(images):
    w = Permutation(images)
    descents = w.descents()
    if not descents:
        return 1
    return sum(_count_words(w.times_transposition(i, i + 1).images) for i in descents)


@lru_cache(maxsize=4096)
def _words(images):
    w = Permutation(images)
    descents = w.descents()
    if not descents:
        return ((),)
    found = []
    for i in descents:
        for word in _words(w.times_transposition(i, i + 1).images):
            found.append(word + (i,))
    return tuple(found)


def count_reduced_words(w):
    return _count_words(w.images)


def reduced_words(w, limit=None):
    """All reduced words of w, sorted; raises if there are more than ``limit``
    (default: SCHUBERT_CALC reduced_word_limit)."""
    if limit is None:
        limit = engine_setting("reduced_word_limit")
    total = count_reduced_words(w)
    if total > limit:
        raise WordLimitExceeded(f"{w} has {total} reduced words (limit {limit})")
    logger.debug("enumerating %d reduced words of %s", total, w)
    return sorted(_words(w.images))


def reduced_word(w):
    """One reduced word of w, found greedily without enumerating the others."""
    word = []
    current = w
    while True:
        descents = current.descents()
        if not descents:
            break
        i = min(descents)
        word.append(i)
        current = current.times_transposition(i, i + 1)
    return tuple(reversed(word))


# --- parabolic data ---


@dataclass(frozen=True)
class Composition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p <= 0 for p in parts):
            raise InvalidComposition(f"parts must be positive: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_string(cls, text):
        return cls(_parse_int_list(text, InvalidComposition))

    @property
    def window(self):
        return sum(self.parts)

    def blocks(self):
        """0-based half-open position ranges of the blocks."""
        start = 0
        for part in self.parts:
            yield start, start + part
            start += part

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


def _check_type(w, composition):
    if composition.window != w.window:
        raise InvalidComposition(
            f"composition {composition} sums to {composition.window}, window is {w.window}"
        )


def coset_reps(w, composition, mode="min"):
    """Minimal (increasing on blocks) or maximal representative of w·W_P."""
    _check_type(w, composition)
    if mode not in ("min", "max"):
        raise InvalidComposition(f"mode must be 'min' or 'max', got {mode!r}")
    imgs = list(w.images)
    for start, end in composition.blocks():
        imgs[start:end] = sorted(imgs[start:end], reverse=(mode == "max"))
    return Permutation(tuple(imgs))


def parabolic_longest(composition):
    """w_{0,P}: reverses every block."""
    imgs = []
    for start, end in composition.blocks():
        imgs.extend(range(end, start, -1))
    return Permutation(tuple(imgs))


def min_coset_representatives(composition):
    n = composition.window
    return [w for w in all_permutations(n) if coset_reps(w, composition, "min") == w]


def dimension_partial_flag(composition):
    parts = composition.parts
    return sum(parts[i] * parts[j] for i in range(len(parts)) for j in range(i + 1, len(parts)))


def support(w):
    n = w.window
    return {i for i in range(1, n) if bruhat_leq(Permutation.simple(i, n), w)}


# --- weights ---


@dataclass(frozen=True)
class Weight:
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise InvalidWeight("a weight needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_string(cls, text):
        return cls(_parse_int_list(text, InvalidWeight))

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @property
    def window(self):
        return len(self.entries)

    def __str__(self):
        return ",".join(str(e) for e in self.entries)

    def _check(self, other):
        if self.window != other.window:
            raise WindowMismatch(f"weights of windows {self.window} and {other.window}")

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.entries))

    def is_zero(self):
        return not any(self.entries)

    def is_dominant(self):
        e = self.entries
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    def is_regular_dominant(self):
        e = self.entries
        return all(e[i] > e[i + 1] for i in range(len(e) - 1))

    def split(self):
        """(α, β) with entries ≥ 0 and self = α − β."""
        positive = Weight(tuple(max(e, 0) for e in self.entries))
        negative = Weight(tuple(max(-e, 0) for e in self.entries))
        return positive, negative


def fundamental_weight(d, n):
    if not 1 <= d <= n:
        raise InvalidWeight(f"fundamental weight χ_{d} needs 1 ≤ d ≤ {n}")
    return Weight((1,) * d + (0,) * (n - d))


def rho(n):
    return Weight(tuple(range(n - 1, -1, -1)))


def unit_weight(i, n):
    if not 1 <= i <= n:
        raise InvalidWeight(f"ε_{i} needs 1 ≤ i ≤ {n}")
    return Weight(tuple(1 if k == i else 0 for k in range(1, n + 1)))


# --- posets ---


@dataclass(frozen=True)
class BruhatPoset:
    """Hasse diagram: ``cover_pairs`` holds (lower, upper) pairs."""

    elements: tuple
    cover_pairs: tuple

    @classmethod
    def from_covers(cls, elements, lower_covers):
        elements = tuple(elements)
        pairs = tuple((low, up) for up in elements for low in lower_covers(up))
        return cls(elements, pairs)

    def __len__(self):
        return len(self.elements)

    def lower_covers(self, x):
        return [low for low, up in self.cover_pairs if up == x]


def bruhat_poset(n):
    return BruhatPoset.from_covers(all_permutations(n), covers)
