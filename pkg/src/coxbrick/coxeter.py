"""Coxeter groups of types A_n and D_n as (signed) permutation groups.

Elements are kept in window notation.  A type-A element of rank n is a
permutation (w(1),...,w(n+1)) of [1, n+1]; a type-D element of rank n is
(w(1),...,w(n)) where the absolute values run over [1, n], the number of
negative entries is even, and the action extends to +/-[1, n] by
w(-i) = -w(i).

Composition follows (sigma tau)(i) = sigma(tau(i)), so multiplying by a
simple reflection on the right permutes window positions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

DEFAULT_ENUMERATION_CAP = 50_000


class Family(str, Enum):
    A = "A"
    D = "D"


class CapacityError(Exception):
    """A requested rank exceeds a configured enumeration cap."""


@dataclass(frozen=True)
class DynkinType:
    family: Family
    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        lo = 1 if self.family is Family.A else 2
        if self.rank < lo:
            raise ValueError(f"type {self.family.value} needs rank >= {lo}, got {self.rank}")

    @property
    def vertices(self) -> tuple[int, ...]:
        """Diagram vertices: [1,n] for A_n, {-1} + [1,n-1] for D_n."""
        if self.family is Family.A:
            return tuple(range(1, self.rank + 1))
        return (-1,) + tuple(range(1, self.rank))

    @property
    def window_size(self) -> int:
        return self.rank + 1 if self.family is Family.A else self.rank

    @property
    def group_order(self) -> int:
        n = self.rank
        if self.family is Family.A:
            return math.factorial(n + 1)
        return (1 << (n - 1)) * math.factorial(n)

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


@dataclass(frozen=True)
class CoxeterElement:
    """A group element as an immutable window; equality is window equality."""

    dynkin: DynkinType
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        t, w = self.dynkin, self.window
        if len(w) != t.window_size:
            raise ValueError(f"window length {len(w)} != {t.window_size} for {t}")
        if t.family is Family.A:
            if sorted(w) != list(range(1, t.rank + 2)):
                raise ValueError(f"not a permutation of [1,{t.rank + 1}]: {w}")
        else:
            if sorted(abs(x) for x in w) != list(range(1, t.rank + 1)):
                raise ValueError(f"absolute values must form [1,{t.rank}]: {w}")
            if sum(1 for x in w if x < 0) % 2 != 0:
                raise ValueError(f"odd number of negative entries: {w}")

    def __call__(self, i: int) -> int:
        """Evaluate w(i); type D extends to negative arguments by w(-i)=-w(i)."""
        if i > 0:
            return self.window[i - 1]
        if self.dynkin.family is Family.D and i < 0:
            return -self.window[-i - 1]
        raise ValueError(f"bad argument {i}")

    def inverse(self) -> "CoxeterElement":
        pos = {v: i for i, v in enumerate(self.window, start=1)}
        if self.dynkin.family is Family.A:
            return CoxeterElement(self.dynkin, tuple(pos[v] for v in range(1, len(self.window) + 1)))
        inv = []
        for v in range(1, len(self.window) + 1):
            inv.append(pos[v] if v in pos else -pos[-v])
        return CoxeterElement(self.dynkin, tuple(inv))

    def inverse_at(self, value: int) -> int:
        """Position of a value, i.e. w^{-1}(value); extended by w^{-1}(-x) = -w^{-1}(x)."""
        for i, v in enumerate(self.window, start=1):
            if v == value:
                return i
            if self.dynkin.family is Family.D and v == -value:
                return -i
        raise ValueError(f"value {value} not in window {self.window}")

    def __str__(self) -> str:
        return format_window(self.window)

    def __lt__(self, other: "CoxeterElement") -> bool:
        return self.window < other.window


@dataclass(frozen=True, order=True)
class Reflection:
    """An unordered inversion datum: (a b) in type A, (-a -b)(a b) in type D."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not self.a > abs(self.b) >= 1:
            raise ValueError(f"need a > |b| >= 1, got ({self.a}, {self.b})")


def format_window(window: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in window)


def parse_window(dynkin: DynkinType, text: str) -> CoxeterElement:
    """Parse comma-separated signed integers, e.g. "5,3,-7,4,-6,-8,9,-1,2"."""
    entries = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            entries.append(int(tok))
        except ValueError:
            raise ValueError(f"bad window entry {tok!r}") from None
    return CoxeterElement(dynkin, tuple(entries))


def identity(dynkin: DynkinType) -> CoxeterElement:
    return CoxeterElement(dynkin, tuple(range(1, dynkin.window_size + 1)))


def simple_reflection(dynkin: DynkinType, i: int) -> CoxeterElement:
    """The generator s_i.  Type A: (i i+1).  Type D: (-i -(i+1))(i i+1) for
    i >= 1, and (-1 2)(-2 1) for i = -1."""
    if i not in dynkin.vertices:
        raise ValueError(f"{i} is not a vertex of {dynkin}")
    w = list(range(1, dynkin.window_size + 1))
    if i == -1:
        w[0], w[1] = -2, -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return CoxeterElement(dynkin, tuple(w))


def multiply(u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
    """(uv)(i) = u(v(i))."""
    if u.dynkin != v.dynkin:
        raise ValueError(f"mismatched types {u.dynkin} and {v.dynkin}")
    return CoxeterElement(u.dynkin, tuple(u(v(i)) for i in range(1, u.dynkin.window_size + 1)))


def all_reflections(dynkin: DynkinType) -> tuple[Reflection, ...]:
    """All reflections, ordered (a ascending, then b)."""
    out = []
    if dynkin.family is Family.A:
        for a in range(2, dynkin.rank + 2):
            for b in range(1, a):
                out.append(Reflection(a, b))
    else:
        for a in range(2, dynkin.rank + 1):
            for b in sorted(set(range(1, a)) | set(range(-a + 1, 0))):
                out.append(Reflection(a, b))
    return tuple(out)


def reflection_from_values(dynkin: DynkinType, x: int, y: int) -> Reflection:
    """Normalise the reflection exchanging values x and y (and -x, -y in type D)."""
    if dynkin.family is Family.A:
        return Reflection(max(x, y), min(x, y))
    if abs(x) < abs(y):
        x, y = y, x
    if x < 0:
        x, y = -x, -y
    return Reflection(x, y)


def inversions(w: CoxeterElement) -> frozenset[Reflection]:
    """Inversion set; its cardinality is the Coxeter length of w.

    Type A: {(a b) : a > b, w^{-1}(a) < w^{-1}(b)}.
    Type D: {(-a -b)(a b) : a > |b|, w^{-1}(a) < w^{-1}(b)}.
    """
    pos = {v: i for i, v in enumerate(w.window, start=1)}
    out = set()
    if w.dynkin.family is Family.A:
        for a in range(2, w.dynkin.rank + 2):
            for b in range(1, a):
                if pos[a] < pos[b]:
                    out.add(Reflection(a, b))
    else:
        def p(v: int) -> int:
            return pos[v] if v in pos else -pos[-v]

        for a in range(2, w.dynkin.rank + 1):
            for b in itertools.chain(range(1, a), range(-a + 1, 0)):
                if p(a) < p(b):
                    out.add(Reflection(a, b))
    return frozenset(out)


def length(w: CoxeterElement) -> int:
    return len(inversions(w))


def descents(w: CoxeterElement) -> frozenset[int]:
    """Vertices d with w s_d < w: window descents, plus -1 when -w(1) > w(2)."""
    out = set()
    n = w.dynkin.rank
    if w.dynkin.family is Family.A:
        out.update(i for i in range(1, n + 1) if w.window[i - 1] > w.window[i])
    else:
        out.update(i for i in range(1, n) if w.window[i - 1] > w.window[i])
        if -w.window[0] > w.window[1]:
            out.add(-1)
    return frozenset(out)


def join_irreducible_type(w: CoxeterElement) -> int | None:
    """The unique descent when w is join-irreducible, else None."""
    des = descents(w)
    if len(des) == 1:
        return next(iter(des))
    return None


def cover_reflections(w: CoxeterElement) -> frozenset[Reflection]:
    """cov(w) = {w s_d w^{-1} : d in des(w)}, normalised per type.

    For a descent d >= 1 this exchanges the window values w(d), w(d+1);
    for d = -1 (type D) it exchanges -w(1) and w(2).
    """
    out = set()
    for d in descents(w):
        if d == -1:
            out.add(reflection_from_values(w.dynkin, -w.window[0], w.window[1]))
        else:
            out.add(reflection_from_values(w.dynkin, w.window[d - 1], w.window[d]))
    return frozenset(out)


def weak_leq(u: CoxeterElement, w: CoxeterElement) -> bool:
    """Right weak order: u <= w iff inv(u) is contained in inv(w)."""
    if u.dynkin != w.dynkin:
        raise ValueError(f"mismatched types {u.dynkin} and {w.dynkin}")
    return inversions(u) <= inversions(w)


def enumerate_group(
    dynkin: DynkinType, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[CoxeterElement, ...]:
    """All group elements, lexicographically ordered by window.

    Raises CapacityError when the group order exceeds `cap`; the cap is a
    parameter so callers (tests, CLI) choose their own budget.
    """
    order = dynkin.group_order
    if order > cap:
        raise CapacityError(
            f"|W({dynkin})| = {order} exceeds the enumeration cap {cap}"
        )
    n = dynkin.rank
    if dynkin.family is Family.A:
        return tuple(
            CoxeterElement(dynkin, perm)
            for perm in itertools.permutations(range(1, n + 2))
        )
    windows = []
    for perm in itertools.permutations(range(1, n + 1)):
        for k in range(0, n + 1, 2):
            for negs in itertools.combinations(range(n), k):
                w = list(perm)
                for i in negs:
                    w[i] = -w[i]
                windows.append(tuple(w))
    windows.sort()
    return tuple(CoxeterElement(dynkin, w) for w in windows)
