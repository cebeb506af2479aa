"""Lattice-path generating functions over the succession rules.

A label sequence following the succession rule of either tree pattern is a
lattice path in Z^3.  Some steps are *recorded*: for 2143 the same-layer
steps that bump the active-site count and every step into a lower layer; for
1234 every step that bumps the active-site count.  Unrecorded steps never
move the x-coordinate.  The *signature* of a path is the starting
x-coordinate followed by the x-coordinates at the endpoints of its recorded
steps, in order.

``F(pattern, k, q, gamma)`` is the series in ``t`` counting paths that start
at ``(gamma[0], gamma[0] + k, q)`` and realize signature ``gamma``, weighted
by ``t ** (points - len(gamma))``.  It satisfies a short recursion in
``(len(gamma), q, k)``, computed here over truncated integer series, and is
the same series for both patterns - which is what makes the two avoider
counts agree.  Avoider counts drop out as single coefficients:
``|B_n^j| = sum over gamma starting at j+1 of [t^(n-j+1-|gamma|)]
F(0, j+1, gamma)``.

Series arithmetic never leaves truncated integer polynomials; the geometric
series ``s = 1 + t + t^2 + ...`` enters only as the prefix-sum operator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Counter as CounterT, Iterable, Iterator

from collections import Counter

from .core import Pattern
from .gentree import PATTERN_1234, PATTERN_2143, TreeLabel, successors

__all__ = [
    "TruncatedSeries",
    "validate_signature",
    "signatures",
    "SeriesCache",
    "f_series",
    "avoider_count_from_series",
    "LatticePath",
    "is_recorded",
    "path_from_points",
    "signature_of",
    "iter_paths",
    "path_profile",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial in ``t`` truncated at a fixed degree bound.

    Coefficients are exact integers and may go negative in intermediate
    expressions; the final path series are nonnegative.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least degree 0")

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, degree_bound: int) -> "TruncatedSeries":
        return cls((0,) * (degree_bound + 1))

    @classmethod
    def one(cls, degree_bound: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * degree_bound)

    @classmethod
    def geometric_power(cls, k: int, degree_bound: int) -> "TruncatedSeries":
        """``s^k`` truncated: ``k`` prefix-sum passes over 1."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        out = cls.one(degree_bound)
        for _ in range(k):
            out = out.prefix_sums()
        return out

    def _match(self, other: "TruncatedSeries") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("degree bounds differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def prefix_sums(self) -> "TruncatedSeries":
        """Multiply by ``s = 1/(1-t)``: coefficient ``d`` becomes the sum of
        coefficients ``0..d``."""
        out = []
        acc = 0
        for c in self.coeffs:
            acc += c
            out.append(acc)
        return TruncatedSeries(tuple(out))

    def coefficient(self, d: int) -> int:
        """Coefficient of ``t^d``; degrees past the bound were never
        computed, so asking for them is an error rather than a zero."""
        if not 0 <= d <= self.degree_bound:
            raise ValueError(f"degree {d} outside 0..{self.degree_bound}")
        return self.coeffs[d]

    def __str__(self) -> str:
        terms = [str(self.coeffs[0])]
        terms.extend(
            f"{c}*t" if d == 1 else f"{c}*t^{d}"
            for d, c in enumerate(self.coeffs)
            if d >= 1
        )
        return " + ".join(terms)


def validate_signature(gamma: Iterable[int]) -> tuple[int, ...]:
    """Check the signature constraints and return the tuple.

    The first entry is any positive integer; each later entry lies between 2
    and one more than its predecessor (a recorded step cannot move the
    x-coordinate up by more than one, and never lands at 1).
    """
    g = tuple(gamma)
    if not g:
        raise ValueError("signature must be nonempty")
    if g[0] < 1:
        raise ValueError(f"signature start {g[0]} must be positive")
    for a, b in itertools.pairwise(g):
        if not 2 <= b <= a + 1:
            raise ValueError(f"signature step {a} -> {b} violates 2 <= next <= prev+1")
    return g


def signatures(first: int, max_len: int) -> list[tuple[int, ...]]:
    """All signatures starting at ``first`` with at most ``max_len`` entries,
    ordered by length then lexicographically.

    Entry ``i`` (0-based) is at most ``first + i``, so the list is finite.

    >>> signatures(1, 2)
    [(1,), (1, 2)]
    """
    if first < 1 or max_len < 1:
        raise ValueError("need a positive start and length bound")
    out: list[tuple[int, ...]] = []
    layer = [(first,)]
    out.extend(layer)
    for _ in range(max_len - 1):
        layer = [g + (nxt,) for g in layer for nxt in range(2, g[-1] + 2)]
        out.extend(sorted(layer))
    return out


_KEY_2143 = "2143"
_KEY_1234 = "1234"


def _pattern_key(pattern: Pattern) -> str:
    if pattern == PATTERN_2143:
        return _KEY_2143
    if pattern == PATTERN_1234:
        return _KEY_1234
    raise ValueError(f"no path generating function for pattern {pattern}")


class SeriesCache:
    """Memoized evaluator of the path series at one fixed degree bound.

    Keys are (pattern, k, q, gamma); the degree bound is ambient to the
    session, so entries from different bounds never mix.  Evaluation is a
    pure function of the key, so concurrent duplicate computation would be
    idempotent; within one session a plain dict suffices.
    """

    def __init__(self, degree_bound: int):
        if degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        self.degree_bound = degree_bound
        self._memo: dict[tuple[str, int, int, tuple[int, ...]], TruncatedSeries] = {}
        self._zero = TruncatedSeries.zero(degree_bound)

    def series(self, pattern: Pattern, k: int, q: int, gamma: Iterable[int]) -> TruncatedSeries:
        """``F(pattern, k, q, gamma)`` truncated at the session bound."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        g = validate_signature(gamma)
        key = _pattern_key(pattern)
        # recursion depth shrinks lexicographically in (len, q, k); the
        # stated budget bounds the call stack in debug runs
        budget = len(g) * (max(q, 0) + k + max(g)) + 1
        return self._f(key, k, q, g, budget)

    def _f(
        self,
        key: str,
        k: int,
        q: int,
        gamma: tuple[int, ...],
        budget: int,
    ) -> TruncatedSeries:
        assert budget >= 0, "recursion exceeded the lexicographic depth bound"
        if q <= 0 or not gamma:
            return self._zero
        if key == _KEY_1234 and q == 1:
            key = _KEY_2143  # the two succession rules coincide at layer 1
        memo_key = (key, k, q, gamma)
        hit = self._memo.get(memo_key)
        if hit is not None:
            return hit
        if len(gamma) == 1:
            val = TruncatedSeries.geometric_power(k, self.degree_bound)
        else:
            g1, g2 = gamma[0], gamma[1]
            rest = gamma[1:]
            if key == _KEY_2143:
                if k == 0:
                    val = self._f(key, 0, q - 1, gamma, budget - 1) + self._f(
                        key, g1 + 1 - g2, q, rest, budget - 1
                    )
                else:
                    val = (
                        self._f(key, k - 1, q, gamma, budget - 1)
                        + self._f(key, g1 + 1 - g2 + k, q, rest, budget - 1)
                        - self._f(key, g1 - g2 + k, q, rest, budget - 1)
                    ).prefix_sums()
            else:
                val = self._f(key, k, q - 1, gamma, budget - 1) + self._f(
                    key, g1 + 1 - g2 + k, q, rest, budget - 1
                )
        self._memo[memo_key] = val
        return val


def f_series(
    pattern: Pattern, k: int, q: int, gamma: Iterable[int], degree_bound: int
) -> TruncatedSeries:
    """One-off evaluation of ``F``; see :class:`SeriesCache` for sessions."""
    return SeriesCache(degree_bound).series(pattern, k, q, gamma)


def avoider_count_from_series(n: int, j: int, pattern: Pattern) -> int:
    """``|B_n^j(pattern)|`` extracted from coefficients of ``F``.

    Paths of ``n - j + 1`` points from the tree root ``(j+1, j+1, j+1)``
    correspond to the avoiders; grouping them by signature and reading one
    coefficient per signature gives the count.  Signatures longer than
    ``n - j + 1`` would need a negative degree, so they contribute nothing.
    """
    if not 0 <= j <= n:
        raise ValueError(f"statistic {j} outside 0..{n}")
    degree_bound = n - j + 1
    cache = SeriesCache(degree_bound)
    total = 0
    for g in signatures(j + 1, n - j + 1):
        d = n - j + 1 - len(g)
        total += cache.series(pattern, 0, j + 1, g).coefficient(d)
    return total


# ---------------------------------------------------------------------------
# explicit paths: the desk-scale oracle for the series recursion


@dataclass(frozen=True)
class LatticePath:
    """A label sequence following a succession rule, with per-step flags."""

    points: tuple[TreeLabel, ...]
    recorded: tuple[bool, ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("a path has at least one point")
        if len(self.recorded) != len(self.points) - 1:
            raise ValueError("need one recorded flag per step")

    def __len__(self) -> int:
        return len(self.points)


def is_recorded(start: TreeLabel, end: TreeLabel, pattern: Pattern) -> bool:
    """Classify one succession step as recorded or not.

    Raises if the step is not legal for the pattern's rule.  For 2143 a step
    is recorded when it stays in the layer and bumps the active-site count,
    or whenever it drops to a lower layer (forced through the sites before
    the first turn, so the new count is ``x + 1``).  For 1234 a step is
    recorded exactly when it bumps the active-site count.
    """
    x1, y1, z1 = start
    x2, y2, z2 = end
    key = _pattern_key(pattern)
    if key == _KEY_2143:
        if z2 == z1:
            if y2 == y1 + 1 and 2 <= x2 <= x1 + 1:
                return True
            if x2 == x1 and x1 + 1 <= y2 <= y1:
                return False
        elif 1 <= z2 < z1 and y2 == x1 + 1 and 2 <= x2 <= x1 + 1:
            return True
    else:
        if y2 == y1 + 1 and 2 <= x2 <= x1 + 1 and 1 <= z2 <= z1:
            return True
        if z2 == 1 and x2 == x1 and x1 + 1 <= y2 <= y1:
            return False
    raise ValueError(f"{start} -> {end} is not a legal {pattern} step")


def path_from_points(
    points: Iterable[TreeLabel | tuple[int, int, int]], pattern: Pattern
) -> LatticePath:
    """Validate a point sequence and attach its recorded flags."""
    pts = tuple(TreeLabel(*p) for p in points)
    flags = tuple(
        is_recorded(a, b, pattern) for a, b in itertools.pairwise(pts)
    )
    return LatticePath(pts, flags)


def signature_of(path: LatticePath) -> tuple[int, ...]:
    """Starting x-coordinate, then the x-coordinates after recorded steps."""
    sig = [path.points[0].x]
    for point, flag in zip(path.points[1:], path.recorded):
        if flag:
            sig.append(point.x)
    return tuple(sig)


def iter_paths(
    pattern: Pattern, start: TreeLabel | tuple[int, int, int], max_points: int
) -> Iterator[LatticePath]:
    """Every path from ``start`` with at most ``max_points`` points.

    Any start with ``1 <= x <= y`` and ``z >= 1`` is allowed (tree roots have
    x = y); desk scale only - the number of paths grows like the avoider
    counts themselves.
    """
    first = TreeLabel(*start)
    if not (1 <= first.x <= first.y and first.z >= 1):
        raise ValueError(f"invalid start {first}")
    if max_points < 1:
        return

    points = [first]
    flags: list[bool] = []

    def rec() -> Iterator[LatticePath]:
        yield LatticePath(tuple(points), tuple(flags))
        if len(points) == max_points:
            return
        here = points[-1]
        for child in successors(here, pattern):
            points.append(child)
            flags.append(is_recorded(here, child, pattern))
            yield from rec()
            points.pop()
            flags.pop()

    yield from rec()


def path_profile(
    pattern: Pattern, start: TreeLabel | tuple[int, int, int], max_points: int
) -> CounterT[tuple[tuple[int, ...], int]]:
    """Path counts grouped by (signature, points - signature length).

    Enumerating paths and bucketing them this way is the independent check
    of the series recursion: the bucket ``(gamma, d)`` must equal the
    coefficient of ``t^d`` in ``F`` for the matching start.
    """
    profile: CounterT[tuple[tuple[int, ...], int]] = Counter()
    for path in iter_paths(pattern, start, max_points):
        sig = signature_of(path)
        profile[(sig, len(path) - len(sig))] += 1
    return profile
