"""Posets of degree vectors and their level sets.

A degree vector ``(l_t..l_0, l; m, m_0..m_t)`` counts tensorands of each
kind.  Five orders are supported: ``P`` (allows creating a pair of boxes at
index 0), ``bfP`` (its finite-down-set strengthening), ``P_left``/``P_right``
(one-sided restrictions) and ``P00`` (inner-only).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from threading import Lock
from typing import Iterable

KINDS = ("P", "bfP", "P_left", "P_right", "P00")

DEFAULT_MAX_LEVEL_SIZE = int(os.environ.get("TENSORLAYERS_MAX_LEVEL_SIZE", "200000"))


class PosetError(ValueError):
    pass


class LevelSizeExceeded(PosetError):
    pass


@dataclass(frozen=True, order=True)
class DegreeVector:
    left: tuple[int, ...]
    l: int
    m: int
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.left) != len(self.right) or not self.left:
            raise PosetError("left and right parts must both have length t+1")
        if min(self.left + self.right + (self.l, self.m)) < 0:
            raise PosetError("entries must be nonnegative")

    @property
    def t(self) -> int:
        return len(self.left) - 1

    @classmethod
    def zero(cls, t: int) -> "DegreeVector":
        return cls((0,) * (t + 1), 0, 0, (0,) * (t + 1))

    @classmethod
    def from_extended(cls, left_ext, right_ext) -> "DegreeVector":
        return cls(tuple(left_ext[1:]), left_ext[0], right_ext[0], tuple(right_ext[1:]))

    def left_ext(self) -> tuple[int, ...]:
        return (self.l,) + self.left

    def right_ext(self) -> tuple[int, ...]:
        return (self.m,) + self.right

    def total(self) -> int:
        return self.l + self.m + sum(self.left) + sum(self.right)

    def __add__(self, other: "DegreeVector") -> "DegreeVector":
        return DegreeVector(
            tuple(a + b for a, b in zip(self.left, other.left)),
            self.l + other.l,
            self.m + other.m,
            tuple(a + b for a, b in zip(self.right, other.right)),
        )

    def __str__(self) -> str:
        from .formats import format_degree

        return format_degree(self)


def _tails(xs: tuple[int, ...]) -> list[int]:
    out, acc = [], 0
    for x in reversed(xs):
        acc += x
        out.append(acc)
    return out[::-1]


def _check_shape(k: DegreeVector, l: DegreeVector, kind: str) -> None:
    if kind not in KINDS:
        raise PosetError(f"unknown poset kind {kind!r}")
    if k.t != l.t:
        raise PosetError("degree vectors have different t")
    if kind == "P_left" and (any(v.right_ext() != (0,) * (v.t + 2) for v in (k, l))):
        raise PosetError("P_left elements must have zero right part")
    if kind == "P_right" and (any(v.left_ext() != (0,) * (v.t + 2) for v in (k, l))):
        raise PosetError("P_right elements must have zero left part")
    if kind == "P00" and any(any(v.left) or any(v.right) for v in (k, l)):
        raise PosetError("P00 elements must have zero outer sequences")


def leq(k: DegreeVector, l: DegreeVector, kind: str) -> bool:
    """Order relation ``k <= l`` in the poset ``kind``."""
    _check_shape(k, l, kind)
    if kind == "P00":
        return k.l - k.m == l.l - l.m and k.l <= l.l and k.m <= l.m
    if kind in ("P_left", "P_right"):
        a, b = (k.left_ext(), l.left_ext()) if kind == "P_left" else (k.right_ext(), l.right_ext())
        return sum(a) == sum(b) and all(x >= y for x, y in zip(_tails(a), _tails(b)))
    if k.l - k.m + sum(k.left) - sum(k.right) != l.l - l.m + sum(l.left) - sum(l.right):
        return False
    if k.l > l.l or k.m > l.m:
        return False
    if any(x < y for x, y in zip(_tails(k.left), _tails(l.left))):
        return False
    if any(x < y for x, y in zip(_tails(k.right), _tails(l.right))):
        return False
    if kind == "bfP":
        if k.l + sum(k.left) > l.l + sum(l.left) or k.m + sum(k.right) > l.m + sum(l.right):
            return False
    return True


def lt(k: DegreeVector, l: DegreeVector, kind: str) -> bool:
    return k != l and leq(k, l, kind)


def q_max(l: DegreeVector) -> int:
    """Length minus one of the socle filtration of the order-defining object."""
    t = l.t
    return (l.l + l.m) * (t + 1) + sum((a + b) * (t - j) for j, (a, b) in enumerate(zip(l.left, l.right)))


def _shift(seq: tuple[int, ...], src: int) -> tuple[int, ...]:
    s = list(seq)
    s[src] -= 1
    s[src + 1] += 1
    return tuple(s)


def one_step(l: DegreeVector, kind: str) -> set[DegreeVector]:
    """Elementary alterations: box moves one index outward, contraction, pair creation."""
    if kind not in ("P", "bfP"):
        raise PosetError("one_step is defined for P and bfP")
    t = l.t
    out: set[DegreeVector] = set()
    le, re = l.left_ext(), l.right_ext()
    for i in range(t + 1):  # extended positions 0..t correspond to indices -1..t-1
        if le[i] > 0:
            out.add(DegreeVector.from_extended(_shift(le, i), re))
        if re[i] > 0:
            out.add(DegreeVector.from_extended(le, _shift(re, i)))
    if l.l > 0 and l.m > 0:
        out.add(DegreeVector(l.left, l.l - 1, l.m - 1, l.right))
    if kind == "P":
        out.add(
            DegreeVector(
                (l.left[0] + 1,) + l.left[1:], l.l, l.m, (l.right[0] + 1,) + l.right[1:]
            )
        )
    return out


def _maximal(items: Iterable[DegreeVector], kind: str) -> set[DegreeVector]:
    pool = sorted(items)
    return {x for x in pool if not any(y != x and leq(x, y, kind) for y in pool)}


class _LevelCache:
    """Incrementally extended level lists keyed by ``(l, kind)``."""

    def __init__(self) -> None:
        self._data: dict[tuple[DegreeVector, str], tuple[list[frozenset], set, dict]] = {}
        self._lock = Lock()

    def get(self, l: DegreeVector, kind: str, q_bound: int, cap: int) -> list[frozenset]:
        key = (l, kind)
        with self._lock:
            if key not in self._data:
                self._data[key] = ([frozenset({l})], set(one_step(l, kind)), {l: 0})
            levels, pending, seen = self._data[key]
            while len(levels) <= q_bound:
                if not pending:
                    levels.append(frozenset())
                    continue
                top = _maximal(pending, kind)
                if len(top) > cap:
                    raise LevelSizeExceeded(
                        f"level {len(levels)} of {l} has {len(top)} elements (cap {cap})"
                    )
                q = len(levels)
                for x in top:
                    seen[x] = q
                pending -= top
                for x in top:
                    pending |= {y for y in one_step(x, kind) if y not in seen}
                levels.append(frozenset(top))
            # cached levels obey the cap of the current caller too
            for q, level in enumerate(levels[: q_bound + 1]):
                if len(level) > cap:
                    raise LevelSizeExceeded(f"level {q} of {l} has {len(level)} elements (cap {cap})")
            return levels[: q_bound + 1]

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_CACHE = _LevelCache()


def level_sets(
    l: DegreeVector, kind: str, q_bound: int, max_level_size: int | None = None
) -> list[frozenset]:
    """Levels ``0..q_bound`` of the down-set of ``l`` by frontier peeling.

    Candidates for the next level are the one-step alterations of elements
    already placed; the next level is the set of maximal candidates.
    """
    if kind not in ("P", "bfP"):
        raise PosetError("level_sets is defined for P and bfP")
    cap = DEFAULT_MAX_LEVEL_SIZE if max_level_size is None else max_level_size
    return _CACHE.get(l, kind, q_bound, cap)


def _potential(k: DegreeVector) -> int:
    # strictly decreasing along the order: used to bound how deep k can sit
    return sum(_tails(k.left)) + sum(_tails(k.right)) - k.l - k.m


def level_of(k: DegreeVector, l: DegreeVector, kind: str) -> int | None:
    """Index of the level containing ``k``, or ``None`` when ``k`` is not below ``l``."""
    if not leq(k, l, kind):
        return None
    bound = q_max(l) if kind == "bfP" else _potential(k) - _potential(l)
    for q, level in enumerate(level_sets(l, kind, bound)):
        if k in level:
            return q
    raise PosetError(f"{k} is below {l} but was not reached by frontier peeling")


def degree_vectors_upto(t: int, max_total: int) -> list[DegreeVector]:
    """All degree vectors for ``t`` with total at most ``max_total``."""
    n = 2 * (t + 2)
    out = []

    def rec(acc: list[int], budget: int) -> None:
        if len(acc) == n:
            out.append(DegreeVector.from_extended(tuple(acc[: t + 2]), tuple(acc[t + 2 :])))
            return
        for x in range(budget + 1):
            acc.append(x)
            rec(acc, budget - x)
            acc.pop()

    rec([], max_total)
    return sorted(out, key=lambda v: (v.total(), v))


# ---------------------------------------------------------------------------
# level arithmetic


def convolve_levels(families: Iterable[list[frozenset]], q_bound: int) -> list[set]:
    """Levels of a sum: ``G[q] = U_{q_1+..+q_n=q} F_1[q_1]+..+F_n[q_n]``."""
    acc: list[set] | None = None
    for fam in families:
        if acc is None:
            acc = [set(fam[q]) if q < len(fam) else set() for q in range(q_bound + 1)]
            continue
        nxt: list[set] = [set() for _ in range(q_bound + 1)]
        for q, here in enumerate(acc):
            for q2 in range(q_bound + 1 - q):
                if q2 < len(fam):
                    nxt[q + q2] |= {a + b for a in here for b in fam[q2]}
        acc = nxt
    if acc is None:
        raise PosetError("no families to add")
    return acc


def split_sides(l: DegreeVector) -> tuple[DegreeVector, DegreeVector, DegreeVector]:
    """``l = (l_•,0;0,0_•) + (0_•,l;m,0_•) + (0_•,0;0,m_•)``."""
    zero = (0,) * (l.t + 1)
    return DegreeVector(l.left, 0, 0, zero), DegreeVector(zero, l.l, l.m, zero), DegreeVector(zero, 0, 0, l.right)


def unit_pieces(l: DegreeVector) -> list[DegreeVector]:
    """One unit vector per outer entry of ``l``, left side first."""
    zero = (0,) * (l.t + 1)
    out = []
    for a, n in enumerate(l.left):
        unit = tuple(int(i == a) for i in range(l.t + 1))
        out += [DegreeVector(unit, 0, 0, zero)] * n
    for a, n in enumerate(l.right):
        unit = tuple(int(i == a) for i in range(l.t + 1))
        out += [DegreeVector(zero, 0, 0, unit)] * n
    return out


def additivity_violations(t: int, max_total: int, q_bound: int, kind: str) -> list:
    """Pairs where ``P^q(l) + P^q'(l')`` leaves ``P^(q+q')(l+l')``; ``q+q' <= q_bound``."""
    vecs = degree_vectors_upto(t, max_total)
    bad = []
    for i, l in enumerate(vecs):
        for l2 in vecs[i:]:
            if l.total() + l2.total() > max_total:
                continue
            a, b = level_sets(l, kind, q_bound), level_sets(l2, kind, q_bound)
            c = level_sets(l + l2, kind, q_bound)
            for q in range(q_bound + 1):
                for q2 in range(q_bound + 1 - q):
                    stray = {x + y for x in a[q] for y in b[q2]} - c[q + q2]
                    if stray:
                        bad.append((l, l2, q, q2, min(stray)))
    return bad


def decomposition_violations(t: int, max_total: int, q_bound: int, kind: str) -> list:
    """Vectors whose levels differ from the sum over sides and from the sum over unit pieces."""
    bad = []
    for l in degree_vectors_upto(t, max_total):
        direct = [set(x) for x in level_sets(l, kind, q_bound)]
        sides = convolve_levels((level_sets(x, kind, q_bound) for x in split_sides(l)), q_bound)
        if sides != direct:
            bad.append((l, "sides"))
        inner = split_sides(l)[1]
        units = [level_sets(x, kind, q_bound) for x in unit_pieces(l)]
        pieces = convolve_levels([level_sets(inner, kind, q_bound), *units], q_bound)
        if pieces != direct:
            bad.append((l, "units"))
    return bad
