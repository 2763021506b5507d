"""Young diagram arithmetic and Littlewood-Richardson coefficients.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty diagram.  Diagram sequences are tuples of
partitions, and :class:`DiagramTuple` packages the four pieces
``(lam_seq, lam; mu, mu_seq)`` that index simple objects.
"""

from __future__ import annotations

import math
import os
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

Partition = tuple[int, ...]
DiagramSeq = tuple[Partition, ...]

EMPTY: Partition = ()


def _cache_size() -> int | None:
    raw = os.environ.get("TENSORLAYERS_CACHE_SIZE", "").strip()
    return int(raw) if raw else None


# Memo decorator shared by the combinatorial kernels; unbounded unless
# TENSORLAYERS_CACHE_SIZE sets a per-function entry limit.
memo = lru_cache(maxsize=_cache_size())


class DiagramError(ValueError):
    """Raised for malformed diagrams or mismatched sequence shapes."""


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise ``parts`` into a partition tuple (zeros dropped)."""
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p):
        raise DiagramError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DiagramError(f"parts not weakly decreasing: {p}")
    return p


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of ``lam`` (its column lengths)."""
    if not lam:
        return EMPTY
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """True when the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def intersection(lam: Partition, mu: Partition) -> Partition:
    return tuple(x for x in (min(a, b) for a, b in zip(lam, mu)) if x > 0)


@memo
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@memo
def partitions_upto(n: int) -> tuple[Partition, ...]:
    """Partitions of every size ``0..n``, grouped by size."""
    return tuple(p for k in range(n + 1) for p in partitions(k))


@memo
def subdiagrams(lam: Partition) -> tuple[Partition, ...]:
    """Every partition contained in ``lam`` (including ∅ and ``lam``)."""
    if not lam:
        return (EMPTY,)
    out = []

    def rec(i: int, bound: int, acc: list[int]) -> None:
        if i == len(lam):
            out.append(make_partition(acc))
            return
        for x in range(min(bound, lam[i]), -1, -1):
            acc.append(x)
            rec(i + 1, x, acc)
            acc.pop()

    rec(0, lam[0], [])
    return tuple(sorted(out, key=lambda p: (size(p), p)))


def diagram_key(lam: Partition) -> tuple:
    """Deterministic total order on partitions: by size, then lexicographic."""
    return (size(lam), lam)


# ---------------------------------------------------------------------------
# Littlewood-Richardson kernel


@memo
def lr_skew(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Map ``nu -> N^lam_{mu nu}`` for all ``nu``.

    Enumerates LR tableaux of skew shape ``lam/mu``: semistandard fillings
    whose reverse reading word (right to left, top to bottom) is a lattice
    word.  The content of each such tableau is the corresponding ``nu``.
    """
    if not contains(lam, mu):
        return {}
    cells: list[tuple[int, int]] = []
    for r, row_len in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        for c in range(row_len - 1, start - 1, -1):
            cells.append((r, c))
    if not cells:
        return {EMPTY: 1}

    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(lam) + 2)
    result: dict[Partition, int] = defaultdict(int)
    n = len(cells)

    def rec(idx: int) -> None:
        if idx == n:
            result[make_partition(counts[1:])] += 1
            return
        r, c = cells[idx]
        hi = filling.get((r, c + 1))
        lo = filling.get((r - 1, c), 0) + 1
        top = r + 1 if hi is None else min(hi, r + 1)
        for v in range(lo, top + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1

    rec(0)
    return dict(result)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient ``N^lam_{mu nu}``."""
    if size(lam) != size(mu) + size(nu):
        return 0
    # the coefficient is symmetric in mu, nu; use the smaller skew shape
    a, b = (mu, nu) if diagram_key(mu) >= diagram_key(nu) else (nu, mu)
    return lr_skew(lam, a).get(b, 0)


@memo
def lr_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Expansion of the product ``s_mu * s_nu`` as ``lam -> N^lam_{mu nu}``."""
    if diagram_key(mu) < diagram_key(nu):
        return lr_product(nu, mu)
    if not nu:
        return {mu: 1}
    n = size(mu) + size(nu)
    out = {}
    for lam in partitions(n):
        if contains(lam, mu) and contains(lam, nu):
            c = lr_skew(lam, mu).get(nu, 0)
            if c:
                out[lam] = c
    return out


def multi_lr(lam: Partition, factors: Sequence[Partition]) -> int:
    """Iterated coefficient ``sum N^lam_{f1 s1} N^{s1}_{f2 s2} ...``."""
    return _multi_lr(lam, tuple(factors))


@memo
def _multi_lr(lam: Partition, factors: tuple[Partition, ...]) -> int:
    if not factors:
        return 1 if not lam else 0
    if len(factors) == 1:
        return 1 if lam == factors[0] else 0
    if size(lam) != sum(size(f) for f in factors):
        return 0
    head, rest = factors[0], factors[1:]
    return sum(c * _multi_lr(sigma, rest) for sigma, c in lr_skew(lam, head).items())


def seq_lr(kappa: Sequence[Partition], factor_seqs: Sequence[Sequence[Partition]]) -> int:
    """Component-wise product of :func:`multi_lr` over a sequence index."""
    n = len(kappa)
    if any(len(s) != n for s in factor_seqs):
        raise DiagramError("sequence length mismatch")
    total = 1
    for a in range(n):
        total *= multi_lr(kappa[a], [s[a] for s in factor_seqs])
        if total == 0:
            return 0
    return total


@memo
def splittings(lam: Partition, parts: int) -> dict[tuple[Partition, ...], int]:
    """Ordered decompositions ``(r_1..r_parts) -> multi_lr(lam, [r_1..r_parts])``."""
    if parts == 1:
        return {(lam,): 1}
    out: dict[tuple[Partition, ...], int] = defaultdict(int)
    for head in subdiagrams(lam):
        for sigma, c in lr_skew(lam, head).items():
            for rest, d in splittings(sigma, parts - 1).items():
                out[(head,) + rest] += c * d
    return dict(out)


def product_many(factors: Sequence[Partition]) -> dict[Partition, int]:
    """Expansion of ``s_f1 * ... * s_fm``."""
    acc: dict[Partition, int] = {EMPTY: 1}
    for f in factors:
        nxt: dict[Partition, int] = defaultdict(int)
        for lam, c in acc.items():
            for kap, d in lr_product(lam, f).items():
                nxt[kap] += c * d
        acc = dict(nxt)
    return acc


# ---------------------------------------------------------------------------
# Symmetric group data


@memo
def sn_dim(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    n = size(lam)
    conj = conjugate(lam)
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(n) // hooks


def decompose_power(kind: str, m: int) -> list[tuple[Partition, Partition, int]]:
    """Schur-functor decomposition of degree-``m`` powers of ``X ⊗ Y``.

    ``sym`` gives pairs ``(lam, lam)``, ``ext`` gives ``(lam, lam^T)`` and
    ``tensor`` gives ``(lam, mu)`` with multiplicity ``dim C^lam * dim C^mu``
    (the isotypic decomposition of ``X^{⊗m} ⊗ Y^{⊗m}``).
    """
    if m < 0:
        raise DiagramError("negative degree")
    if kind == "sym":
        return [(lam, lam, 1) for lam in partitions(m)]
    if kind == "ext":
        return [(lam, conjugate(lam), 1) for lam in partitions(m)]
    if kind == "tensor":
        return [(lam, mu, sn_dim(lam) * sn_dim(mu)) for lam in partitions(m) for mu in partitions(m)]
    raise DiagramError(f"unknown power kind {kind!r}")


# ---------------------------------------------------------------------------
# Diagram tuples


@dataclass(frozen=True, order=True)
class DiagramTuple:
    """``(lam_0..lam_t, lam; mu, mu_0..mu_t)``.

    ``left`` and ``right`` are stored with index 0 first; the text form
    prints the left sequence reversed so indices increase outwards.
    """

    left: DiagramSeq
    inner_left: Partition
    inner_right: Partition
    right: DiagramSeq

    def __post_init__(self) -> None:
        if len(self.left) != len(self.right) or not self.left:
            raise DiagramError("left and right sequences must have equal length t+1 >= 1")

    @property
    def t(self) -> int:
        return len(self.left) - 1

    @classmethod
    def empty(cls, t: int) -> "DiagramTuple":
        return cls((EMPTY,) * (t + 1), EMPTY, EMPTY, (EMPTY,) * (t + 1))

    @classmethod
    def from_extended(cls, left_ext: Sequence[Partition], right_ext: Sequence[Partition]) -> "DiagramTuple":
        """Build from extended sequences indexed ``-1..t`` (inner diagram first)."""
        return cls(tuple(left_ext[1:]), left_ext[0], right_ext[0], tuple(right_ext[1:]))

    def left_ext(self) -> DiagramSeq:
        return (self.inner_left,) + self.left

    def right_ext(self) -> DiagramSeq:
        return (self.inner_right,) + self.right

    def degree(self):
        from .posets import DegreeVector

        return DegreeVector(
            tuple(size(x) for x in self.left),
            size(self.inner_left),
            size(self.inner_right),
            tuple(size(x) for x in self.right),
        )

    def norm(self) -> int:
        return sum(size(x) for x in self.left_ext() + self.right_ext())

    def sort_key(self) -> tuple:
        return tuple(diagram_key(x) for x in self.left_ext() + self.right_ext())

    def __str__(self) -> str:
        from .formats import format_tuple

        return format_tuple(self)


def ext_weight(seq: Sequence[Partition]) -> int:
    """``sum_{alpha} (alpha+1)|seq_alpha|`` for an extended sequence (index -1 first)."""
    return sum(i * size(p) for i, p in enumerate(seq))


def conj_seq(seq: Sequence[Partition], parity: str | None = None, first_index: int = -1) -> DiagramSeq:
    """Conjugate all entries, or only those with even/odd index."""
    out = []
    for i, p in enumerate(seq):
        idx = first_index + i
        if parity is None or (parity == "even") == (idx % 2 == 0):
            out.append(conjugate(p))
        else:
            out.append(p)
    return tuple(out)


def involution(lam: DiagramTuple, kind: str) -> DiagramTuple:
    """Apply ``rev``, ``perp``, ``e_perp_o`` or ``o_perp_e`` to a diagram tuple.

    ``rev`` reverses both extended sequences (indices -1..t).  ``e_perp_o``
    conjugates even-indexed left entries and odd-indexed right entries
    (index -1 counts as odd); ``o_perp_e`` does the opposite.
    """
    le, re = lam.left_ext(), lam.right_ext()
    if kind == "rev":
        return DiagramTuple.from_extended(le[::-1], re[::-1])
    if kind == "perp":
        return DiagramTuple.from_extended(conj_seq(le), conj_seq(re))
    if kind == "e_perp_o":
        return DiagramTuple.from_extended(conj_seq(le, "even"), conj_seq(re, "odd"))
    if kind == "o_perp_e":
        return DiagramTuple.from_extended(conj_seq(le, "odd"), conj_seq(re, "even"))
    raise DiagramError(f"unknown involution {kind!r}")


def sequences_upto(length: int, max_boxes: int) -> list[DiagramSeq]:
    """All diagram sequences of ``length`` with at most ``max_boxes`` boxes in total."""
    out: list[DiagramSeq] = []

    def rec(i: int, budget: int, acc: list[Partition]) -> None:
        if i == length:
            out.append(tuple(acc))
            return
        for n in range(budget + 1):
            for p in partitions(n):
                acc.append(p)
                rec(i + 1, budget - n, acc)
                acc.pop()

    rec(0, max_boxes, [])
    return out


def tuples_upto(t: int, max_boxes: int) -> list[DiagramTuple]:
    """Every diagram tuple for ``t`` with ``norm <= max_boxes``, deterministically ordered."""
    out = [
        DiagramTuple.from_extended(s[: t + 2], s[t + 2 :])
        for s in sequences_upto(2 * (t + 2), max_boxes)
    ]
    return sorted(out, key=DiagramTuple.sort_key)


def one_sided_tuples_upto(t: int, max_boxes: int) -> list[DiagramTuple]:
    """Tuples whose right extended sequence is empty."""
    empty = (EMPTY,) * (t + 2)
    out = [DiagramTuple.from_extended(s, empty) for s in sequences_upto(t + 2, max_boxes)]
    return sorted(out, key=DiagramTuple.sort_key)


def seq_product(a: Sequence[Partition], b: Sequence[Partition]) -> dict[DiagramSeq, int]:
    """Component-wise LR product of two sequences: ``kappa -> prod N^{kappa_i}_{a_i b_i}``."""
    acc: dict[DiagramSeq, int] = {(): 1}
    for x, y in zip(a, b):
        nxt: dict[DiagramSeq, int] = {}
        prod_xy = lr_product(x, y)
        for pre, c in acc.items():
            for k, d in prod_xy.items():
                nxt[pre + (k,)] = nxt.get(pre + (k,), 0) + c * d
        acc = nxt
    return acc


def tuple_product(a: DiagramTuple, b: DiagramTuple) -> dict[DiagramTuple, int]:
    """Semisimple tensor expansion: LR product in every component."""
    le = seq_product(a.left_ext(), b.left_ext())
    re = seq_product(a.right_ext(), b.right_ext())
    return {
        DiagramTuple.from_extended(x, y): c * d
        for (x, c), (y, d) in product(le.items(), re.items())
    }
