"""Brute-force reference implementations used to validate the main kernels.

The LR oracle expands products of Schur polynomials in the monomial basis
through Kostka numbers and inverts the unitriangular Kostka matrix; it never
touches lattice-word tableaux.  The poset oracle peels the materialised
down-set literally.  The Euler oracle treats socle tables as composition
factor lists and checks alternating sums of resolution terms.
"""

from __future__ import annotations

from functools import cache

import numpy as np

from .diagrams import Partition

LR_ORACLE_MAX = 12


class OracleBoundError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Littlewood-Richardson via Kostka numbers


@cache
def _parts(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    return tuple(
        (a,) + rest for a in range(min(n, max_part), 0, -1) for rest in _parts(n - a, a)
    )


@cache
def _horizontal_strips(lam: Partition, k: int) -> tuple[Partition, ...]:
    """Partitions ``mu`` with ``lam/mu`` a horizontal strip of ``k`` boxes."""
    out = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(lam):
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for mu_i in range(lam[i], lower - 1, -1):
            take = lam[i] - mu_i
            if take > left:
                break
            acc.append(mu_i)
            rec(i + 1, left - take, acc)
            acc.pop()

    rec(0, k, [])
    return tuple(out)


@cache
def kostka(lam: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and the given content."""
    content = tuple(c for c in content if c)
    if sum(lam) != sum(content):
        return 0
    if not content:
        return 1
    *head, last = content
    return sum(kostka(mu, tuple(head)) for mu in _horizontal_strips(lam, last))


def _sorted_kostka(lam: Partition, comp: tuple[int, ...]) -> int:
    # Schur polynomials are symmetric, so content order is irrelevant
    return kostka(lam, tuple(sorted((c for c in comp if c), reverse=True)))


def _bounded_compositions(alpha: tuple[int, ...], total: int):
    """Compositions ``beta <= alpha`` (componentwise) with ``|beta| = total``."""
    n = len(alpha)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + alpha[i]
    acc: list[int] = []

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                yield tuple(acc)
            return
        for b in range(max(0, left - suffix[i + 1]), min(alpha[i], left) + 1):
            acc.append(b)
            yield from rec(i + 1, left - b)
            acc.pop()

    yield from rec(0, total)


@cache
def schur_product_oracle(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Schur expansion of ``s_mu s_nu`` via monomial coefficients."""
    a, b = sum(mu), sum(nu)
    n = a + b
    if n > LR_ORACLE_MAX:
        raise OracleBoundError(f"size {n} exceeds oracle bound {LR_ORACLE_MAX}")
    shapes = _parts(n, n)  # reverse lexicographic = decreasing in a linear extension of dominance
    coeff: dict[Partition, int] = {}
    for alpha in shapes:
        mono = 0
        for beta in _bounded_compositions(alpha, a):
            gamma = tuple(x - y for x, y in zip(alpha, beta))
            mono += _sorted_kostka(mu, beta) * _sorted_kostka(nu, gamma)
        for lam, c in coeff.items():
            mono -= c * kostka(lam, alpha)
        if mono:
            coeff[alpha] = mono
    return coeff


def lr_oracle(lam: Partition, mu: Partition, nu: Partition, bound: int = LR_ORACLE_MAX) -> int:
    """``N^lam_{mu nu}`` by monomial expansion and triangular change of basis."""
    if sum(lam) > bound:
        raise OracleBoundError(f"|lam| = {sum(lam)} exceeds bound {bound}")
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    return schur_product_oracle(mu, nu).get(tuple(lam), 0)


# ---------------------------------------------------------------------------
# Literal level-set peeling


def _tails(xs) -> list[int]:
    out, acc = [], 0
    for x in reversed(xs):
        acc += x
        out.append(acc)
    return out[::-1]


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _literal_leq(k, l, kind: str) -> bool:
    """Order relation written out independently of :mod:`posets`."""
    kl, km, kL, kR = k
    ll, lm, lL, lR = l
    if kl - km + sum(kL) - sum(kR) != ll - lm + sum(lL) - sum(lR):
        return False
    if kl > ll or km > lm:
        return False
    if any(a < b for a, b in zip(_tails(kL), _tails(lL))):
        return False
    if any(a < b for a, b in zip(_tails(kR), _tails(lR))):
        return False
    if kind == "bfP" and (kl + sum(kL) > ll + sum(lL) or km + sum(kR) > lm + sum(lR)):
        return False
    return True


@cache
def _composition_array(total: int, parts: int) -> np.ndarray:
    return np.array(list(_compositions(total, parts)), dtype=np.int64).reshape(-1, parts)


def _tails_array(a: np.ndarray) -> np.ndarray:
    return np.cumsum(a[:, ::-1], axis=1)[:, ::-1]


def bounded_down_set(l, kind: str, extra: int) -> list:
    """Elements below ``l`` as raw tuples ``(l, m, left, right)``.

    For ``bfP`` this is the whole (finite) down-set.  For ``P`` the outer
    sequences may carry at most ``extra`` more boxes than those of ``l``;
    the resulting set is closed upwards inside the down-set because the
    total of an outer sequence can only drop when moving up.
    """
    t = len(l.left) - 1
    lL, lR = tuple(l.left), tuple(l.right)
    key = (l.l, l.m, lL, lR)
    if kind == "bfP":
        cap_l = l.l + sum(lL)
        cap_r = l.m + sum(lR)
    else:
        cap_l = sum(lL) + extra
        cap_r = sum(lR) + extra
    tl, tr = np.array(_tails(lL)), np.array(_tails(lR))
    out = []
    for kl in range(l.l + 1):
        for km in range(l.m + 1):
            for sl in range(cap_l + 1):
                if kind == "bfP" and kl + sl > cap_l:
                    continue
                sr = kl - km + sl - (l.l - l.m + sum(lL) - sum(lR))
                if sr < 0 or sr > cap_r or (kind == "bfP" and km + sr > cap_r):
                    continue
                L = _composition_array(sl, t + 1)
                R = _composition_array(sr, t + 1)
                L = L[np.all(_tails_array(L) >= tl, axis=1)]
                R = R[np.all(_tails_array(R) >= tr, axis=1)]
                for a in L:
                    for b in R:
                        cand = (kl, km, tuple(int(x) for x in a), tuple(int(x) for x in b))
                        # the literal relation is re-checked element by element
                        if _literal_leq(cand, key, kind):
                            out.append(cand)
    return out


def poset_level_oracle(l, kind: str, q_bound: int, extra: int | None = None) -> list[set]:
    """Levels ``0..q_bound`` by literal peeling of maximal elements.

    Returns sets of :class:`~tensorlayers.posets.DegreeVector`.
    """
    from .posets import DegreeVector

    if kind not in ("P", "bfP"):
        raise ValueError("oracle supports P and bfP")
    if extra is None:
        extra = q_bound
    elems = bounded_down_set(l, kind, extra)
    n = len(elems)
    # k <= k' iff vec(k) >= vec(k') coordinatewise (the invariant is constant on the set)
    vec = np.array(
        [[-e[0], -e[1], *_tails(e[2]), *_tails(e[3])] for e in elems], dtype=np.int64
    )
    lo = vec.min(axis=0)
    span = int((vec.max(axis=0) - lo).max()) + 1
    # row i of `above` is the packed set {j : vec[j] <= vec[i]}, i.e. j above or equal to i
    above = None
    for c in range(vec.shape[1]):
        col = vec[:, c] - lo[c]
        le = np.packbits(col[None, :] <= np.arange(span)[:, None], axis=1)
        rows = le[col]
        above = rows if above is None else above & rows
    idx = np.arange(n)
    above[idx, idx >> 3] &= ~np.uint8(0x80 >> (idx & 7)).astype(np.uint8)
    alive = np.ones(n, dtype=bool)
    levels: list[set] = []
    for _ in range(q_bound + 1):
        live = np.packbits(alive)
        covered = np.any(above & live[None, :], axis=1)
        top = np.nonzero(alive & ~covered)[0]
        levels.append(
            {DegreeVector(elems[i][2], elems[i][0], elems[i][1], elems[i][3]) for i in top}
        )
        alive[top] = False
    return levels


# ---------------------------------------------------------------------------
# Composition-factor Euler characteristics


def composition_euler_oracle(lam, bound: int | None = None, category: str = "bfT", degree_bound: int = 4):
    """Alternating sum of composition factors of resolution terms.

    For ``bfT`` the resolution and every injective have finite length, so the
    sum must equal ``{lam: 1}`` exactly; returns ``(ok, residual)``.

    For ``TT`` the resolution is truncated at ``degree_bound``.  Factors are
    counted only up to a box bound below which the omitted terms cannot
    contribute; the residual must vanish on that window.  Returns
    ``(ok, residual, box_window)``.
    """
    from . import resolutions, socle

    if bound is not None and lam.norm() > bound:
        raise OracleBoundError(f"norm {lam.norm()} exceeds bound {bound}")
    acc: dict = {}
    if category == "bfT":
        res = resolutions.resolution_bfT(lam)
        for k, term in enumerate(res.terms):
            sign = -1 if k % 2 else 1
            for kap, c in term.items():
                for fac, d in socle.composition_factors_J(kap).items():
                    acc[fac] = acc.get(fac, 0) + sign * c * d
        acc[lam] = acc.get(lam, 0) - 1
        residual = {k: v for k, v in acc.items() if v}
        return (not residual, residual)
    if category == "TT":
        t = lam.t
        spread = (
            2 * sum(map(sum, [lam.inner_left]))
            + sum(sum(p) for p in lam.left[:t])
            + sum(sum(p) for p in lam.right[:t])
            + sum(lam.inner_right)
        )
        # factors coming from degrees > degree_bound carry at least
        # 2*(degree_bound + 1 - spread) boxes
        window = 2 * (degree_bound + 1 - spread) - 1
        res = resolutions.resolution_TT(lam, degree_bound)
        for k, term in enumerate(res.terms):
            sign = -1 if k % 2 else 1
            for kap, c in term.items():
                for fac, d in socle.composition_factors_I(kap, window).items():
                    acc[fac] = acc.get(fac, 0) + sign * c * d
        if lam.norm() <= window:
            acc[lam] = acc.get(lam, 0) - 1
        residual = {k: v for k, v in acc.items() if v}
        return (not residual, residual, window)
    raise ValueError(f"unsupported category {category!r}")
