"""Socle-filtration layer tables.

Every table maps a :class:`DiagramTuple` (or a :class:`DegreeVector` for the
degree-level tables) to a positive multiplicity.  Layer ``q`` is the
``(q+1)``-st socle layer.  The building blocks are

* ``h``: layers of ``(V_*)_lam ⊗ V_mu``;
* ``z``: one-sided redistribution of boxes to higher indices;
* the one-sided ``M`` tables (same recursion as ``p`` in
  :mod:`resolutions`, without conjugation).
"""

from __future__ import annotations

import math
from collections import defaultdict

from .diagrams import (
    memo,
    EMPTY,
    DiagramTuple,
    Partition,
    conjugate,
    ext_weight,
    lr_product,
    lr_skew,
    partitions,
    seq_product,
    size,
    sn_dim,
    splittings,
    subdiagrams,
    tuple_product,
)
from .posets import DegreeVector, level_of, q_max

Table = dict  # DiagramTuple -> int


class ClosedFormMismatch(RuntimeError):
    """Closed-form and convolution multiplicities disagree."""


def _add(acc: dict, key, value: int) -> None:
    if value:
        v = acc.get(key, 0) + value
        if v:
            acc[key] = v
        else:
            del acc[key]


def _sorted(table: dict, key=None) -> dict:
    return dict(sorted(table.items(), key=lambda kv: key(kv[0]) if key else kv[0]))


def _tuple_order(d: DiagramTuple):
    return d.sort_key()


# ---------------------------------------------------------------------------
# h: (V_*)_lam ⊗ V_mu


@memo
def h_table(lam: Partition, mu: Partition) -> dict[tuple[Partition, Partition], int]:
    """``(xi, eta) -> h^{lam;mu}_{xi;eta} = sum_nu N^lam_{xi nu} N^mu_{nu eta}``."""
    out: dict = {}
    for xi in subdiagrams(lam):
        for nu, c in lr_skew(lam, xi).items():
            for eta, d in lr_skew(mu, nu).items():
                _add(out, (xi, eta), c * d)
    return out


def h_coeff(lam: Partition, mu: Partition, xi: Partition, eta: Partition) -> int:
    return h_table(lam, mu).get((xi, eta), 0)


def socle_layers_VV(lam: Partition, mu: Partition, q: int) -> dict[tuple[Partition, Partition], int]:
    """Layer ``q`` of ``(V_*)_lam ⊗ V_mu`` as ``(xi, eta) -> mult``."""
    return {k: v for k, v in h_table(lam, mu).items() if size(lam) - size(k[0]) == q}


# ---------------------------------------------------------------------------
# z: one-sided layers


@memo
def z_table(seq: tuple[Partition, ...]) -> dict[tuple[Partition, ...], int]:
    """``kappa -> z^{seq}_{kappa}`` for an extended one-sided sequence.

    The diagram at position ``b`` is split (multi-LR) into pieces sitting at
    positions ``b..end``; pieces landing on the same position are multiplied.
    The layer is implied: ``ext_weight(kappa) - ext_weight(seq)``.
    """
    n = len(seq)
    acc: dict[tuple[Partition, ...], int] = {(EMPTY,) * n: 1}
    for b in range(n):
        nxt: dict = {}
        pieces = splittings(seq[b], n - b)
        for state, c in acc.items():
            for piece, d in pieces.items():
                for tail, e in seq_product(state[b:], piece).items():
                    _add(nxt, state[:b] + tail, c * d * e)
        acc = nxt
    return acc


def z_coeff(lam_seq, kappa_seq) -> int:
    return z_table(tuple(lam_seq)).get(tuple(kappa_seq), 0)


def z_level(lam_seq, kappa_seq) -> int:
    return ext_weight(kappa_seq) - ext_weight(lam_seq)


def Z_layer(lam_seq, xi: Partition, eta: Partition, mu_seq, k: int) -> Table:
    """Layer ``k`` of the product of the two one-sided filtrations, socle part only."""
    out: Table = {}
    left = (xi,) + tuple(lam_seq)
    right = (eta,) + tuple(mu_seq)
    rz = z_table(right)
    for ka, c in z_table(left).items():
        i = z_level(left, ka)
        if i > k:
            continue
        for nu, d in rz.items():
            if i + z_level(right, nu) == k:
                _add(out, DiagramTuple.from_extended(ka, nu), c * d)
    return _sorted(out, _tuple_order)


# ---------------------------------------------------------------------------
# J_lambda


@memo
def _layers_J(lam: DiagramTuple) -> tuple[Table, ...]:
    le, re = lam.left_ext(), lam.right_ext()
    w0 = ext_weight(le) + ext_weight(re)
    layers: dict[int, Table] = defaultdict(dict)
    for (xi, eta), h in h_table(lam.inner_left, lam.inner_right).items():
        lt = z_table((xi,) + lam.left)
        rt = z_table((eta,) + lam.right)
        shift = size(lam.inner_left) - size(xi)
        for ka, c in lt.items():
            wl = ext_weight(ka)
            for nu, d in rt.items():
                q = shift + wl + ext_weight(nu) - w0
                _add(layers[q], DiagramTuple.from_extended(ka, nu), c * h * d)
    top = max(layers, default=-1)
    return tuple(_sorted(layers.get(q, {}), _tuple_order) for q in range(top + 1))


def socle_layers_J(lam: DiagramTuple, q: int) -> Table:
    """Layer ``q`` of ``J_lam``: ``sum_{xi,eta} z h z``."""
    layers = _layers_J(lam)
    return dict(layers[q]) if 0 <= q < len(layers) else {}


def layers_J(lam: DiagramTuple) -> list[Table]:
    return [dict(x) for x in _layers_J(lam)]


def composition_factors_J(lam: DiagramTuple) -> Table:
    out: Table = {}
    for layer in _layers_J(lam):
        for k, v in layer.items():
            _add(out, k, v)
    return out


# ---------------------------------------------------------------------------
# Degree level


def _unit_layers(t: int, side: str, pos: int) -> dict[tuple[DegreeVector, int], int]:
    """Layers of a single tensorand sitting at extended position ``pos``."""
    out = {}
    for j in range(t + 2 - pos):
        vec = [0] * (t + 2)
        vec[pos + j] = 1
        zero = (0,) * (t + 2)
        dv = DegreeVector.from_extended(vec, zero) if side == "L" else DegreeVector.from_extended(zero, vec)
        out[(dv, j)] = 1
    return out


def _convolve(a: dict, b: dict) -> dict:
    out: dict = {}
    for (va, qa), ca in a.items():
        for (vb, qb), cb in b.items():
            _add(out, (va + vb, qa + qb), ca * cb)
    return out


@memo
def inner_degree_layers(t: int, l: int, m: int) -> dict[tuple[DegreeVector, int], int]:
    """``(k, q) -> b`` for ``(V^*)^{⊗l} ⊗ V̄^{⊗m}`` via sn-weighted aggregation."""
    agg: dict = {}
    empty = (EMPTY,) * (t + 1)
    for lam in partitions(l):
        for mu in partitions(m):
            w = sn_dim(lam) * sn_dim(mu)
            for q, layer in enumerate(_layers_J(DiagramTuple(empty, lam, mu, empty))):
                for kap, c in layer.items():
                    _add(agg, (kap, q), w * c)
    by_deg: dict = {}
    for (kap, q), c in agg.items():
        _add(by_deg, (kap.degree(), q), c * tuple_sn_dim(kap))
    out = {}
    for (dv, q), total in by_deg.items():
        norm = math.prod(math.factorial(x) for x in dv.left_ext() + dv.right_ext())
        if total % norm:
            raise ClosedFormMismatch(f"aggregated count {total} at {dv}, layer {q} not divisible by {norm}")
        out[(dv, q)] = total // norm
    return out


def tuple_sn_dim(lam: DiagramTuple) -> int:
    return math.prod(sn_dim(p) for p in lam.left_ext() + lam.right_ext())


@memo
def _degree_layers(l: DegreeVector) -> tuple[dict, ...]:
    t = l.t
    acc = inner_degree_layers(t, l.l, l.m)
    for side, seq in (("L", l.left), ("R", l.right)):
        for alpha, count in enumerate(seq):
            unit = _unit_layers(t, side, alpha + 1)
            for _ in range(count):
                acc = _convolve(acc, unit)
    top = max((q for _, q in acc), default=-1)
    layers = [dict() for _ in range(top + 1)]
    for (dv, q), c in acc.items():
        layers[q][dv] = c
    return tuple(dict(sorted(x.items())) for x in layers)


def socle_layers_J_degree(l: DegreeVector, q: int, cross_check: bool = False) -> dict[DegreeVector, int]:
    """Layer ``q`` of ``J_l`` as ``k -> b^l_k`` (Künneth convolution of tensorand tables).

    With ``cross_check`` the closed multinomial formula is evaluated as well
    and any disagreement raises :class:`ClosedFormMismatch`.
    """
    layers = _degree_layers(l)
    out = dict(layers[q]) if 0 <= q < len(layers) else {}
    if cross_check:
        closed = closed_form_b_layer(l, q)
        if closed != out:
            diff = {k: (out.get(k, 0), closed.get(k, 0)) for k in set(out) | set(closed) if out.get(k, 0) != closed.get(k, 0)}
            raise ClosedFormMismatch(f"layer {q} of J_{l}: (convolution, closed form) differ at {diff}")
    return out


def degree_layer_count(l: DegreeVector) -> int:
    """Number of nonempty layers of ``J_l``."""
    return sum(1 for layer in _degree_layers(l) if layer)


@memo
def _one_sided_spreads(count: int, start: int, t: int) -> dict[tuple[tuple[int, ...], int], int]:
    """``(r, level) -> count!/prod r_b!`` for ``count`` boxes at extended ``start``.

    ``r`` is indexed by extended positions; levels come from the one-sided
    order via :func:`posets.level_of`.
    """
    n = t + 2
    out: dict = {}
    base = [0] * n
    base[start] = count
    zero = (0,) * n
    top = DegreeVector.from_extended(tuple(base), zero)

    def rec(pos: int, left: int, acc: list[int]) -> None:
        if pos == n - 1:
            r = acc + [left]
            full = [0] * start + r
            dv = DegreeVector.from_extended(tuple(full), zero)
            lev = level_of(dv, top, "bfP")
            if lev is None:
                return
            coeff = math.factorial(count) // math.prod(math.factorial(x) for x in r)
            out[(tuple(full), lev)] = out.get((tuple(full), lev), 0) + coeff
            return
        for x in range(left, -1, -1):
            rec(pos + 1, left - x, acc + [x])

    if start == n - 1:
        full = [0] * start + [count]
        out[(tuple(full), 0)] = 1
        return out
    rec(start, count, [])
    return out


def closed_form_b_layer(l: DegreeVector, q: int) -> dict[DegreeVector, int]:
    """Layer ``q`` of ``J_l`` from the closed multinomial formula.

    Contractions of ``k`` pairs carry the factor ``binom(l,k) binom(m,k)``
    with no further ordering factor.
    """
    t = l.t
    n = t + 2
    out: dict[DegreeVector, int] = {}
    for k in range(min(l.l, l.m) + 1):
        if k > q:
            break
        base = math.comb(l.l, k) * math.comb(l.m, k)
        lcounts = (l.l - k,) + l.left
        rcounts = (l.m - k,) + l.right
        # accumulate (left vector, right vector, level) -> weight
        acc: dict = {((0,) * n, (0,) * n, k): base}
        for side, counts in (("L", lcounts), ("R", rcounts)):
            for start, c in enumerate(counts):
                spreads = _one_sided_spreads(c, start, t)
                nxt: dict = {}
                for (lv, rv, lev), w in acc.items():
                    for (r, j), cw in spreads.items():
                        if lev + j > q:
                            continue
                        if side == "L":
                            key = (tuple(a + b for a, b in zip(lv, r)), rv, lev + j)
                        else:
                            key = (lv, tuple(a + b for a, b in zip(rv, r)), lev + j)
                        _add(nxt, key, w * cw)
                acc = nxt
        for (lv, rv, lev), w in acc.items():
            if lev == q:
                _add(out, DegreeVector.from_extended(lv, rv), w)
    return dict(sorted(out.items()))


def closed_form_b(l: DegreeVector, k: DegreeVector) -> int:
    """``b^l_k`` from the closed formula, at the level of ``k`` in ``bfP(l)``."""
    q = level_of(k, l, "bfP")
    if q is None:
        return 0
    return closed_form_b_layer(l, q).get(k, 0)


# ---------------------------------------------------------------------------
# The injective hull of the trivial module and I_lambda


def _zeta_tuple(t: int, zeta: Partition, right: Partition) -> DiagramTuple:
    rest = (EMPTY,) * t
    return DiagramTuple((zeta,) + rest, EMPTY, EMPTY, (right,) + rest)


@memo
def _layer_I(t: int, q: int) -> Table:
    out: Table = {}
    for n in range(q + 1):
        for zeta in partitions(n):
            for k, v in socle_layers_J(_zeta_tuple(t, zeta, zeta), q - n).items():
                _add(out, k, v)
    return _sorted(out, _tuple_order)


def socle_layers_I(q: int, t: int = 0) -> Table:
    """Layer ``q`` of ``I``: ``⊕_{j+|zeta|=q}`` layer ``j`` of ``J_{zeta,∅;∅,zeta}``."""
    return dict(_layer_I(t, q))


@memo
def _layer_I_lambda(lam: DiagramTuple, q: int) -> Table:
    out: Table = {}
    for j in range(q + 1):
        a_layer = socle_layers_J(lam, j)
        if not a_layer:
            continue
        for b, d in _layer_I(lam.t, q - j).items():
            for a, c in a_layer.items():
                for k, e in tuple_product(a, b).items():
                    _add(out, k, c * d * e)
    return _sorted(out, _tuple_order)


def socle_layers_I_lambda(lam: DiagramTuple, q: int) -> Table:
    """Layer ``q`` of ``J_lam ⊗ I`` (Künneth of the two filtrations)."""
    return dict(_layer_I_lambda(lam, q))


def composition_factors_I(lam: DiagramTuple, max_norm: int) -> Table:
    """Composition factors of ``J_lam ⊗ I`` with at most ``max_norm`` boxes.

    Factors of ``I`` of layer ``k`` have ``2|zeta|`` boxes with
    ``|zeta| <= k``, so a finite part of the filtration suffices.
    """
    out: Table = {}
    t = lam.t
    for layer in _layers_J(lam):
        for a, c in layer.items():
            budget = max_norm - a.norm()
            if budget < 0:
                continue
            for n in range(budget // 2 + 1):
                for zeta in partitions(n):
                    for j, jl in enumerate(_layers_J(_zeta_tuple(t, zeta, zeta))):
                        for b, d in jl.items():
                            for k, e in tuple_product(a, b).items():
                                if k.norm() <= max_norm:
                                    _add(out, k, c * d * e)
    return out


# ---------------------------------------------------------------------------
# Tensor products of simples


@memo
def _simple_pair_layers(lam: Partition, mu: Partition, lam2: Partition, mu2: Partition) -> dict:
    """``(kappa, nu, k) -> mult`` for ``V_{lam;mu} ⊗ V_{lam2;mu2}``.

    Layer ``k`` collects ``k`` contractions, each pairing a ``V_*`` factor of
    one tensorand with a ``V`` factor of the other: ``gamma1`` is removed
    from ``lam`` and ``mu2``, ``gamma2`` from ``lam2`` and ``mu``.
    """
    out: dict = {}
    for a1 in subdiagrams(lam):
        for g1, c1 in lr_skew(lam, a1).items():
            for b2, c2 in lr_skew(mu2, g1).items():
                for a2 in subdiagrams(lam2):
                    for g2, c3 in lr_skew(lam2, a2).items():
                        for b1, c4 in lr_skew(mu, g2).items():
                            k = size(g1) + size(g2)
                            w = c1 * c2 * c3 * c4
                            for ka, d in lr_product(a1, a2).items():
                                for nu, e in lr_product(b1, b2).items():
                                    _add(out, (ka, nu, k), w * d * e)
    return out


def tensor_simples_layers(a: DiagramTuple, b: DiagramTuple, q: int) -> Table:
    """Layer ``q`` of ``L_a ⊗ L_b``.

    The outer parts multiply semisimply; layer ``q`` of the inner part is
    layer ``q`` of ``V_{lam;mu} ⊗ V_{lam';mu'}``.
    """
    if a.t != b.t:
        raise ValueError("tuples have different t")
    outer_l = seq_product(a.left, b.left)
    outer_r = seq_product(a.right, b.right)
    inner = {
        (ka, nu): c
        for (ka, nu, k), c in _simple_pair_layers(a.inner_left, a.inner_right, b.inner_left, b.inner_right).items()
        if k == q
    }
    out: Table = {}
    for (ka, nu), c in inner.items():
        for kl, d in outer_l.items():
            for kr, e in outer_r.items():
                _add(out, DiagramTuple(kl, ka, nu, kr), c * d * e)
    return _sorted(out, _tuple_order)


def is_semisimple_pair(a: DiagramTuple, b: DiagramTuple) -> bool:
    """The four-way criterion on inner diagrams."""
    lam, mu, lam2, mu2 = a.inner_left, a.inner_right, b.inner_left, b.inner_right
    return (not lam and not mu) or (not lam and not lam2) or (not lam2 and not mu2) or (not mu and not mu2)


# ---------------------------------------------------------------------------
# M modules and the category of I-modules


@memo
def m_layer_table(seq: tuple[Partition, ...]) -> dict[tuple[Partition, ...], int]:
    """``kappa -> mult`` for the one-sided ``M`` module; layer is the weight shift.

    Position ``a < end`` splits as ``sigma_a * tau_{a+1}``; then
    ``kappa_a = sigma_a * tau_a`` and ``kappa_end = seq_end * tau_end``.
    """
    return _two_step_table(seq, conj=False)


@memo
def _two_step_table(seq: tuple[Partition, ...], conj: bool) -> dict[tuple[Partition, ...], int]:
    n = len(seq)
    # states: (kappa prefix, tau carried into the current position) -> coefficient
    states: dict = {((), EMPTY): 1}
    for a in range(n):
        nxt: dict = {}
        for (prefix, tau), c in states.items():
            if a == n - 1:
                for ka, d in lr_product(seq[a], tau).items():
                    _add(nxt, (prefix + (ka,), EMPTY), c * d)
                continue
            for (sigma, rho), d in splittings(seq[a], 2).items():
                new_tau = conjugate(rho) if conj else rho
                for ka, e in lr_product(sigma, tau).items():
                    _add(nxt, (prefix + (ka,), new_tau), c * d * e)
        states = nxt
    return {prefix: c for (prefix, _), c in states.items()}


@memo
def _layers_M(lam: DiagramTuple) -> tuple[Table, ...]:
    le, re = lam.left_ext(), lam.right_ext()
    w0 = ext_weight(le) + ext_weight(re)
    layers: dict[int, Table] = defaultdict(dict)
    for (xi, eta), h in h_table(lam.inner_left, lam.inner_right).items():
        shift = size(lam.inner_left) - size(xi)
        lt = m_layer_table((xi,) + lam.left)
        rt = m_layer_table((eta,) + lam.right)
        for ka, c in lt.items():
            for nu, d in rt.items():
                q = shift + ext_weight(ka) + ext_weight(nu) - w0
                _add(layers[q], DiagramTuple.from_extended(ka, nu), c * h * d)
    top = max(layers, default=-1)
    return tuple(_sorted(layers.get(q, {}), _tuple_order) for q in range(top + 1))


def socle_layers_M(lam: DiagramTuple, q: int) -> Table:
    """Layer ``q`` of ``M_lam`` (two-step quotient modules, both sides)."""
    layers = _layers_M(lam)
    return dict(layers[q]) if 0 <= q < len(layers) else {}


def socle_layers_I_bfT(lam: DiagramTuple, q: int) -> Table:
    """Layer ``q`` of ``I_lam`` among I-modules; same numbers as ``J_lam``."""
    return socle_layers_J(lam, q)


def check_layer_keys(lam: DiagramTuple, q: int) -> list[DiagramTuple]:
    """Keys of ``socle_layers_J(lam, q)`` whose degree is not in level ``q``."""
    l = lam.degree()
    return [k for k in socle_layers_J(lam, q) if level_of(k.degree(), l, "bfP") != q]


def q_max_tuple(lam: DiagramTuple) -> int:
    return q_max(lam.degree())


__all__ = [
    "ClosedFormMismatch",
    "Z_layer",
    "check_layer_keys",
    "closed_form_b",
    "closed_form_b_layer",
    "composition_factors_I",
    "composition_factors_J",
    "degree_layer_count",
    "h_coeff",
    "h_table",
    "inner_degree_layers",
    "is_semisimple_pair",
    "layers_J",
    "m_layer_table",
    "socle_layers_I",
    "socle_layers_I_bfT",
    "socle_layers_I_lambda",
    "socle_layers_J",
    "socle_layers_J_degree",
    "socle_layers_M",
    "socle_layers_VV",
    "tensor_simples_layers",
    "tuple_sn_dim",
    "z_coeff",
    "z_table",
]
