"""Injective resolutions (term decompositions) and Ext dimensions.

Categories:

* ``smallTT`` / ``underlineT``: modules generated by ``V_*`` and ``V``
  (inner diagrams only);
* ``Tleft``: one-sided modules built from ``V^*``;
* ``TT``: the full tensor category;
* ``bfT``: modules over ``I`` (every injective has finite length).

Only multiplicities are produced; differentials are not represented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagrams import (
    memo,
    EMPTY,
    DiagramTuple,
    Partition,
    conjugate,
    ext_weight,
    intersection,
    lr_product,
    lr_skew,
    partitions,
    seq_product,
    size,
    subdiagrams,
    tuple_product,
)
from .socle import _add, _sorted, _tuple_order, _two_step_table

CATEGORIES = ("smallTT", "underlineT", "Tleft", "TT", "bfT")


class ResolutionError(ValueError):
    pass


@dataclass
class Resolution:
    """Term ``k`` maps injective-hull keys to multiplicities.

    ``length`` is ``None`` when the resolution is unbounded and ``terms`` is
    only a truncation.  ``degree_violations`` lists keys whose homological
    degree disagrees with the closed-form degree, as
    ``(key, degree, doubled closed-form degree)``.
    """

    target: object
    category: str
    terms: list[dict]
    length: int | None
    degree_violations: list = field(default_factory=list)

    def term(self, k: int) -> dict:
        return self.terms[k] if 0 <= k < len(self.terms) else {}

    def multiplicity(self, k: int, key) -> int:
        return self.term(k).get(key, 0)


# ---------------------------------------------------------------------------
# V_* and V


@memo
def m_table(lam: Partition, mu: Partition) -> dict[tuple[Partition, Partition], int]:
    """``(xi, eta) -> m^{lam;mu}_{xi;eta} = sum_nu N^lam_{xi nu} N^mu_{nu^T eta}``."""
    out: dict = {}
    for xi in subdiagrams(lam):
        for nu, c in lr_skew(lam, xi).items():
            for eta, d in lr_skew(mu, conjugate(nu)).items():
                _add(out, (xi, eta), c * d)
    return out


def m_coeff(lam: Partition, mu: Partition, xi: Partition, eta: Partition) -> int:
    return m_table(lam, mu).get((xi, eta), 0)


def resolution_smallTT(lam: Partition, mu: Partition) -> Resolution:
    """Resolution of ``V_{lam;mu}``; length ``|lam ∩ mu^T|``."""
    length = size(intersection(lam, conjugate(mu)))
    terms: list[dict] = [dict() for _ in range(size(lam) + 1)]
    for (xi, eta), c in m_table(lam, mu).items():
        terms[size(lam) - size(xi)][(xi, eta)] = c
    terms = [dict(sorted(t.items())) for t in terms]
    while len(terms) > 1 and not terms[-1]:
        terms.pop()
    if len(terms) - 1 != length:
        raise ResolutionError(f"resolution of V_{lam};{mu} has {len(terms) - 1} nonzero steps, expected {length}")
    return Resolution((lam, mu), "smallTT", terms, length)


# ---------------------------------------------------------------------------
# One-sided pieces


def p_table(seq) -> dict[tuple[Partition, ...], int]:
    """``kappa -> p^{seq}_{kappa}`` for an extended one-sided sequence."""
    return _two_step_table(tuple(seq), True)


def p_coeff(lam_seq, kappa_seq) -> int:
    return p_table(lam_seq).get(tuple(kappa_seq), 0)


def k_degree(lam_seq, kappa_seq) -> int:
    """``sum_{alpha>=0} (alpha+1)(|kappa_alpha| - |lam_alpha|)`` over extended sequences."""
    return ext_weight(kappa_seq) - ext_weight(lam_seq)


def _one_sided_tuple(seq) -> DiagramTuple:
    empty = (EMPTY,) * len(seq)
    return DiagramTuple.from_extended(tuple(seq), empty)


def resolution_Tleft(lam_seq) -> Resolution:
    """Resolution of ``L_{lam_seq;∅}`` among ``V^*``-modules.  Keys are extended sequences."""
    seq = tuple(lam_seq)
    length = sum(size(p) for p in seq[:-1])
    terms: list[dict] = [dict() for _ in range(length + 1)]
    for ka, c in p_table(seq).items():
        k = k_degree(seq, ka)
        if not 0 <= k <= length:
            raise ResolutionError(f"degree {k} outside 0..{length} for {ka}")
        terms[k][ka] = c
    return Resolution(seq, "Tleft", [dict(sorted(t.items())) for t in terms], length)


def resolution_pure(lam: Partition, alpha: int, t: int) -> Resolution:
    """Resolution of the simple ``(V^*_{alpha+1}/V^*_alpha)_lam``, ``alpha`` in ``-1..t``.

    Term ``j`` is ``⊕_{|tau|=j} N^lam_{sigma tau^T}`` with ``sigma`` at index
    ``alpha`` and ``tau`` at index ``alpha+1``; keys are extended sequences.
    """
    if not -1 <= alpha <= t:
        raise ResolutionError(f"index {alpha} outside -1..{t}")
    n = t + 2
    pos = alpha + 1
    if alpha == t:
        seq = [EMPTY] * n
        seq[pos] = lam
        return Resolution((lam, alpha), "Tleft", [{tuple(seq): 1}], 0)
    terms: list[dict] = [dict() for _ in range(size(lam) + 1)]
    for sigma in subdiagrams(lam):
        for rho, c in lr_skew(lam, sigma).items():
            tau = conjugate(rho)
            seq = [EMPTY] * n
            seq[pos] = sigma
            seq[pos + 1] = tau
            _add(terms[size(tau)], tuple(seq), c)
    return Resolution((lam, alpha), "Tleft", [dict(sorted(t.items())) for t in terms], size(lam))


def resolution_trivial(j: int, t: int = 0) -> dict[DiagramTuple, int]:
    """Term ``j`` of the resolution of the trivial module: ``{(zeta,∅;∅,zeta^T): 1 : |zeta|=j}``."""
    rest = (EMPTY,) * t
    out = {DiagramTuple((z,) + rest, EMPTY, EMPTY, (conjugate(z),) + rest): 1 for z in partitions(j)}
    return _sorted(out, _tuple_order)


# ---------------------------------------------------------------------------
# Two-sided


def closed_form_degree_doubled(kappa: DiagramTuple, lam: DiagramTuple) -> int:
    """Twice ``|lam|-|kappa| + sum_{alpha>=0} (alpha+1/2)(Δkappa_alpha + Δnu_alpha)``."""
    total = 2 * (size(lam.inner_left) - size(kappa.inner_left))
    for a in range(lam.t + 1):
        d = size(kappa.left[a]) - size(lam.left[a]) + size(kappa.right[a]) - size(lam.right[a])
        total += (2 * a + 1) * d
    return total


def closed_form_degree(kappa: DiagramTuple, lam: DiagramTuple) -> Fraction:
    return Fraction(closed_form_degree_doubled(kappa, lam), 2)


def balanced_degree_doubled(kappa: DiagramTuple, lam: DiagramTuple) -> int:
    """Twice ``(|lam|-|kappa| + |mu|-|nu|)/2 + sum_{alpha>=0} (alpha+1/2)(Δkappa_alpha + Δnu_alpha)``.

    Agrees with :func:`closed_form_degree_doubled` exactly when
    ``|lam|-|kappa| = |mu|-|nu|``, and with the actual homological degree
    whenever the Ext group is nonzero.
    """
    total = size(lam.inner_left) - size(kappa.inner_left) + size(lam.inner_right) - size(kappa.inner_right)
    for a in range(lam.t + 1):
        d = size(kappa.left[a]) - size(lam.left[a]) + size(kappa.right[a]) - size(lam.right[a])
        total += (2 * a + 1) * d
    return total


def _split_sides(lam: DiagramTuple):
    for (xi, eta), m in m_table(lam.inner_left, lam.inner_right).items():
        yield xi, eta, m, size(lam.inner_left) - size(xi)


@memo
def _bfT_terms(lam: DiagramTuple) -> tuple[dict, ...]:
    acc: dict[int, dict] = {}
    for xi, eta, m, shift in _split_sides(lam):
        lseq = (xi,) + lam.left
        rseq = (eta,) + lam.right
        lt = p_table(lseq)
        rt = p_table(rseq)
        for ka, c in lt.items():
            kl = k_degree(lseq, ka)
            for nu, d in rt.items():
                k = shift + kl + k_degree(rseq, nu)
                _add(acc.setdefault(k, {}), DiagramTuple.from_extended(ka, nu), c * m * d)
    top = max(acc, default=0)
    return tuple(_sorted(acc.get(k, {}), _tuple_order) for k in range(top + 1))


def bfT_length(lam: DiagramTuple) -> int:
    return lam.norm() - size(lam.left[-1]) - size(lam.right[-1])


def _violations(terms, lam: DiagramTuple) -> list:
    out = []
    for k, term in enumerate(terms):
        for key in term:
            d2 = closed_form_degree_doubled(key, lam)
            if d2 != 2 * k:
                out.append((key, k, d2))
    return out


def resolution_bfT(lam: DiagramTuple) -> Resolution:
    """Resolution of ``K_lam`` among I-modules: ``sum_{xi,eta} p m p``."""
    terms = [dict(t) for t in _bfT_terms(lam)]
    length = bfT_length(lam)
    while len(terms) > 1 and not terms[-1]:
        terms.pop()
    if len(terms) - 1 != length:
        raise ResolutionError(f"resolution of {lam} has {len(terms) - 1} steps, expected {length}")
    return Resolution(lam, "bfT", terms, length, _violations(terms, lam))


@memo
def _TT_terms(lam: DiagramTuple, degree_bound: int) -> tuple[dict, ...]:
    acc: list[dict] = [dict() for _ in range(degree_bound + 1)]
    for xi, eta, m, shift in _split_sides(lam):
        if shift > degree_bound:
            continue
        lseq = (xi,) + lam.left
        rseq = (eta,) + lam.right
        lt = [(ka, c, k_degree(lseq, ka)) for ka, c in p_table(lseq).items()]
        rt = [(nu, d, k_degree(rseq, nu)) for nu, d in p_table(rseq).items()]
        for ka, c, kl in lt:
            for nu, d, kr in rt:
                base = shift + kl + kr
                if base > degree_bound:
                    continue
                for n in range(degree_bound - base + 1):
                    for zeta in partitions(n):
                        zt = conjugate(zeta)
                        for k0, e in lr_product(ka[1], zeta).items():
                            for n0, f in lr_product(nu[1], zt).items():
                                key = DiagramTuple.from_extended(
                                    (ka[0], k0) + ka[2:], (nu[0], n0) + nu[2:]
                                )
                                _add(acc[base + n], key, c * m * d * e * f)
    return tuple(_sorted(a, _tuple_order) for a in acc)


def resolution_TT(lam: DiagramTuple, degree_bound: int) -> Resolution:
    """Terms ``0..degree_bound`` of the resolution of ``L_lam`` in the full category.

    Each key's degree is the sum of its building-block degrees; keys whose
    closed-form degree differs are recorded in ``degree_violations``.
    """
    terms = [dict(t) for t in _TT_terms(lam, degree_bound)]
    return Resolution(lam, "TT", terms, None, _violations(terms, lam))


# ---------------------------------------------------------------------------
# Ext


def _is_inner_only(x: DiagramTuple) -> bool:
    return not any(x.left) and not any(x.right)


def _is_one_sided(x: DiagramTuple) -> bool:
    return not x.inner_right and not any(x.right)


def ext_dim(kappa: DiagramTuple, lam: DiagramTuple, q: int, category: str) -> int:
    """``dim Ext^q(simple kappa, simple lam)`` in the given category."""
    if category not in CATEGORIES:
        raise ResolutionError(f"unknown category {category!r}")
    if kappa.t != lam.t:
        raise ResolutionError("tuples have different t")
    if q < 0:
        return 0
    if category == "smallTT":
        if not (_is_inner_only(kappa) and _is_inner_only(lam)):
            raise ResolutionError("smallTT takes tuples with empty outer sequences")
        if size(lam.inner_left) - size(kappa.inner_left) != q:
            return 0
        return m_coeff(lam.inner_left, lam.inner_right, kappa.inner_left, kappa.inner_right)
    if category == "underlineT":
        if not (_is_inner_only(kappa) and _is_inner_only(lam)):
            raise ResolutionError("underlineT takes tuples with empty outer sequences")
        terms = _bfT_terms(lam)
        return terms[q].get(kappa, 0) if q < len(terms) else 0
    if category == "Tleft":
        if not (_is_one_sided(kappa) and _is_one_sided(lam)):
            raise ResolutionError("Tleft takes one-sided tuples")
        ls, ks = lam.left_ext(), kappa.left_ext()
        if k_degree(ls, ks) != q:
            return 0
        return p_coeff(ls, ks)
    if category == "bfT":
        terms = _bfT_terms(lam)
        return terms[q].get(kappa, 0) if q < len(terms) else 0
    # TT
    return _TT_terms(lam, max(q, 8))[q].get(kappa, 0)


def ext_profile(kappa: DiagramTuple, lam: DiagramTuple, q_max: int, category: str) -> list[int]:
    return [ext_dim(kappa, lam, q, category) for q in range(q_max + 1)]


def closed_form_ext_degree(kappa: DiagramTuple, lam: DiagramTuple, category: str) -> Fraction:
    """The closed-form degree at which the category's Ext can be nonzero."""
    if category in ("smallTT", "underlineT"):
        return Fraction(size(lam.inner_left) - size(kappa.inner_left))
    if category == "Tleft":
        return Fraction(k_degree(lam.left_ext(), kappa.left_ext()))
    return closed_form_degree(kappa, lam)


# ---------------------------------------------------------------------------
# Künneth products


def kunneth_product(a: Resolution, b: Resolution) -> Resolution:
    """Term ``k`` is ``⊕_{i+j=k} A^i ⊗ B^j``; keys are combined by componentwise LR products.

    Products of injective hulls of the relevant kinds are again direct sums
    of injective hulls indexed by the componentwise products of their keys.
    """
    if a.category != b.category:
        raise ResolutionError(f"cannot combine {a.category} with {b.category}")
    if a.length is None or b.length is None:
        n = min(len(a.terms), len(b.terms))
        length = None
    else:
        n = a.length + b.length + 1
        length = a.length + b.length
    terms: list[dict] = [dict() for _ in range(n)]
    for i, ta in enumerate(a.terms):
        for j, tb in enumerate(b.terms):
            if i + j >= n:
                continue
            for ka, c in ta.items():
                for kb, d in tb.items():
                    for key, e in _combine(ka, kb).items():
                        _add(terms[i + j], key, c * d * e)
    key_fn = _tuple_order if terms and terms[0] and isinstance(next(iter(terms[0])), DiagramTuple) else None
    return Resolution((a.target, b.target), a.category, [_sorted(t, key_fn) for t in terms], length)


def _combine(x, y) -> dict:
    if isinstance(x, DiagramTuple):
        return tuple_product(x, y)
    if isinstance(x, tuple) and x and isinstance(x[0], tuple):
        return seq_product(x, y)
    raise ResolutionError(f"cannot combine keys {x!r} and {y!r}")


def trivial_resolution(t: int, category: str = "bfT") -> Resolution:
    """The length-0 resolution of the unit object."""
    return Resolution(DiagramTuple.empty(t), category, [{DiagramTuple.empty(t): 1}], 0)


__all__ = [
    "CATEGORIES",
    "Resolution",
    "ResolutionError",
    "balanced_degree_doubled",
    "bfT_length",
    "closed_form_degree",
    "closed_form_degree_doubled",
    "closed_form_ext_degree",
    "ext_dim",
    "ext_profile",
    "k_degree",
    "kunneth_product",
    "m_coeff",
    "m_table",
    "p_coeff",
    "p_table",
    "resolution_TT",
    "resolution_Tleft",
    "resolution_bfT",
    "resolution_pure",
    "resolution_smallTT",
    "resolution_trivial",
    "trivial_resolution",
]
