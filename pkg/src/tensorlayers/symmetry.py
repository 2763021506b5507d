"""Batch checks of reversal symmetries, t=0 Ext formulas and Ext/Hom dualities.

Each check enumerates a complete box-bounded range and returns a
:class:`CheckReport` whose counterexamples are sorted by input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagrams import (
    DiagramTuple,
    conj_seq,
    conjugate,
    involution,
    lr_coefficient,
    lr_product,
    lr_skew,
    partitions,
    sequences_upto,
    size,
    splittings,
    subdiagrams,
    tuples_upto,
)
from .resolutions import ext_dim, k_degree, m_coeff, p_coeff
from .socle import h_coeff, m_layer_table, socle_layers_I_bfT, socle_layers_J, socle_layers_M


@dataclass
class CheckReport:
    name: str
    param_range: str
    counterexamples: list = field(default_factory=list)
    checked: int = 0
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, inputs, left, right) -> None:
        self.counterexamples.append((inputs, left, right))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {self.skipped} skipped" if self.skipped else ""
        return f"{status} {self.name} [{self.param_range}]: {self.checked} checked{extra}, {len(self.counterexamples)} counterexamples"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "range": self.param_range,
            "checked": self.checked,
            "skipped": self.skipped,
            "pass": self.passed,
            "counterexamples": [[str(x) for x in ce] for ce in self.counterexamples],
        }


def _rev(seq):
    return tuple(reversed(seq))


def _left_tuple(seq) -> DiagramTuple:
    empty = ((),) * len(seq)
    return DiagramTuple.from_extended(tuple(seq), empty)


def _right_tuple(seq) -> DiagramTuple:
    empty = ((),) * len(seq)
    return DiagramTuple.from_extended(empty, tuple(seq))


def _max_degree(t: int, boxes: int) -> int:
    return (t + 1) * boxes + boxes


# ---------------------------------------------------------------------------


def check_rev_symmetry(t: int = 1, max_boxes: int = 3) -> CheckReport:
    """Reversal symmetries of ``p``, one-sided layers and one-sided Ext groups."""
    rep = CheckReport("rev_symmetry", f"t={t}, one-sided, boxes<={max_boxes}")
    seqs = sequences_upto(t + 2, max_boxes)
    qmax = _max_degree(t, max_boxes)
    for lam in seqs:
        for kap in seqs:
            if sum(map(size, lam)) != sum(map(size, kap)):
                continue
            rep.checked += 1
            a, b = p_coeff(lam, kap), p_coeff(_rev(kap), _rev(lam))
            if a != b:
                rep.fail(("p", lam, kap), a, b)
            elif a and k_degree(lam, kap) != k_degree(_rev(kap), _rev(lam)):
                rep.fail(("k", lam, kap), k_degree(lam, kap), k_degree(_rev(kap), _rev(lam)))
            L, K = _left_tuple(lam), _left_tuple(kap)
            rL, rK = _left_tuple(_rev(lam)), _left_tuple(_rev(kap))
            for q in range(qmax + 1):
                a = socle_layers_J(L, q).get(K, 0)
                b = socle_layers_J(rK, q).get(rL, 0)
                if a != b:
                    rep.fail(("soc", q, lam, kap), a, b)
                a = socle_layers_I_bfT(L, q).get(K, 0)
                b = socle_layers_I_bfT(rK, q).get(rL, 0)
                if a != b:
                    rep.fail(("socT", q, lam, kap), a, b)
                for side in (_left_tuple, _right_tuple):
                    X, Y = side(kap), side(lam)
                    rX, rY = side(_rev(lam)), side(_rev(kap))
                    for cat in ("TT", "bfT"):
                        a = ext_dim(X, Y, q, cat)
                        b = ext_dim(rX, rY, q, cat)
                        if a != b:
                            rep.fail((f"ext_{cat}", side.__name__, q, lam, kap), a, b)
    rep.counterexamples.sort(key=str)
    return rep


# ---------------------------------------------------------------------------


def eight_index_sum(kappa: DiagramTuple, lam: DiagramTuple) -> int:
    """Closed t=0 sum for the Ext groups in the full category."""
    k0, k, n, n0 = kappa.left[0], kappa.inner_left, kappa.inner_right, kappa.right[0]
    l0, l, m, m0 = lam.left[0], lam.inner_left, lam.inner_right, lam.right[0]
    total = 0
    for (zeta, phi), c1 in splittings(k0, 2).items():
        for tau, c2 in lr_skew(phi, l0).items():
            for xi, c3 in lr_product(conjugate(tau), k).items():
                for delta, c4 in lr_skew(l, xi).items():
                    for eta, c5 in lr_skew(m, conjugate(delta)).items():
                        for theta_t, c6 in lr_skew(eta, n).items():
                            theta = conjugate(theta_t)
                            for psi, c7 in lr_product(theta, m0).items():
                                c8 = lr_coefficient(n0, psi, conjugate(zeta))
                                if c8:
                                    total += c1 * c2 * c3 * c4 * c5 * c6 * c7 * c8
    return total


def four_index_sum(kappa: DiagramTuple, lam: DiagramTuple) -> int:
    """Closed t=0 sum for the Ext groups between I-module simples."""
    k0, k, n, n0 = kappa.left[0], kappa.inner_left, kappa.inner_right, kappa.right[0]
    l0, l, m, m0 = lam.left[0], lam.inner_left, lam.inner_right, lam.right[0]
    left = sum(lr_coefficient(k0, l0, tau) * lr_coefficient(l, conjugate(tau), k) for tau in subdiagrams(k0))
    if not left:
        return 0
    right = sum(lr_coefficient(m, n, conjugate(th)) * lr_coefficient(n0, th, m0) for th in subdiagrams(n0))
    return left * right


def check_t0_ext_symmetry(max_boxes: int = 2, q_bound: int | None = None) -> CheckReport:
    """t=0 two-sided Ext: swap symmetry and the closed sums with their degrees."""
    rep = CheckReport("t0_ext_symmetry", f"t=0, boxes<={max_boxes}")
    tuples = tuples_upto(0, max_boxes)
    qb = q_bound if q_bound is not None else 2 * max_boxes + 2
    for lam in tuples:
        rl = involution(lam, "rev")
        for kap in tuples:
            rk = involution(kap, "rev")
            k0, k, n, n0 = (size(x) for x in (kap.left[0], kap.inner_left, kap.inner_right, kap.right[0]))
            l0, l, m, m0 = (size(x) for x in (lam.left[0], lam.inner_left, lam.inner_right, lam.right[0]))
            closed8 = eight_index_sum(kap, lam)
            q6 = k0 - l0 + m - n
            if closed8 and q6 != l - k + n0 - m0:
                rep.fail(("deg6", kap, lam), q6, l - k + n0 - m0)
            same_left = l0 + l == k0 + k
            closed4 = four_index_sum(kap, lam) if same_left else None
            q7 = l - k + m - n
            if not same_left:
                rep.skipped += 1
            for q in range(qb + 1):
                rep.checked += 1
                a = ext_dim(kap, lam, q, "TT")
                b = ext_dim(rl, rk, q, "TT")
                c = closed8 if q == q6 else 0
                if not a == b == c:
                    rep.fail(("TT", q, kap, lam), (a, b), c)
                if same_left:
                    a = ext_dim(kap, lam, q, "bfT")
                    b = ext_dim(rl, rk, q, "bfT")
                    c = closed4 if q == q7 else 0
                    if not a == b == c:
                        rep.fail(("bfT", q, kap, lam), (a, b), c)
    rep.counterexamples.sort(key=str)
    return rep


# ---------------------------------------------------------------------------


def _one_sided_twist(seq, parity: str):
    return conj_seq(seq, parity)


def check_ext_hom_duality(category: str = "bfT_t0", t: int = 0, max_boxes: int = 2) -> CheckReport:
    """Ext between twisted simples equals Hom into socle layers.

    ``Tleft``: one-sided, ``M`` layers, both odd and even twists.
    ``bfT``: two-sided, ``M`` layers, ``e_perp_o`` and ``o_perp_e`` twists.
    ``bfT_t0``: t=0, layers of ``I_lam`` among I-modules.
    """
    if category not in ("Tleft", "bfT", "bfT_t0"):
        raise ValueError(f"unknown duality {category!r}")
    if category == "bfT_t0":
        t = 0
    rep = CheckReport(f"ext_hom_duality_{category}", f"t={t}, boxes<={max_boxes}")
    qmax = _max_degree(t, max_boxes)
    if category == "Tleft":
        seqs = sequences_upto(t + 2, max_boxes)
        for lam in seqs:
            table = m_layer_table(lam)
            for kap in seqs:
                if sum(map(size, lam)) != sum(map(size, kap)):
                    continue
                rep.checked += 1
                hom_level = k_degree(lam, kap)
                hom = table.get(kap, 0)
                for parity in ("odd", "even"):
                    lt, kt = _one_sided_twist(lam, parity), _one_sided_twist(kap, parity)
                    for q in range(qmax + 1):
                        e = ext_dim(_left_tuple(kt), _left_tuple(lt), q, "Tleft")
                        h = hom if q == hom_level else 0
                        if e != h:
                            rep.fail((parity, q, kap, lam), e, h)
        rep.counterexamples.sort(key=str)
        return rep
    tuples = tuples_upto(t, max_boxes)
    twists = ("e_perp_o",) if category == "bfT_t0" else ("e_perp_o", "o_perp_e")
    for lam in tuples:
        for q in range(qmax + 1):
            layer = socle_layers_I_bfT(lam, q) if category == "bfT_t0" else socle_layers_M(lam, q)
            for kap in tuples:
                rep.checked += 1
                h = layer.get(kap, 0)
                for tw in twists:
                    e = ext_dim(involution(kap, tw), involution(lam, tw), q, "bfT")
                    if e != h:
                        rep.fail((tw, q, kap, lam), e, h)
    rep.counterexamples.sort(key=str)
    return rep


# ---------------------------------------------------------------------------


def _conjugate_closed_sample(n: int, count: int) -> list:
    """First ``count`` partitions of ``n`` in reverse lexicographic order, closed under conjugation."""
    chosen: list = []
    for p in partitions(n):
        if len(chosen) >= count:
            break
        for x in (p, conjugate(p)):
            if x not in chosen:
                chosen.append(x)
    return chosen


def check_m_h_identity(max_boxes: int = 5, sample_size: int | None = None) -> CheckReport:
    """``m^{lam;mu}_{xi;eta} = h^{lam;mu^T}_{xi;eta^T}`` on all ``|lam|,|mu| <= max_boxes``.

    With ``sample_size`` a conjugation-closed sample of diagrams with
    ``max_boxes + 1`` boxes is added.
    """
    rng = f"|lam|,|mu|<={max_boxes}" + (f" + sample at {max_boxes + 1}" if sample_size else "")
    rep = CheckReport("m_h_identity", rng)
    diagrams = [p for n in range(max_boxes + 1) for p in partitions(n)]
    if sample_size:
        diagrams += _conjugate_closed_sample(max_boxes + 1, sample_size)
    for lam in diagrams:
        for mu in diagrams:
            for xi in subdiagrams(lam):
                for eta in subdiagrams(mu):
                    rep.checked += 1
                    a = m_coeff(lam, mu, xi, eta)
                    b = h_coeff(lam, conjugate(mu), xi, conjugate(eta))
                    if a != b:
                        rep.fail((lam, mu, xi, eta), a, b)
    return rep


CHECKS = {
    "rev": check_rev_symmetry,
    "t0_ext": check_t0_ext_symmetry,
    "ext_hom": check_ext_hom_duality,
    "m_h": check_m_h_identity,
}
