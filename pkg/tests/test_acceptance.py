"""Acceptance criteria at full range and tolerance.

Each criterion prints one ``PASS``/``FAIL`` line; the lines are repeated in
the pytest terminal summary.  Run this file directly for the lines alone.
"""

import math
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from strategies import random_sparse_matrix
from tensorlayers.diagrams import (
    DiagramTuple,
    conjugate,
    intersection,
    lr_coefficient,
    partitions,
    partitions_upto,
    size,
    tuples_upto,
)
from tensorlayers.levelize import SparseMatrix, check_levelization, levelize
from tensorlayers.oracle import composition_euler_oracle, lr_oracle, poset_level_oracle
from tensorlayers.posets import (
    additivity_violations,
    decomposition_violations,
    degree_vectors_upto,
    level_sets,
    q_max,
)
from tensorlayers.resolutions import (
    closed_form_ext_degree,
    ext_dim,
    m_coeff,
    p_table,
    k_degree,
    resolution_bfT,
    resolution_smallTT,
    resolution_TT,
)
from tensorlayers.socle import degree_layer_count, h_coeff, socle_layers_I_bfT, socle_layers_J
from tensorlayers.symmetry import (
    check_ext_hom_duality,
    check_m_h_identity,
    check_rev_symmetry,
    check_t0_ext_symmetry,
)

RESULTS: dict[int, str] = {}
E = ()


def _record(n: int, title: str, ok: bool, detail: str, elapsed: float, limit: float | None = None) -> None:
    if limit is not None and elapsed >= limit:
        ok = False
        detail += f"; took {elapsed:.1f}s, limit {limit:.0f}s"
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:>2} {title}: {detail} ({elapsed:.1f}s)"
    RESULTS[n] = line
    print(line)
    assert ok, line


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


# ---------------------------------------------------------------------------


def test_criterion_01_lr_kernel():
    shapes = partitions_upto(8)
    bad, count = [], 0
    with _Timer() as tm:
        for lam in shapes:
            for mu in shapes:
                for nu in shapes:
                    count += 1
                    if lr_coefficient(lam, mu, nu) != lr_oracle(lam, mu, nu):
                        bad.append((lam, mu, nu))
    _record(1, "LR kernel vs oracle", not bad, f"{count} triples with all sizes <= 8, {len(bad)} mismatches", tm.elapsed, 60)


def _unit(t, i, j):
    le, re = [E] * (t + 2), [E] * (t + 2)
    le[i], re[j] = (1,), (1,)
    return DiagramTuple.from_extended(le, re)


def test_criterion_02_J11_layers():
    bad = []
    with _Timer() as tm:
        for t in (0, 1, 2):
            lam = _unit(t, 0, 0)
            want = {0: {lam: 1}}
            for q in range(1, 2 * (t + 1) + 3):
                want[q] = {_unit(t, i, q - i): 1 for i in range(q + 1) if i <= t + 1 and q - i <= t + 1}
            want[1][DiagramTuple.empty(t)] = 1
            for q, layer in want.items():
                if socle_layers_J(lam, q) != layer:
                    bad.append((t, q + 1))
    _record(2, "socle layers of J_(1;1)", not bad, f"t=0,1,2 all layers, mismatched (t, layer): {bad}", tm.elapsed, 5)


def test_criterion_03_layer_counts():
    bad, count = [], 0
    with _Timer() as tm:
        for t in (0, 1, 2):
            for l in degree_vectors_upto(t, 4):
                count += 1
                if degree_layer_count(l) != 1 + q_max(l):
                    bad.append(l)
    _record(3, "filtration lengths 1+q_max", not bad, f"{count} degree vectors, {len(bad)} mismatches", tm.elapsed)


def test_criterion_04_poset_consistency():
    bad = []
    count = 0
    with _Timer() as tm:
        for t in (0, 1, 2):
            for kind in ("P", "bfP"):
                for l in degree_vectors_upto(t, 4):
                    count += 1
                    if poset_level_oracle(l, kind, 6) != [set(x) for x in level_sets(l, kind, 6)]:
                        bad.append(("oracle", kind, str(l)))
                bad += [("additivity", kind, str(x[:2])) for x in additivity_violations(t, 4, 6, kind)]
                bad += [("decomposition", kind, str(x)) for x in decomposition_violations(t, 4, 6, kind)]
    detail = f"{count} level-set comparisons plus additivity and decomposition, {len(bad)} failures"
    _record(4, "poset levels, additivity, decomposition", not bad, detail + (f": {bad[:3]}" if bad else ""), tm.elapsed)


def test_criterion_05_m_h_and_lengths():
    with _Timer() as tm:
        rep = check_m_h_identity(5)
        shapes = partitions_upto(5)
        wrong = [
            (lam, mu)
            for lam in shapes
            for mu in shapes
            if resolution_smallTT(lam, mu).length != size(intersection(lam, conjugate(mu)))
        ]
    ok = rep.passed and not wrong
    detail = f"{rep.checked} m/h comparisons, {len(rep.counterexamples)} counterexamples; {len(shapes) ** 2} lengths, {len(wrong)} wrong"
    _record(5, "m = h-conjugate and smallTT lengths", ok, detail, tm.elapsed, 30)


def test_criterion_06_euler():
    bad, count = [], 0
    with _Timer() as tm:
        for t in (0, 1):
            for lam in tuples_upto(t, 3):
                count += 1
                ok, residual = composition_euler_oracle(lam, 3)
                if not ok:
                    bad.append(str(lam))
    _record(6, "Euler characteristic of bfT resolutions", not bad, f"{count} tuples, {len(bad)} failures", tm.elapsed, 600)


def _degree_failures(pairs):
    """``pairs`` maps (kappa, lam) to {q: dim}; failures for several q or the wrong q."""
    multi, wrong = [], []
    for (kap, lam, cat), profile in pairs.items():
        qs = [q for q, v in profile.items() if v]
        if len(qs) > 1:
            multi.append((str(kap), str(lam), cat, qs))
        elif qs and closed_form_ext_degree(kap, lam, cat) != qs[0]:
            wrong.append((str(kap), str(lam), cat, qs[0], str(closed_form_ext_degree(kap, lam, cat))))
    return multi, wrong


def test_criterion_07_degree_uniqueness():
    pairs: dict = {}
    with _Timer() as tm:
        for t in (0, 1):
            tuples = tuples_upto(t, 3)
            for lam in tuples:
                for cat, terms in (("bfT", resolution_bfT(lam).terms), ("TT", resolution_TT(lam, 8).terms)):
                    for q, term in enumerate(terms[:9]):
                        for kap, c in term.items():
                            if kap.norm() <= 3:
                                pairs.setdefault((kap, lam, cat), {})[q] = c
                if not any(lam.left) and not any(lam.right):
                    for kap in tuples:
                        if not any(kap.left) and not any(kap.right):
                            for q in range(9):
                                v = ext_dim(kap, lam, q, "smallTT")
                                if v:
                                    pairs.setdefault((kap, lam, "smallTT"), {})[q] = v
                if not lam.inner_right and not any(lam.right):
                    for ks, c in p_table(lam.left_ext()).items():
                        kap = DiagramTuple.from_extended(ks, (E,) * (t + 2))
                        if kap.norm() <= 3:
                            pairs.setdefault((kap, lam, "Tleft"), {})[k_degree(lam.left_ext(), ks)] = c
        multi, wrong = _degree_failures(pairs)
    by_cat = {}
    for cat in ("smallTT", "Tleft", "TT", "bfT"):
        n = sum(1 for key in pairs if key[2] == cat)
        w = sum(1 for x in wrong if x[2] == cat)
        by_cat[cat] = f"{cat} {n - w}/{n}"
    detail = f"nonzero pairs matching the closed form: {', '.join(by_cat.values())}; {len(multi)} pairs in several degrees"
    if wrong:
        detail += f"; first mismatch Ext^{wrong[0][3]}({wrong[0][0]}, {wrong[0][1]}) in {wrong[0][2]}, closed form {wrong[0][4]}"
    _record(7, "degree uniqueness and closed-form degrees", not multi and not wrong, detail, tm.elapsed)


def test_criterion_08_symmetry_suite():
    with _Timer() as tm:
        reports = [
            check_rev_symmetry(1, 3),
            check_t0_ext_symmetry(2),
            check_m_h_identity(5),
            check_ext_hom_duality("bfT_t0", 0, 2),
        ]
    ok = all(r.passed for r in reports)
    detail = "; ".join(f"{r.name} {r.checked} checked, {len(r.counterexamples)} bad" for r in reports)
    _record(8, "symmetry suite", ok, detail, tm.elapsed, 600)


def _perp_twist(x: DiagramTuple) -> DiagramTuple:
    return DiagramTuple((conjugate(x.left[0]),), x.inner_left, conjugate(x.inner_right), x.right)


def test_criterion_09_ext_hom_t0():
    bad, count = [], 0
    with _Timer() as tm:
        tuples = tuples_upto(0, 2)
        for lam in tuples:
            terms = resolution_bfT(_perp_twist(lam)).terms
            for k in range(len(terms) + 2):
                layer = socle_layers_I_bfT(lam, k)
                for kap in tuples:
                    count += 1
                    ext = terms[k].get(_perp_twist(kap), 0) if k < len(terms) else 0
                    if ext != layer.get(kap, 0):
                        bad.append((str(kap), str(lam), k))
    _record(9, "Ext to Hom at t=0", not bad, f"{count} (kappa, lambda, k) triples, {len(bad)} mismatches", tm.elapsed)


def test_criterion_10_levelizer():
    rng = random.Random(20261016)
    problems = []
    with _Timer() as tm:
        for i in range(100):
            n = 10_000 if i == 0 else int(10 ** rng.uniform(0, 4))
            m = random_sparse_matrix(rng, n, max_per_line=10)
            if m.max_row_col_count() > 10:
                problems.append((i, "generator exceeded 10 entries per line"))
            lev = levelize(m)
            problems += [(i, p) for p in check_levelization(lev, m)[:1]]
            mapping = dict(zip(m.labels, rng.sample(range(10 * n), n)))
            lev2 = levelize(m.relabel(mapping))
            same = (
                lev2.order == [mapping[x] for x in lev.order]
                and lev2.classes == [(mapping[r], [[mapping[x] for x in lay] for lay in lays]) for r, lays in lev.classes]
                and lev2.parts == tuple(p.relabel(mapping) for p in lev.parts)
            )
            if not same:
                problems.append((i, "not equivariant under relabeling"))
    _record(10, "levelizer invariants and equivariance", not problems, f"100 matrices up to 10^4 labels, {len(problems)} problems", tm.elapsed, 30)


CLI_RUNS = [
    ["lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"],
    ["socle", "--cat", "TT", "--object", "J", "--tuple", "-/-|1;1|-/-", "--t", "1", "--q-max", "4", "--json"],
    ["socle", "--cat", "bfT", "--object", "M", "--tuple", "1|1;1|-", "--t", "0", "--q-max", "3", "--csv"],
    ["resolution", "--cat", "TT", "--tuple", "-|1;1|-", "--t", "0", "--degree-bound", "3"],
    ["ext", "--cat", "bfT", "--kappa", "1|-;-|-", "--lambda", "-|1;-|-", "--t", "0", "--q-max", "6", "--json"],
    ["poset", "--degree", "0,1,1;1,1,0", "--t", "1", "--kind", "P", "--q-bound", "3", "--dot"],
    ["levelize", "LEVELIZE_INPUT", "--json"],
    ["symmetry", "--check", "all", "--max-boxes", "2"],
    ["selftest", "--max-boxes", "2", "--t", "1"],
]


def test_criterion_11_cli_determinism(tmp_path):
    src = tmp_path / "m.txt"
    m = random_sparse_matrix(random.Random(5), 300, max_per_line=4)
    src.write_text("".join(f"{a} {c} {v}\n" for (a, c), v in m.sorted_entries()))
    differing = []
    with _Timer() as tm:
        for argv in CLI_RUNS:
            argv = [str(src) if x == "LEVELIZE_INPUT" else x for x in argv]
            outs = {}
            for w in (1, 4, 16):
                proc = subprocess.run(
                    [sys.executable, "-m", "tensorlayers", *argv, "--workers", str(w)],
                    capture_output=True,
                )
                outs[w] = (proc.returncode, proc.stdout)
            if len(set(outs.values())) != 1 or outs[1][0] != 0:
                differing.append(argv[0])
    _record(11, "CLI output across 1, 4, 16 workers", not differing, f"{len(CLI_RUNS)} runs, differing or failing: {differing}", tm.elapsed)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
