"""Oracle cross-checks run by ``tensorlayers selftest``.

Every job returns ``(name, ok, detail)``; jobs are independent so they can
run in a process pool.
"""

from __future__ import annotations

from .diagrams import lr_coefficient, partitions, tuples_upto
from .oracle import composition_euler_oracle, lr_oracle, poset_level_oracle
from .posets import DegreeVector, degree_vectors_upto, level_sets
from .socle import socle_layers_J_degree


def _lr_job(n: int):
    bad = 0
    count = 0
    for lam in partitions(n):
        for a in range(n + 1):
            for mu in partitions(a):
                for nu in partitions(n - a):
                    count += 1
                    if lr_coefficient(lam, mu, nu) != lr_oracle(lam, mu, nu):
                        bad += 1
    return (f"lr |lam|={n}", bad == 0, f"{count} triples, {bad} mismatches")


def _poset_job(job):
    t, total, q_bound = job
    bad = []
    vecs = degree_vectors_upto(t, total)
    for l in vecs:
        for kind in ("P", "bfP"):
            want = poset_level_oracle(l, kind, q_bound)
            got = [set(x) for x in level_sets(l, kind, q_bound)]
            if got != want:
                bad.append(f"{kind} {l}")
    return (f"poset levels t={t} |l|<={total} q<={q_bound}", not bad, f"{len(vecs)} vectors, {len(bad)} mismatches" + (f": {bad[0]}" if bad else ""))


def _euler_job(job):
    t, boxes = job
    bad = [str(x) for x in tuples_upto(t, boxes) if not composition_euler_oracle(x, boxes)[0]]
    return (f"euler bfT t={t} norm<={boxes}", not bad, f"{len(tuples_upto(t, boxes))} tuples, {len(bad)} failures" + (f": {bad[0]}" if bad else ""))


def _closed_form_job(t: int):
    zero = (0,) * (t + 1)
    l = DegreeVector(zero, 1, 1, zero)
    try:
        for q in range(t + 3):
            socle_layers_J_degree(l, q, cross_check=True)
    except Exception as exc:  # report, never raise out of a worker
        return (f"J_(1;1) layers t={t}", False, str(exc))
    return (f"J_(1;1) layers t={t}", True, "convolution matches closed form")


def _symmetry_job(job):
    from .symmetry import check_ext_hom_duality, check_m_h_identity, check_rev_symmetry, check_t0_ext_symmetry

    name, t, boxes = job
    if name == "rev":
        r = check_rev_symmetry(t, boxes)
    elif name == "t0_ext":
        r = check_t0_ext_symmetry(boxes)
    elif name == "ext_hom_bfT_t0":
        r = check_ext_hom_duality("bfT_t0", 0, boxes)
    elif name == "ext_hom_Tleft":
        r = check_ext_hom_duality("Tleft", t, boxes)
    else:
        r = check_m_h_identity(boxes)
    return (f"{r.name} [{r.param_range}]", r.passed, f"{r.checked} checked, {len(r.counterexamples)} counterexamples")


def _dispatch(job):
    kind, arg = job
    return {
        "lr": _lr_job,
        "poset": _poset_job,
        "euler": _euler_job,
        "closed": _closed_form_job,
        "sym": _symmetry_job,
    }[kind](arg)


def selftest_jobs(max_boxes: int, t: int) -> list:
    jobs: list = [("lr", n) for n in range(min(2 * max_boxes, 8) + 1)]
    jobs += [("poset", (s, max_boxes, min(max_boxes + 1, 6))) for s in range(t + 1)]
    jobs += [("euler", (s, max_boxes)) for s in range(t + 1)]
    jobs += [("closed", s) for s in range(t + 1)]
    small = min(max_boxes, 2)
    jobs += [
        ("sym", ("rev", t, max_boxes)),
        ("sym", ("t0_ext", 0, small)),
        ("sym", ("ext_hom_bfT_t0", 0, small)),
        ("sym", ("ext_hom_Tleft", t, max_boxes)),
        ("sym", ("m_h", 0, max_boxes + 1)),
    ]
    return jobs


def run_selftest(max_boxes: int, t: int, workers: int, fan_out) -> list:
    return fan_out(_dispatch, selftest_jobs(max_boxes, t), workers)
