"""Command-line tables: LR coefficients, socle layers, resolutions, Ext, posets, levelization.

Exit codes: 0 success, 1 a check or validation failed, 2 bad usage or
unparseable input (the message names the character position).

Grid-shaped work fans out over ``--workers`` processes; results are merged
in input order so output never depends on the worker count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import posets
from .diagrams import DiagramError, DiagramTuple, lr_coefficient, lr_product
from .formats import ParseError, format_degree, format_partition, format_tuple, parse_degree, parse_partition, parse_tuple
from .levelize import LevelizeError, check_levelization, dumps, levelize, read_json, read_text, to_text
from .posets import level_sets, leq
from .resolutions import (
    CATEGORIES,
    ResolutionError,
    ext_dim,
    resolution_bfT,
    resolution_smallTT,
    resolution_Tleft,
    resolution_TT,
)
from .socle import (
    q_max_tuple,
    socle_layers_I,
    socle_layers_I_bfT,
    socle_layers_I_lambda,
    socle_layers_J,
    socle_layers_M,
)
from .symmetry import check_ext_hom_duality, check_m_h_identity, check_rev_symmetry, check_t0_ext_symmetry


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


class Table:
    def __init__(self, columns: Sequence[str], rows: list | None = None):
        self.columns = list(columns)
        self.rows = rows or []

    def render(self, fmt: str) -> str:
        if fmt == "json":
            data = [dict(zip(self.columns, r)) for r in self.rows]
            return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.columns)
            w.writerows(self.rows)
            return buf.getvalue()
        cells = [self.columns] + [[str(x) for x in r] for r in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
        return "\n".join(lines) + "\n"


def _fan_out(fn: Callable, items: list, workers: int) -> list:
    """``[fn(x) for x in items]``, possibly in a process pool; order preserved."""
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _need_t(args) -> int:
    if args.t is None:
        raise UsageError("--t is required for tuple-valued arguments")
    if args.t < 0:
        raise UsageError("--t must be nonnegative")
    return args.t


def _tuple_arg(args, text: str) -> DiagramTuple:
    return parse_tuple(text, _need_t(args))


# ---------------------------------------------------------------------------
# workers (top level so they pickle)


def _socle_job(job):
    cat, obj, lam, q, t = job
    if obj == "I":
        table = socle_layers_I(q, t) if cat == "TT" else ({DiagramTuple.empty(t): 1} if q == 0 else {})
    elif obj == "M":
        table = socle_layers_M(lam, q)
    elif cat == "bfT":
        table = socle_layers_I_bfT(lam, q)
    elif obj == "J":
        table = socle_layers_J(lam, q)
    else:
        table = socle_layers_I_lambda(lam, q)
    return [(q, format_tuple(k), v) for k, v in table.items()]


def _ext_job(job):
    kap, lam, q, cat = job
    return ext_dim(kap, lam, q, cat)


def _level_job(job):
    l, kind, q_bound, cap = job
    return level_sets(l, kind, q_bound, cap)


# ---------------------------------------------------------------------------
# subcommands


def cmd_lr(args) -> tuple[Table | str, int]:
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    if args.lam is not None:
        lam = parse_partition(args.lam)
        value = lr_coefficient(lam, mu, nu)
        if args.format == "human":
            return f"{value}\n", 0
        return Table(["lambda", "mu", "nu", "N"], [[format_partition(lam), args.mu, args.nu, value]]), 0
    rows = [[format_partition(k), v] for k, v in lr_product(mu, nu).items()]
    return Table(["lambda", "N"], rows), 0


def cmd_socle(args) -> tuple[Table, int]:
    t = _need_t(args)
    lam = _tuple_arg(args, args.tuple) if args.tuple else DiagramTuple.empty(t)
    if args.object != "I" and not args.tuple:
        raise UsageError(f"--tuple is required for object {args.object}")
    if args.q is not None:
        qs = [args.q]
    else:
        top = args.q_max if args.q_max is not None else q_max_tuple(lam)
        if args.object == "I" and args.q_max is None:
            raise UsageError("object I has infinitely many layers; pass --q or --q-max")
        qs = list(range(top + 1))
    jobs = [(args.cat, args.object, lam, q, t) for q in qs]
    rows = [r for chunk in _fan_out(_socle_job, jobs, args.workers) for r in chunk]
    return Table(["q", "simple", "multiplicity"], rows), 0


def cmd_resolution(args) -> tuple[Table, int]:
    lam = _tuple_arg(args, args.tuple)
    cat = args.cat
    if cat == "smallTT":
        res = resolution_smallTT(lam.inner_left, lam.inner_right)
        fmt = lambda k: f"{format_partition(k[0])};{format_partition(k[1])}"  # noqa: E731
    elif cat == "Tleft":
        res = resolution_Tleft(lam.left_ext())
        fmt = lambda k: format_tuple(DiagramTuple.from_extended(k, ((),) * len(k)))  # noqa: E731
    elif cat in ("bfT", "underlineT"):
        res = resolution_bfT(lam)
        fmt = format_tuple
    else:
        res = resolution_TT(lam, 4 if args.degree_bound is None else args.degree_bound)
        fmt = format_tuple
    rows = []
    for k, term in enumerate(res.terms):
        if args.degree_bound is not None and k > args.degree_bound:
            break
        rows.extend([k, fmt(key), c] for key, c in term.items())
    if res.degree_violations:
        print(
            f"note: {len(res.degree_violations)} keys sit at a degree different from the one-line closed form",
            file=sys.stderr,
        )
    return Table(["degree", "injective", "multiplicity"], rows), 0


def cmd_ext(args) -> tuple[Table, int]:
    kap = _tuple_arg(args, args.kappa)
    lam = _tuple_arg(args, args.lam)
    qs = [args.q] if args.q is not None else list(range(args.q_max + 1))
    values = _fan_out(_ext_job, [(kap, lam, q, args.cat) for q in qs], args.workers)
    return Table(["q", "dim"], [[q, v] for q, v in zip(qs, values)]), 0


def _dot(levels: list, kind: str) -> str:
    out = ["digraph levels {", "  rankdir=TB;"]
    for q, level in enumerate(levels):
        names = " ".join(f'"{format_degree(x)}"' for x in sorted(level))
        if names:
            out.append(f"  {{ rank=same; {names} }}")
    for q in range(len(levels) - 1):
        for a in sorted(levels[q]):
            for b in sorted(levels[q + 1]):
                if b in posets.one_step(a, kind) and leq(b, a, kind):
                    out.append(f'  "{format_degree(a)}" -> "{format_degree(b)}";')
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_poset(args) -> tuple[Table | str, int]:
    t = _need_t(args)
    l = parse_degree(args.degree, t)
    levels = _fan_out(_level_job, [(l, args.kind, args.q_bound, args.max_level_size)], args.workers)[0]
    if args.dot:
        return _dot(levels, args.kind), 0
    rows = [[q, format_degree(x)] for q, level in enumerate(levels) for x in sorted(level)]
    return Table(["q", "element"], rows), 0


def cmd_levelize(args) -> tuple[str, int]:
    source = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    with source:
        text = source.read()
    if args.input.endswith(".json"):
        try:
            m = read_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad JSON matrix: {exc}") from None
    else:
        m = read_text(text.splitlines())
    lev = levelize(m)
    problems = check_levelization(lev, m)
    for p in problems:
        print(f"invariant violated: {p}", file=sys.stderr)
    body = dumps(lev) if args.format == "json" else to_text(lev)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(body)
        body = ""
    return body, 1 if problems else 0


def _symmetry_job(job):
    name, t, boxes, category = job
    if name == "rev":
        return check_rev_symmetry(t, boxes)
    if name == "t0_ext":
        return check_t0_ext_symmetry(boxes)
    if name == "ext_hom":
        return check_ext_hom_duality(category, t, boxes)
    return check_m_h_identity(boxes)


def cmd_symmetry(args) -> tuple[Table, int]:
    names = ["rev", "t0_ext", "ext_hom", "m_h"] if args.check == "all" else [args.check]
    t = args.t if args.t is not None else 0
    jobs = [(n, t, args.max_boxes, args.category) for n in names]
    reports = _fan_out(_symmetry_job, jobs, args.workers)
    rows = []
    for r in reports:
        rows.append([r.name, r.param_range, r.checked, r.skipped, len(r.counterexamples), "PASS" if r.passed else "FAIL"])
        for ce in r.counterexamples[:5]:
            print(f"{r.name}: counterexample {ce}", file=sys.stderr)
    ok = all(r.passed for r in reports)
    return Table(["check", "range", "checked", "skipped", "counterexamples", "status"], rows), 0 if ok else 1


def cmd_selftest(args) -> tuple[Table, int]:
    from .selftest import run_selftest

    t = args.t if args.t is not None else 1
    results = run_selftest(args.max_boxes, t, args.workers, _fan_out)
    rows = [[name, detail, "PASS" if ok else "FAIL"] for name, ok, detail in results]
    return Table(["check", "detail", "status"], rows), 0 if all(ok for _, ok, _ in results) else 1


# ---------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--t", type=int, default=None, help="number of outer indices minus one")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    p.set_defaults(format="human")
    p.add_argument("--max-level-size", type=int, default=None, help="cap on the size of one poset level")
    p.add_argument("--workers", type=int, default=1)
    return p


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 2 with a single line
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="tensorlayers", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("socle", parents=[common], help="socle layers of J, I, I_lambda or M")
    p.add_argument("--cat", choices=["TT", "bfT"], default="TT")
    p.add_argument("--object", choices=["J", "I", "Ilambda", "M"], default="J")
    p.add_argument("--tuple")
    p.add_argument("--q", type=int)
    p.add_argument("--q-max", type=int)
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("resolution", parents=[common], help="injective resolution terms")
    p.add_argument("--cat", choices=list(CATEGORIES), default="bfT")
    p.add_argument("--tuple", required=True)
    p.add_argument("--degree-bound", type=int, default=None)
    p.set_defaults(func=cmd_resolution)

    p = sub.add_parser("ext", parents=[common], help="Ext dimensions between simples")
    p.add_argument("--cat", choices=list(CATEGORIES), default="bfT")
    p.add_argument("--kappa", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--q-max", type=int, default=8)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("poset", parents=[common], help="level sets of a degree-vector poset")
    p.add_argument("--degree", required=True, help="l_t,..,l_0,l;m,m_0,..,m_t")
    p.add_argument("--kind", choices=["P", "bfP"], default="bfP")
    p.add_argument("--q-bound", type=int, default=4)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("levelize", parents=[common], help="levelize a sparse matrix")
    p.add_argument("input", help="'row col value' lines, a .json document, or - for stdin")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_levelize)

    p = sub.add_parser("symmetry", parents=[common], help="run a named identity check")
    p.add_argument("--check", choices=["rev", "t0_ext", "ext_hom", "m_h", "all"], default="all")
    p.add_argument("--max-boxes", type=int, default=2)
    p.add_argument("--category", choices=["Tleft", "bfT", "bfT_t0"], default="bfT_t0")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("selftest", parents=[common], help="oracle cross-checks")
    p.add_argument("--max-boxes", type=int, default=3)
    p.set_defaults(func=cmd_selftest)
    return parser


# options whose values may start with "-" (the empty diagram)
_VALUE_OPTIONS = {"--tuple", "--kappa", "--lambda", "--mu", "--nu", "--degree"}


def _glue_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None) -> int:
    argv = _glue_values(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        if args.max_level_size is not None:
            posets.DEFAULT_MAX_LEVEL_SIZE = args.max_level_size
        started = time.perf_counter()
        out, code = args.func(args)
    except (UsageError, ParseError, DiagramError, LevelizeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResolutionError, posets.PosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = out.render(args.format) if isinstance(out, Table) else out
    sys.stdout.write(text)
    sys.stdout.flush()
    if args.command == "selftest":
        print(f"selftest finished in {time.perf_counter() - started:.1f}s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
