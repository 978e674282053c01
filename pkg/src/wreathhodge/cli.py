"""Command-line interface.

Exit codes: 0 success or equality, 1 verification mismatch, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .elliptic import GenusTable, dmvv_expand, verify_q0_consistency
from .groups import (
    DEFAULT_ELEMENT_CAP,
    GroupError,
    WreathSizeError,
    build_wreath,
    cyclic_group,
    dihedral_group,
    load_group,
    symmetric_group,
    trivial_group,
)
from .hilbert import SurfaceHodge, goettsche_series, verify_cor1, verify_samehodge
from .orbifold import (
    InputError,
    OrbifoldData,
    trivial_orbifold,
    wreath_series_direct,
    wreath_series_product,
)
from .report import compare_series
from .series import BigradedPoly, SeriesError, SeriesQ, specialize
from .wreath_types import centralizer_order

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class CliInputError(Exception):
    pass


def _read_json(path: str):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise CliInputError("%s: cannot read file: %s" % (path, exc.strerror)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError("%s:%d:%d: malformed JSON: %s" % (path, exc.lineno, exc.colno, exc.msg)) from None


def _load(path: str, parser: Callable):
    data = _read_json(path)
    try:
        return parser(data)
    except (InputError, GroupError, SeriesError) as exc:
        raise CliInputError("%s: %s" % (path, exc)) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise CliInputError("%s: schema violation: %r" % (path, exc)) from None


BUILTIN_GROUPS = {
    "trivial": trivial_group,
    "z2": lambda: cyclic_group(2),
    "z3": lambda: cyclic_group(3),
    "z4": lambda: cyclic_group(4),
    "s3": lambda: symmetric_group(3),
    "d4": lambda: dihedral_group(4),
}


def _emit(args, text_lines: list[str], payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _series_lines(series: SeriesQ, label: str = "q") -> list[str]:
    lines = []
    for q in range(series.qmax + 1):
        for p in range(series.pmax + 1):
            deg = "%s^%d" % (label, q) if not series.pmax else "q^%d p^%d" % (q, p)
            lines.append("%s: %s" % (deg, series[(q, p)]))
    return lines


def _euler_lines(series: SeriesQ) -> list[str]:
    vals = specialize(series, 1, 1)
    return ["q^%d: %d" % (q, vals[(q, p)]) for q, p in series.degrees()]


# subcommands


def cmd_classes(args) -> int:
    if args.group:
        group = _load(args.group, lambda d: load_group(d, name=Path(args.group).stem))
    else:
        group = BUILTIN_GROUPS[args.builtin]()
    if args.n is None:
        rows = [
            {"representative": c.representative, "size": c.size, "centralizer_order": c.centralizer_order}
            for c in group.classes
        ]
        lines = ["%s: order %d, %d classes" % (group.name, group.order, len(rows))]
        lines += ["  rep %d  size %d  centralizer %d" % (r["representative"], r["size"], r["centralizer_order"])
                  for r in rows]
        _emit(args, lines, {"group": group.name, "order": group.order, "classes": rows})
        return EXIT_OK

    try:
        w = build_wreath(group, args.n, cap=args.cap)
    except WreathSizeError as exc:
        raise CliInputError(str(exc)) from None
    rows = []
    mismatch = False
    for cls in w.classes:
        elem = w.element(cls.representative)
        t = w.type_of(cls.representative)
        formula = centralizer_order(group, t)
        mismatch |= formula != cls.centralizer_order
        rows.append({
            "representative": {"g": list(elem.g), "s": [i + 1 for i in elem.s], "cycles": elem.cycle_notation()},
            "size": cls.size,
            "centralizer_order": cls.centralizer_order,
            "type": str(t),
            "type_parts": t.to_json(),
        })
    lines = ["%s: order %d, %d classes" % (w.name, w.order, len(rows))]
    for r in rows:
        rep = r["representative"]
        lines.append("  g=(%s) s=%s  size %d  centralizer %d  type %s" % (
            ",".join(map(str, rep["g"])), rep["cycles"], r["size"], r["centralizer_order"], r["type"]))
    _emit(args, lines, {"group": w.name, "order": w.order, "classes": rows})
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_hodge(args) -> int:
    orb = _load(args.file, OrbifoldData.from_json)
    mode = "both" if args.both else "direct" if args.direct else "product"
    series = {}
    if mode in ("product", "both"):
        series["product"] = wreath_series_product(orb, args.qmax)
    if mode in ("direct", "both"):
        series["direct"] = wreath_series_direct(orb, args.qmax)

    lines = ["%s (dim %d), q <= %d" % (orb.name, orb.dim, args.qmax)]
    payload: dict = {"name": orb.name, "dim": orb.dim, "qmax": args.qmax}
    status = EXIT_OK
    for key, s in series.items():
        lines.append("[%s]" % key)
        lines += _euler_lines(s) if args.euler else _series_lines(s)
        payload[key] = s.to_json()
        if args.euler:
            payload[key + "_euler"] = [specialize(s, 1, 1)[(q, 0)] for q in range(s.qmax + 1)]
    if mode == "both":
        rep = compare_series("product vs direct", series["product"], series["direct"])
        diff = [
            {"q": d.q, "s2": d.mismatch.s2, "t2": d.mismatch.t2,
             "product": d.mismatch.left, "direct": d.mismatch.right}
            for d in rep.degrees if not d.ok
        ]
        payload["diff"] = diff
        lines.append("diff: %s" % ("none" if not diff else ""))
        for d in rep.degrees:
            if not d.ok:
                lines.append("  q^%d %s" % (d.q, d.mismatch.describe()))
        status = EXIT_OK if not diff else EXIT_MISMATCH
    _emit(args, lines, payload)
    return status


def cmd_hilbert(args) -> int:
    surf = _load(args.surface, SurfaceHodge.from_json)
    s = goettsche_series(surf, args.qmax)
    lines = ["Hilbert schemes of points on %s, q <= %d" % (surf.name or args.surface, args.qmax)]
    lines += _euler_lines(s) if args.euler else _series_lines(s)
    payload = {"name": surf.name, "qmax": args.qmax, "series": s.to_json()}
    if args.euler:
        payload["euler"] = [specialize(s, 1, 1)[(q, 0)] for q in range(s.qmax + 1)]
    _emit(args, lines, payload)
    return EXIT_OK


def _resolution_orbifold(data, dim: int) -> OrbifoldData:
    if isinstance(data, dict) and "sectors" in data:
        return OrbifoldData.from_json(data)
    hodge = BigradedPoly.from_table(data["hodge"])
    return trivial_orbifold(hodge, dim, data.get("name", ""), compact=bool(data.get("compact", False)))


def cmd_verify(args) -> int:
    orb = _load(args.orbifold, OrbifoldData.from_json)
    try:
        if args.cor1:
            x_orb = _load(args.resolution, lambda d: _resolution_orbifold(d, orb.dim))
            rep = verify_cor1(orb, x_orb, args.qmax)
        else:
            surf = _load(args.resolution, SurfaceHodge.from_json)
            rep = verify_samehodge(orb, surf, args.qmax)
    except InputError as exc:
        raise CliInputError(str(exc)) from None
    _emit(args, rep.lines(), rep.to_json())
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_elliptic(args) -> int:
    table = _load(args.file, GenusTable.from_json)
    try:
        s = dmvv_expand(table, args.pmax, args.qmax)
    except InputError as exc:
        raise CliInputError("%s: %s" % (args.file, exc)) from None
    lines = ["second-quantized genus of %s, p <= %d, q <= %d" % (table.name or args.file, args.pmax, args.qmax)]
    lines += _series_lines(s)
    payload: dict = {"name": table.name, "pmax": args.pmax, "qmax": args.qmax, "series": s.to_json()}
    status = EXIT_OK
    if args.q0_check:
        orb = _load(args.q0_check, OrbifoldData.from_json)
        rep = verify_q0_consistency(orb, args.pmax)
        lines += rep.lines()
        payload["q0_check"] = rep.to_json()
        status = EXIT_OK if rep.passed else EXIT_MISMATCH
    _emit(args, lines, payload)
    return status


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    results = run_selftest()
    lines = []
    for r in results:
        lines.append("%-45s %s  %3d checks  %.2fs" % (r.name, "PASS" if r.ok else "FAIL", r.checks, r.seconds))
        if r.counterexample is not None:
            lines.append("  counterexample: %s" % json.dumps(r.counterexample, sort_keys=True))
    ok = all(r.ok for r in results)
    lines.append("selftest %s" % ("passed" if ok else "FAILED"))
    payload = [{"suite": r.name, "ok": r.ok, "checks": r.checks, "seconds": round(r.seconds, 3),
                "counterexample": r.counterexample} for r in results]
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_MISMATCH


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreathhodge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = common(sub.add_parser("classes", help="conjugacy classes of G or of G wr S_n"))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="group file {name, order, mul}")
    src.add_argument("--builtin", choices=sorted(BUILTIN_GROUPS))
    p.add_argument("--n", type=int, help="build G wr S_n and list its classes")
    p.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP, help="element-count cap")
    p.set_defaults(func=cmd_classes)

    p = common(sub.add_parser("hodge", help="orbifold Hodge series of the wreath orbifolds"))
    p.add_argument("file")
    p.add_argument("--qmax", type=_nonneg, default=4)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--direct", action="store_true", help="sum over conjugacy types")
    mode.add_argument("--product", action="store_true", help="closed-form product (default)")
    mode.add_argument("--both", action="store_true", help="both routes and their difference")
    p.add_argument("--euler", action="store_true", help="specialize at x = y = 1")
    p.set_defaults(func=cmd_hodge)

    p = common(sub.add_parser("hilbert", help="Hodge series of Hilbert schemes of points"))
    p.add_argument("surface")
    p.add_argument("--qmax", type=_nonneg, default=4)
    p.add_argument("--euler", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = common(sub.add_parser("verify", help="compare wreath orbifold and resolution Hodge numbers"))
    p.add_argument("--orbifold", required=True)
    p.add_argument("--resolution", required=True)
    p.add_argument("--qmax", type=_nonneg, default=4)
    p.add_argument("--cor1", action="store_true", help="compare with the symmetric-product orbifold of X")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("elliptic", help="expand the second-quantized elliptic genus product"))
    p.add_argument("file")
    p.add_argument("--pmax", type=_nonneg, default=4)
    p.add_argument("--qmax", type=_nonneg, default=4)
    p.add_argument("--q0-check", metavar="ORBIFOLD", help="also run the q = 0 consistency check")
    p.set_defaults(func=cmd_elliptic)

    p = common(sub.add_parser("selftest", help="run every oracle suite"))
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except CliInputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
