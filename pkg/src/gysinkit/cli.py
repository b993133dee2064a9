"""Command-line entry point.

Exit status: 0 on success, 1 on malformed input, 2 when a sequence is
inexact or a solve is infeasible.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import io
from .complexes import (
    MalformedComplexError,
    MalformedPairError,
    NonSimplicialMapError,
    cohomology,
    relative_cohomology,
)
from .equivariant import MalformedInvolutionError, NonRegularActionError, quotient_complex, split_involution
from .fixtures import fixture, fixture_info
from .graded import GradedDims
from .gysin import GysinInput, assemble, duality_report, e2_rows
from .lesolve import (
    MalformedTemplateError,
    UnboundedTemplateError,
    alternating_sum_check,
    check_exact,
    solve_dims,
)

EXIT_OK, EXIT_MALFORMED, EXIT_INCONSISTENT = 0, 1, 2

MALFORMED = (
    io.ParseError,
    OSError,
    LookupError,
    MalformedComplexError,
    MalformedPairError,
    MalformedInvolutionError,
    NonSimplicialMapError,
    NonRegularActionError,
    MalformedTemplateError,
    UnboundedTemplateError,
)


class _Result:
    def __init__(self, text: str, data: dict, code: int = EXIT_OK):
        self.text, self.data, self.code = text, data, code


def _dims_line(g: GradedDims, top: int) -> str:
    return " ".join(f"H^{k}={g[k]}" for k in range(max(top, 0) + 1))


def _read(path: str) -> str:
    return Path(path).read_text()


def dump_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _cmd_cohomology(args) -> _Result:
    x = io.parse_complex(_read(args.path))
    dims = cohomology(x).dims
    return _Result(_dims_line(dims, x.dimension),
                   {"verb": "cohomology", "dims": dims.as_list(max(x.dimension, 0) + 1)})


def _cmd_relative(args) -> _Result:
    p = io.parse_pair(_read(args.path))
    dims = relative_cohomology(p).dims
    top = p.total.dimension
    return _Result(_dims_line(dims, top),
                   {"verb": "relative", "dims": dims.as_list(max(top, 0) + 1)})


def _cmd_split(args) -> _Result:
    inv = io.parse_involution(_read(args.path))
    sp = split_involution(inv)
    top = inv.carrier.dimension
    text = f"symmetric: {_dims_line(sp.symmetric, top)}\nantisymmetric: {_dims_line(sp.antisymmetric, top)}"
    n = max(top, 0) + 1
    return _Result(text, {"verb": "split", "symmetric": sp.symmetric.as_list(n),
                          "antisymmetric": sp.antisymmetric.as_list(n)})


def _cmd_quotient(args) -> _Result:
    inv = io.parse_involution(_read(args.path))
    q = quotient_complex(inv)
    dims = cohomology(q).dims
    simplices = [list(s) for s in q.maximal_simplices()]
    text = io.format_complex(q) + "# " + _dims_line(dims, q.dimension)
    return _Result(text, {"verb": "quotient", "maximal_simplices": simplices,
                          "dims": dims.as_list(max(q.dimension, 0) + 1)})


def _cmd_les_check(args) -> _Result:
    t = io.parse_template(_read(args.path))
    labels = [s.label for s in t.slots]
    if t.has_all_maps:
        verdicts = check_exact(t)
        bad = [i for i, ok in enumerate(verdicts) if not ok]
        alt = alternating_sum_check(t)
        ok = not bad and alt
        if bad:
            text = "inexact at: " + ", ".join(f"{i} ({labels[i]})" for i in bad)
        else:
            text = "exact at every position"
        text += f"\nalternating sum: {'zero' if alt else 'nonzero'}"
        data = {"verb": "les-check", "mode": "maps", "exact": verdicts, "alternating_sum_zero": alt}
    else:
        if not t.fully_known:
            raise MalformedTemplateError("les-check without explicit maps needs every dimension known")
        alt = alternating_sum_check(t)
        feasible = solve_dims(t.dims_only()).consistent
        ok = alt and feasible
        text = (f"alternating sum: {'zero' if alt else 'nonzero'}\n"
                f"dimensions admit an exact sequence: {'yes' if feasible else 'no'}")
        data = {"verb": "les-check", "mode": "dims", "alternating_sum_zero": alt, "feasible": feasible}
    data["ok"] = ok
    return _Result(text, data, EXIT_OK if ok else EXIT_INCONSISTENT)


def _cmd_les_solve(args) -> _Result:
    t = io.parse_template(_read(args.path))
    rep = solve_dims(t.dims_only())
    lines = [f"consistent: {'yes' if rep.consistent else 'no'}"]
    for pos in rep.unknown:
        vals = rep.feasible[pos]
        label = t.slots[pos].label
        if len(vals) == 1:
            lines.append(f"{label} = {vals[0]}")
        else:
            lines.append(f"{label} in {{{', '.join(map(str, vals))}}}")
    lines.append(f"feasible assignments: {len(rep.profiles)}")
    data = {
        "verb": "les-solve",
        "consistent": rep.consistent,
        "unknown": [{"position": p, "label": t.slots[p].label, "feasible": list(rep.feasible[p])}
                    for p in rep.unknown],
        "profiles": [list(p) for p in rep.profiles],
        "rank_ranges": [list(r) for r in rep.rank_ranges],
    }
    return _Result("\n".join(lines), data, EXIT_OK if rep.consistent else EXIT_INCONSISTENT)


_KNOWN = re.compile(r"^H(\d+)=(\d+)$")


def _gysin_input(args) -> GysinInput:
    if args.source == "fixture":
        if not args.name:
            raise LookupError("'fixture' needs a fixture name")
        g = fixture(args.name)
    else:
        if args.name:
            raise io.ParseError(f"unexpected argument {args.name!r}")
        g = io.parse_gysin_input(_read(args.source), name=Path(args.source).name)
    known = {}
    for item in getattr(args, "known", None) or []:
        m = _KNOWN.match(item.replace(" ", ""))
        if m is None:
            raise io.ParseError(f"--known expects H<k>=<d>, got {item!r}")
        known[int(m.group(1))] = int(m.group(2))
    if known:
        try:
            g = g.with_known(known)
        except ValueError as exc:
            raise io.ParseError(str(exc)) from None
    return g


def _cmd_gysin(args) -> _Result:
    g = _gysin_input(args)
    r = assemble(g)
    n = g.degree_bound + 1
    lines = [f"Gysin sequence for {g.name or 'input'} (dim M = {g.degree_bound})",
             f"H^*(Q): {r.orbit_dims.poincare()}",
             f"H^*(Q,S): {r.relative_dims.poincare()}",
             f"exotic term (antisymmetric H^*(M^S1)): {r.antisymmetric_dims.poincare()}",
             f"middle term: {r.middle_dims.poincare()}",
             f"consistent: {'yes' if r.solve.consistent else 'no'}"]
    polys = r.poincare_polynomials()
    if len(polys) == 1:
        lines.append(f"P_M = {polys[0]}")
    elif polys:
        lines.append(f"feasible P_M ({len(polys)}):")
        lines += [f"  P_M = {p}" for p in polys]
    _, dtext = duality_report(g)
    lines.append(f"duality: {dtext}")
    data = {
        "verb": "gysin",
        "name": g.name,
        "degree_bound": g.degree_bound,
        "known": {str(k): v for k, v in g.total_dims.items()},
        "orbit": r.orbit_dims.as_list(),
        "relative": r.relative_dims.as_list(),
        "antisymmetric": r.antisymmetric_dims.as_list(),
        "middle": r.middle_dims.as_list(),
        "template": [{"label": s.label, "dim": s.dim} for s in r.template.slots],
        "consistent": r.solve.consistent,
        "profiles": [p.as_list(n) for p in r.total_profiles()],
        "poincare": polys,
        "duality_obstructed": r.duality_obstructed,
    }
    return _Result("\n".join(lines), data, EXIT_OK if r.solve.consistent else EXIT_INCONSISTENT)


def _cmd_fixture(args) -> _Result:
    info = fixture_info(args.name)
    g = info.build()
    expected = [p.poincare() for p in info.expected]
    text = (f"# {args.name}: {info.description}\n"
            + "".join(f"# expected P_M = {p}\n" for p in expected)
            + io.format_gysin_input(g).rstrip("\n"))
    return _Result(text, {"verb": "fixture", "name": args.name, "description": info.description,
                          "expected": expected, "input": io.format_gysin_input(g)})


def _cmd_e2(args) -> _Result:
    rows = e2_rows(_gysin_input(args))
    text = "\n".join(f"q={q}: {row.poincare()}" for q, row in enumerate(rows))
    return _Result(text, {"verb": "e2", "rows": [row.as_list() for row in rows]})


def _cmd_duality(args) -> _Result:
    g = _gysin_input(args)
    obstructed, text = duality_report(g)
    anti = e2_rows(g)[2]
    return _Result(f"duality: {text}", {"verb": "duality", "obstructed": obstructed,
                                        "degrees": [k for k, _ in anti.items()]})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gysinkit", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="verb", required=True)

    for verb, fn, helptext in [
        ("cohomology", _cmd_cohomology, "cohomology of a complex file"),
        ("relative", _cmd_relative, "relative cohomology of a pair file"),
        ("split", _cmd_split, "symmetric/antisymmetric split of an involution file"),
        ("quotient", _cmd_quotient, "orbit complex of a regular involution file"),
        ("les-check", _cmd_les_check, "check exactness of a template file"),
        ("les-solve", _cmd_les_solve, "solve unknown dimensions of a template file"),
    ]:
        p = sub.add_parser(verb, parents=[fmt], help=helptext)
        p.add_argument("path")
        p.set_defaults(func=fn)

    for verb, fn, helptext in [
        ("gysin", _cmd_gysin, "assemble and solve a Gysin sequence"),
        ("e2", _cmd_e2, "E_2 rows of a Gysin input"),
        ("duality", _cmd_duality, "duality obstruction of a Gysin input"),
    ]:
        p = sub.add_parser(verb, parents=[fmt], help=helptext)
        p.add_argument("source", help="Gysin input file, or the word 'fixture'")
        p.add_argument("name", nargs="?", help="fixture name when source is 'fixture'")
        p.add_argument("--known", action="append", metavar="Hk=d", help="pin dim H^k(M)")
        p.set_defaults(func=fn)

    p = sub.add_parser("fixture", parents=[fmt], help="print a built-in fixture as a Gysin input file")
    p.add_argument("name")
    p.set_defaults(func=_cmd_fixture)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except MALFORMED as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MALFORMED
    if args.format == "json":
        stdout.write(dump_json(result.data))
    else:
        stdout.write(result.text + "\n")
    return result.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
