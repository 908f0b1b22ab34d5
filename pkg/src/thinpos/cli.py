"""Command line front end. Every command prints one JSON report.

Exit codes: 0 ok, 1 validation failure, 2 malformed input or usage error.
Inputs are file paths, ``-`` for standard input, or inline JSON. A report
produced by another command is accepted wherever its payload would be, so
generators pipe straight into checkers.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from . import __version__, bridge, catalog, decomp, kirby, trisect, widthset
from ._kernels import BACKEND

EXIT = {"ok": 0, "invalid": 1, "error": 2}


@dataclass
class Report:
    status: str = "ok"
    payload: Any = None
    warnings: list[str] = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> dict:
        return {"status": self.status, "payload": self.payload,
                "warnings": self.warnings, "error": self.error}


class MalformedInput(Exception):
    pass


def _read(arg: str) -> Any:
    try:
        if arg == "-":
            text = sys.stdin.read()
        elif arg.lstrip().startswith(("{", "[")):
            text = arg
        else:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        obj = json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise MalformedInput(f"cannot read JSON from {arg!r}: {e}") from None
    if isinstance(obj, dict) and "status" in obj and "payload" in obj:
        obj = obj["payload"]
    return obj


def _parse(arg: str, loader: Callable[[Any], Any]) -> Any:
    obj = _read(arg)
    try:
        return loader(obj)
    except (ValueError, KeyError, TypeError) as e:
        raise MalformedInput(f"{arg if len(arg) < 60 else arg[:57] + '...'}: {e}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise MalformedInput(f"expected comma-separated integers, got {text!r}") from None


# width

def _width_compare(a):
    x = _parse(a.a, widthset.WidthMultiset.from_json)
    y = _parse(a.b, widthset.WidthMultiset.from_json)
    return Report(payload={"order": widthset.compare(x, y).value, "a": x.to_json(), "b": y.to_json()})


def _width_min(a):
    ws = [_parse(x, widthset.WidthMultiset.from_json) for x in a.widths]
    return Report(payload={"min": widthset.min_of(ws).to_json()})


def _profile_report(p: decomp.DecompositionProfile) -> Report:
    return Report(payload=p.to_json())


def _width_compute(a):
    p = _parse(a.profile, decomp.DecompositionProfile.from_json)
    w = decomp.width_of(p)
    levels = [decomp.level_complexity(lv) for lv in p.levels]
    return Report(payload={"label": p.label, "width": w.to_json(), "levels": levels},
                  warnings=widthset.lint(w))


def _width_reverse(a):
    return _profile_report(decomp.reverse(_parse(a.profile, decomp.DecompositionProfile.from_json)))


def _width_concat(a):
    pm = _parse(a.m, decomp.DecompositionProfile.from_json)
    pn = _parse(a.n, decomp.DecompositionProfile.from_json)
    return _profile_report(decomp.concat_with_reversed(pm, pn))


def _width_merge(a):
    p = _parse(a.profile, decomp.DecompositionProfile.from_json)
    try:
        new = decomp.merge_levels(p, a.level)
    except (ValueError, IndexError) as e:
        return Report("invalid", error=str(e))
    return Report(payload={"profile": new.to_json(), "width_before": decomp.width_of(p).to_json(),
                           "width_after": decomp.width_of(new).to_json(),
                           "order": widthset.compare(decomp.width_of(new), decomp.width_of(p)).value})


def _width_split(a):
    p = _parse(a.profile, decomp.DecompositionProfile.from_json)
    data = _parse(a.data, decomp.SplitData.from_json)
    try:
        res = decomp.split_level(p, a.level, data)
    except (ValueError, IndexError) as e:
        return Report("invalid", error=str(e))
    return Report(payload={"profile": res.profile.to_json(), "c_old": res.c_old, "c_new_a": res.c_new_a,
                           "c_new_b": res.c_new_b, "width_before": decomp.width_of(p).to_json(),
                           "width_after": decomp.width_of(res.profile).to_json(), "order": res.order.value})


_CATALOG = {
    "s4": lambda a: catalog.s4(),
    "s1xs3": lambda a: catalog.s1xs3(),
    "s1xb3": lambda a: catalog.s1xb3(),
    "cp2": lambda a: catalog.cp2(1),
    "cp2bar": lambda a: catalog.cp2(-1),
    "plumbing": lambda a: catalog.linear_plumbing(_ints(a.framings) if a.framings else [-2] * a.k),
    "bundle": lambda a: catalog.disk_bundle(not a.nonorientable, a.g, a.n),
    "bundle-double": lambda a: catalog.bundle_double(not a.nonorientable, a.g, a.n),
    "bundle-double-simultaneous": lambda a: catalog.bundle_double_simultaneous(not a.nonorientable, a.g, a.n),
}


def _width_catalog(a):
    try:
        return _profile_report(_CATALOG[a.name](a))
    except ValueError as e:
        raise MalformedInput(str(e)) from None


# kirby

def _kirby_gen(a):
    try:
        if a.family == "plumbing":
            d = kirby.linear_plumbing(_ints(a.framings or ""))
        else:
            d = kirby.disk_bundle(not a.nonorientable, a.g, a.n)
    except ValueError as e:
        raise MalformedInput(str(e)) from None
    return Report(payload=d.to_json())


def _kirby_double(a):
    d = _parse(a.diagram, kirby.KirbyDiagram.from_json)
    try:
        return Report(payload=kirby.double(d).to_json())
    except ValueError as e:
        return Report("invalid", error=str(e))


def _kirby_invariants(a):
    d = _parse(a.diagram, kirby.KirbyDiagram.from_json)
    out: dict[str, Any] = {"euler": kirby.euler_characteristic(d)}
    warnings = []
    for key, fn in (("homology", kirby.homology_of_2handlebody),
                    ("boundary_H1", kirby.boundary_first_homology),
                    ("intersection_form", kirby.intersection_form)):
        try:
            out[key] = fn(d).to_json()
        except kirby.NotATwoHandlebody as e:
            warnings.append(f"{key} skipped: {e}")
    return Report(payload=out, warnings=warnings)


# tri

def _tri_gen(a):
    try:
        if a.family == "s4":
            d = trisect.s4()
        elif a.family == "s1xs3":
            d = trisect.s1xs3()
        elif a.family in ("cp2", "cp2bar"):
            d = trisect.cp2(1 if a.family == "cp2" else -1)
        else:
            d = trisect.sphere_bundle_double_diagram(not a.nonorientable, a.g, a.n)
    except ValueError as e:
        raise MalformedInput(str(e)) from None
    return Report(payload=d.to_json())


def _tri_verify(a):
    d = _parse(a.diagram, trisect.TrisectionDiagram.from_json)
    rep = trisect.validate_trisection(d)
    return Report("ok" if rep.ok else "invalid", rep.to_json(), list(rep.caveats))


def _tri_symmetry(a):
    d = _parse(a.diagram, trisect.TrisectionDiagram.from_json)
    m = _read(a.matrix)
    if isinstance(m, dict):
        m = m.get("matrix")
    try:
        diags = trisect.check_symmetry_action(d, m, a.p)
    except (ValueError, TypeError) as e:
        raise MalformedInput(f"symmetry action: {e}") from None
    return Report("ok" if not diags else "invalid", {"p": a.p, "diagnostics": diags},
                  [trisect.HOMOLOGY_CAVEAT])


# bridge

def _bridge_band(a):
    bt = _parse(a.data, bridge.BridgeTrisection.from_json)
    try:
        bd = bridge.banded_link(bt)
    except ValueError as e:
        return Report("invalid", error=str(e))
    payload = bd.to_json()
    payload["components"] = bridge.components_of_union(bt.theta_alpha, bt.theta_gamma)
    return Report(payload=payload)


def _bridge_euler(a):
    bt = _parse(a.data, bridge.BridgeTrisection.from_json)
    try:
        chi = bridge.branch_surface_euler(bt)
    except ValueError as e:
        return Report("invalid", error=str(e))
    bl = bridge.boundary_links(bt)
    payload = {"b": bt.b, "components": chi + bt.b, "surface_euler": chi,
               "boundary": {"at_zero": bl.at_zero, "at_one": bl.at_one}}
    if a.p is not None:
        try:
            payload["cover_euler"] = bridge.branched_cover_euler(a.p, a.chi_base, chi)
        except ValueError as e:
            raise MalformedInput(str(e)) from None
    return Report(payload=payload)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise MalformedInput(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thinpos", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"thinpos {__version__} ({BACKEND} kernels)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def cmd(parent, name, fn, help_):
        c = parent.add_parser(name, help=help_)
        c.set_defaults(fn=fn)
        return c

    def bundle_opts(c):
        c.add_argument("--g", type=int, default=1)
        c.add_argument("--n", type=int, default=0)
        c.add_argument("--nonorientable", action="store_true")

    w = sub.add_parser("width", help="width multisets and decomposition profiles")
    ws = w.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = cmd(ws, "compare", _width_compare, "compare two widths")
    c.add_argument("a")
    c.add_argument("b")
    c = cmd(ws, "min", _width_min, "least of several widths")
    c.add_argument("widths", nargs="+")
    for name, fn, h in (("compute", _width_compute, "width of a profile"),
                        ("reverse", _width_reverse, "upside-down profile")):
        cmd(ws, name, fn, h).add_argument("profile")
    c = cmd(ws, "concat", _width_concat, "M followed by N upside down")
    c.add_argument("m")
    c.add_argument("n")
    c = cmd(ws, "merge", _width_merge, "merge a level without 2- and 3-handles into the next")
    c.add_argument("profile")
    c.add_argument("--level", type=int, required=True)
    c = cmd(ws, "split", _width_split, "attach the 2-handles of a split link in two rounds")
    c.add_argument("profile")
    c.add_argument("--level", type=int, required=True)
    c.add_argument("--data", required=True, help='{"hg_b", "t_b", "hg_a_surgered", "t_a", ...}')
    c = cmd(ws, "catalog", _width_catalog, "shipped profiles")
    c.add_argument("name", choices=sorted(_CATALOG))
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--framings")
    bundle_opts(c)

    k = sub.add_parser("kirby", help="algebraic Kirby diagrams")
    ks = k.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = cmd(ks, "gen", _kirby_gen, "generate a diagram")
    c.add_argument("family", choices=("plumbing", "bundle"))
    c.add_argument("--framings")
    bundle_opts(c)
    cmd(ks, "double", _kirby_double, "diagram of the double").add_argument("diagram")
    cmd(ks, "invariants", _kirby_invariants, "homology, boundary H1, intersection form").add_argument("diagram")

    t = sub.add_parser("tri", help="trisection diagrams")
    ts = t.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = cmd(ts, "gen", _tri_gen, "generate a diagram")
    c.add_argument("family", choices=("s4", "s1xs3", "cp2", "cp2bar", "bundle-double"))
    bundle_opts(c)
    cmd(ts, "verify", _tri_verify, "validate a diagram").add_argument("diagram")
    c = cmd(ts, "symmetry", _tri_symmetry, "necessary conditions for a period-p symmetry")
    c.add_argument("diagram")
    c.add_argument("--matrix", required=True)
    c.add_argument("--p", type=int, default=2)

    b = sub.add_parser("bridge", help="bridge trisections of branch surfaces")
    bs = b.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    cmd(bs, "band", _bridge_band, "banded link").add_argument("data")
    c = cmd(bs, "euler", _bridge_euler, "Euler bookkeeping")
    c.add_argument("data")
    c.add_argument("--p", type=int)
    c.add_argument("--chi-base", type=int, default=0)
    return p


def _text(rep: Report) -> str:
    lines = [f"status: {rep.status}"]
    if rep.error:
        lines.append(f"error: {rep.error}")
    if isinstance(rep.payload, dict):
        lines += [f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(rep.payload.items())]
    elif rep.payload is not None:
        lines.append(json.dumps(rep.payload, sort_keys=True))
    lines += [f"warning: {w}" for w in rep.warnings]
    return "\n".join(lines)


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        rep = args.fn(args)
    except MalformedInput as e:
        rep = Report("error", error=str(e))
    if fmt == "text":
        print(_text(rep), file=out)
    else:
        print(json.dumps(rep.to_json(), sort_keys=True), file=out)
    return EXIT[rep.status]


def main() -> None:
    sys.exit(run())
