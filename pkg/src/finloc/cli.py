"""Command-line front end.

Every command prints one JSON report on stdout and exits 0 exactly when the
report carries no violation. Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import caps
from .errors import CapExceeded, FinlocError, ParseError, ValidationError
from .frame import (
    classify,
    compact_opens,
    frame_distributivity_witness,
    hom_of_point,
    is_spectral_map,
    point_violations,
    points,
)
from .lattice import FinDistLattice, validate_lattice
from .nuclei import enumerate_nuclei, validate_nucleus, validate_prenucleus
from .order import FinPoset, cover_pairs
from .patch import epsilon, nucleus_name, patch, patch_base, verify_patch_up
from .report import SCHEMA, jsonable
from .scott import (
    ScottDomain,
    is_spectral_scott,
    points_equivalences,
    scott_frame,
    sharp_elements,
)
from .spectrum import compact_opens_lattice, duality_roundtrip_frame, duality_roundtrip_object, spectrum
from .suites import GROUPS, run_suite
from .textio import emit_dot, format_poset, load


class Report:
    def __init__(self, operation: str):
        self.operation = operation
        self.inputs: list[dict] = []
        self.result = None
        self.violations: list[dict] = []
        self.seconds = None

    def add_input(self, path):
        data = Path(path).read_bytes()
        self.inputs.append({"path": str(path), "sha256": hashlib.sha256(data).hexdigest()})

    def violation(self, kind: str, **info):
        self.violations.append({"kind": kind, **jsonable(info)})

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self, timing=False) -> dict:
        out = {
            "schema": SCHEMA,
            "operation": self.operation,
            "inputs": self.inputs,
            "ok": self.ok,
            "result": jsonable(self.result),
            "violations": self.violations,
        }
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 6)
        return out


def _load(report: Report, path, kind=None):
    report.add_input(path)
    return load(path, kind)


def _lattice(report, path, kind=None) -> FinDistLattice:
    obj = _load(report, path, kind or "lattice")
    if not isinstance(obj, FinDistLattice):
        raise FinlocError(f"{path} is not a lattice")
    return obj


def _domain(report, path) -> ScottDomain:
    return _load(report, path, "domain")


def _labels(F, items):
    return [F.label(i) for i in items]


def _tables(F: FinDistLattice) -> dict:
    lab = F.labels
    return {
        "meet": {lab[a]: {lab[b]: lab[F.meet(a, b)] for b in F.elements} for a in F.elements},
        "join": {lab[a]: {lab[b]: lab[F.join(a, b)] for b in F.elements} for a in F.elements},
        "implies": {
            lab[a]: {lab[b]: lab[F.implication_table[a][b]] for b in F.elements} for a in F.elements
        },
    }


def _write_dot(args, text):
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")


# verbs

def cmd_validate(args, report):
    obj = _load(report, args.file, args.kind)
    result = {"size": obj.poset.n if hasattr(obj, "poset") else obj.n}
    if isinstance(obj, FinDistLattice):
        result["kind"] = "lattice"
        for v in validate_lattice(obj).violations:
            report.violation(v.axiom, witness=_labels(obj, v.witness))
        w = frame_distributivity_witness(obj)
        if w is not None:
            report.violation("frame_distributive", witness=w)
    elif isinstance(obj, ScottDomain):
        result["kind"] = "domain"
        result["bot"] = obj.label(obj.bot)
    else:
        result["kind"] = "poset"
    report.result = result


def cmd_show(args, report):
    obj = _load(report, args.file, args.kind)
    P: FinPoset = obj.poset if hasattr(obj, "poset") else obj
    result = {
        "elements": list(P.labels),
        "le": [[P.labels[i], P.labels[j]] for i in P.elements for j in P.elements if P.le(i, j)],
        "covers": [[P.labels[i], P.labels[j]] for i, j in cover_pairs(P)],
    }
    if isinstance(obj, FinDistLattice):
        result["top"] = obj.label(obj.top)
        result["bot"] = obj.label(obj.bot)
        result.update(_tables(obj))
    elif isinstance(obj, ScottDomain):
        result["bot"] = obj.label(obj.bot)
    report.result = result


def cmd_frame(args, report):
    F = _lattice(report, args.file)
    if args.action == "check":
        for v in validate_lattice(F).violations:
            report.violation(v.axiom, witness=_labels(F, v.witness))
        w = frame_distributivity_witness(F)
        if w is not None:
            report.violation("frame_distributive", witness=w)
        report.result = {"size": F.n, "frame": not report.violations, "compact_opens": _labels(F, compact_opens(F))}
    elif args.action == "points":
        out = []
        for p in points(F):
            bad = point_violations(p)
            for b in bad:
                report.violation(b, point=p.labels())
            out.append({"filter": p.labels(), "spectral": is_spectral_map(hom_of_point(p))})
        report.result = {"count": len(out), "points": out}
    else:
        report.result = {c.predicate: c.as_dict() for c in classify(F)}


def _parse_table(F, text: str) -> list[int]:
    body = text.split(":", 1)[1] if text.lstrip().startswith("j:") else text
    table = {}
    for item in body.split():
        if "->" not in item:
            raise ParseError(1, f"expected x->y, got {item!r}")
        a, b = item.split("->", 1)
        try:
            table[F.index(a)] = F.index(b)
        except (KeyError, ValueError):
            raise ParseError(1, f"unknown element in {item!r}") from None
    missing = [F.label(x) for x in F.elements if x not in table]
    if missing:
        raise ParseError(1, f"no value for {', '.join(missing)}")
    return [table[x] for x in F.elements]


def cmd_nuclei(args, report):
    F = _lattice(report, args.file)
    if args.action == "list":
        out = []
        for j in enumerate_nuclei(F):
            out.append({"name": nucleus_name(F, j), "table": j.render(), "fixed": _labels(F, j.fixed_points())})
        report.result = {"count": len(out), "nuclei": out}
        return
    if args.table is None:
        raise FinlocError("nuclei check needs a table such as 'j: 0->a a->a 1->1'")
    table = _parse_table(F, args.table)
    try:
        j = validate_nucleus(F, table)
        report.result = {"nucleus": True, "name": nucleus_name(F, j), "fixed": _labels(F, j.fixed_points())}
    except ValidationError as e:
        prenucleus = True
        try:
            validate_prenucleus(F, table)
        except ValidationError:
            prenucleus = False
        report.result = {"nucleus": False, "prenucleus": prenucleus}
        report.violation(type(e).__name__, witness=_labels(F, e.witness))


def cmd_spectrum(args, report):
    L = _lattice(report, args.file)
    sp = spectrum(L)
    dot = emit_dot(sp.frame, "spectrum")
    _write_dot(args, dot)
    report.result = {
        "size": sp.frame.n,
        "ideals": [I.label() for I in sp.ideals],
        "frame": format_poset(sp.frame, "lattice"),
        "dot": dot,
    }


def cmd_duality(args, report):
    L = _lattice(report, args.file)
    report.result = {
        "K(Spec L) = L": duality_roundtrip_object(L).as_dict(),
        "Idl(K X) = X": duality_roundtrip_frame(L).as_dict(),
        "compact_opens": list(compact_opens_lattice(L).lattice.labels),
    }


def cmd_patch(args, report):
    if args.target[0] == "verify-up":
        if len(args.target) != 3:
            raise FinlocError("usage: patch verify-up A X")
        A = _lattice(report, args.target[1])
        X = _lattice(report, args.target[2])
        certs = verify_patch_up(A, X)
        report.result = {"homs": len(certs), "certificates": [c.as_dict() for c in certs]}
        return
    if len(args.target) != 1:
        raise FinlocError("usage: patch <frame-file> | patch verify-up A X")
    X = _lattice(report, args.target[0])
    P = patch(X)
    base = patch_base(X, P)
    eps = epsilon(X, P)
    dot = emit_dot(P.frame, "patch")
    _write_dot(args, dot)
    report.result = {
        "size": P.frame.n,
        "nuclei": {P.frame.label(i): j.render() for i, j in enumerate(P.nuclei)},
        "base": {
            f"{X.label(a)},{X.label(b)}": P.frame.label(base.member(a, b)) for a, b in base.pairs
        },
        "epsilon": {X.label(u): P.frame.label(eps.upper.table[u]) for u in X.elements},
        "stone": classify(P.frame)[-1].as_dict(),
        "frame": format_poset(P.frame, "lattice"),
        "dot": dot,
    }


def cmd_scott(args, report):
    D = _domain(report, args.file)
    if args.action == "frame":
        S = scott_frame(D)
        report.result = {"size": S.frame.n, "opens": list(S.frame.labels), "frame": format_poset(S.frame, "lattice")}
    elif args.action == "points":
        S = scott_frame(D)
        pts = points(S.frame)
        report.result = {"count": len(pts), "points": [p.labels() for p in pts]}
    elif args.action == "sharp":
        report.result = {"sharp": _labels(D, sharp_elements(D))}
    else:
        spectral = is_spectral_scott(D)
        if not spectral:
            report.violation("not_spectral", detail=spectral.witness)
        report.result = {"spectral": spectral.as_dict(), "points": points_equivalences(D).as_dict()}


def cmd_suite(args, report):
    results = run_suite(args.name, args.max_size)
    for r in results:
        print(r.line(), file=sys.stderr)
        if not r.ok:
            report.violation("criterion", number=r.number, name=r.name, detail=r.detail)
    report.result = [r.as_dict() for r in results]


def cmd_dot(args, report):
    obj = _load(report, args.file, args.kind)
    dot = emit_dot(obj, Path(args.file).stem.replace("-", "_") or "hasse")
    _write_dot(args, dot)
    report.result = {"dot": dot}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finloc", description="Finite frames, locales, nuclei and patches.")
    p.add_argument("--cap", type=int, default=caps.DEFAULT_CAP, help="candidate budget for every enumerator")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    sub = p.add_subparsers(dest="verb", required=True)

    def file_verb(name, fn, helptext, kind=True, output=False):
        sp = sub.add_parser(name, help=helptext)
        sp.set_defaults(func=fn)
        if kind:
            sp.add_argument("--kind", choices=("poset", "lattice", "domain"))
        if output:
            sp.add_argument("-o", "--output", help="also write the DOT diagram here")
        return sp

    file_verb("validate", cmd_validate, "parse and check a structure").add_argument("file")
    file_verb("show", cmd_show, "print order and operation tables").add_argument("file")

    sp = file_verb("frame", cmd_frame, "frame checks, points and classes", kind=False)
    sp.add_argument("action", choices=("check", "points", "classes"))
    sp.add_argument("file")

    sp = file_verb("nuclei", cmd_nuclei, "list nuclei or check a table", kind=False)
    sp.add_argument("action", choices=("list", "check"))
    sp.add_argument("file")
    sp.add_argument("table", nargs="?")

    file_verb("spectrum", cmd_spectrum, "frame of ideals", kind=False, output=True).add_argument("file")

    sp = file_verb("duality", cmd_duality, "Stone duality round-trips", kind=False)
    sp.add_argument("action", choices=("check",))
    sp.add_argument("file")

    sp = file_verb("patch", cmd_patch, "patch frame, or 'verify-up A X'", kind=False, output=True)
    sp.add_argument("target", nargs="+")

    sp = file_verb("scott", cmd_scott, "Scott locale of a domain", kind=False)
    sp.add_argument("action", choices=("frame", "points", "sharp", "verify"))
    sp.add_argument("file")

    sp = file_verb("suite", cmd_suite, "run an acceptance group over the corpus", kind=False)
    sp.add_argument("name", choices=sorted(GROUPS))
    sp.add_argument("--cap", dest="max_size", type=int, default=None,
                    help="only use corpus frames with at most this many elements")

    file_verb("dot", cmd_dot, "Hasse diagram in DOT", output=True).add_argument("file")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = Report(args.verb if not getattr(args, "action", None) else f"{args.verb} {args.action}")
    if args.verb == "patch" and args.target and args.target[0] == "verify-up":
        report.operation = "patch verify-up"
    start = time.perf_counter()
    try:
        with caps.cap_limit(args.cap):
            args.func(args, report)
    except ParseError as e:
        report.violation("ParseError", line=e.line, message=e.message)
        print(f"error: {e}", file=sys.stderr)
    except ValidationError as e:
        report.violation(type(e).__name__, witness=list(e.witness), message=str(e))
        print(f"error: {e}", file=sys.stderr)
    except CapExceeded as e:
        report.violation("CapExceeded", needed=e.needed, cap=e.cap)
        print(f"error: {e}", file=sys.stderr)
    except (FinlocError, OSError) as e:
        report.violation(type(e).__name__, message=str(e))
        print(f"error: {e}", file=sys.stderr)
    report.seconds = time.perf_counter() - start
    json.dump(report.as_dict(args.timing), sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
