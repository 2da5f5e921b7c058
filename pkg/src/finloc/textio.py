"""Line-oriented input formats and Hasse-diagram DOT output.

A file looks like::

    # the diamond
    elements: bot l r top
    le: bot l
    le: bot r
    le: l top
    le: r top

Lattice files may add ``top:``/``bot:`` lines, which must agree with the
order. Domain files must give ``bot:``. An optional ``kind:`` line
(``poset``, ``lattice`` or ``domain``) overrides the file extension.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, ValidationError
from .lattice import FinDistLattice, build_lattice
from .order import FinPoset, cover_pairs, poset_from_pairs

KINDS = ("poset", "lattice", "domain")
EXTENSIONS = {
    ".poset": "poset",
    ".lat": "lattice",
    ".lattice": "lattice",
    ".frame": "lattice",
    ".dom": "domain",
    ".domain": "domain",
}


@dataclass
class ParsedFile:
    elements: list[str]
    pairs: list[tuple[str, str]] = field(default_factory=list)
    top: str | None = None
    bot: str | None = None
    kind: str | None = None
    lines: dict = field(default_factory=dict)


def parse_text(text: str) -> ParsedFile:
    elements = None
    parsed = ParsedFile([])
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(lineno, f"expected 'key: value', got {line!r}")
        key, _, rest = line.partition(":")
        key, args = key.strip(), rest.split()
        if key == "elements":
            if elements is not None:
                raise ParseError(lineno, "duplicate elements line")
            if not args:
                raise ParseError(lineno, "no elements given")
            if len(set(args)) != len(args):
                raise ParseError(lineno, "duplicate element label")
            elements = args
            parsed.elements = args
        elif key == "le":
            if elements is None:
                raise ParseError(lineno, "le: before elements:")
            if len(args) != 2:
                raise ParseError(lineno, "le: takes exactly two labels")
            for a in args:
                if a not in elements:
                    raise ParseError(lineno, f"unknown element {a!r}")
            parsed.pairs.append((args[0], args[1]))
            parsed.lines.setdefault("le", []).append(lineno)
        elif key in ("top", "bot"):
            if len(args) != 1 or elements is None or args[0] not in elements:
                raise ParseError(lineno, f"{key}: needs one known element")
            setattr(parsed, key, args[0])
            parsed.lines[key] = lineno
        elif key == "kind":
            if len(args) != 1 or args[0] not in KINDS:
                raise ParseError(lineno, f"kind must be one of {KINDS}")
            parsed.kind = args[0]
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if elements is None:
        raise ParseError(0, "missing elements: line")
    return parsed


def parse_poset(text: str) -> FinPoset:
    p = parse_text(text)
    return poset_from_pairs(p.elements, p.pairs)


def parse_lattice(text: str) -> FinDistLattice:
    p = parse_text(text)
    L = build_lattice(poset_from_pairs(p.elements, p.pairs))
    for key in ("top", "bot"):
        given = getattr(p, key)
        if given is not None and L.index(given) != getattr(L, key):
            raise ParseError(p.lines[key], f"{key}: {given} disagrees with the order")
    return L


def parse_domain(text: str):
    from .scott import validate_scott_domain

    p = parse_text(text)
    if p.bot is None:
        raise ParseError(0, "domain file needs a bot: line")
    P = poset_from_pairs(p.elements, p.pairs)
    return validate_scott_domain(P, P.index(p.bot))


def detect_kind(path: Path, text: str) -> str:
    kind = parse_text(text).kind
    if kind:
        return kind
    kind = EXTENSIONS.get(path.suffix)
    if kind is None:
        raise ParseError(0, f"cannot tell the kind of {path.name}; add a kind: line")
    return kind


def parse_input(path, kind: str | None = None):
    """Load a poset, lattice or domain file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    kind = kind or detect_kind(path, text)
    return {"poset": parse_poset, "lattice": parse_lattice, "domain": parse_domain}[kind](text)


def load(path, kind=None):
    """Like :func:`parse_input` but wraps validation errors with the file name."""
    try:
        return parse_input(path, kind)
    except ValidationError as e:
        raise type(e)(*e.witness, message=f"{path}: {e}") from e


# writers

def _poset_of(structure) -> FinPoset:
    if isinstance(structure, FinPoset):
        return structure
    if hasattr(structure, "poset"):
        return structure.poset
    if hasattr(structure, "frame"):
        return structure.frame.poset
    raise TypeError(f"cannot draw {type(structure).__name__}")


def format_poset(structure, kind: str | None = None) -> str:
    """Serialise to the input format, listing only the Hasse covers."""
    P = _poset_of(structure)
    lines = []
    if kind:
        lines.append(f"kind: {kind}")
    lines.append("elements: " + " ".join(P.labels))
    for i, j in cover_pairs(P):
        lines.append(f"le: {P.labels[i]} {P.labels[j]}")
    if isinstance(structure, FinDistLattice):
        lines.append(f"top: {structure.label(structure.top)}")
        lines.append(f"bot: {structure.label(structure.bot)}")
    elif hasattr(structure, "bot") and hasattr(structure, "poset"):
        lines.append(f"bot: {P.labels[structure.bot]}")
    return "\n".join(lines) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(structure, name: str = "hasse") -> str:
    """Hasse diagram in DOT; byte-stable for a fixed input."""
    P = _poset_of(structure)
    out = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in P.elements:
        out.append(f"  n{i} [label={_quote(P.labels[i])}];")
    for i, j in cover_pairs(P):
        out.append(f"  n{i} -> n{j};")
    out.append("}")
    return "\n".join(out) + "\n"


_NODE = re.compile(r'^\s*n(\d+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$')
_EDGE = re.compile(r"^\s*n(\d+)\s*->\s*n(\d+);\s*$")


def parse_dot(text: str) -> tuple[list[str], list[tuple[int, int]]]:
    """Recover node labels and edges from :func:`emit_dot` output."""
    labels: dict[int, str] = {}
    edges = []
    for line in text.splitlines():
        m = _NODE.match(line)
        if m:
            labels[int(m.group(1))] = re.sub(r"\\(.)", r"\1", m.group(2))
            continue
        m = _EDGE.match(line)
        if m:
            edges.append((int(m.group(1)), int(m.group(2))))
    return [labels[i] for i in sorted(labels)], edges
