"""Text formats for complexes, pairs, involutions, templates and Gysin input.

All formats ignore blank lines and lines starting with ``#``.  Errors are
raised as :class:`ParseError` naming the offending line.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .complexes import SimplicialComplex, SimplicialPair
from .equivariant import Involution, MalformedInvolutionError
from .exactla import RationalMatrix
from .gysin import GysinInput
from .lesolve import ExactSequenceTemplate, MalformedTemplateError, Slot


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _split_sections(text: str, sep: str) -> list[list[tuple[int, str]]]:
    sections: list[list[tuple[int, str]]] = [[]]
    for no, line in _lines(text):
        if line == sep:
            sections.append([])
        else:
            sections[-1].append((no, line))
    return sections


def _simplex(no: int, line: str) -> tuple[int, ...]:
    try:
        verts = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise ParseError(f"expected vertex integers, got {line!r}", no) from None
    if any(v < 0 for v in verts):
        raise ParseError("vertex labels must be nonnegative", no)
    if len(set(verts)) != len(verts):
        raise ParseError(f"repeated vertex in {line!r}", no)
    return verts


def _closure(rows) -> SimplicialComplex:
    return SimplicialComplex.closure(_simplex(no, line) for no, line in rows)


def _involution_pairs(rows) -> list[tuple[int, int]]:
    pairs = []
    for no, line in rows:
        try:
            a, b = (int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"expected a vertex pair 'a b', got {line!r}", no) from None
        pairs.append((no, a, b))
    return pairs


def _build_involution(carrier: SimplicialComplex, pairs) -> Involution:
    mapping: dict[int, int] = {}
    verts = set(carrier.vertices)
    for no, a, b in pairs:
        for u, v in ((a, b), (b, a)):
            if u not in verts:
                raise ParseError(f"vertex {u} is not in the complex", no)
            if mapping.get(u, v) != v:
                raise ParseError(f"vertex {u} is paired twice", no)
            mapping[u] = v
    try:
        return Involution(carrier, mapping)
    except MalformedInvolutionError as exc:
        line = pairs[-1][0] if pairs else None
        raise ParseError(str(exc), line) from None


def _sub_of(total: SimplicialComplex, rows) -> SimplicialComplex:
    for no, line in rows:
        s = _simplex(no, line)
        if s not in total:
            raise ParseError(f"subcomplex simplex {s} is not a simplex of the total complex", no)
    return _closure(rows)


def parse_complex(text: str) -> SimplicialComplex:
    sections = _split_sections(text, "---")
    if len(sections) != 1:
        raise ParseError("a complex file has no '---' section")
    return _closure(sections[0])


def parse_pair(text: str) -> SimplicialPair:
    sections = _split_sections(text, "---")
    if len(sections) > 2:
        raise ParseError("a pair file has exactly one '---' separator", sections[2][0][0] if sections[2] else None)
    total = _closure(sections[0])
    sub = _sub_of(total, sections[1]) if len(sections) == 2 else SimplicialComplex()
    return SimplicialPair(total, sub)


def parse_involution(text: str) -> Involution:
    sections = _split_sections(text, "===")
    if len(sections) != 2:
        raise ParseError("an involution file needs one '===' line after the complex")
    carrier = _closure(sections[0])
    return _build_involution(carrier, _involution_pairs(sections[1]))


_PARAM = re.compile(r"^(n|H(\d+))\s*=\s*(\d+)$")


def parse_gysin_input(text: str, name: str | None = None) -> GysinInput:
    """Sections separated by ``---``: orbit complex, Sigma subcomplex, fixed
    set, involution pairs; ``n=<dim M>`` and ``H<k>=<d>`` lines may sit in
    the involution section or a fifth section."""
    sections = _split_sections(text, "---")
    if len(sections) not in (4, 5):
        raise ParseError(f"expected 4 or 5 '---'-separated sections, got {len(sections)}")
    orbit = _closure(sections[0])
    sigma = _sub_of(orbit, sections[1])
    fixed = _closure(sections[2])
    pair_rows, degree_bound, known = [], None, {}
    for no, line in [row for sec in sections[3:] for row in sec]:
        m = _PARAM.match(line.replace(" ", ""))
        if m is None:
            if len(sections) == 5 and (no, line) in sections[4]:
                raise ParseError(f"expected 'n=<d>' or 'H<k>=<d>', got {line!r}", no)
            pair_rows.append((no, line))
        elif m.group(1) == "n":
            degree_bound = int(m.group(3))
        else:
            known[int(m.group(2))] = int(m.group(3))
    if degree_bound is None:
        raise ParseError("missing 'n=<degree bound>' line")
    inv = _build_involution(fixed, _involution_pairs(pair_rows))
    try:
        return GysinInput(SimplicialPair(orbit, sigma), fixed, inv, degree_bound, known, name)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _rational(no: int, tok: str):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad matrix entry {tok!r}", no) from None


def parse_template(text: str) -> ExactSequenceTemplate:
    """One slot per line, ``label dim`` with ``dim`` an integer or ``?``; a
    bare ``0`` is a zero sentinel.  Optional map blocks follow the slots: a
    line ``@ i`` and then the rows of the matrix from slot ``i`` to slot
    ``i+1`` (slots counted from 0).  Maps touching a zero slot are implied.
    """
    slots: list[Slot] = []
    blocks: dict[int, tuple[int, list]] = {}
    current = None
    for no, line in _lines(text):
        if line.startswith("@"):
            try:
                current = int(line[1:])
            except ValueError:
                raise ParseError(f"expected '@ <arrow index>', got {line!r}", no) from None
            if current in blocks:
                raise ParseError(f"map {current} given twice", no)
            blocks[current] = (no, [])
            continue
        if current is not None:
            blocks[current][1].append([_rational(no, tok) for tok in line.split()])
            continue
        parts = line.rsplit(None, 1)
        if len(parts) == 1:
            if parts[0] != "0":
                raise ParseError(f"expected 'label dim' or '0', got {line!r}", no)
            slots.append(Slot("0", 0))
            continue
        label, dim = parts
        if dim == "?":
            slots.append(Slot(label, None))
        else:
            try:
                d = int(dim)
            except ValueError:
                raise ParseError(f"dimension must be an integer or '?', got {dim!r}", no) from None
            if d < 0:
                raise ParseError("dimension must be nonnegative", no)
            slots.append(Slot(label, d))
    if len(slots) < 2 or slots[0].dim != 0 or slots[-1].dim != 0:
        raise ParseError("the template must start and end with a '0' sentinel line")
    maps = None
    if blocks:
        maps = []
        for i in range(len(slots) - 1):
            src, dst = slots[i].dim, slots[i + 1].dim
            if i in blocks:
                no, rows = blocks.pop(i)
                if src is None or dst is None:
                    raise ParseError(f"map {i} touches a slot of unknown dimension", no)
                if not rows and (src == 0 or dst == 0):
                    rows = [[]] * dst
                if len(rows) != dst or any(len(r) != src for r in rows):
                    raise ParseError(f"map {i} must be {dst}x{src}", no)
                maps.append(RationalMatrix(dst, src, (x for r in rows for x in r)))
            elif src == 0 or dst == 0:
                maps.append(RationalMatrix.zeros(dst, src))
            else:
                maps.append(None)
        if blocks:
            no, _ = next(iter(blocks.values()))
            raise ParseError("map index out of range", no)
    try:
        return ExactSequenceTemplate(tuple(slots), maps)
    except MalformedTemplateError as exc:
        raise ParseError(str(exc)) from None


def format_complex(x: SimplicialComplex) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in x.maximal_simplices())


def format_gysin_input(g: GysinInput) -> str:
    parts = [
        format_complex(g.orbit_pair.total),
        format_complex(g.orbit_pair.sub),
        format_complex(g.fixed_circle_set),
        "".join(f"{a} {b}\n" for a, b in g.j_involution.pairs()),
    ]
    params = f"n={g.degree_bound}\n" + "".join(f"H{k}={v}\n" for k, v in g.total_dims.items())
    return "---\n".join(parts + [params])
