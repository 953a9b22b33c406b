"""Line-oriented text formats. Files are 1-based; the in-memory model is 0-based.

Hypergraph::

    c optional comment
    p hs <n> <m>
    s <e1> <e2> ...          one line per set; a bare "s" is the empty set

Graph (edge list)::

    p edge <n> <m>
    e <u> <v>

PSI instance::

    p psi <|V|> <|E|> <t> <|F|>
    v <vertex> <part>        exactly one line per host vertex
    e <u> <v>                host edge
    f <i> <j>                pattern edge, once per unordered pair

Reduction layout sidecar::

    p layout <n> <m> <budget> <parts> <nominal budget>
    gs <tag>                 ground sets, in construction order
    el <index> <tag> <key>   element -> (ground set, vertex u or edge u-v)
    set <index> <tag> <key>  collection member -> construction label
"""

from __future__ import annotations

import re
from typing import Iterator

from .core import ParseError, SetSystem
from .matching import SimpleGraph
from .reductions import GroundSet, PsiInstance, ReductionLayout

__all__ = [
    "parse_hypergraph",
    "serialize_hypergraph",
    "parse_graph",
    "serialize_graph",
    "parse_psi",
    "serialize_psi",
    "parse_layout",
    "serialize_layout",
    "parse_solution",
]

_TOKEN = re.compile(r"\S+")


def _lines(text: str) -> Iterator[tuple[int, list[tuple[str, int]]]]:
    """Yield (line number, [(token, column)]) for non-blank, non-comment lines."""
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not toks or toks[0][0] == "c":
            continue
        yield lineno, toks


def _int(tok: tuple[str, int], lineno: int, lo: int = 0, hi: int | None = None, what="value") -> int:
    text, col = tok
    try:
        val = int(text)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {text!r}", lineno, col) from None
    if val < lo or (hi is not None and val > hi):
        rng = f"{lo}..{hi}" if hi is not None else f">= {lo}"
        raise ParseError(f"{what} {val} out of range {rng}", lineno, col)
    return val


def _header(text: str, kind: str, nfields: int):
    lines = list(_lines(text))
    if not lines:
        raise ParseError(f"missing 'p {kind}' header", 1)
    lineno, toks = lines[0]
    if toks[0][0] != "p" or len(toks) < 2 or toks[1][0] != kind:
        raise ParseError(f"expected 'p {kind}' header", lineno, toks[0][1])
    if len(toks) != 2 + nfields:
        raise ParseError(f"'p {kind}' header needs {nfields} numbers", lineno, toks[0][1])
    vals = [_int(t, lineno, what="header field") for t in toks[2:]]
    return vals, lines[1:], lineno


def parse_hypergraph(text: str) -> SetSystem:
    (n, m), body, last = _header(text, "hs", 2)
    sets: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, toks in body:
        last = lineno
        if toks[0][0] != "s":
            raise ParseError(f"unexpected line type {toks[0][0]!r}", lineno, toks[0][1])
        elems = []
        for tok in toks[1:]:
            e = _int(tok, lineno, 1, n, "element") - 1
            if e in elems:
                raise ParseError(f"element {e + 1} repeated", lineno, tok[1])
            elems.append(e)
        key = tuple(sorted(elems))
        if key in seen:
            raise ParseError(f"duplicate set (same as line {seen[key]})", lineno)
        seen[key] = lineno
        sets.append(key)
    if len(sets) != m:
        raise ParseError(f"header declares {m} sets, found {len(sets)}", last)
    return SetSystem(n, sets)


def serialize_hypergraph(F: SetSystem) -> str:
    out = [f"p hs {F.universe_size} {F.num_sets}"]
    for s in sorted(F.sets):
        out.append(" ".join(["s"] + [str(e + 1) for e in s]))
    return "\n".join(out) + "\n"


def _edges(body, n, lineno_hint, expected):
    edges = []
    seen: dict[frozenset, int] = {}
    for lineno, toks in body:
        if len(toks) != 3:
            raise ParseError("edge line needs two vertices", lineno, toks[0][1])
        u = _int(toks[1], lineno, 1, n, "vertex") - 1
        v = _int(toks[2], lineno, 1, n, "vertex") - 1
        if u == v:
            raise ParseError(f"self-loop at vertex {u + 1}", lineno, toks[1][1])
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"duplicate edge (same as line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((u, v))
    if expected is not None and len(edges) != expected:
        raise ParseError(f"header declares {expected} edges, found {len(edges)}", lineno_hint)
    return edges


def parse_graph(text: str) -> SimpleGraph:
    (n, m), body, last = _header(text, "edge", 2)
    for lineno, toks in body:
        if toks[0][0] != "e":
            raise ParseError(f"unexpected line type {toks[0][0]!r}", lineno, toks[0][1])
    last = body[-1][0] if body else last
    return SimpleGraph(n, _edges(body, n, last, m))


def serialize_graph(G: SimpleGraph) -> str:
    out = [f"p edge {G.vertex_count} {len(G.edges)}"]
    out += [f"e {u + 1} {v + 1}" for u, v in G.edges]
    return "\n".join(out) + "\n"


def parse_psi(text: str) -> PsiInstance:
    (nv, ne, t, nf), body, last = _header(text, "psi", 4)
    part: list[int | None] = [None] * nv
    host, pattern = [], []
    for lineno, toks in body:
        last = lineno
        kind = toks[0][0]
        if kind == "v":
            if len(toks) != 3:
                raise ParseError("'v' line needs a vertex and a part", lineno, toks[0][1])
            v = _int(toks[1], lineno, 1, nv, "vertex") - 1
            p = _int(toks[2], lineno, 1, t, "part") - 1
            if part[v] is not None:
                raise ParseError(f"vertex {v + 1} assigned twice", lineno, toks[1][1])
            part[v] = p
        elif kind == "e":
            host.append((lineno, toks))
        elif kind == "f":
            pattern.append((lineno, toks))
        else:
            raise ParseError(f"unexpected line type {kind!r}", lineno, toks[0][1])
    for v, p in enumerate(part):
        if p is None:
            raise ParseError(f"vertex {v + 1} is not assigned to a part", last)
    return PsiInstance(
        SimpleGraph(nv, _edges(host, nv, last, ne)),
        part,  # type: ignore[arg-type]
        SimpleGraph(t, _edges(pattern, t, last, nf)),
    )


def serialize_psi(inst: PsiInstance) -> str:
    out = [f"p psi {inst.host.vertex_count} {len(inst.host.edges)} {inst.t} {inst.k}"]
    out += [f"v {v + 1} {p + 1}" for v, p in enumerate(inst.partition)]
    out += [f"e {u + 1} {v + 1}" for u, v in inst.host.edges]
    out += [f"f {i + 1} {j + 1}" for i, j in inst.pattern.edges]
    return "\n".join(out) + "\n"


# number of leading part indices in each tag kind; the rest are levels
_PARTS = {"X": 1, "Y": 2, "A": 1, "B": 2, "C": 2, "C'": 2, "D": 2, "EMPTY": 0}


def _tag_str(tag: tuple) -> str:
    kind, rest = tag[0], tag[1:]
    np_ = _PARTS[kind]
    nums = [str(v + 1) for v in rest[:np_]] + [str(v) for v in rest[np_:]]
    return ":".join([kind] + nums)


def _tag_parse(text: str, lineno: int, col: int) -> tuple:
    kind, *nums = text.split(":")
    if kind not in _PARTS:
        raise ParseError(f"unknown tag kind {kind!r}", lineno, col)
    try:
        vals = [int(v) for v in nums]
    except ValueError:
        raise ParseError(f"malformed tag {text!r}", lineno, col) from None
    np_ = _PARTS[kind]
    return (kind, *[v - 1 for v in vals[:np_]], *vals[np_:])


def _key_str(key) -> str:
    if key is None:
        return "-"
    if isinstance(key, tuple):
        return f"{key[0] + 1}-{key[1] + 1}"
    return str(key + 1)


def _key_parse(text: str, lineno: int, col: int):
    if text == "-":
        return None
    try:
        if "-" in text:
            u, v = text.split("-")
            return (int(u) - 1, int(v) - 1)
        return int(text) - 1
    except ValueError:
        raise ParseError(f"malformed key {text!r}", lineno, col) from None


def serialize_layout(layout: ReductionLayout) -> str:
    F = layout.system
    out = [f"p layout {F.universe_size} {F.num_sets} {layout.budget} "
           f"{layout.num_parts} {layout.nominal_budget}"]
    out += [f"gs {_tag_str(g.tag)}" for g in layout.ground_sets]
    out += [f"el {e + 1} {_tag_str(tag)} {_key_str(key)}"
            for e, (tag, key) in enumerate(layout.element_keys)]
    out += [f"set {c + 1} {_tag_str(tag)} {_key_str(key)}"
            for c, labs in enumerate(layout.set_labels) for tag, key in labs]
    return "\n".join(out) + "\n"


def parse_layout(text: str, system: SetSystem) -> ReductionLayout:
    (n, m, budget, parts, nominal), body, _ = _header(text, "layout", 5)
    if n != system.universe_size or m != system.num_sets:
        raise ParseError("layout does not describe this hypergraph", 1)
    tags: list[tuple] = []
    keys: list = [None] * n
    labels: list[list] = [[] for _ in range(m)]
    for lineno, toks in body:
        kind = toks[0][0]
        if kind == "gs" and len(toks) == 2:
            tags.append(_tag_parse(toks[1][0], lineno, toks[1][1]))
        elif kind in ("el", "set") and len(toks) == 4:
            idx = _int(toks[1], lineno, 1, n if kind == "el" else m, "index") - 1
            entry = (_tag_parse(toks[2][0], lineno, toks[2][1]),
                     _key_parse(toks[3][0], lineno, toks[3][1]))
            if kind == "el":
                keys[idx] = entry
            else:
                labels[idx].append(entry)
        else:
            raise ParseError(f"malformed {kind!r} line", lineno, toks[0][1])
    missing = [e + 1 for e, k in enumerate(keys) if k is None]
    if missing:
        raise ParseError(f"element {missing[0]} has no 'el' line", 1)
    members: dict[tuple, list[int]] = {t: [] for t in tags}
    for e, (tag, _) in enumerate(keys):
        if tag not in members:
            raise ParseError(f"element {e + 1} names unknown ground set {_tag_str(tag)}", 1)
        members[tag].append(e)
    ground = [GroundSet(t, tuple(members[t])) for t in tags]
    return ReductionLayout(system, parts, ground, keys, labels, budget, nominal)


def parse_solution(text: str, n: int) -> list[int]:
    """Parse ``"1,4,7"`` (1-based, commas or spaces) into 0-based indices."""
    out = []
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        try:
            e = int(tok)
        except ValueError:
            raise ParseError(f"bad element {tok!r} in solution", 1) from None
        if not 1 <= e <= n:
            raise ParseError(f"solution element {e} out of range 1..{n}", 1)
        out.append(e - 1)
    return out
