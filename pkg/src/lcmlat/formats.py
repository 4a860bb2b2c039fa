"""File formats: ideal text/JSON, lattice JSON, graph JSON, Betti JSON.

Text ideals have one monomial per line, factors like ``x2`` or ``x3^2``
joined by ``*``, ``#`` comments; the variable count is the largest index
seen.  All JSON indices are 0-based and all emitters are deterministic
(sorted keys, fixed separators) so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
import re

from .errors import FormatError
from .graphs import Graph
from .ideals import Monomial, MonomialIdeal, minimalize
from .lattice import FiniteLattice, lattice_from_covers, validate_labels

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def dumps_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- ideals -------------------------------------------------------------------


def parse_ideal_text(text: str) -> MonomialIdeal:
    raws = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        factors = {}
        for part in line.split("*"):
            m = _FACTOR_RE.match(part.strip())
            if not m:
                raise FormatError(f"line {lineno}: bad factor {part.strip()!r}")
            v = int(m.group(1))
            if v < 1:
                raise FormatError(f"line {lineno}: variable index must be >= 1")
            factors[v] = factors.get(v, 0) + int(m.group(2) or 1)
        raws.append((lineno, factors))
    if not raws:
        raise FormatError("line 1: no generators found")
    nvars = max(max(f) for _, f in raws)
    gens = []
    for lineno, factors in raws:
        exps = [0] * nvars
        for v, e in factors.items():
            exps[v - 1] = e
        gens.append(Monomial(tuple(exps)))
    return minimalize(gens, nvars)


def parse_ideal_json(obj) -> MonomialIdeal:
    try:
        nvars = int(obj["nvars"])
        gens = [Monomial(tuple(int(e) for e in g)) for g in obj["gens"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad ideal JSON: {exc}") from None
    for g in gens:
        if g.nvars != nvars:
            raise FormatError("bad ideal JSON: generator arity mismatch")
    return minimalize(gens, nvars)


def parse_ideal(text: str) -> MonomialIdeal:
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {exc.lineno}: {exc.msg}") from None
        return parse_ideal_json(obj)
    return parse_ideal_text(text)


def render_ideal_text(ideal: MonomialIdeal) -> str:
    return "\n".join(str(g) for g in ideal.gens) + "\n"


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"nvars": ideal.nvars, "gens": [list(g.exps) for g in ideal.gens]}


# -- lattices -----------------------------------------------------------------


def lattice_to_json(L: FiniteLattice) -> dict:
    out = {"n": L.n, "covers": [list(p) for p in L.cover_pairs]}
    if L.labels is not None:
        out["labels"] = [str(m) for m in L.labels]
    return out


def parse_lattice(text: str) -> FiniteLattice:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}: {exc.msg}") from None
    try:
        n = int(obj["n"])
        covers = [(int(a), int(b)) for a, b in obj["covers"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad lattice JSON: {exc}") from None
    labels = None
    if "labels" in obj and obj["labels"] is not None:
        labels = [parse_monomial_label(s) for s in obj["labels"]]
        if len(labels) != n:
            raise FormatError("bad lattice JSON: label count mismatch")
        nvars = max(m.nvars for m in labels)
        labels = [Monomial(m.exps + (0,) * (nvars - m.nvars)) for m in labels]
    L = lattice_from_covers(n, covers, labels)
    try:
        validate_labels(L)
    except Exception as exc:
        raise FormatError(f"bad lattice JSON: {exc}") from None
    return L


def parse_monomial_label(s: str) -> Monomial:
    s = s.strip()
    if s == "1":
        return Monomial(())
    factors = {}
    for part in s.split("*"):
        m = _FACTOR_RE.match(part.strip())
        if not m:
            raise FormatError(f"bad monomial label {s!r}")
        factors[int(m.group(1))] = factors.get(int(m.group(1)), 0) + int(
            m.group(2) or 1
        )
    nvars = max(factors)
    exps = [0] * nvars
    for v, e in factors.items():
        exps[v - 1] = e
    return Monomial(tuple(exps))


# -- graphs -------------------------------------------------------------------


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def parse_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}: {exc.msg}") from None
    try:
        return Graph(int(obj["n"]), tuple((int(u), int(v)) for u, v in obj["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from None


# -- Betti tables -------------------------------------------------------------


def betti_to_json(table) -> dict:
    return {"entries": table.to_json_entries()}
