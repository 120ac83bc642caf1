"""Instance files (native and classic CARP benchmark layouts) and random
instance generation."""
from __future__ import annotations

import math
import re
from pathlib import Path

import numpy as np

from .model import InputError, RawEdge, RawInstance


class ParseError(InputError):
    def __init__(self, path, line: int, col: int, msg: str):
        super().__init__(f"{path}:{line}:{col}: {msg}")
        self.line, self.col = line, col


def _tokens(text: str):
    """Yield (line number, [(column, token), ...]) for meaningful lines."""
    for ln, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield ln, [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _number(tok: str, path, ln: int, col: int, what: str):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        val = float(tok)
    except ValueError:
        raise ParseError(path, ln, col, f"{what} must be numeric, got {tok!r}") from None
    if not math.isfinite(val):
        raise ParseError(path, ln, col, f"{what} must be finite, got {tok!r}")
    return val


def _int(tok, path, ln, col, what):
    val = _number(tok, path, ln, col, what)
    if not isinstance(val, int):
        raise ParseError(path, ln, col, f"{what} must be an integer, got {tok!r}")
    return val


def parse_native(text: str, path="<string>") -> RawInstance:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError(path, 1, 1, "empty file: missing header")
    ln, toks = lines[0]
    if len(toks) != 4:
        raise ParseError(path, ln, 1, "header must be 'n_vertices n_edges capacity depot'")
    n, n_edges, cap, depot = (_int(t, path, ln, c, w) for (c, t), w in
                              zip(toks, ("n_vertices", "n_edges", "capacity", "depot")))
    if n < 1:
        raise ParseError(path, ln, toks[0][0], "n_vertices must be positive")
    if n_edges < 0:
        raise ParseError(path, ln, toks[1][0], "n_edges must be nonnegative")
    if cap < 1:
        raise ParseError(path, ln, toks[2][0], "capacity must be >= 1")
    if not 0 <= depot < n:
        raise ParseError(path, ln, toks[3][0], f"depot {depot} out of range [0, {n})")
    body = lines[1:]
    if len(body) != n_edges:
        where = body[n_edges][0] if len(body) > n_edges else ln
        raise ParseError(path, where, 1, f"header announces {n_edges} edges, found {len(body)}")
    edges = []
    for ln, toks in body:
        if len(toks) != 4:
            raise ParseError(path, ln, 1, "edge line must be 'u v cost demand'")
        (cu, tu), (cv, tv), (cc, tc), (cd, td) = toks
        u = _int(tu, path, ln, cu, "vertex id")
        v = _int(tv, path, ln, cv, "vertex id")
        for col, x in ((cu, u), (cv, v)):
            if not 0 <= x < n:
                raise ParseError(path, ln, col, f"vertex id {x} out of range [0, {n})")
        cost = _number(tc, path, ln, cc, "cost")
        if cost < 0:
            raise ParseError(path, ln, cc, "cost must be nonnegative")
        demand = _number(td, path, ln, cd, "demand")
        if demand not in (0, 1):
            raise ParseError(path, ln, cd, "demand must be 0 or 1 (equal-demand scope)")
        if u == v:
            if demand:
                raise ParseError(path, ln, cu, "self-loop cannot carry demand")
            continue
        edges.append(RawEdge(u, v, cost, int(demand)))
    return RawInstance(n, tuple(edges), depot, cap)


def parse_instance(path) -> RawInstance:
    path = Path(path)
    return parse_native(path.read_text(encoding="utf-8"), path)


_CLASSIC_EDGE = re.compile(
    r"^\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*coste\s+(\S+)(?:\s+demanda\s+(\S+))?\s*$")
_CLASSIC_KEYS = {"NOMBRE", "COMENTARIO", "VERTICES", "ARISTAS_REQ", "ARISTAS_NOREQ",
                 "VEHICULOS", "CAPACIDAD", "TIPO_COSTES_ARISTAS", "COSTE_TOTAL_REQ",
                 "LISTA_ARISTAS_REQ", "LISTA_ARISTAS_NOREQ", "DEPOSITO"}


def parse_classic(text: str, path="<string>") -> RawInstance:
    """Key-value CARP benchmark layout (1-based vertices, 'coste'/'demanda')."""
    fields = {}
    edges = []
    section = None
    for ln, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.strip() == "END":
            break
        m = _CLASSIC_EDGE.match(line)
        if m:
            if section is None:
                raise ParseError(path, ln, 1, "edge line outside an edge list")
            u, v = int(m.group(1)) - 1, int(m.group(2)) - 1
            cost = _number(m.group(3), path, ln, m.start(3) + 1, "cost")
            demand = 0
            if m.group(4) is not None:
                demand = _number(m.group(4), path, ln, m.start(4) + 1, "demand")
                if section == "LISTA_ARISTAS_NOREQ" and demand:
                    raise ParseError(path, ln, m.start(4) + 1, "non-required edge with demand")
                if demand not in (0, 1):
                    raise ParseError(path, ln, m.start(4) + 1,
                                     f"demand {m.group(4)} outside the equal-demand scope "
                                     "(demands must be 0 or 1)")
            elif section == "LISTA_ARISTAS_REQ":
                raise ParseError(path, ln, 1, "required edge without 'demanda'")
            edges.append((ln, u, v, cost, int(demand)))
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _CLASSIC_KEYS:
            raise ParseError(path, ln, 1, f"unknown key {key!r}")
        fields[key] = (ln, value.strip())
        section = key if key.startswith("LISTA_") else None
    for need in ("VERTICES", "CAPACIDAD", "DEPOSITO"):
        if need not in fields:
            raise ParseError(path, 1, 1, f"missing key {need}")

    def int_field(key):
        ln, val = fields[key]
        return _int(val, path, ln, 1, key)

    n, cap, depot = int_field("VERTICES"), int_field("CAPACIDAD"), int_field("DEPOSITO") - 1
    if not 0 <= depot < n:
        raise ParseError(path, fields["DEPOSITO"][0], 1, "depot out of range")
    raw_edges = []
    for ln, u, v, cost, demand in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(path, ln, 1, "vertex id out of range")
        if u == v and not demand:
            continue
        raw_edges.append(RawEdge(u, v, cost, demand))
    try:
        return RawInstance(n, tuple(raw_edges), depot, cap)
    except InputError as exc:
        raise ParseError(path, 1, 1, str(exc)) from None


def parse_classic_format(path) -> RawInstance:
    path = Path(path)
    return parse_classic(path.read_text(encoding="utf-8"), path)


def format_native(raw: RawInstance) -> str:
    lines = [f"{raw.vertex_count} {len(raw.edges)} {raw.capacity_k} {raw.depot}"]
    lines += [f"{e.u} {e.v} {e.cost!r} {e.demand}" for e in raw.edges]
    return "\n".join(lines) + "\n"


def generate(m: int, k: int, mode: str = "euclidean", seed: int = 0,
             coord_range: int = 100) -> RawInstance:
    """Random instance with m unit-demand customers.

    ``euclidean``: 2m integer points in [0, range]^2, customer i joins points
    2i and 2i+1, the depot is vertex 2m, and the graph is complete with
    Euclidean costs.  ``random-metric``: random connected graph with integer
    costs in [1, range], possibly sharing vertices between customers.
    """
    if m < 0 or k < 1:
        raise InputError("need m >= 0 and k >= 1")
    rng = np.random.default_rng(seed)
    if mode == "euclidean":
        pts = rng.integers(0, coord_range + 1, size=(2 * m + 1, 2))
        edges = []
        for a in range(2 * m + 1):
            for b in range(a + 1, 2 * m + 1):
                cost = math.hypot(*(pts[a] - pts[b]))
                demand = int(a < 2 * m and b == a + 1 and a % 2 == 0)
                edges.append(RawEdge(a, b, cost, demand))
        return RawInstance(2 * m + 1, tuple(edges), 2 * m, k)
    if mode == "random-metric":
        if m == 0:
            return RawInstance(1, (), 0, k)
        n = int(rng.integers(m + 1, 2 * m + 2))
        pairs = [(int(rng.integers(0, v)), v) for v in range(1, n)]
        for _ in range(int(rng.integers(m, 2 * m + 1))):
            a, b = rng.choice(n, size=2, replace=False)
            pairs.append((int(a), int(b)))
        costs = rng.integers(1, coord_range + 1, size=len(pairs))
        chosen = set(rng.choice(len(pairs), size=m, replace=False).tolist())
        edges = tuple(RawEdge(a, b, int(c), int(i in chosen))
                      for i, ((a, b), c) in enumerate(zip(pairs, costs)))
        return RawInstance(n, edges, 0, k)
    raise InputError(f"unknown generator mode {mode!r}")
