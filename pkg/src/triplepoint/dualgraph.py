"""Resolution-graph calculus: intersection theory and Ulrich chains.

Cycles are plain tuples of non-negative ints indexed like the graph's
vertex list.  Anti-nef means Z.E_i <= 0 for every vertex (the weak sign
convention, which the fundamental-cycle and orthogonality computations
require).

Chain enumeration follows the structure theorem: starting from the
fundamental cycle, each step adds a positive cycle Y with

    Y . Z_prev = 0,   p_a(Y) = 0,   K . (Z_0 - Y) = 0,

and the new cycle must stay anti-nef.  Supports of admissible Y are full
connected components of the orthogonal locus {E_i : Z_prev . E_i = 0}: a
component-boundary vertex would get positive pairing with the new cycle.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphInvariantError, ParseError


class DualGraph:
    """Weighted dual graph of a resolution: negative-definite, no (-1)s."""

    __slots__ = ("ids", "weights", "edges", "_adj", "_hash")

    def __init__(self, ids, weights, edges):
        ids = tuple(ids)
        weights = tuple(weights)
        if len(ids) != len(set(ids)):
            raise GraphInvariantError("duplicate vertex ids")
        if len(weights) != len(ids):
            raise GraphInvariantError("weights/ids length mismatch")
        if any(w > -2 for w in weights):
            raise GraphInvariantError("vertex with self-intersection > -2")
        index = {v: k for k, v in enumerate(ids)}
        norm_edges = []
        seen = set()
        for a, b in edges:
            ia, ib = index[a], index[b]
            if ia == ib:
                raise GraphInvariantError("loop edge")
            key = (min(ia, ib), max(ia, ib))
            if key in seen:
                raise GraphInvariantError("multi-edge")
            seen.add(key)
            norm_edges.append((a, b))
        self.ids = ids
        self.weights = weights
        self.edges = tuple(norm_edges)
        adj = [[] for _ in ids]
        for a, b in norm_edges:
            adj[index[a]].append(index[b])
            adj[index[b]].append(index[a])
        self._adj = tuple(tuple(sorted(x)) for x in adj)
        self._hash = hash((ids, weights, self.edge_indices()))
        self._validate()

    def edge_indices(self):
        index = {v: k for k, v in enumerate(self.ids)}
        return tuple(
            tuple(sorted((index[a], index[b]))) for a, b in self.edges
        )

    def _validate(self):
        n = len(self.ids)
        # connected
        if n:
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != n:
                raise GraphInvariantError("graph is not connected")
        if not self.is_negative_definite():
            raise GraphInvariantError("intersection matrix is not negative definite")

    def __eq__(self, other):
        return (
            isinstance(other, DualGraph)
            and self.ids == other.ids
            and self.weights == other.weights
            and self.edge_indices() == other.edge_indices()
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"DualGraph({len(self.ids)} vertices)"

    @property
    def n(self):
        return len(self.ids)

    def adjacency(self, i):
        return self._adj[i]

    def matrix(self):
        n = self.n
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            M[i][i] = self.weights[i]
        for i, j in self.edge_indices():
            M[i][j] = M[j][i] = 1
        return M

    def is_negative_definite(self):
        # Exact LU over Fractions: negative definite iff every pivot < 0.
        M = [[Fraction(x) for x in row] for row in self.matrix()]
        n = self.n
        for k in range(n):
            piv = M[k][k]
            if piv >= 0:
                return False
            for r in range(k + 1, n):
                f = M[r][k] / piv
                if f:
                    for c in range(k, n):
                        M[r][c] -= f * M[k][c]
        return True

    def pairing_with_vertex(self, Z, i):
        """Z . E_i."""
        total = Z[i] * self.weights[i]
        for j in self._adj[i]:
            total += Z[j]
        return total

    def to_json_dict(self):
        return {
            "vertices": [
                {"id": v, "weight": w} for v, w in zip(self.ids, self.weights)
            ],
            "edges": [[a, b] for a, b in self.edges],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data):
        try:
            ids = [v["id"] for v in data["vertices"]]
            weights = [int(v["weight"]) for v in data["vertices"]]
            edges = [(a, b) for a, b in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed graph object: {exc}") from exc
        try:
            return cls(ids, weights, edges)
        except KeyError as exc:
            raise ParseError(f"edge references unknown vertex {exc}") from exc

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid graph JSON: {exc}") from exc
        return cls.from_json_dict(data)

    def cycle_to_json_dict(self, Z):
        return {v: c for v, c in zip(self.ids, Z)}

    def cycle_from_json_dict(self, data):
        try:
            return tuple(int(data.get(v, 0)) for v in self.ids)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"malformed cycle object: {exc}") from exc


def intersection_pairing(g: DualGraph, Y, Z) -> int:
    if len(Y) != g.n or len(Z) != g.n:
        raise ValueError("cycle length does not match vertex count")
    total = 0
    for i in range(g.n):
        if Y[i]:
            total += Y[i] * g.pairing_with_vertex(Z, i)
    return total


def is_positive(Z) -> bool:
    return all(c >= 0 for c in Z) and any(c > 0 for c in Z)


def is_antinef(g: DualGraph, Z) -> bool:
    if not is_positive(Z):
        raise ValueError("anti-nef test expects a positive cycle")
    return all(g.pairing_with_vertex(Z, i) <= 0 for i in range(g.n))


def fundamental_cycle(g: DualGraph):
    """Laufer's computation sequence from the reduced cycle."""
    Z = [1] * g.n
    while True:
        for i in range(g.n):
            if g.pairing_with_vertex(Z, i) > 0:
                Z[i] += 1
                break
        else:
            return tuple(Z)


def canonical_numbers(g: DualGraph):
    """K . E_i = -E_i^2 - 2 per vertex."""
    return tuple(-w - 2 for w in g.weights)


def canonical_pairing(g: DualGraph, Z) -> int:
    K = canonical_numbers(g)
    return sum(c * k for c, k in zip(Z, K))


def arithmetic_genus(g: DualGraph, Y) -> int:
    if not is_positive(Y):
        raise ValueError("arithmetic genus expects a positive cycle")
    s = intersection_pairing(g, Y, Y) + canonical_pairing(g, Y)
    if s % 2:
        raise GraphInvariantError("odd self-intersection plus canonical pairing")
    return s // 2 + 1


def rationality_check(g: DualGraph) -> bool:
    return arithmetic_genus(g, fundamental_cycle(g)) == 0


def _require_rational(g):
    if not rationality_check(g):
        raise GraphInvariantError("graph is not rational (p_a(Z_0) != 0)")


def graph_multiplicity(g: DualGraph) -> int:
    _require_rational(g)
    Z0 = fundamental_cycle(g)
    return -intersection_pairing(g, Z0, Z0)


def cycle_length(g: DualGraph, Z) -> int:
    """Colength of the ideal represented by an anti-nef cycle."""
    _require_rational(g)
    if not is_antinef(g, Z):
        raise ValueError("cycle is not anti-nef")
    return -(intersection_pairing(g, Z, Z) + canonical_pairing(g, Z)) // 2


def cycle_mu(g: DualGraph, Z) -> int:
    """Minimal generator count of the represented ideal."""
    _require_rational(g)
    if not is_antinef(g, Z):
        raise ValueError("cycle is not anti-nef")
    return -intersection_pairing(g, Z, fundamental_cycle(g)) + 1


def cycle_stats(g: DualGraph, Z):
    return {
        "len": cycle_length(g, Z),
        "e0": -intersection_pairing(g, Z, Z),
        "mu": cycle_mu(g, Z),
    }


def unique_ulrich_filter(g: DualGraph) -> bool:
    """Some vertex has b >= 3 and negative pairing with Z_0 (forces X = {m})."""
    _require_rational(g)
    Z0 = fundamental_cycle(g)
    return any(
        g.weights[i] <= -3 and g.pairing_with_vertex(Z0, i) < 0 for i in range(g.n)
    )


def _connected(g: DualGraph, vertices) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adjacency(v):
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def ulrich_support_candidates(g: DualGraph):
    """Connected vertex sets between {b_i >= 3} and {E_i . Z_0 = 0}."""
    _require_rational(g)
    Z0 = fundamental_cycle(g)
    lower = frozenset(i for i in range(g.n) if g.weights[i] <= -3)
    upper = [i for i in range(g.n) if g.pairing_with_vertex(Z0, i) == 0]
    if not lower.issubset(upper):
        return []
    free = sorted(set(upper) - lower)
    out = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            cand = frozenset(lower | set(extra))
            if cand and _connected(g, cand):
                out.append(tuple(sorted(cand)))
    out.sort()
    return out


@dataclass(frozen=True)
class UlrichChain:
    """One chain Z_0 < Z_1 < ... < Z_s; steps hold (Y_k, Z_k)."""

    steps: tuple

    @property
    def depth(self):
        return len(self.steps)

    def result(self, Z0):
        return self.steps[-1][1] if self.steps else Z0


@dataclass(frozen=True)
class ChainEnumeration:
    fundamental: tuple
    chains: tuple  # UlrichChain, first entry is the empty chain (Z_0)
    truncated: bool
    antinef_pruned: bool

    @property
    def cycles(self):
        return tuple(c.result(self.fundamental) for c in self.chains)


def _components_of(g: DualGraph, vertices):
    remaining = set(vertices)
    comps = []
    while remaining:
        start = min(remaining)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adjacency(v):
                if w in remaining and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(seen)))
        remaining -= seen
    comps.sort()
    return comps


def _induced_fundamental(g: DualGraph, comp):
    """Fundamental cycle of the induced subgraph, as bounds per vertex."""
    pos = {v: k for k, v in enumerate(comp)}
    Z = [1] * len(comp)
    while True:
        for k, v in enumerate(comp):
            total = Z[k] * g.weights[v]
            for w in g.adjacency(v):
                if w in pos:
                    total += Z[pos[w]]
            if total > 0:
                Z[k] += 1
                break
        else:
            return Z


def enumerate_ulrich_chains(g: DualGraph, max_steps: int = 16) -> ChainEnumeration:
    _require_rational(g)
    Z0 = fundamental_cycle(g)
    KZ0 = canonical_pairing(g, Z0)
    heavy = frozenset(i for i in range(g.n) if g.weights[i] <= -3)
    chains = [UlrichChain(())]
    seen_cycles = {Z0}
    state = {"truncated": False, "pruned": False}

    def step_candidates(Zprev, upper, first):
        orth = [i for i in range(g.n) if g.pairing_with_vertex(Zprev, i) == 0]
        for comp in _components_of(g, orth):
            # support bound for the first step: every b>=3 vertex sits in supp(Y_1)
            if first and heavy and not heavy.issubset(comp):
                continue
            if any(upper[v] < 1 for v in comp):
                continue
            lower = _induced_fundamental(g, comp)
            if any(lo > upper[v] for lo, v in zip(lower, comp)):
                continue
            ranges = [range(lo, upper[v] + 1) for lo, v in zip(lower, comp)]
            for combo in itertools.product(*ranges):
                Y = [0] * g.n
                for val, v in zip(combo, comp):
                    Y[v] = val
                yield tuple(Y)

    def conditions_hold(Y, Zprev):
        if canonical_pairing(g, Y) != KZ0:
            return False
        if intersection_pairing(g, Y, Zprev) != 0:
            return False
        if arithmetic_genus(g, Y) != 0:
            return False
        return True

    def extend(prefix_steps, Zprev, upper, depth, first):
        if depth >= max_steps:
            for Y in step_candidates(Zprev, upper, first):
                if conditions_hold(Y, Zprev):
                    Znew = tuple(a + b for a, b in zip(Zprev, Y))
                    if is_antinef(g, Znew):
                        state["truncated"] = True
                        return
            return
        for Y in step_candidates(Zprev, upper, first):
            if not conditions_hold(Y, Zprev):
                continue
            Znew = tuple(a + b for a, b in zip(Zprev, Y))
            if not is_antinef(g, Znew):
                state["pruned"] = True
                continue
            steps = prefix_steps + ((Y, Znew),)
            if Znew not in seen_cycles:
                seen_cycles.add(Znew)
                chains.append(UlrichChain(steps))
            extend(steps, Znew, list(Y), depth + 1, False)

    extend((), Z0, list(Z0), 0, True)
    ordered = sorted(chains, key=lambda c: (c.depth, c.steps))
    return ChainEnumeration(
        Z0, tuple(ordered), state["truncated"], state["pruned"]
    )
