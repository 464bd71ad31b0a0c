"""Graphs, their cut Hamiltonians, and cheap dimension bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from .paulis import PauliString, PauliVector, anticommute
from .symmetry import PermGroup, graph_automorphisms, orbit_count


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset
    family: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            j, k = e
            if j == k:
                raise ValueError(f"self-loop at vertex {j}")
            if not (0 <= j < self.n and 0 <= k < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((min(j, k), max(j, k)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return cls(n, frozenset((j, (j + 1) % n) for j in range(n)), "cycle")

    @classmethod
    def complete(cls, n: int) -> "Graph":
        if n < 2:
            raise ValueError("complete graph needs n >= 2")
        return cls(
            n, frozenset((j, k) for j in range(n) for k in range(j + 1, n)),
            "complete",
        )

    @classmethod
    def path(cls, n: int) -> "Graph":
        if n < 2:
            raise ValueError("path needs n >= 2")
        return cls(n, frozenset((j, j + 1) for j in range(n - 1)), "path")

    @classmethod
    def from_file(cls, path) -> "Graph":
        """Parse a graph file: first line n, then one "j k" edge per line."""
        lines = [
            ln.strip()
            for ln in Path(path).read_text().splitlines()
            if ln.strip() and not ln.strip().startswith("#")
        ]
        if not lines:
            raise ValueError(f"{path}: empty graph file")
        try:
            n = int(lines[0])
        except ValueError:
            raise ValueError(f"{path}: first line must be the vertex count")
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"{path}: bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls(n, frozenset(edges))

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.n
        for j, k in self.edges:
            deg[j] += 1
            deg[k] += 1
        return deg

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = {v: [] for v in range(self.n)}
        for j, k in self.edges:
            adj[j].append(k)
            adj[k].append(j)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def parse_graph_spec(spec: str) -> Graph:
    """Parse "cycle:N", "complete:N", "path:N", or "file:PATH"."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"graph spec {spec!r} needs the form kind:arg")
    if kind == "file":
        return Graph.from_file(arg)
    try:
        n = int(arg)
    except ValueError:
        raise ValueError(f"graph spec {spec!r}: {arg!r} is not an integer")
    if kind == "cycle":
        return Graph.cycle(n)
    if kind == "complete":
        return Graph.complete(n)
    if kind == "path":
        return Graph.path(n)
    raise ValueError(f"unknown graph kind {kind!r}")


def maxcut_generators(graph: Graph) -> list[PauliVector]:
    """The two circuit generators: sum of X_j, and sum of Z_j Z_k over edges.

    Returned with unit coefficients (the skew-Hermitian i is implicit).
    """
    if not graph.edges:
        raise ValueError("graph has no edges; the cut Hamiltonian vanishes")
    n = graph.n
    field_term = PauliVector(
        n, {PauliString.single(n, j, "X"): 1 for j in range(n)}
    )
    cut_term = PauliVector(
        n,
        {
            PauliString(n, 0, (1 << j) | (1 << k)): 1
            for j, k in sorted(graph.edges)
        },
    )
    return [field_term, cut_term]


def dimension_bounds(graph: Graph, aut_vertex_cap: int = 10) -> dict:
    """Cheap upper bounds on the closure dimension.

    aut_bound counts the non-identity Pauli strings up to graph
    automorphism (Burnside); the closure basis can be chosen invariant, so
    its dimension never exceeds the number of orbits.  Closed forms are
    used for the named families; other graphs get a brute-force
    automorphism search up to ``aut_vertex_cap`` vertices, and None beyond.
    center_bound reflects that these two-generator closures never carry
    more than a two-dimensional center.
    """
    n = graph.n
    if graph.family == "complete":
        # orbits of strings under S_n = Pauli-type counts (p, q, r) with
        # p + q + r <= n: choose 3 separators among n + 3 slots
        aut = comb(n + 3, 3) - 1
    elif graph.family == "cycle":
        aut = orbit_count(n, PermGroup.dihedral(n)) - 1
    elif graph.family == "path":
        aut = orbit_count(n, PermGroup.reversal(n)) - 1
    elif n <= aut_vertex_cap:
        aut = orbit_count(n, graph_automorphisms(graph)) - 1
    else:
        aut = None
    return {"aut_bound": aut, "center_bound": 2}


def kn_formulas(n: int) -> dict:
    """Closed-form dimension data for the complete graph on n vertices."""
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    binom_bound = comb(n + 3, 3)
    yz_bound = sum((2 * s + 1) * (n - 2 * s + 1) for s in range(n // 2 + 1)) - 2
    if n % 2 == 0:
        dim = (n**3 + 6 * n**2 + 2 * n + 12) // 12
        ideal = (n**3 + 6 * n**2 + 2 * n) // 12
        center = 1
    else:
        dim = (n**3 + 6 * n**2 - n + 18) // 12
        ideal = (n**3 + 6 * n**2 - n - 6) // 12
        center = 2
    return {
        "n": n,
        "binom_bound": binom_bound,
        "yz_bound": yz_bound,
        "dim": dim,
        "ideal_dim": ideal,
        "center_dim": center,
    }


def centralizer_paulis(graph: Graph, vertex_cap: int = 6) -> list[PauliString]:
    """All Pauli strings commuting with every X_j and every edge Z_j Z_k.

    Brute force over all 4^n strings, so refuses n > vertex_cap.
    """
    n = graph.n
    if n > vertex_cap:
        raise ValueError(f"centralizer brute force capped at n={vertex_cap}")
    checks = [(1 << j, 0) for j in range(n)]
    checks += [(0, (1 << j) | (1 << k)) for j, k in sorted(graph.edges)]
    found = []
    for x in range(1 << n):
        for z in range(1 << n):
            if all(not anticommute(x, z, xb, zb) for xb, zb in checks):
                found.append(PauliString(n, x, z))
    return found
