"""Generalized Cartan matrices: validation, invariants, and the path/cycle
classification that decides which matrices admit vector-field realizations.

Indices are 0-based in the API; all display output uses 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import linalg
from .errors import (
    Decomposable,
    DiagonalNotTwo,
    NotSquare,
    PositiveOffDiagonal,
    ZeroPatternAsymmetric,
)


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix.

    Construct through :func:`validate_gcm`; the constructor itself does not
    re-check the axioms.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.entries)

    @cached_property
    def corank(self) -> int:
        return self.r - linalg.int_rank(self.entries)

    @property
    def s(self) -> int:
        return self.corank

    def n(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def __str__(self):
        return "\n".join(" ".join(f"{x:3d}" for x in row) for row in self.entries)


@dataclass(frozen=True)
class CartanType:
    """Classification result: the two admissible families, or 'other'.

    kind is 'finite_a' (type A_param), 'affine_a' (type A^(1)_param), or
    'other'.  edges lists (i, j, multiplicity) with i < j, 0-based.
    """

    kind: str
    param: int | None
    edges: tuple[tuple[int, int, int], ...]

    @property
    def label(self) -> str:
        if self.kind == "finite_a":
            return f"A{self.param}"
        if self.kind == "affine_a":
            return f"A{self.param}affine"
        return "other"


def validate_gcm(matrix) -> GCM:
    """Check the three Cartan-matrix axioms and freeze the matrix.

    Raises NotSquare, DiagonalNotTwo, PositiveOffDiagonal, or
    ZeroPatternAsymmetric on the first violation found.
    """
    rows = [tuple(int(x) for x in row) for row in matrix]
    r = len(rows)
    if r == 0 or any(len(row) != r for row in rows):
        raise NotSquare(f"expected a square matrix, got rows {[len(x) for x in rows]}")
    for i in range(r):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(i)
        for j in range(r):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(i, j)
            if rows[i][j] == 0 and rows[j][i] != 0:
                raise ZeroPatternAsymmetric(i, j)
    return GCM(tuple(rows))


def diagram_edges(gcm: GCM) -> tuple[tuple[int, int, int], ...]:
    """Edges of the Dynkin diagram with multiplicity max(|n_ij|, |n_ji|)."""
    n = gcm.entries
    edges = []
    for i in range(gcm.r):
        for j in range(i + 1, gcm.r):
            if n[i][j] != 0:
                edges.append((i, j, max(-n[i][j], -n[j][i])))
    return tuple(edges)


def _adjacency(gcm: GCM) -> list[list[int]]:
    adj = [[] for _ in range(gcm.r)]
    for i, j, _ in diagram_edges(gcm):
        adj[i].append(j)
        adj[j].append(i)
    return adj


def connected_components(gcm: GCM) -> list[list[int]]:
    adj = _adjacency(gcm)
    seen = [False] * gcm.r
    components = []
    for start in range(gcm.r):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(comp))
    return components


def is_indecomposable(gcm: GCM) -> bool:
    return len(connected_components(gcm)) == 1


def classify(gcm: GCM) -> CartanType:
    """Decide whether the diagram is a simple path (A_r), the simple cycle /
    double-bond pair (affine A_{r-1}), or anything else.

    Requires an indecomposable matrix; split with connected_components first.
    """
    if not is_indecomposable(gcm):
        raise Decomposable("classify needs an indecomposable matrix")
    n = gcm.entries
    r = gcm.r
    edges = diagram_edges(gcm)

    def other():
        return CartanType("other", None, edges)

    for i in range(r):
        for j in range(r):
            if i != j and n[i][j] != n[j][i]:
                return other()
    if any(n[i][j] < -2 for i in range(r) for j in range(r) if i != j):
        return other()
    if any(n[i][j] == -2 for i in range(r) for j in range(r) if i != j):
        # the only admissible -2 pattern is the rank-2 affine matrix
        if gcm.entries == ((2, -2), (-2, 2)):
            return CartanType("affine_a", 1, edges)
        return other()
    if r == 1:
        return CartanType("finite_a", 1, edges)
    degrees = [0] * r
    for i, j, _ in edges:
        degrees[i] += 1
        degrees[j] += 1
    if len(edges) == r - 1 and max(degrees) <= 2:
        return CartanType("finite_a", r, edges)
    if len(edges) == r and all(d == 2 for d in degrees) and r >= 3:
        return CartanType("affine_a", r - 1, edges)
    return other()


def path_order(gcm: GCM) -> list[int]:
    """Vertices of a path diagram in traversal order, starting at the
    smaller-labelled endpoint."""
    adj = _adjacency(gcm)
    if gcm.r == 1:
        return [0]
    ends = [v for v in range(gcm.r) if len(adj[v]) == 1]
    order = [min(ends)]
    prev = None
    while len(order) < gcm.r:
        nxt = [w for w in adj[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def cycle_order(gcm: GCM, start: int = 0) -> list[int]:
    """Vertices of a cycle diagram in traversal order from ``start``,
    heading toward the smaller-labelled neighbour first.

    For the rank-2 affine matrix (a double bond) this is just [0, 1].
    """
    adj = _adjacency(gcm)
    if gcm.r == 2:
        return [start, 1 - start]
    order = [start, min(adj[start])]
    while len(order) < gcm.r:
        nxt = [w for w in adj[order[-1]] if w != order[-2]]
        order.append(nxt[0])
    return order


# Catalog of named matrices for the CLI and the non-existence checks.
def named_gcm(name: str) -> GCM:
    """Build a named Cartan matrix: A<r>, A<k>affine, or B2/C2/G2/F4/D4."""
    key = name.strip()
    fixed = {
        "B2": [[2, -1], [-2, 2]],
        "C2": [[2, -2], [-1, 2]],
        "G2": [[2, -1], [-3, 2]],
        "F4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
        "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    }
    if key in fixed:
        return validate_gcm(fixed[key])
    if key.endswith("affine") and key.startswith("A"):
        k = int(key[1:-6])
        if k < 1:
            raise ValueError(f"no affine type {name}")
        return validate_gcm(affine_a_matrix(k + 1))
    if key.startswith("A"):
        r = int(key[1:])
        if r < 1:
            raise ValueError(f"no finite type {name}")
        return validate_gcm(finite_a_matrix(r))
    raise ValueError(f"unknown matrix name {name!r}")


def finite_a_matrix(r: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)]
            for i in range(r)]


def affine_a_matrix(r: int) -> list[list[int]]:
    """The r x r cyclic matrix of affine type A_{r-1} (r >= 2)."""
    if r == 2:
        return [[2, -2], [-2, 2]]
    out = [[0] * r for _ in range(r)]
    for i in range(r):
        out[i][i] = 2
        out[i][(i + 1) % r] = -1
        out[i][(i - 1) % r] = -1
    return out
