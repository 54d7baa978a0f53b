"""Solution matrices: the rational matrices that parametrize extensions of a
torus action to a full set of raising/lowering vector fields.

A valid matrix has nonzero diagonal, column-normalized off-diagonal entries
in {0, -1}, normalized entries at (i,j) and (j,i) summing to the Cartan
entry n(j,i), and no two -1 entries sharing a row or column.  The -1
positions orient the Dynkin diagram, which is why only path and cycle
diagrams admit solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cartan
from .cartan import GCM
from .errors import (
    BadNormalizedEntry,
    ExclusionViolated,
    SumMismatch,
    ZeroDiagonal,
    ZeroScale,
)


@dataclass(frozen=True)
class SolutionMatrix:
    gcm: GCM
    entries: tuple[tuple[Fraction, ...], ...]
    normalized: tuple[tuple[Fraction, ...], ...]
    diag: tuple[Fraction, ...]
    incidence: frozenset  # ordered pairs (i, j), 0-based
    orientation: int      # +1 canonical direction, -1 transposed, 0 symmetric

    @property
    def r(self) -> int:
        return len(self.entries)

    def is_normalized(self) -> bool:
        return all(d == 1 for d in self.diag)


def _as_fractions(matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in matrix)


def validate_solution_matrix(gcm: GCM, matrix) -> SolutionMatrix:
    """Check the four defining conditions and assemble a SolutionMatrix.

    Raises ZeroDiagonal, BadNormalizedEntry, SumMismatch, or
    ExclusionViolated at the first violated condition.
    """
    entries = _as_fractions(matrix)
    r = gcm.r
    if len(entries) != r or any(len(row) != r for row in entries):
        raise ValueError(f"expected a {r}x{r} matrix")
    for i in range(r):
        if entries[i][i] == 0:
            raise ZeroDiagonal(i)
    normalized = tuple(
        tuple(entries[i][j] / entries[j][j] for j in range(r)) for i in range(r)
    )
    for i in range(r):
        for j in range(r):
            if i != j and normalized[i][j] not in (0, -1):
                raise BadNormalizedEntry(i, j, normalized[i][j])
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            total = normalized[i][j] + normalized[j][i]
            if total != gcm.n(j, i):
                raise SumMismatch(i, j, total, gcm.n(j, i))
    for i in range(r):
        for j in range(r):
            if i == j or normalized[i][j] != -1:
                continue
            for k in range(r):
                if k != j and k != i and normalized[i][k] == -1:
                    raise ExclusionViolated(i, j, k)
                if k != i and k != j and normalized[k][j] == -1:
                    raise ExclusionViolated(i, j, k)
    incidence = frozenset(
        (i, j) for i in range(r) for j in range(r)
        if i != j and normalized[j][i] == -1
    )
    return SolutionMatrix(
        gcm=gcm,
        entries=entries,
        normalized=normalized,
        diag=tuple(entries[i][i] for i in range(r)),
        incidence=incidence,
        orientation=_orientation(gcm, normalized),
    )


def _orientation(gcm: GCM, normalized) -> int:
    ct = cartan.classify(gcm)
    if ct.kind == "finite_a":
        if gcm.r == 1:
            return 0
        order = cartan.path_order(gcm)
        pairs = list(zip(order, order[1:]))
    elif ct.kind == "affine_a":
        if gcm.r == 2:
            return 0
        order = cartan.cycle_order(gcm)
        pairs = list(zip(order, order[1:] + order[:1]))
    else:
        return 0
    if all(normalized[i][j] == -1 for i, j in pairs):
        return 1
    return -1


def normalized_solution_matrices(gcm: GCM) -> list[SolutionMatrix]:
    """All solution matrices with unit diagonal, in the labelling of the
    input matrix.

    Empty unless the type is A_r or affine A_{r-1}; one matrix for A_1 and
    affine A_1, otherwise a matrix and its transpose (canonical orientation
    first).
    """
    ct = cartan.classify(gcm)
    r = gcm.r
    if ct.kind == "other":
        return []
    if ct.kind == "finite_a" and r == 1:
        return [validate_solution_matrix(gcm, [[1]])]
    if ct.kind == "affine_a" and r == 2:
        return [validate_solution_matrix(gcm, [[1, -1], [-1, 1]])]
    if ct.kind == "finite_a":
        order = cartan.path_order(gcm)
        pairs = list(zip(order, order[1:]))
    else:
        order = cartan.cycle_order(gcm)
        pairs = list(zip(order, order[1:] + order[:1]))
    forward = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j in pairs:
        forward[i][j] = -1
    backward = [[forward[j][i] for j in range(r)] for i in range(r)]
    return [validate_solution_matrix(gcm, forward),
            validate_solution_matrix(gcm, backward)]


def scale(sm: SolutionMatrix, diag_factors) -> SolutionMatrix:
    """Column scaling A_ij -> d_j A_ij; the normalized form is unchanged."""
    factors = [Fraction(d) for d in diag_factors]
    if len(factors) != sm.r:
        raise ValueError(f"expected {sm.r} scale factors")
    for j, d in enumerate(factors):
        if d == 0:
            raise ZeroScale(j)
    scaled = [[sm.entries[i][j] * factors[j] for j in range(sm.r)]
              for i in range(sm.r)]
    return validate_solution_matrix(sm.gcm, scaled)


def transpose_involution(sm: SolutionMatrix) -> SolutionMatrix:
    transposed = [[sm.entries[j][i] for j in range(sm.r)] for i in range(sm.r)]
    return validate_solution_matrix(sm.gcm, transposed)


def to_json(sm: SolutionMatrix) -> dict:
    return {
        "matrix": [[str(x) for x in row] for row in sm.entries],
        "normalized": [[str(x) for x in row] for row in sm.normalized],
        "diag": [str(x) for x in sm.diag],
        "incidence": sorted([i + 1, j + 1] for i, j in sm.incidence),
        "orientation": sm.orientation,
    }


def from_json(gcm: GCM, data) -> SolutionMatrix:
    return validate_solution_matrix(
        gcm, [[Fraction(x) for x in row] for row in data["matrix"]]
    )
