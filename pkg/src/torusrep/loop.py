"""Loop-algebra structure of the affine-type representations.

For an affine matrix the images of the non-affine ("finite") nodes close,
under bracket, to a copy of sl(r); the affine-node generators are the
finite-part highest-root vectors multiplied by an invertible monomial.
That monomial implements multiplication by the loop variable, and this
module recovers it and machine-checks the loop-algebra law
[u^m S, u^n S'] = u^{m+n} [S, S'] on the whole image.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cartan, laurent, vectorfield as vf
from .errors import (
    ClosureDiverged,
    NormalizationImpossible,
    NotProportional,
    UnsupportedType,
)
from .laurent import LaurentPoly
from .representation import Representation
from .vectorfield import Derivation


@dataclass
class LoopCertificate:
    sl_basis: tuple[Derivation, ...]
    loop_unit: LaurentPoly
    highest_plus: Derivation
    highest_minus: Derivation
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _require_affine(rep: Representation):
    if not rep.root_data.is_affine:
        raise UnsupportedType("loop analysis needs an affine-type representation")


def finite_nodes(rep: Representation) -> list[int]:
    """Non-affine nodes in chain order (the cycle minus its first vertex)."""
    _require_affine(rep)
    return cartan.cycle_order(rep.gcm)[1:]


# -- exact linear independence over the flattened coordinate space -----------

def _flatten(d: Derivation) -> dict:
    vec = {}
    for k, q in enumerate(d.coords):
        for exps, c in q.terms.items():
            vec[(k, exps)] = c
    return vec


class _Echelon:
    """Incremental exact row reduction keyed on (coordinate, monomial)."""

    def __init__(self):
        self.rows = []  # (pivot_key, normalized row dict)

    def _reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        for pivot, row in self.rows:
            c = vec.get(pivot)
            if c:
                for key, value in row.items():
                    new = vec.get(key, 0) - c * value
                    if new:
                        vec[key] = new
                    else:
                        vec.pop(key, None)
        return vec

    def add(self, vec: dict) -> bool:
        """Insert if independent of the current span; report whether it was."""
        vec = self._reduce(vec)
        if not vec:
            return False
        pivot = min(vec)
        inv = 1 / vec[pivot]
        row = {k: v * inv for k, v in vec.items()}
        for i, (p, existing) in enumerate(self.rows):
            c = existing.get(pivot)
            if c:
                updated = dict(existing)
                for key, value in row.items():
                    new = updated.get(key, 0) - c * value
                    if new:
                        updated[key] = new
                    else:
                        updated.pop(key, None)
                self.rows[i] = (p, updated)
        self.rows.append((pivot, row))
        self.rows.sort(key=lambda t: t[0])
        return True


def finite_part_closure(rep: Representation) -> tuple[Derivation, ...]:
    """Bracket closure of the finite-node images; a basis of the image of
    sl(r), so its length must be r^2 - 1."""
    _require_affine(rep)
    nodes = finite_nodes(rep)
    bound = rep.r * rep.r - 1
    basis = []
    ech = _Echelon()
    seeds = ([rep.h_images[i] for i in nodes]
             + [rep.x_plus[i] for i in nodes]
             + [rep.x_minus[i] for i in nodes])
    for g in seeds:
        if ech.add(_flatten(g)):
            basis.append(g)
            if len(basis) > bound:
                raise ClosureDiverged(f"dimension exceeded {bound}")
    grown = True
    while grown:
        grown = False
        snapshot = list(basis)
        for i, a in enumerate(snapshot):
            for b in snapshot[i + 1:]:
                br = vf.bracket(a, b)
                if br.is_zero():
                    continue
                if ech.add(_flatten(br)):
                    basis.append(br)
                    if len(basis) > bound:
                        raise ClosureDiverged(f"dimension exceeded {bound}")
                    grown = True
    return tuple(basis)


def highest_root_vectors(rep: Representation):
    """Iterated brackets along the finite chain, with the lowering side
    rescaled so the pair brackets to the image of the chain's coroot sum."""
    nodes = finite_nodes(rep)
    plus = rep.x_plus[nodes[-1]]
    for v in reversed(nodes[:-1]):
        plus = vf.bracket(rep.x_plus[v], plus)
    minus = rep.x_minus[nodes[-1]]
    for v in reversed(nodes[:-1]):
        minus = vf.bracket(rep.x_minus[v], minus)
    coroot = rep.h_images[nodes[0]]
    for v in nodes[1:]:
        coroot = coroot + rep.h_images[v]
    pair = vf.bracket(plus, minus)
    scale = None
    for k in range(rep.r):
        if not pair.coords[k].is_zero():
            target = coroot.coords[k]
            if not (pair.coords[k].is_unit() and target.is_unit()):
                raise NormalizationImpossible("pair bracket is not constant")
            ratio = target * pair.coords[k].inverse()
            scale = ratio.constant_term()
            break
    if scale is None or scale == 0:
        raise NormalizationImpossible("chain brackets to zero")
    minus = minus * scale
    if vf.bracket(plus, minus) != coroot:
        raise NormalizationImpossible("no scalar aligns the pair bracket")
    return plus, minus


def _unit_ratio(num: Derivation, den: Derivation) -> LaurentPoly:
    """The unit u with num = u * den, coordinate by coordinate."""
    rank = den.rank
    pivot = next((k for k in range(rank) if not den.coords[k].is_zero()), None)
    if pivot is None:
        raise NotProportional("zero denominator field")
    p, q = num.coords[pivot], den.coords[pivot]
    if p.is_zero():
        raise NotProportional("numerator vanishes where denominator does not")
    (ep, cp) = p.sorted_terms()[0]
    (eq, cq) = q.sorted_terms()[0]
    unit = laurent.monomial(rank, [a - b for a, b in zip(ep, eq)], cp / cq)
    for k in range(rank):
        if den.coords[k] * unit != num.coords[k]:
            raise NotProportional(f"coordinate {k} is not a unit multiple")
    return unit


def extract_loop_unit(rep: Representation) -> LaurentPoly:
    """The invertible monomial u with F(affine raising) = u * X_{-top}."""
    _require_affine(rep)
    _, minus = highest_root_vectors(rep)
    return _unit_ratio(rep.x_plus[0], minus)


def verify_loop_law(rep: Representation, cert: "LoopCertificate",
                    m_range=(-3, 3)) -> dict[str, bool]:
    """Exact checks of the loop-algebra behaviour of the image.

    The ledger covers: every finite-part image annihilates the unit; the
    degree generator scales it by itself; the bracket grid
    [u^m S, u^n S'] = u^{m+n}[S, S'] over the requested range; and the
    affine-node generator dictionary.
    """
    _require_affine(rep)
    unit = cert.loop_unit
    basis = cert.sl_basis
    checks = {}
    checks["images_annihilate_unit"] = all(
        s.apply(unit).is_zero() for s in basis)
    degree = rep.h_images[-1]
    checks["degree_derivation_scales_unit"] = degree.apply(unit) == unit
    lo, hi = int(m_range[0]), int(m_range[1])
    powers = {m: unit ** m for m in range(2 * lo, 2 * hi + 1)}
    ok = True
    pair_brackets = {}
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            pair_brackets[(i, j)] = vf.bracket(basis[i], basis[j])
    for (i, j), base in pair_brackets.items():
        for m in range(lo, hi + 1):
            left_i = basis[i] * powers[m]
            for n in range(lo, hi + 1):
                got = vf.bracket(left_i, basis[j] * powers[n])
                if got != base * powers[m + n]:
                    ok = False
    checks["loop_bracket_grid"] = ok
    checks["affine_raising_is_unit_times_lowest"] = (
        rep.x_plus[0] == cert.highest_minus * unit)
    checks["affine_lowering_is_inverse_unit_times_highest"] = (
        rep.x_minus[0] == cert.highest_plus * unit.inverse())
    coroot_sum = rep.h_images[0]
    for v in finite_nodes(rep):
        coroot_sum = coroot_sum + rep.h_images[v]
    checks["affine_coroot_opposes_chain_sum"] = coroot_sum.is_zero()
    return checks


def loop_certificate(rep: Representation, m_range=(-3, 3)) -> LoopCertificate:
    basis = finite_part_closure(rep)
    plus, minus = highest_root_vectors(rep)
    unit = _unit_ratio(rep.x_plus[0], minus)
    cert = LoopCertificate(
        sl_basis=basis, loop_unit=unit,
        highest_plus=plus, highest_minus=minus, checks={},
    )
    cert.checks["closure_dimension"] = len(basis) == rep.r * rep.r - 1
    cert.checks.update(verify_loop_law(rep, cert, m_range))
    return cert


def to_json(cert: LoopCertificate) -> dict:
    return {
        "dimension": len(cert.sl_basis),
        "loop_unit": laurent.render(cert.loop_unit),
        "highest_plus": vf.to_json(cert.highest_plus),
        "highest_minus": vf.to_json(cert.highest_minus),
        "checks": dict(cert.checks),
        "passed": cert.passed,
    }
