"""Regular vector fields on the algebraic torus, as derivations of the
Laurent ring.

Every derivation is written in the logarithmic basis D_j = z_j * d/dz_j,
which acts on monomials by D_j(z^m) = m_j z^m.  The module is free on
D_1..D_r, so a field is just an r-vector of Laurent-polynomial coordinates.
Working in this basis keeps all the structure constants polynomial; the
d/dz_j form is provided for display only.
"""

from __future__ import annotations

from fractions import Fraction

from . import laurent
from .errors import RankMismatch
from .laurent import LaurentPoly


class Derivation:
    __slots__ = ("rank", "coords")

    def __init__(self, coords):
        coords = tuple(coords)
        if not coords:
            raise ValueError("derivation needs at least one coordinate")
        self.rank = coords[0].rank
        for q in coords:
            if q.rank != self.rank:
                raise RankMismatch("coordinate ranks differ")
        if len(coords) != self.rank:
            raise RankMismatch(f"{len(coords)} coordinates for rank {self.rank}")
        self.coords = coords

    def _check(self, other: "Derivation"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        self._check(other)
        return Derivation(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Derivation(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Derivation(-a for a in self.coords)

    def __mul__(self, factor):
        """Module action: scale every coordinate by a scalar or a function."""
        if isinstance(factor, Derivation):
            raise TypeError("use bracket() for the Lie product")
        return Derivation(q * factor for q in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(q.is_zero() for q in self.coords)

    def is_constant(self) -> bool:
        return all(q.is_zero() or (q.is_unit() and next(iter(q.terms)) == (0,) * self.rank)
                   for q in self.coords)

    def constant_coords(self) -> tuple[Fraction, ...]:
        if not self.is_constant():
            raise ValueError("derivation has non-constant coordinates")
        return tuple(q.constant_term() for q in self.coords)

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        """Apply to a function: D(z^m) = (sum_j m_j q_j) z^m, extended linearly."""
        if f.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs {f.rank}")
        result = laurent.zero(self.rank)
        for exps, c in f.terms.items():
            weight = laurent.zero(self.rank)
            for j, e in enumerate(exps):
                if e:
                    weight = weight + self.coords[j] * e
            if not weight.is_zero():
                result = result + weight * laurent.monomial(self.rank, exps, c)
        return result

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.rank == other.rank and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Derivation<{render(self)}>"


# -- constructors ---------------------------------------------------------

def zero_field(rank: int) -> Derivation:
    return Derivation([laurent.zero(rank)] * rank)


def basis_field(rank: int, index: int) -> Derivation:
    """D_{index+1} = z d/dz in the given slot (0-based index)."""
    coords = [laurent.zero(rank)] * rank
    coords[index] = laurent.one(rank)
    return Derivation(coords)


def constant_field(rank: int, coeffs) -> Derivation:
    return Derivation([laurent.const(rank, c) for c in coeffs])


def monomial_field(rank: int, exps, coeffs) -> Derivation:
    """z^exps times the constant field with the given coefficients."""
    return Derivation([laurent.monomial(rank, exps, c) if c else laurent.zero(rank)
                       for c in coeffs])


# -- Lie structure ----------------------------------------------------------

def _partial(p: LaurentPoly, j: int) -> LaurentPoly:
    # action of D_j on a function
    out = LaurentPoly.__new__(LaurentPoly)
    out.rank = p.rank
    out.terms = {e: c * e[j] for e, c in p.terms.items() if e[j]}
    return out


def bracket(d: Derivation, e: Derivation) -> Derivation:
    """Commutator [d, e]; coordinates sum_j (q_j D_j(p_k) - p_j D_j(q_k))."""
    d._check(e)
    rank = d.rank
    q_nz = [(j, q) for j, q in enumerate(d.coords) if not q.is_zero()]
    p_nz = [(j, p) for j, p in enumerate(e.coords) if not p.is_zero()]
    coords = []
    for k in range(rank):
        acc = laurent.zero(rank)
        pk = e.coords[k]
        if not pk.is_zero():
            for j, qj in q_nz:
                dp = _partial(pk, j)
                if not dp.is_zero():
                    acc = acc + qj * dp
        qk = d.coords[k]
        if not qk.is_zero():
            for j, pj in p_nz:
                dq = _partial(qk, j)
                if not dq.is_zero():
                    acc = acc - pj * dq
        coords.append(acc)
    return Derivation(coords)


def ad_pow(d: Derivation, k: int, e: Derivation) -> Derivation:
    """k-fold iterated bracket [d, [d, ... [d, e]]], k >= 1."""
    if k < 1:
        raise ValueError("ad power must be >= 1")
    result = e
    for _ in range(k):
        result = bracket(d, result)
    return result


# -- root functionals on constant fields -------------------------------------

def root_on_constant(root, field: Derivation) -> Fraction:
    """Evaluate an integer combination of simple roots on a constant field.

    The simple roots act on the basis fields by alpha_i(D_j) = delta_ij,
    so the pairing is just a dot product with the coordinates.
    """
    coords = field.constant_coords()
    return sum((Fraction(a) * c for a, c in zip(root, coords)), Fraction(0))


# -- closed-form brackets for monomial-times-constant fields ----------------

def monomial_field_bracket(rank, alpha, h, beta, hp) -> Derivation:
    """[z^alpha H, z^beta H'] = z^(alpha+beta) (beta(H) H' - alpha(H') H)
    for constant fields H, H' given by coefficient vectors h, hp."""
    h = [Fraction(x) for x in h]
    hp = [Fraction(x) for x in hp]
    beta_h = sum(Fraction(b) * x for b, x in zip(beta, h))
    alpha_hp = sum(Fraction(a) * x for a, x in zip(alpha, hp))
    coeffs = [beta_h * y - alpha_hp * x for x, y in zip(h, hp)]
    exps = tuple(a + b for a, b in zip(alpha, beta))
    return monomial_field(rank, exps, coeffs)


def monomial_field_ad_pow(rank, alpha, h, k, beta, hp) -> Derivation:
    """Closed form of the k-fold bracket of z^alpha H into z^beta H'.

    For k >= 2 the result lands in degree beta + k*alpha with coefficient
    field  (prod_{t<k} (beta + t alpha)(H)) H'
         - k alpha(H') (prod_{t<k-1} (beta + t alpha)(H)) H.
    """
    if k < 1:
        raise ValueError("ad power must be >= 1")
    if k == 1:
        return monomial_field_bracket(rank, alpha, h, beta, hp)
    h = [Fraction(x) for x in h]
    hp = [Fraction(x) for x in hp]

    def shifted_weight(t):
        return sum((Fraction(b) + t * Fraction(a)) * x
                   for a, b, x in zip(alpha, beta, h))

    full = Fraction(1)
    for t in range(k):
        full *= shifted_weight(t)
    partial = Fraction(1)
    for t in range(k - 1):
        partial *= shifted_weight(t)
    alpha_hp = sum(Fraction(a) * x for a, x in zip(alpha, hp))
    coeffs = [full * y - k * alpha_hp * partial * x for x, y in zip(h, hp)]
    exps = tuple(b + k * a for a, b in zip(alpha, beta))
    return monomial_field(rank, exps, coeffs)


# -- display -----------------------------------------------------------------

def ddz_coords(d: Derivation) -> list[LaurentPoly]:
    """Coordinates in the d/dz_j basis (coefficient of d/dz_j is q_j z_j)."""
    return [q * laurent.gen(d.rank, j) for j, q in enumerate(d.coords)]


def render(d: Derivation, basis: str = "log") -> str:
    """Text form, e.g. 'z1^2*D2' or (basis='ddz') 'z1^3*d/dz2'."""
    if basis == "ddz":
        coords = ddz_coords(d)
        label = lambda k: f"d/dz{k + 1}"
    else:
        coords = d.coords
        label = lambda k: f"D{k + 1}"
    pieces = []
    for k, q in enumerate(coords):
        if q.is_zero():
            continue
        if q == laurent.one(d.rank):
            pieces.append(label(k))
        elif len(q.terms) == 1:
            pieces.append(f"{laurent.render(q)}*{label(k)}")
        else:
            pieces.append(f"({laurent.render(q)})*{label(k)}")
    return " + ".join(pieces) if pieces else "0"


def to_json(d: Derivation) -> list[str]:
    return [laurent.render(q) for q in d.coords]


def from_json(data, rank: int) -> Derivation:
    return Derivation([laurent.parse(s, rank) for s in data])
