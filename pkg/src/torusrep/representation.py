"""Construction of the vector-field representations and symbolic
verification of the defining relations.

Given an admissible Cartan matrix, a solution matrix A and nonzero integers
n_1..n_r, the generators map to

    H_a   ->  sum_j  (value of root j on H_a) D_j / n_j
    X_i   ->  z_i^{n_i}  * sum_j  A_ji D_j / n_j
    X_-i  ->  z_i^{-n_i} * sum_j  -A_ij / (A_ii A_jj) D_j / n_j

For affine types one extension generator (named ``d``) is appended to the
Cartan part; the affine node is the first index of the input matrix.
Every relation check below is an exact identity in the Laurent ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cartan, laurent, linalg, solution, vectorfield as vf
from .cartan import GCM, CartanType
from .errors import UnsupportedType, ZeroDiagonal, ZeroIndex
from .laurent import LaurentPoly
from .solution import SolutionMatrix
from .vectorfield import Derivation


@dataclass(frozen=True)
class RootData:
    """The Cartan-side data: root values on all generators plus a dual basis.

    root_values[a][j] is the value of root j on generator a (the Cartan
    matrix itself, plus one extra row for the affine extension generator).
    dual_basis[j] expresses, in the generators, an element on which root i
    evaluates to delta_ij.
    """

    gcm: GCM
    ctype: CartanType
    root_values: tuple[tuple[Fraction, ...], ...]
    dual_basis: tuple[tuple[Fraction, ...], ...]

    @property
    def r(self) -> int:
        return self.gcm.r

    @property
    def num_h(self) -> int:
        return len(self.root_values)

    @property
    def is_affine(self) -> bool:
        return self.ctype.kind == "affine_a"

    def h_names(self) -> list[str]:
        names = [f"H{a + 1}" for a in range(self.r)]
        if self.is_affine:
            names.append("d")
        return names


def build_root_data(gcm: GCM) -> RootData:
    ct = cartan.classify(gcm)
    if ct.kind == "other":
        raise UnsupportedType(f"no realization for type {ct.label}")
    rows = [tuple(Fraction(x) for x in row) for row in gcm.entries]
    if ct.kind == "affine_a":
        # degree generator: value 1 on the affine-node root, 0 elsewhere
        rows.append(tuple(Fraction(1 if j == 0 else 0) for j in range(gcm.r)))
    root_values = tuple(rows)
    transposed = [[root_values[a][i] for a in range(len(root_values))]
                  for i in range(gcm.r)]
    dual = []
    for j in range(gcm.r):
        rhs = [Fraction(1 if i == j else 0) for i in range(gcm.r)]
        sol = linalg.solve(transposed, rhs)
        if sol is None:
            raise UnsupportedType("root values do not span the dual space")
        dual.append(tuple(sol))
    return RootData(gcm=gcm, ctype=ct, root_values=root_values,
                    dual_basis=tuple(dual))


def constant_parts(rd: RootData, sm: SolutionMatrix):
    """The constant fields multiplying the root monomials (n = 1 family)."""
    r = rd.r
    a = sm.entries
    raising = tuple(vf.constant_field(r, [a[j][i] for j in range(r)])
                    for i in range(r))
    lowering = tuple(vf.constant_field(
        r, [-a[i][j] / (a[i][i] * a[j][j]) for j in range(r)])
        for i in range(r))
    return raising, lowering


@dataclass(frozen=True)
class Representation:
    root_data: RootData
    matrix: tuple[tuple[Fraction, ...], ...]
    sm: SolutionMatrix | None
    n: tuple[int, ...]
    h_images: tuple[Derivation, ...]
    x_plus: tuple[Derivation, ...]
    x_minus: tuple[Derivation, ...]
    raising_const: tuple[Derivation, ...]
    lowering_const: tuple[Derivation, ...]

    @property
    def r(self) -> int:
        return self.root_data.r

    @property
    def gcm(self) -> GCM:
        return self.root_data.gcm

    def generator_names(self) -> list[str]:
        return (self.root_data.h_names()
                + [f"X{i + 1}" for i in range(self.r)]
                + [f"X-{i + 1}" for i in range(self.r)])

    def generators(self) -> dict[str, Derivation]:
        out = {}
        for name, d in zip(self.root_data.h_names(), self.h_images):
            out[name] = d
        for i in range(self.r):
            out[f"X{i + 1}"] = self.x_plus[i]
        for i in range(self.r):
            out[f"X-{i + 1}"] = self.x_minus[i]
        return out


def _check_n(n, r) -> tuple[int, ...]:
    n = tuple(int(x) for x in n)
    if len(n) != r:
        raise ValueError(f"expected {r} exponent parameters")
    for i, ni in enumerate(n):
        if ni == 0:
            raise ZeroIndex(i)
    return n


def build_representation(rd: RootData, sm: SolutionMatrix, n) -> Representation:
    n = _check_n(n, rd.r)
    return _assemble(rd, sm.entries, sm, n, _closed_lowering(sm.entries, n, rd.r))


def candidate_representation(rd: RootData, matrix, n) -> Representation:
    """Representation attempt from an arbitrary nonzero-diagonal matrix.

    The lowering parts are forced from the pairing relation (the only form
    they can take), so the construction never assumes the matrix is a valid
    solution matrix; relation checks decide that.
    """
    n = _check_n(n, rd.r)
    entries = tuple(tuple(Fraction(x) for x in row) for row in matrix)
    r = rd.r
    for i in range(r):
        if entries[i][i] == 0:
            raise ZeroDiagonal(i)
    lowering = []
    for i in range(r):
        aii = entries[i][i]
        coeffs = [(-rd.root_values[i][j] + entries[j][i] / aii) / (aii * n[j])
                  for j in range(r)]
        lowering.append(vf.constant_field(r, coeffs))
    return _assemble(rd, entries, None, n, lowering)


def _closed_lowering(entries, n, r) -> list[Derivation]:
    return [vf.constant_field(
        r, [-entries[i][j] / (entries[i][i] * entries[j][j] * n[j])
            for j in range(r)])
        for i in range(r)]


def _assemble(rd, entries, sm, n, lowering_const) -> Representation:
    r = rd.r
    h_images = tuple(
        vf.constant_field(r, [rd.root_values[a][j] / n[j] for j in range(r)])
        for a in range(rd.num_h)
    )
    raising_const = tuple(
        vf.constant_field(r, [entries[j][i] / n[j] for j in range(r)])
        for i in range(r)
    )
    def exps(i, sign):
        e = [0] * r
        e[i] = sign * n[i]
        return tuple(e)

    x_plus = tuple(
        raising_const[i] * laurent.monomial(r, exps(i, 1), 1) for i in range(r)
    )
    x_minus = tuple(
        lowering_const[i] * laurent.monomial(r, exps(i, -1), 1) for i in range(r)
    )
    return Representation(
        root_data=rd, matrix=entries, sm=sm, n=n,
        h_images=h_images, x_plus=x_plus, x_minus=x_minus,
        raising_const=raising_const, lowering_const=tuple(lowering_const),
    )


# -- relation verification ---------------------------------------------------


@dataclass
class RelationCheck:
    relation: str
    indices: tuple
    passed: bool
    residual: Derivation | None = None


@dataclass
class RelationReport:
    checks: list[RelationCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def by_relation(self, label: str) -> list[RelationCheck]:
        return [c for c in self.checks if c.relation == label]


def _record(checks, relation, indices, residual: Derivation):
    checks.append(RelationCheck(relation, indices, residual.is_zero(),
                                None if residual.is_zero() else residual))


def verify_relations(rep: Representation) -> RelationReport:
    """Check all five defining relations symbolically.

    (a) Cartan images commute; (b) raising/lowering pairs bracket to the
    coroot images and cross brackets vanish; (c) root monomials are weight
    vectors, with the weight read off from the data; (d)/(e) the iterated
    brackets with exponent 1 - n(i,j) kill the other raising/lowering field.
    Failures become report entries, never exceptions.
    """
    checks = []
    r = rep.r
    nh = rep.root_data.num_h
    for a in range(nh):
        for b in range(a + 1, nh):
            _record(checks, "a", (a, b),
                    vf.bracket(rep.h_images[a], rep.h_images[b]))
    for i in range(r):
        for j in range(r):
            res = vf.bracket(rep.x_plus[i], rep.x_minus[j])
            if i == j:
                res = res - rep.h_images[i]
            _record(checks, "b", (i, j), res)
    for a in range(nh):
        for j in range(r):
            weight, ok = _weight(rep, a, j)
            plus = vf.bracket(rep.h_images[a], rep.x_plus[j]) - rep.x_plus[j] * weight
            minus = vf.bracket(rep.h_images[a], rep.x_minus[j]) + rep.x_minus[j] * weight
            if not ok:
                checks.append(RelationCheck("c", (a, j, 1), False, plus))
                checks.append(RelationCheck("c", (a, j, -1), False, minus))
            else:
                _record(checks, "c", (a, j, 1), plus)
                _record(checks, "c", (a, j, -1), minus)
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            k = 1 - rep.gcm.n(i, j)
            _record(checks, "d", (i, j),
                    vf.ad_pow(rep.x_plus[i], k, rep.x_plus[j]))
            _record(checks, "e", (i, j),
                    vf.ad_pow(rep.x_minus[i], k, rep.x_minus[j]))
    return RelationReport(checks)


def _weight(rep: Representation, a: int, j: int):
    """Eigenvalue of the a-th Cartan image on the j-th root monomial,
    computed from the images rather than assumed from the matrix."""
    e = [0] * rep.r
    e[j] = rep.n[j]
    mono = laurent.monomial(rep.r, e, 1)
    image = rep.h_images[a].apply(mono)
    weight = image.terms.get(tuple(e), Fraction(0))
    return weight, image == mono * weight


def kernel_check(rep: Representation) -> dict[str, bool]:
    """Exact kernel identities: for affine types the sum of the coroot
    images vanishes and the image of the Cartan part has rank r; for finite
    types the coroot images are independent.  The dual-basis images must be
    independent in every case."""
    r = rep.r
    rows = [d.constant_coords() for d in rep.h_images]
    checks = {}
    if rep.root_data.is_affine:
        total = rep.h_images[0]
        for d in rep.h_images[1:r]:
            total = total + d
        checks["center_sum_zero"] = total.is_zero()
        checks["h_image_rank_full"] = linalg.rank(rows) == r
    else:
        checks["h_images_independent"] = linalg.rank(rows) == r
    dual_rows = []
    for j in range(r):
        img = vf.zero_field(r)
        for a, c in enumerate(rep.root_data.dual_basis[j]):
            if c:
                img = img + rep.h_images[a] * c
        dual_rows.append(img.constant_coords())
    checks["dual_images_independent"] = linalg.rank(dual_rows) == r
    return checks


# -- output forms -------------------------------------------------------------


def _frac_latex(c: Fraction) -> str:
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c.denominator == 1:
        return f"{sign}{c.numerator}"
    return sign + r"\frac{%d}{%d}" % (c.numerator, c.denominator)


def _monomial_latex(exps) -> str:
    parts = []
    for j, e in enumerate(exps):
        if e == 0:
            continue
        parts.append(f"z_{{{j + 1}}}" if e == 1 else f"z_{{{j + 1}}}^{{{e}}}")
    return "".join(parts)


def poly_latex(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    out = ""
    for exps, c in p.sorted_terms():
        mono = _monomial_latex(exps)
        coeff = _frac_latex(c)
        if mono and coeff == "1":
            piece = mono
        elif mono and coeff == "-1":
            piece = "-" + mono
        else:
            piece = coeff + mono
        if out and not piece.startswith("-"):
            out += "+"
        out += piece
    return out


def derivation_latex(d: Derivation) -> str:
    """Paper-style display: factor a common monomial out of the coordinates
    when there is one, e.g. z_{1}^{2}\\left(D_{1}-D_{2}\\right)."""
    nonzero = [(k, q) for k, q in enumerate(d.coords) if not q.is_zero()]
    if not nonzero:
        return "0"
    zero_exps = (0,) * d.rank
    if all(len(q.terms) == 1 for _, q in nonzero):
        exps_set = {next(iter(q.terms)) for _, q in nonzero}
        if len(exps_set) == 1 and next(iter(exps_set)) != zero_exps:
            exps = next(iter(exps_set))
            inner = ""
            for k, q in nonzero:
                c = q.terms[exps]
                coeff = _frac_latex(c)
                if coeff == "1":
                    piece = f"D_{{{k + 1}}}"
                elif coeff == "-1":
                    piece = f"-D_{{{k + 1}}}"
                else:
                    piece = coeff + f"D_{{{k + 1}}}"
                if inner and not piece.startswith("-"):
                    inner += "+"
                inner += piece
            return _monomial_latex(exps) + r"\left(" + inner + r"\right)"
    pieces = []
    for k, q in nonzero:
        if len(q.terms) > 1:
            body = r"\left(" + poly_latex(q) + r"\right)"
        else:
            body = poly_latex(q)
            if body == "1":
                body = ""
            elif body == "-1":
                body = "-"
        pieces.append(body + f"D_{{{k + 1}}}")
    return "+".join(pieces).replace("+-", "-")


def to_json(rep: Representation) -> dict:
    data = {
        "cartan_matrix": [list(row) for row in rep.gcm.entries],
        "type": rep.root_data.ctype.label,
        "rank": rep.r,
        "corank": rep.gcm.corank,
        "n": list(rep.n),
        "matrix": [[str(x) for x in row] for row in rep.matrix],
        "generators": {name: vf.to_json(d)
                       for name, d in rep.generators().items()},
    }
    if rep.root_data.is_affine:
        data["affine_node"] = 1  # input labelling; extension generator is 'd'
    if rep.sm is not None:
        data["solution_matrix"] = solution.to_json(rep.sm)
    return data


def from_json(data) -> Representation:
    """Rebuild a representation from its JSON form (trusting the stored
    generator coordinates, so a round trip re-verifies what was emitted)."""
    gcm = cartan.validate_gcm(data["cartan_matrix"])
    rd = build_root_data(gcm)
    r = gcm.r
    n = _check_n(data["n"], r)
    entries = tuple(tuple(Fraction(x) for x in row) for row in data["matrix"])
    gens = data["generators"]
    h_images = tuple(vf.from_json(gens[name], r) for name in rd.h_names())
    x_plus = tuple(vf.from_json(gens[f"X{i + 1}"], r) for i in range(r))
    x_minus = tuple(vf.from_json(gens[f"X-{i + 1}"], r) for i in range(r))
    sm = None
    if "solution_matrix" in data:
        sm = solution.from_json(gcm, data["solution_matrix"])
    raising = tuple(vf.constant_field(r, [entries[j][i] / n[j] for j in range(r)])
                    for i in range(r))
    lowering = tuple(_closed_lowering(entries, n, r))
    return Representation(
        root_data=rd, matrix=entries, sm=sm, n=n,
        h_images=h_images, x_plus=x_plus, x_minus=x_minus,
        raising_const=raising, lowering_const=lowering,
    )


def to_text(rep: Representation) -> str:
    lines = []
    for name, d in rep.generators().items():
        lines.append(f"{name} -> {vf.render(d)}")
    return "\n".join(lines)


def to_latex(rep: Representation) -> str:
    lines = []
    for name, d in rep.generators().items():
        if name == "d":
            lhs = "d"
        elif name.startswith("X-"):
            lhs = f"X_{{-{name[2:]}}}"
        else:
            lhs = f"{name[0]}_{{{name[1:]}}}"
        lines.append(lhs + r" &\mapsto " + derivation_latex(d) + r" \\")
    return "\n".join(lines)
