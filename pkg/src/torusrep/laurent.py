"""Exact sparse Laurent polynomials in z_1 .. z_r over the rationals.

A polynomial is a dict mapping exponent tuples (one signed int per variable)
to nonzero Fraction coefficients; the zero polynomial is the empty dict.
Canonical form never stores zero coefficients, so equality is structural.

Text syntax (used by the CLI and in JSON coordinate strings):

    3/2*z1^2*z2^-1 + z3 - 2

Variables are named z1..zr in display but indexed 0..r-1 in the API.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NotAUnit, ParseError, RankMismatch

# Single coercion point for the coefficient field; swapping in a different
# exact field (e.g. Gaussian rationals) only needs to touch this.
def _coeff(value) -> Fraction:
    return Fraction(value)


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        canonical = {}
        if terms:
            for exps, c in terms.items():
                c = _coeff(c)
                if c != 0:
                    canonical[tuple(exps)] = c
        self.terms = canonical

    # -- ring operations ----------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = const(self.rank, other)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.rank = self.rank
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.rank = self.rank
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = const(self.rank, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = _coeff(other)
            out = LaurentPoly.__new__(LaurentPoly)
            out.rank = self.rank
            out.terms = {} if c == 0 else {e: c * v for e, v in self.terms.items()}
            return out
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        out = LaurentPoly.__new__(LaurentPoly)
        out.rank = self.rank
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if not isinstance(m, int):
            raise TypeError("exponent must be an integer")
        if m < 0:
            return self.inverse() ** (-m)
        result = one(self.rank)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly the single-term elements."""
        return len(self.terms) == 1

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotAUnit(f"{self} has {len(self.terms)} terms")
        (exps, c), = self.terms.items()
        out = LaurentPoly.__new__(LaurentPoly)
        out.rank = self.rank
        out.terms = {tuple(-e for e in exps): 1 / c}
        return out

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.rank, Fraction(0))

    def sorted_terms(self):
        """Terms in descending lexicographic exponent order (canonical)."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == const(self.rank, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPoly({self.rank}, {render(self)!r})"


# -- constructors -------------------------------------------------------

def zero(rank: int) -> LaurentPoly:
    return LaurentPoly(rank)


def one(rank: int) -> LaurentPoly:
    return const(rank, 1)


def const(rank: int, value) -> LaurentPoly:
    return LaurentPoly(rank, {(0,) * rank: _coeff(value)})


def gen(rank: int, index: int) -> LaurentPoly:
    """The variable z_{index+1} (0-based index)."""
    if not 0 <= index < rank:
        raise IndexError(f"variable index {index} out of range for rank {rank}")
    exps = [0] * rank
    exps[index] = 1
    return LaurentPoly(rank, {tuple(exps): Fraction(1)})


def monomial(rank: int, exps, coeff=1) -> LaurentPoly:
    exps = tuple(exps)
    if len(exps) != rank:
        raise RankMismatch(f"{len(exps)} exponents for rank {rank}")
    return LaurentPoly(rank, {exps: _coeff(coeff)})


# -- text form -----------------------------------------------------------

def render(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for exps, c in p.sorted_terms():
        factors = []
        for j, e in enumerate(exps):
            if e == 0:
                continue
            factors.append(f"z{j + 1}" if e == 1 else f"z{j + 1}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


_FACTOR_RE = re.compile(r"(?:(\d+(?:/\d+)?)|z(\d+)(?:\^([+-]?\d+))?)$")


def parse(text: str, rank: int) -> LaurentPoly:
    """Parse the text syntax back into a polynomial of the given rank."""
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty polynomial string")
    result = zero(rank)
    pos = 0
    while pos < len(compact):
        sign = 1
        while pos < len(compact) and compact[pos] in "+-":
            if compact[pos] == "-":
                sign = -sign
            pos += 1
        end = pos
        while end < len(compact) and compact[end] not in "+-":
            end += 1
        # '^-3' swallows the minus that the term scan above would split on
        while end < len(compact) and compact[end - 1] == "^":
            end += 1
            while end < len(compact) and compact[end] not in "+-":
                end += 1
        term = compact[pos:end]
        if not term:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * rank
        for factor in term.split("*"):
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            if m.group(1) is not None:
                coeff *= Fraction(m.group(1))
            else:
                idx = int(m.group(2)) - 1
                if not 0 <= idx < rank:
                    raise ParseError(f"variable z{m.group(2)} exceeds rank {rank}")
                exps[idx] += int(m.group(3)) if m.group(3) else 1
        result = result + monomial(rank, exps, coeff)
        pos = end
    return result


# -- JSON form -------------------------------------------------------------

def to_json(p: LaurentPoly) -> list:
    return [{"coeff": str(c), "exps": list(e)} for e, c in p.sorted_terms()]


def from_json(data, rank: int) -> LaurentPoly:
    result = zero(rank)
    for entry in data:
        result = result + monomial(rank, entry["exps"], Fraction(entry["coeff"]))
    return result
