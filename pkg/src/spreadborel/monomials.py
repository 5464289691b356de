"""Monomials as index sequences, t-spread predicates and the shifting bijections.

A monomial ``x_{j_1} x_{j_2} ... x_{j_l}`` is stored as the nondecreasing
tuple ``(j_1, ..., j_l)``; the empty tuple is the unit monomial.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DegreeExceedsArityError,
    IndexRangeError,
    MonomialSyntaxError,
    NotSpreadError,
)


@dataclass(frozen=True, order=False)
class Monomial:
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(i < 1 for i in idx):
            raise IndexRangeError(f"variable indices must be positive, got {idx}")
        object.__setattr__(self, "indices", tuple(sorted(idx)))

    @classmethod
    def of(cls, *indices: int) -> "Monomial":
        return cls(tuple(indices))

    @classmethod
    def from_exponents(cls, exponents: Sequence[int]) -> "Monomial":
        idx: list[int] = []
        for var, e in enumerate(exponents, start=1):
            idx.extend([var] * e)
        return cls(tuple(idx))

    @property
    def degree(self) -> int:
        return len(self.indices)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.indices)

    @property
    def min(self) -> int:
        if not self.indices:
            raise ValueError("the unit monomial has empty support")
        return self.indices[0]

    @property
    def max(self) -> int:
        if not self.indices:
            raise ValueError("the unit monomial has empty support")
        return self.indices[-1]

    def exponents(self, n: int | None = None) -> tuple[int, ...]:
        top = self.max if self.indices else 0
        n = top if n is None else n
        if top > n:
            raise IndexRangeError(f"x{top} outside ambient of {n} variables")
        vec = [0] * n
        for i in self.indices:
            vec[i - 1] += 1
        return tuple(vec)

    def divides(self, other: "Monomial") -> bool:
        mine = Counter(self.indices)
        theirs = Counter(other.indices)
        return all(theirs[i] >= e for i, e in mine.items())

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.indices + other.indices)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        rest = Counter(self.indices)
        rest.subtract(other.indices)
        if any(e < 0 for e in rest.values()):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(rest.elements()))

    def gcd(self, other: "Monomial") -> "Monomial":
        common = Counter(self.indices) & Counter(other.indices)
        return Monomial(tuple(common.elements()))

    def lcm(self, other: "Monomial") -> "Monomial":
        both = Counter(self.indices) | Counter(other.indices)
        return Monomial(tuple(both.elements()))

    def exchange(self, i: int, j: int) -> "Monomial":
        """Return ``x_j * (self / x_i)``."""
        idx = list(self.indices)
        idx.remove(i)
        idx.append(j)
        return Monomial(tuple(idx))

    def __str__(self) -> str:
        return render_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({self.indices})"


@dataclass(frozen=True)
class SpreadVector:
    """Gap requirements ``(t_1, ..., t_{d-1})``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        ent = tuple(int(e) for e in self.entries)
        if not ent:
            raise ValueError("a spread vector needs at least one entry (d >= 2)")
        if any(e < 0 for e in ent):
            raise ValueError(f"spread entries must be nonnegative, got {ent}")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def zero(cls, d: int) -> "SpreadVector":
        return cls((0,) * (d - 1))

    @classmethod
    def parse(cls, text: str) -> "SpreadVector":
        try:
            return cls(tuple(int(p) for p in text.split(",") if p.strip()))
        except ValueError as exc:
            raise ValueError(f"bad spread vector {text!r}: {exc}") from None

    @property
    def d(self) -> int:
        return len(self.entries) + 1

    def gap_sum(self, ell: int) -> int:
        """``t_1 + ... + t_{ell-1}``; zero for ``ell <= 1``."""
        if ell > self.d:
            raise DegreeExceedsArityError(f"degree {ell} exceeds spread arity d={self.d}")
        return sum(self.entries[: max(ell - 1, 0)])

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


# --- text grammar -----------------------------------------------------------

def parse_monomial(text: str, n: int | None = None) -> Monomial:
    """Parse ``x1*x4^2`` style text; ``1`` is the unit.

    Indices are checked against ``[1, n]`` when ``n`` is given.
    """
    s = text
    pos = 0
    length = len(s)
    indices: list[int] = []

    def skip_ws():
        nonlocal pos
        while pos < length and s[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < length and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise MonomialSyntaxError("expected an integer", text, start)
        return int(s[start:pos])

    skip_ws()
    if pos == length:
        raise MonomialSyntaxError("empty monomial", text, pos)
    while True:
        skip_ws()
        if pos < length and s[pos] == "1" and (pos + 1 == length or not s[pos + 1].isdigit()):
            pos += 1
        elif pos < length and s[pos] == "x":
            pos += 1
            start = pos
            var = read_int()
            if var < 1 or (n is not None and var > n):
                bound = f"[1, {n}]" if n is not None else "the positive integers"
                raise IndexRangeError(
                    f"variable x{var} at position {start} outside {bound} in {text!r}"
                )
            exp = 1
            skip_ws()
            if pos < length and s[pos] == "^":
                pos += 1
                skip_ws()
                start = pos
                exp = read_int()
                if exp == 0:
                    raise MonomialSyntaxError("exponent 0 is not allowed", text, start)
            indices.extend([var] * exp)
        else:
            raise MonomialSyntaxError("expected 'x<index>' or '1'", text, pos)
        skip_ws()
        if pos == length:
            break
        if s[pos] != "*":
            raise MonomialSyntaxError("expected '*'", text, pos)
        pos += 1
    return Monomial(tuple(indices))


def render_monomial(u: Monomial) -> str:
    if not u.indices:
        return "1"
    counts = Counter(u.indices)
    parts = []
    for var in sorted(counts):
        e = counts[var]
        parts.append(f"x{var}" if e == 1 else f"x{var}^{e}")
    return "*".join(parts)


# --- spread predicates --------------------------------------------------------

def is_spread(u: Monomial, t: SpreadVector) -> bool:
    idx = u.indices
    if len(idx) > t.d:
        return False
    return all(idx[i + 1] - idx[i] >= t.entries[i] for i in range(len(idx) - 1))


def require_spread(u: Monomial, t: SpreadVector) -> None:
    if u.degree > t.d:
        raise DegreeExceedsArityError(
            f"{u} has degree {u.degree}, exceeding spread arity d={t.d}"
        )
    if not is_spread(u, t):
        raise NotSpreadError(f"{u} is not ({t})-spread")


def spread_support(u: Monomial, t: SpreadVector) -> frozenset[int]:
    require_spread(u, t)
    idx = u.indices
    out: set[int] = set()
    for i in range(len(idx) - 1):
        out.update(range(idx[i], idx[i] + t.entries[i]))
    return frozenset(out)


def shift_to_spread(u: Monomial, t: SpreadVector) -> Monomial:
    """Send any monomial of degree <= d to a t-spread one by adding partial gap sums."""
    if u.degree > t.d:
        raise DegreeExceedsArityError(
            f"{u} has degree {u.degree}, exceeding spread arity d={t.d}"
        )
    return Monomial(tuple(j + t.gap_sum(k) for k, j in enumerate(u.indices, start=1)))


def shift_from_spread(u: Monomial, t: SpreadVector) -> Monomial:
    require_spread(u, t)
    return Monomial(tuple(j - t.gap_sum(k) for k, j in enumerate(u.indices, start=1)))


def enumerate_spread(n: int, ell: int, t: SpreadVector) -> list[Monomial]:
    """All t-spread monomials of degree ``ell`` in ``n`` variables, pure-lex descending."""
    if ell < 0:
        raise ValueError("degree must be nonnegative")
    if ell > t.d:
        return []
    room = n - t.gap_sum(ell)
    if ell == 0:
        return [Monomial()]
    if room < 1:
        return []
    # combinations_with_replacement is lexicographic on index tuples, which
    # is pure-lex descending for a fixed degree; the shift preserves it.
    return [
        shift_to_spread(Monomial(c), t)
        for c in combinations_with_replacement(range(1, room + 1), ell)
    ]


def binomial(a: int, b: int) -> int:
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def count_spread(n: int, ell: int, t: SpreadVector) -> int:
    if ell > t.d:
        return 0
    return binomial(n + (ell - 1) - t.gap_sum(ell), ell)


def monomials_from(items: Iterable[object], n: int | None = None) -> list[Monomial]:
    """Coerce strings, index sequences or Monomials to Monomials."""
    out = []
    for it in items:
        if isinstance(it, Monomial):
            m = it
        elif isinstance(it, str):
            m = parse_monomial(it, n)
        else:
            m = Monomial(tuple(it))
        if n is not None and m.indices and m.max > n:
            raise IndexRangeError(f"{m} uses a variable outside [1, {n}]")
        out.append(m)
    return out
