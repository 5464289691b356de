"""Monomial ideals in canonical form and t-spread strongly stable (Borel) ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Iterator

from .errors import NotInIdealError, NotSpreadError, NotStronglyStableError
from .monomials import (
    Monomial,
    SpreadVector,
    enumerate_spread,
    is_spread,
    monomials_from,
    render_monomial,
    require_spread,
)


def pure_lex_compare(u: Monomial, v: Monomial) -> int:
    """Return 1 if ``u > v``, -1 if ``u < v`` and 0 if equal, with x1 > x2 > ... > xn.

    Comparison is on exponent vectors. For monomials of the same degree this
    is the same as comparing index sequences with the smaller first differing
    index winning.
    """
    top = max(u.indices[-1:] + v.indices[-1:], default=0)
    eu, ev = u.exponents(top), v.exponents(top)
    return (eu > ev) - (eu < ev)


pure_lex_key = cmp_to_key(pure_lex_compare)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]
    spread: SpreadVector | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient ring needs at least one variable")
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        for a, b in zip(gens, gens[1:]):
            if pure_lex_compare(a, b) <= 0:
                raise ValueError("generators must be strictly pure-lex descending")
        for u in gens:
            if u.indices and u.max > self.n:
                raise ValueError(f"{u} lies outside K[x1..x{self.n}]")
        for a in gens:
            for b in gens:
                if a is not b and a.divides(b):
                    raise ValueError(f"{a} divides {b}: generating set is not minimal")
        if self.spread is not None:
            for u in gens:
                require_spread(u, self.spread)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, w: Monomial) -> bool:
        return any(u.divides(w) for u in self.gens)

    def of_degree(self, j: int) -> tuple[Monomial, ...]:
        return tuple(u for u in self.gens if u.degree == j)

    @property
    def degrees(self) -> list[int]:
        return sorted({u.degree for u in self.gens})

    @property
    def effective_n(self) -> int:
        """Largest variable index occurring in a generator (0 for the zero ideal)."""
        return max((u.max for u in self.gens if u.indices), default=0)

    def with_spread(self, t: SpreadVector | None) -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.gens, t)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(render_monomial(u) for u in self.gens) + ")"


def minimal_generators(
    raw: Iterable[object], n: int, spread: SpreadVector | None = None
) -> MonomialIdeal:
    """Canonicalize a list of monomials into the minimal generating set of the ideal."""
    mons = set(monomials_from(raw, n))
    # A divisor has degree <= its multiple, so scanning by degree suffices.
    keep: list[Monomial] = []
    for u in sorted(mons, key=lambda m: m.degree):
        if not any(g.divides(u) for g in keep):
            keep.append(u)
    keep.sort(key=pure_lex_key, reverse=True)
    return MonomialIdeal(n, tuple(keep), spread)


def _exchanges(u: Monomial, t: SpreadVector) -> Iterator[Monomial]:
    """All t-spread ``x_j (u / x_i)`` with ``j < i`` and ``x_i | u``."""
    for i in sorted(set(u.indices)):
        for j in range(1, i):
            w = u.exchange(i, j)
            if is_spread(w, t):
                yield w


def _require_spread_gens(I: MonomialIdeal, t: SpreadVector) -> None:
    for u in I.gens:
        if not is_spread(u, t):
            raise NotSpreadError(f"generator {u} is not ({t})-spread")


def stability_violations(
    I: MonomialIdeal, t: SpreadVector, exhaustive: bool = False
) -> Iterator[tuple[Monomial, Monomial]]:
    """Yield pairs ``(u, w)``: u is a t-spread monomial of I, w an exchange of u outside I."""
    _require_spread_gens(I, t)
    if exhaustive:
        candidates: Iterable[Monomial] = (
            u
            for ell in range(0, t.d + 1)
            for u in enumerate_spread(I.n, ell, t)
            if u in I
        )
    else:
        candidates = I.gens
    for u in candidates:
        for w in _exchanges(u, t):
            if w not in I:
                yield u, w


def is_spread_strongly_stable(
    I: MonomialIdeal, t: SpreadVector, exhaustive: bool = False
) -> bool:
    """Exchange-condition check on G(I), or on every t-spread monomial of I."""
    return next(stability_violations(I, t, exhaustive), None) is None


def require_strongly_stable(I: MonomialIdeal, t: SpreadVector) -> None:
    bad = next(stability_violations(I, t), None)
    if bad is not None:
        u, w = bad
        raise NotStronglyStableError(
            f"{I} is not ({t})-spread strongly stable: {w} is an exchange of {u} outside the ideal"
        )


def _exchange_fixpoint(start: Iterable[Monomial], t: SpreadVector) -> set[Monomial]:
    seen = set(start)
    frontier = list(seen)
    while frontier:
        u = frontier.pop()
        for w in _exchanges(u, t):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def borel_closure(seeds: Iterable[object], t: SpreadVector, n: int) -> MonomialIdeal:
    """Smallest t-spread strongly stable ideal of K[x1..xn] containing the seeds."""
    seeds = monomials_from(seeds, n)
    for u in seeds:
        require_spread(u, t)
    closed = _exchange_fixpoint(seeds, t)
    ideal = minimal_generators(closed, n, t)
    # The generator-level fixpoint is checked against the full definition;
    # any monomial the definition forces in is added and the loop repeats.
    while True:
        forced = {w for _, w in stability_violations(ideal, t, exhaustive=True)}
        if not forced:
            return ideal
        closed = _exchange_fixpoint(set(ideal.gens) | forced, t)
        ideal = minimal_generators(closed, n, t)


def veronese_ideal(n: int, ell: int, t: SpreadVector) -> MonomialIdeal:
    """Ideal generated by all t-spread monomials of degree ``ell`` in n variables."""
    return MonomialIdeal(n, tuple(enumerate_spread(n, ell, t)), t)


def veronese_seed(n: int, ell: int, t: SpreadVector) -> Monomial:
    """``x_{n-(t_1+..+t_{l-1})} x_{n-(t_2+..+t_{l-1})} ... x_n``, the pure-lex smallest generator."""
    total = t.gap_sum(ell)
    return Monomial(tuple(n - total + t.gap_sum(k) for k in range(1, ell + 1)))


def standard_decomposition(
    w: Monomial, I: MonomialIdeal, t: SpreadVector
) -> tuple[Monomial, Monomial]:
    """Split a t-spread ``w`` in I as ``u * v`` with u in G(I) and max(u) <= min(v)."""
    require_spread(w, t)
    best = None
    for u in I.gens:
        if not u.divides(w):
            continue
        v = w / u
        if u.indices and v.indices and u.max > v.min:
            continue
        if best is None or pure_lex_compare(u, best) > 0:
            best = u
    if best is None:
        if w in I:
            raise NotStronglyStableError(
                f"{w} lies in {I} but has no standard decomposition"
            )
        raise NotInIdealError(f"{w} is not in {I}")
    return best, w / best
