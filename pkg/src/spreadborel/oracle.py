"""Brute-force ground truth for arbitrary monomial ideals.

Betti numbers come from the Taylor complex: after tensoring with K, the
complex splits into one strand per lcm multidegree, and the homology of the
strand at alpha in position p is beta_{p,alpha}(S/I). Ranks are computed by
exact elimination over the rationals (or over GF(2) on request). Past the
Taylor generator cap, upper Koszul complexes give the same numbers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Literal

from .errors import GeneratorCapError, LatticeCapError, ZeroIdealError
from .ideals import MonomialIdeal
from .monomials import Monomial
from .resolution import BettiTable

DEFAULT_CAP = 14
DEFAULT_LATTICE_CAP = 20000

Field = Literal["QQ", "GF2"]
SparseRow = dict[int, int]


@dataclass(frozen=True)
class TaylorStrand:
    """The degree-alpha piece of the Taylor complex tensored with K.

    ``chains[p]`` lists the generator subsets (bitmasks) of size p with lcm
    alpha; ``boundaries[p]`` holds one sparse row per element of
    ``chains[p]``, giving its image in ``chains[p - 1]`` by position.
    """

    multidegree: tuple[int, ...]
    chains: dict[int, list[int]]
    boundaries: dict[int, list[SparseRow]]

    @property
    def degree(self) -> int:
        return sum(self.multidegree)

    def ranks(self) -> dict[int, int]:
        return {p: len(c) for p, c in self.chains.items()}

    def composition_is_zero(self) -> bool:
        for p, rows in self.boundaries.items():
            lower = self.boundaries.get(p - 1)
            if lower is None:
                continue
            for row in rows:
                acc: dict[int, int] = defaultdict(int)
                for mid, c in row.items():
                    for k, v in lower[mid].items():
                        acc[k] += c * v
                if any(acc.values()):
                    return False
        return True

    def homology(self, field: Field = "QQ") -> dict[int, int]:
        rank = {p: matrix_rank(rows, field) for p, rows in self.boundaries.items()}
        out = {}
        for p, chain in self.chains.items():
            h = len(chain) - rank.get(p, 0) - rank.get(p + 1, 0)
            if h:
                out[p] = h
        return out


def _rank_qq(rows: list[SparseRow]) -> int:
    # fraction-free elimination over the integers; rank over Z equals rank over Q
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                pivots[col] = {k: v // g for k, v in r.items()}
                break
            a, c = piv[col], r[col]
            keys = r.keys() | piv.keys()
            r = {k: v for k in keys if (v := a * r.get(k, 0) - c * piv.get(k, 0))}
    return len(pivots)


def _rank_gf2(rows: list[SparseRow]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        bits = 0
        for k, v in row.items():
            if v % 2:
                bits |= 1 << k
        while bits:
            top = bits.bit_length() - 1
            if top in pivots:
                bits ^= pivots[top]
            else:
                pivots[top] = bits
                rank += 1
                break
    return rank


def matrix_rank(rows: list[SparseRow], field: Field = "QQ") -> int:
    if field == "QQ":
        return _rank_qq(rows)
    if field == "GF2":
        return _rank_gf2(rows)
    raise ValueError(f"unsupported field {field!r}")


def taylor_strands(I: MonomialIdeal, cap: int = DEFAULT_CAP) -> Iterator[TaylorStrand]:
    m = len(I.gens)
    if m > cap:
        raise GeneratorCapError(m, cap)
    n = I.n
    exps = [u.exponents(n) for u in I.gens]
    lcm: list[tuple[int, ...]] = [(0,) * n] * (1 << m)
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    groups[lcm[0]].append(0)
    for mask in range(1, 1 << m):
        low = mask & -mask
        prev = lcm[mask ^ low]
        g = exps[low.bit_length() - 1]
        lcm[mask] = tuple(a if a >= b else b for a, b in zip(prev, g))
        groups[lcm[mask]].append(mask)

    for alpha in sorted(groups, key=lambda a: (sum(a), a)):
        by_size: dict[int, list[int]] = defaultdict(list)
        for mask in groups[alpha]:
            by_size[mask.bit_count()].append(mask)
        position = {p: {mask: k for k, mask in enumerate(ms)} for p, ms in by_size.items()}
        boundaries: dict[int, list[SparseRow]] = {}
        for p, masks in by_size.items():
            faces = position.get(p - 1)
            if not faces:
                continue
            rows = []
            for mask in masks:
                row: SparseRow = {}
                sign = 1
                rest = mask
                while rest:
                    low = rest & -rest
                    face = mask ^ low
                    if face in faces:
                        row[faces[face]] = sign
                    sign = -sign
                    rest ^= low
                rows.append(row)
            boundaries[p] = rows
        yield TaylorStrand(alpha, dict(by_size), boundaries)


def taylor_betti(I: MonomialIdeal, cap: int = DEFAULT_CAP, field: Field = "QQ") -> BettiTable:
    """Graded Betti numbers of S/I from Taylor strand homology."""
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for strand in taylor_strands(I, cap):
        for p, h in strand.homology(field).items():
            entries[(p, strand.degree)] += h
    return BettiTable(entries, "quotient")


def _unary_codes(I: MonomialIdeal) -> tuple[list[int], int, int]:
    """Exponent vectors as ints with one w-bit field per variable, exponent e stored as 2^e - 1.

    In this encoding lcm is bitwise or, divisibility is ``g | b == b`` and
    total degree is the popcount.
    """
    w = max([1] + [max(u.exponents(I.n)) for u in I.gens])
    codes = [
        sum(((1 << e) - 1) << (w * k) for k, e in enumerate(u.exponents(I.n)))
        for u in I.gens
    ]
    not_last = sum(((1 << (w - 1)) - 1) << (w * k) for k in range(I.n))
    return codes, w, not_last


def _decode(code: int, w: int, n: int) -> tuple[int, ...]:
    field = (1 << w) - 1
    return tuple((code >> (w * k) & field).bit_count() for k in range(n))


def _lattice_codes(codes: list[int], cap: int | None) -> set[int]:
    seen = set(codes)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in codes:
                c = a | g
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        if cap is not None and len(seen) > cap:
            raise LatticeCapError(len(seen), cap)
        frontier = nxt
    return seen


def lcm_lattice(I: MonomialIdeal, cap: int | None = None) -> set[tuple[int, ...]]:
    """Exponent vectors of lcms of nonempty generator subsets."""
    codes, w, _ = _unary_codes(I)
    return {_decode(c, w, I.n) for c in _lattice_codes(codes, cap)}


def _upper_koszul_facets(b: int, codes: list[int], not_last: int) -> list[int]:
    # F is a face iff some generator g <= b has g_k < b_k for every k in F;
    # variable k is named by the top bit of its field in b
    top = b & ~((b >> 1) & not_last)
    maximal = {top & ~g for g in codes if g | b == b}
    return [f for f in maximal if not any(o != f and o & f == f for o in maximal)]


def koszul_betti(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP, field: Field = "QQ") -> BettiTable:
    """Graded Betti numbers of S/I from reduced homology of upper Koszul complexes.

    beta_{i,b}(I) is the dimension of the (i-1)-st reduced homology of
    {F squarefree : x^(b-F) in I}; only lcm-lattice degrees contribute. The
    cost grows with the lattice and 2^n rather than 2^|G(I)|, so this covers
    ideals beyond the Taylor cap.
    """
    entries: dict[tuple[int, int], int] = defaultdict(int)
    if any(u.degree == 0 for u in I.gens):
        return BettiTable({}, "quotient")
    entries[(0, 0)] = 1
    codes, _, not_last = _unary_codes(I)
    for b in _lattice_codes(codes, cap):
        facets = _upper_koszul_facets(b, codes, not_last)
        if len(facets) == 1 and facets[0]:
            continue  # a nonempty simplex is acyclic; {empty face} is not
        faces: set[int] = set()
        for f in facets:
            sub = f
            while True:
                faces.add(sub)
                if not sub:
                    break
                sub = (sub - 1) & f
        by_size: dict[int, list[int]] = defaultdict(list)
        for f in faces:
            by_size[f.bit_count()].append(f)
        position = {s: {f: k for k, f in enumerate(fs)} for s, fs in by_size.items()}
        rank = {}
        for s, fs in by_size.items():
            if s == 0:
                continue
            lower = position[s - 1]
            rows = []
            for f in fs:
                row: SparseRow = {}
                sign = 1
                rest = f
                while rest:
                    low = rest & -rest
                    row[lower[f ^ low]] = sign
                    sign = -sign
                    rest ^= low
                rows.append(row)
            rank[s] = matrix_rank(rows, field)
        degree = b.bit_count()
        for s, fs in by_size.items():
            h = len(fs) - rank.get(s, 0) - rank.get(s + 1, 0)
            if h:
                entries[(s + 1, degree)] += h
    return BettiTable(entries, "quotient")


def minimal_primes(I: MonomialIdeal) -> list[frozenset[int]]:
    """Inclusion-minimal variable sets meeting every generator's support."""
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no minimal primes of positive height")
    edges = sorted({sum(1 << (i - 1) for i in u.support) for u in I.gens}, key=int.bit_count)
    if 0 in edges:
        return []
    found: set[int] = set()
    visited: set[int] = set()

    def grow(chosen: int) -> None:
        if chosen in visited:
            return
        visited.add(chosen)
        for e in edges:
            if not e & chosen:
                rest = e
                while rest:
                    low = rest & -rest
                    grow(chosen | low)
                    rest ^= low
                return
        found.add(chosen)

    grow(0)
    minimal = [c for c in found if not any(o != c and o & c == o for o in found)]
    sets = [frozenset(i + 1 for i in range(I.n) if c >> i & 1) for c in minimal]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def cover_height(I: MonomialIdeal) -> int:
    return min(len(c) for c in minimal_primes(I))


def membership(w: Monomial, I: MonomialIdeal) -> bool:
    """Whether some minimal generator divides w, compared on exponent vectors."""
    top = max([I.n] + list(w.indices[-1:]))
    ew = w.exponents(top)
    return any(
        all(a <= b for a, b in zip(u.exponents(top), ew)) for u in I.gens
    )
