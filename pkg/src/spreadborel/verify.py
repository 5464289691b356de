"""Cross-check closed-form invariants of one ideal against the brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import oracle
from .cm import cm_report, ideal_height
from .ideals import MonomialIdeal, is_spread_strongly_stable
from .monomials import SpreadVector
from .resolution import (
    betti_table,
    colon_set_oracle,
    extremal_from_generators,
    extremal_from_table,
    homological_invariants,
    linear_quotient_sets,
    poincare_series,
)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    expected: Any = None
    got: Any = None

    def line(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        text = f"{status:8} {self.name}"
        if not self.ok:
            text += f": closed form {self.got!r}, oracle {self.expected!r}"
        return text


def check_betti(I: MonomialIdeal, t: SpreadVector, cap: int = oracle.DEFAULT_CAP) -> Check:
    got = betti_table(I, t)
    want = oracle.taylor_betti(I, cap).to_ideal()
    return Check("betti table vs Taylor complex", got == want, want.entries, got.entries)


def check_linear_quotients(I: MonomialIdeal, t: SpreadVector) -> Check:
    lq = linear_quotient_sets(I, t)
    bad = []
    for k in range(2, len(I) + 1):
        res = colon_set_oracle(I, k)
        if not res.linear or res.variables != lq.sets[k - 1]:
            bad.append((k, sorted(lq.sets[k - 1]), [str(g) for g in res.generators]))
    return Check("colon ideals are variable-generated with predicted sets", not bad, [], bad)


def check_poincare(I: MonomialIdeal, t: SpreadVector, cap: int = oracle.DEFAULT_CAP) -> Check:
    got = poincare_series(I, t).internal()
    want = dict(oracle.taylor_betti(I, cap).entries)
    return Check("Poincare coefficients vs Taylor complex", got == want, want, got)


def check_invariants(I: MonomialIdeal, t: SpreadVector, cap: int = oracle.DEFAULT_CAP) -> Check:
    got = homological_invariants(I, t)
    tab = oracle.taylor_betti(I, cap).to_ideal()
    want = (tab.regularity, tab.projdim)
    return Check("(reg, pd) vs Taylor complex", got == want, want, got)


def check_extremal(I: MonomialIdeal, t: SpreadVector, cap: int = oracle.DEFAULT_CAP) -> Check:
    got = extremal_from_generators(I, t)
    want = extremal_from_table(oracle.taylor_betti(I, cap))
    return Check("extremal Betti numbers vs Taylor complex", got == want, want, got)


def check_height(I: MonomialIdeal, t: SpreadVector) -> Check:
    got = ideal_height(I, t)
    want = oracle.cover_height(I)
    return Check("height vs minimal vertex covers", got == want, want, got)


def check_cm(I: MonomialIdeal, t: SpreadVector, cap: int = oracle.DEFAULT_CAP) -> Check:
    rep = cm_report(I, t)
    n = I.effective_n
    pd_q = oracle.taylor_betti(I, cap).projdim
    want = (n - pd_q) == (n - oracle.cover_height(I))
    return Check("CM witness vs depth = dim from oracles", rep.is_cm == want, want, rep.is_cm)


def check_stability(I: MonomialIdeal, t: SpreadVector) -> Check:
    got = is_spread_strongly_stable(I, t)
    want = is_spread_strongly_stable(I, t, exhaustive=True)
    return Check("generator-level vs exhaustive strong stability", got == want, want, got)


def verify_ideal(I: MonomialIdeal, t: SpreadVector, cap: int = oracle.DEFAULT_CAP) -> list[Check]:
    return [
        check_stability(I, t),
        check_linear_quotients(I, t),
        check_betti(I, t, cap),
        check_poincare(I, t, cap),
        check_invariants(I, t, cap),
        check_extremal(I, t, cap),
        check_height(I, t),
        check_cm(I, t, cap),
    ]
