"""Height, depth and the Cohen-Macaulay classification of t-spread Borel ideals."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpreadBorelError, ZeroIdealError
from .ideals import MonomialIdeal, require_strongly_stable, veronese_seed
from .monomials import Monomial, SpreadVector, binomial, render_monomial
from .resolution import homological_invariants


@dataclass(frozen=True)
class CMReport:
    """Invariants of S/I.

    ``height``, ``dim_quotient``, ``pd_quotient`` and ``depth_quotient`` are
    taken in the declared ring K[x1..xn]. The witness is searched for in
    K[x1..x_eff] where eff is the largest variable occurring in G(I);
    adding unused variables changes dim and depth by the same amount, so
    ``is_cm`` does not depend on the choice.
    """

    n: int
    height: int
    dim_quotient: int
    pd_quotient: int
    depth_quotient: int
    is_cm: bool
    witness: Monomial | None
    effective_n: int

    @property
    def depth_ideal(self) -> int:
        return self.depth_quotient + 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "effective_n": self.effective_n,
            "height": self.height,
            "dim": self.dim_quotient,
            "pd": self.pd_quotient,
            "depth": self.depth_quotient,
            "cm": self.is_cm,
            "witness": render_monomial(self.witness) if self.witness is not None else None,
        }

    def render(self) -> str:
        lines = [
            f"n: {self.n}",
            f"effective_n: {self.effective_n}",
            f"height: {self.height}",
            f"dim(S/I): {self.dim_quotient}",
            f"pd(S/I): {self.pd_quotient}",
            f"depth(S/I): {self.depth_quotient}",
        ]
        if self.is_cm:
            lines.append(f"CM: true, witness {render_monomial(self.witness)}")
        else:
            lines.append("CM: false")
        return "\n".join(lines)


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ZeroIdealError("height and depth of the zero ideal are not reported")
    if any(u.degree == 0 for u in I.gens):
        raise SpreadBorelError("the unit ideal has no quotient ring to classify")


def ideal_height(I: MonomialIdeal, t: SpreadVector) -> int:
    _require_proper(I)
    require_strongly_stable(I, t)
    return max(u.min for u in I.gens)


def cm_witness(I: MonomialIdeal, t: SpreadVector, n: int | None = None) -> Monomial | None:
    """The generator ``x_{n-(t_1+..+t_{l-1})} ... x_{n-t_{l-1}} x_n`` if G(I) has one."""
    n = I.effective_n if n is None else n
    gens = set(I.gens)
    for ell in range(1, t.d + 1):
        if n - t.gap_sum(ell) < 1:
            break
        w = veronese_seed(n, ell, t)
        if w in gens:
            return w
    return None


def cm_report(I: MonomialIdeal, t: SpreadVector) -> CMReport:
    _require_proper(I)
    height = ideal_height(I, t)
    _, pd = homological_invariants(I, t)
    witness = cm_witness(I, t)
    return CMReport(
        n=I.n,
        height=height,
        dim_quotient=I.n - height,
        pd_quotient=pd + 1,
        depth_quotient=I.n - pd - 1,
        is_cm=witness is not None,
        witness=witness,
        effective_n=I.effective_n,
    )


def veronese_betti(n: int, d: int, t: SpreadVector, i: int) -> int:
    """Total Betti number beta_i(S/I) of the degree-d t-spread Veronese ideal, i >= 1."""
    if i < 1:
        raise ValueError("homological degree must be at least 1")
    g = t.gap_sum(d)
    if n < 1 + g:
        raise ZeroIdealError(f"the Veronese ideal of degree {d} in {n} variables is zero")
    return binomial(d + i - 2, d - 1) * binomial(n - g + d - 1, d + i - 1)
