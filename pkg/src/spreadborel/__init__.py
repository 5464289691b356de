"""Vector-spread (t-spread) Borel ideals and their homological invariants."""

from .cm import CMReport, cm_report, cm_witness, ideal_height, veronese_betti
from .errors import (
    ConsistencyError,
    DegreeExceedsArityError,
    GeneratorCapError,
    IndexRangeError,
    LatticeCapError,
    MonomialSyntaxError,
    NotInIdealError,
    NotSpreadError,
    NotStronglyStableError,
    OracleCapError,
    SpreadBorelError,
    ZeroIdealError,
)
from .ideals import (
    MonomialIdeal,
    borel_closure,
    is_spread_strongly_stable,
    minimal_generators,
    pure_lex_compare,
    standard_decomposition,
    veronese_ideal,
    veronese_seed,
)
from .monomials import (
    Monomial,
    SpreadVector,
    count_spread,
    enumerate_spread,
    is_spread,
    parse_monomial,
    render_monomial,
    shift_from_spread,
    shift_to_spread,
    spread_support,
)
from .resolution import (
    BettiTable,
    LinearQuotientData,
    PoincarePolynomial,
    betti_table,
    colon_set_oracle,
    extremal_betti,
    homological_invariants,
    linear_quotient_sets,
    poincare_series,
)

__version__ = "0.1.0"
