"""Exact analysis of skew-linear maps f(x, y) = (x + 1, A(x) y) over Q."""

from .algebra import MultiPoly, Poly, PolyMatrix
from .closure import (
    binomial_closure,
    component_count,
    density_probe,
    relation_lattice,
)
from .invariants import (
    SemiInvariant,
    SkewLine,
    is_semi_invariant,
    period_search,
    semi_invariants,
    semi_invariants_total,
    skew_eigenvectors,
)
from .straighten import (
    Diagonalized,
    ExtensionCertificate,
    NoInvariantUpToBound,
    solve_off_diagonal,
    straighten,
)
from .system import (
    GaugeTransform,
    InvalidSystemError,
    PointState,
    SkewSystem,
    apply,
    cocycle,
    gauge_conjugate,
    orbit,
    system,
    validate,
)

__version__ = "0.1.0"
