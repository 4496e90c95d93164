"""Homological and handle-theoretic invariants of a trisected 4-manifold.

The surface inclusion is surjective on fundamental groups, so H1 of the
total space is Z^(2g) modulo the classes of every curve in all three
systems.  Euler characteristic and handle counts come straight from the
parameter tuple and are defined for closed manifolds only.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .diagram import StarDiagram, TrisectionParams, diagram_ok, validate_diagram
from .errors import BoundaryNotSupported, DiagramError
from .zmatrix import cokernel_invariants


@dataclass(frozen=True)
class HomologyReport:
    h1_free_rank: int
    h1_torsion: Tuple[int, ...]
    euler: Optional[int] = None

    def h1_str(self) -> str:
        parts = ["Z"] * self.h1_free_rank + [f"Z/{t}" for t in self.h1_torsion]
        return " + ".join(parts) if parts else "0"


def first_homology(d: StarDiagram) -> HomologyReport:
    """H1 of the trisected manifold: Z^(2g) / span(alpha + beta + gamma)."""
    violations = validate_diagram(d)
    if not diagram_ok(violations):
        raise DiagramError(
            "diagram invalid: " + "; ".join(v.message for v in violations if not v.advisory)
        )
    classes = d.all_classes()
    # columns are curve classes
    mat = [[vec[row] for vec in classes] for row in range(2 * d.genus)]
    inv = cokernel_invariants(mat)
    return HomologyReport(inv.free_rank, inv.torsion)


def euler_char(p: TrisectionParams) -> int:
    """chi = 2 + g - k1 - k2 - k3 for closed parameters."""
    _require_closed_with_k(p)
    return 2 + p.genus - sum(p.k)


def handle_counts(p: TrisectionParams) -> Tuple[int, int, int, int, int]:
    """(1, k1, g - k2, k3, 1); alternating sum equals euler_char."""
    _require_closed_with_k(p)
    if p.k[1] > p.genus:
        raise DiagramError(f"k2 = {p.k[1]} exceeds genus {p.genus}")
    return (1, p.k[0], p.genus - p.k[1], p.k[2], 1)


def _require_closed_with_k(p: TrisectionParams) -> None:
    if p.boundary != 0:
        raise BoundaryNotSupported(
            "invariant defined for closed trisections only (b = 0)"
        )
    if p.k is None:
        raise DiagramError("parameters carry no sector genera k")
