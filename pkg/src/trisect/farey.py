"""Genus-three diagrams indexed by triples of Farey fractions: validity,
intersection form, classification, and enumeration.

Fractions are vertices of the Farey graph; two fractions a/b, c/d are
neighbors when |ad - bc| = 1.  A triple with all pairwise distances in
{-1, 0, 1} determines a closed 4-manifold, classified here through the
symmetric form of the triple (three distinct fractions), a parity rule
(two distinct), or a spun lens space (all equal).
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .diagram import CurveSystem, Fraction, StarDiagram
from .errors import FormUndefined, NotNeighbors
from .zmatrix import FormClass, IntMatrix, classify_unimodular, sym_form_invariants

KIND_INVALID = "Invalid"
KIND_ALL_EQUAL = "AllEqual"
KIND_TWO_DISTINCT = "TwoDistinct"
KIND_TRIPLET = "FareyTriplet"

# connected sums of projective planes (three distinct fractions)
CP2_PLUS = "CP2#CP2#CP2bar"     # signature +1
CP2_MINUS = "CP2#CP2bar#CP2bar"  # signature -1
# sphere bundles over the sphere (two distinct fractions)
S2XS2 = "S2xS2"
S2TWS2 = "S2x~S2"   # the twisted bundle


@dataclass(frozen=True)
class SpunLens:
    """Spun lens space of L(p, q); the all-equal triple (q/p, q/p, q/p)."""
    p: int
    q: int

    def __str__(self) -> str:
        return f"SpunLens({self.p},{self.q})"


Manifold = Union[str, SpunLens, None]


@dataclass(frozen=True)
class FareyTriple:
    x: Fraction
    y: Fraction
    z: Fraction

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __str__(self) -> str:
        return f"{self.x} {self.y} {self.z}"


@dataclass(frozen=True)
class FareyClassification:
    kind: str
    manifold: Manifold
    refined: Optional[Tuple[str, str]]  # (T, S) with manifold = T # S
    form: Optional[FormClass]


def dmet(x: Fraction, y: Fraction) -> int:
    """Farey distance: det of the column matrix ((a, c), (b, d))."""
    return x.num * y.den - x.den * y.num


def triple_kind(t: FareyTriple) -> str:
    pairs = ((t.x, t.y), (t.x, t.z), (t.y, t.z))
    if any(abs(dmet(u, v)) > 1 for u, v in pairs):
        return KIND_INVALID
    distinct = len({t.x, t.y, t.z})
    if distinct == 1:
        return KIND_ALL_EQUAL
    if distinct == 2:
        return KIND_TWO_DISTINCT
    # canonical reduced fractions: distinct <=> dmet != 0, so all pairs hit +-1
    return KIND_TRIPLET


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise FormUndefined(f"non-exact division {num}/{den} in form formula")
    return q


def _two_distinct_split(t: FareyTriple) -> Tuple[Fraction, Fraction]:
    """(distinct fraction, repeated fraction) for a TwoDistinct triple."""
    fracs = [t.x, t.y, t.z]
    for f in fracs:
        if fracs.count(f) == 1:
            lone = f
        else:
            repeated = f
    return lone, repeated


def qx(t: FareyTriple) -> IntMatrix:
    """Symmetric form of the triple's 4-manifold.

    Three distinct fractions a/b, c/d, p/q give the 3x3 matrix
        [[bd/(ad-bc), -1, b(cq-dp)/(bc-ad)],
         [-1, 0, 0],
         [b(cq-dp)/(bc-ad), 0, (bp-aq)(cq-dp)/(bc-ad)]];
    with a repeated fraction the triple is first permuted so the repeat
    sits in slots 2-3, where the third row and column vanish and the
    2x2 block [[bd/(ad-bc), -1], [-1, 0]] remains.  Every division is
    exact because the divisors are Farey distances +-1.
    """
    kind = triple_kind(t)
    if kind == KIND_TRIPLET:
        a, b = t.x.num, t.x.den
        c, d = t.y.num, t.y.den
        p, q = t.z.num, t.z.den
        off = _exact(b * (c * q - d * p), b * c - a * d)
        return [
            [_exact(b * d, a * d - b * c), -1, off],
            [-1, 0, 0],
            [off, 0, _exact((b * p - a * q) * (c * q - d * p), b * c - a * d)],
        ]
    if kind == KIND_TWO_DISTINCT:
        lone, repeated = _two_distinct_split(t)
        a, b = lone.num, lone.den
        c, d = repeated.num, repeated.den
        return [[_exact(b * d, a * d - b * c), -1], [-1, 0]]
    raise FormUndefined(f"no intersection form for a {kind} triple")


def classify(t: FareyTriple) -> FareyClassification:
    """Closed 4-manifold of the triple per the Farey trichotomy."""
    kind = triple_kind(t)
    if kind == KIND_INVALID:
        return FareyClassification(kind, None, None, None)
    if kind == KIND_ALL_EQUAL:
        f = t.x  # fraction q/p spins L(p, q)
        return FareyClassification(kind, SpunLens(f.den, f.num), None, classify_unimodular([]))
    if kind == KIND_TWO_DISTINCT:
        form = classify_unimodular(qx(t))
        lone, repeated = _two_distinct_split(t)
        bundle = S2XS2 if (lone.den * repeated.den) % 2 == 0 else S2TWS2
        return FareyClassification(kind, bundle, ("S4", bundle), form)
    # an odd permutation of the triple reverses orientation and flips the
    # signature of qx; classification fixes the sorted order as canonical
    canon = FareyTriple(*sorted(t, key=lambda f: (f.den, f.num)))
    form = classify_unimodular(qx(canon))
    signature = sym_form_invariants(qx(canon)).signature
    assert abs(signature) == 1, "Farey triplet form must have signature +-1"
    if signature == 1:
        return FareyClassification(kind, CP2_PLUS, ("CP2", S2TWS2), form)
    return FareyClassification(kind, CP2_MINUS, ("CP2bar", S2TWS2), form)


def mediants(x: Fraction, y: Fraction) -> Tuple[Fraction, Fraction]:
    """The two fractions completing neighbors {x, y} to Farey triplets:
    (a+c)/(b+d) and (a-c)/(b-d), canonicalized."""
    if abs(dmet(x, y)) != 1:
        raise NotNeighbors(f"{x} and {y} have distance {dmet(x, y)}, need +-1")
    plus = Fraction.of(x.num + y.num, x.den + y.den)
    minus = Fraction.of(x.num - y.num, x.den - y.den)
    return plus, minus


def fraction_universe(max_den: int) -> List[Fraction]:
    """All reduced fractions with den <= max_den and |num| <= max_den,
    plus the formal 1/0; sorted by (den, num).

    The numerator window makes the set finite: shifting every numerator
    by its denominator preserves all Farey distances, so an unbounded
    window would repeat the same triples forever.
    """
    if max_den < 0:
        raise NotNeighbors("max_den must be >= 0")
    out = [Fraction(1, 0)]
    for den in range(1, max_den + 1):
        for num in range(-max_den, max_den + 1):
            f = Fraction.of(num, den)
            if f.den == den:  # already reduced with this denominator
                out.append(f)
    return out


def enumerate_triples(max_den: int) -> Iterator[Tuple[FareyTriple, FareyClassification]]:
    """All valid triples over fraction_universe(max_den), one ordered
    representative per multiset (sorted by (den, num)), with
    classifications."""
    universe = fraction_universe(max_den)
    n = len(universe)
    # adjacency in the Farey graph, self-loops included (distance 0)
    neighbors: List[set] = [set() for _ in range(n)]
    for i in range(n):
        neighbors[i].add(i)
        for j in range(i + 1, n):
            if abs(dmet(universe[i], universe[j])) <= 1:
                neighbors[i].add(j)
                neighbors[j].add(i)
    for i in range(n):
        for j in sorted(neighbors[i]):
            if j < i:
                continue
            both = neighbors[i] & neighbors[j]
            for k in sorted(both):
                if k < j:
                    continue
                t = FareyTriple(universe[i], universe[j], universe[k])
                yield t, classify(t)


def atlas_rows(max_den: int) -> Iterator[Dict[str, object]]:
    """CSV-ready rows for every valid triple: triple, kind, manifold,
    refined name, and the form invariants (the all-equal empty form
    reports rank 0, signature 0, parity Even, det 1)."""
    for t, cls in enumerate_triples(max_den):
        if cls.kind == KIND_ALL_EQUAL:
            rank, signature, parity, det = 0, 0, "Even", 1
        else:
            inv = sym_form_invariants(qx(t))
            rank, signature, parity, det = inv.rank, inv.signature, inv.parity, inv.det
        yield {
            "triple": str(t),
            "kind": cls.kind,
            "manifold": str(cls.manifold),
            "refined": f"{cls.refined[0]}#{cls.refined[1]}" if cls.refined else "",
            "rank": rank,
            "signature": signature,
            "parity": parity,
            "det": det,
        }


# ---------------------------------------------------------------------------
# homology model
# ---------------------------------------------------------------------------

def _vec(**coords: int) -> Tuple[int, ...]:
    # basis order (e1,f1,e2,f2,e3,f3) = (z1,y1,z2,y2,lam,mu)
    names = ("z1", "y1", "z2", "y2", "lam", "mu")
    return tuple(coords.get(name, 0) for name in names)


def farey_homology_model(t: FareyTriple) -> StarDiagram:
    """A genus-3 diagram whose homology realizes the triple.

    Each system holds two central classes and one slope class.  Writing
    the fractions as q_i/p_i over the basis (z1, y1, z2, y2, lam, mu):

        alpha = { z1,      y2 + lam,  q1*lam + p1*(mu + z2) }
        beta  = { z2,      y1,        q2*lam + p2*mu }
        gamma = { z1 + z2, y1 - y2,   q3*lam + p3*mu }

    Every system is pairwise non-pairing (a valid cut system); any two
    systems span a corank-<=1 sublattice with trivial torsion; and the
    full quotient is Z/gcd(p1,p2,p3) - i.e. Z/p for the all-equal triple
    q/p and 0 as soon as two fractions differ.
    """
    if triple_kind(t) == KIND_INVALID:
        raise NotNeighbors("homology model needs a valid triple")
    q1, p1 = t.x.num, t.x.den
    q2, p2 = t.y.num, t.y.den
    q3, p3 = t.z.num, t.z.den
    alpha = CurveSystem(
        "alpha",
        (_vec(z1=1), _vec(y2=1, lam=1), _vec(z2=p1, lam=q1, mu=p1)),
    )
    beta = CurveSystem(
        "beta",
        (_vec(z2=1), _vec(y1=1), _vec(lam=q2, mu=p2)),
    )
    gamma = CurveSystem(
        "gamma",
        (_vec(z1=1, z2=1), _vec(y1=1, y2=-1), _vec(lam=q3, mu=p3)),
    )
    return StarDiagram(genus=3, boundary=0, alpha=alpha, beta=beta, gamma=gamma)
