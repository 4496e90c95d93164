"""Surface diagrams: curve systems on a genus-g surface with b boundary
circles, their symplectic pairing, and a canonical JSON file format.

Homology classes live in Z^(2g) with ordered basis e1, f1, ..., eg, fg and
pairing e_i . f_i = +1 (all other basis pairings zero).  Curves are stored
as integer class vectors; geometric intersection counts are optional side
data keyed by curve pairs.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DiagramError, VectorLength

SYSTEM_NAMES = ("alpha", "beta", "gamma")
COMMON_KEYS = ("gamma_alpha", "alpha_beta", "beta_gamma")


# ---------------------------------------------------------------------------
# fractions (slopes)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fraction:
    """A reduced slope num/den with den >= 0.

    den = 0 is allowed only as the formal fraction 1/0.  Use Fraction.of()
    to build one from arbitrary integers; the constructor insists on
    canonical form.
    """
    num: int
    den: int

    def __post_init__(self):
        if not isinstance(self.num, int) or not isinstance(self.den, int):
            raise DiagramError("fraction parts must be integers")
        if self.den < 0:
            raise DiagramError(f"fraction {self.num}/{self.den}: den must be >= 0")
        if self.den == 0:
            if self.num != 1:
                raise DiagramError(f"fraction {self.num}/0: only 1/0 is allowed")
        elif math.gcd(self.num, self.den) != 1:
            raise DiagramError(f"fraction {self.num}/{self.den} is not reduced")

    @staticmethod
    def of(num: int, den: int) -> "Fraction":
        if num == 0 and den == 0:
            raise DiagramError("fraction 0/0 is undefined")
        if den == 0:
            return Fraction(1, 0)
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        return Fraction(num // g, den // g)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def parse_fraction(text: str) -> Fraction:
    """Parse "a/b" (b = 0 only for the formal 1/0)."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise DiagramError(f"fraction {text!r}: expected the form a/b")
    try:
        num, den = int(parts[0]), int(parts[1])
    except ValueError:
        raise DiagramError(f"fraction {text!r}: parts must be integers") from None
    if num == 0 and den == 0:
        raise DiagramError("fraction 0/0 is undefined")
    # unreduced or negative-den input is accepted and normalized
    return Fraction.of(num, den)


# ---------------------------------------------------------------------------
# lattice and curve systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymplecticLattice:
    """Z^(2g) with the standard pairing e_i . f_i = 1."""
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise DiagramError("genus must be >= 0")

    @property
    def dim(self) -> int:
        return 2 * self.genus

    def basis_names(self) -> List[str]:
        out = []
        for i in range(1, self.genus + 1):
            out += [f"e{i}", f"f{i}"]
        return out

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        if len(u) != self.dim or len(v) != self.dim:
            raise VectorLength(
                f"vectors must have length {self.dim}, got {len(u)} and {len(v)}"
            )
        total = 0
        for i in range(self.genus):
            total += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i]
        return total

    def pairing_matrix(self) -> List[List[int]]:
        n = self.dim
        j = [[0] * n for _ in range(n)]
        for i in range(self.genus):
            j[2 * i][2 * i + 1] = 1
            j[2 * i + 1][2 * i] = -1
        return j


@dataclass(frozen=True)
class CurveSystem:
    """A labelled list of curve class vectors."""
    label: str
    classes: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class Violation:
    kind: str  # "pairing" | "zero_class" | "common" | "geo"
    message: str
    advisory: bool = False


def validate_cut_system(system: CurveSystem, lattice: SymplecticLattice) -> List[Violation]:
    """Pairwise-pairing violations plus zero-class advisories.

    A valid cut system has all pairwise pairings zero; null classes are
    legal (poked diagrams produce them) and only reported as advisories.
    """
    out = []
    for idx, v in enumerate(system.classes):
        if len(v) != lattice.dim:
            raise VectorLength(
                f"{system.label}[{idx}]: length {len(v)} != {lattice.dim}"
            )
        if all(x == 0 for x in v):
            out.append(Violation("zero_class", f"{system.label}[{idx}] is null", advisory=True))
    for i in range(len(system.classes)):
        for j in range(i + 1, len(system.classes)):
            p = lattice.pair(system.classes[i], system.classes[j])
            if p != 0:
                out.append(
                    Violation(
                        "pairing",
                        f"{system.label}[{i}] . {system.label}[{j}] = {p}, expected 0",
                    )
                )
    return out


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------

GeoKey = Tuple[str, int, str, int]


def _norm_geo_key(sys_a: str, i: int, sys_b: str, j: int) -> GeoKey:
    order = {name: pos for pos, name in enumerate(SYSTEM_NAMES)}
    if (order[sys_a], i) <= (order[sys_b], j):
        return (sys_a, i, sys_b, j)
    return (sys_b, j, sys_a, i)


@dataclass(frozen=True)
class StarDiagram:
    """Three curve systems on one genus-g surface with b boundary circles.

    common maps a system pair ("alpha_beta", ...) to indices of curves that
    are literally shared: index i asserts the two systems' i-th classes are
    equal.  geo maps normalized curve-pair keys to nonnegative geometric
    intersection counts.
    """
    genus: int
    boundary: int
    alpha: CurveSystem
    beta: CurveSystem
    gamma: CurveSystem
    common: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    geo: Dict[GeoKey, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise DiagramError("genus and boundary must be >= 0")

    def system(self, name: str) -> CurveSystem:
        if name not in SYSTEM_NAMES:
            raise DiagramError(f"no system named {name!r}")
        return getattr(self, name)

    def lattice(self) -> SymplecticLattice:
        return SymplecticLattice(self.genus)

    def all_classes(self) -> List[Tuple[int, ...]]:
        return list(self.alpha.classes) + list(self.beta.classes) + list(self.gamma.classes)


def _pair_systems(key: str) -> Tuple[str, str]:
    a, b = key.split("_")
    return a, b


def validate_diagram(d: StarDiagram) -> List[Violation]:
    """Full diagram report: cut systems, common-curve claims, geo sanity."""
    lattice = d.lattice()
    out: List[Violation] = []
    for name in SYSTEM_NAMES:
        out.extend(validate_cut_system(d.system(name), lattice))
    for key, indices in d.common.items():
        sa, sb = _pair_systems(key)
        a, b = d.system(sa), d.system(sb)
        for idx in indices:
            if idx < 0 or idx >= min(len(a), len(b)):
                out.append(Violation("common", f"common.{key}: index {idx} out of range"))
            elif a.classes[idx] != b.classes[idx]:
                out.append(
                    Violation(
                        "common",
                        f"common.{key}: {sa}[{idx}] != {sb}[{idx}] though marked common",
                    )
                )
    for (sa, i, sb, j), count in d.geo.items():
        for name, idx in ((sa, i), (sb, j)):
            if idx < 0 or idx >= len(d.system(name)):
                out.append(Violation("geo", f"geo {name}.{idx}: index out of range"))
    return out


def diagram_ok(violations: Sequence[Violation]) -> bool:
    return all(v.advisory for v in violations)


# ---------------------------------------------------------------------------
# standard-pair check
# ---------------------------------------------------------------------------

def validate_standard_pair(
    a: CurveSystem,
    b: CurveSystem,
    geo: Dict[Tuple[str, int, str, int], int],
    common: Sequence[int] = (),
) -> Tuple[bool, List[str]]:
    """Check that two systems decompose into shared curves, one-point dual
    pairs, and mutually disjoint leftovers.

    geo is keyed by (label, index, label, index) in either order and must
    cover every curve pair of the two systems (a missing pair raises
    DiagramError); pairs (i, i) for i in common are the same curve and are
    exempt.  common lists indices whose classes coincide in both systems.
    Returns (ok, report lines): ok iff within-system counts are all zero,
    every cross count is 0 or 1, shared curves meet nothing, and the
    count-1 pairs form a partial matching.
    """
    if a.label == b.label:
        raise DiagramError("standard-pair check needs distinctly labelled systems")

    def lookup(la: str, i: int, lb: str, j: int) -> int:
        for key in ((la, i, lb, j), (lb, j, la, i)):
            if key in geo:
                return geo[key]
        raise DiagramError(f"missing geo data for {la}[{i}] and {lb}[{j}]")

    report: List[str] = []
    common = set(common)
    for idx in common:
        if idx < 0 or idx >= min(len(a), len(b)):
            raise DiagramError(f"common index {idx} out of range")
        if a.classes[idx] != b.classes[idx]:
            report.append(f"common index {idx}: classes differ")

    for sys in (a, b):
        for i in range(len(sys)):
            for j in range(i + 1, len(sys)):
                count = lookup(sys.label, i, sys.label, j)
                if count != 0:
                    report.append(
                        f"{sys.label}[{i}] meets {sys.label}[{j}] {count} times, expected 0"
                    )

    partner_a: Dict[int, int] = {}
    partner_b: Dict[int, int] = {}
    for i in range(len(a)):
        for j in range(len(b)):
            if i == j and i in common:
                continue  # one curve, not a pair
            count = lookup(a.label, i, b.label, j)
            if count == 0:
                continue
            if count < 0 or count > 1:
                report.append(
                    f"{a.label}[{i}] meets {b.label}[{j}] {count} times, expected 0 or 1"
                )
            elif i in common or j in common:
                report.append(f"shared curve in a crossing pair ({i},{j})")
            elif i in partner_a or j in partner_b:
                report.append(f"curve reused by two crossing pairs ({i},{j})")
            else:
                partner_a[i] = j
                partner_b[j] = i
    return (not report, report)


# ---------------------------------------------------------------------------
# parameter tuples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BridgeData:
    """Bridge position data (b; c1,c2,c3): b trivial arcs per handlebody,
    c_i trivial disks per sector."""
    b: int
    c: Tuple[int, int, int]

    def __post_init__(self):
        if len(self.c) != 3 or any(ci < 0 for ci in self.c):
            raise DiagramError("bridge data needs three counts >= 0")
        if max(self.c) < 1 or self.b < max(self.c):
            raise DiagramError("bridge data requires b >= max(c_i) >= 1")


@dataclass(frozen=True)
class TrisectionParams:
    """The tuple (g; k1,k2,k3; b), optionally carrying bridge data.

    k is None when an operation (boundary-circle pasting without curve
    counts) determines the genus but not the sector handlebody genera.
    """
    genus: int
    k: Optional[Tuple[int, int, int]]
    boundary: int = 0
    bridge: Optional[BridgeData] = None

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise DiagramError("genus and boundary must be >= 0")
        if self.k is not None:
            if len(self.k) != 3:
                raise DiagramError("k must be a triple")
            for ki in self.k:
                if ki < 0:
                    raise DiagramError(f"k = {self.k}: sector genera must be >= 0")
                if self.boundary == 0 and ki > self.genus:
                    raise DiagramError(
                        f"k = {self.k}: closed parameters need k_i <= g = {self.genus}"
                    )

    @property
    def closed(self) -> bool:
        return self.boundary == 0

    def with_bridge(self, b: int, c: Tuple[int, int, int]) -> "TrisectionParams":
        return TrisectionParams(self.genus, self.k, self.boundary, BridgeData(b, tuple(c)))


def parse_params(text: str) -> TrisectionParams:
    """Parse the literal "g;k1,k2,k3" or "g;k1,k2,k3;b".

    Whitespace and one pair of wrapping parentheses are tolerated, so the
    display form "(51; 13,13,23)" parses too."""
    cleaned = text.strip()
    if cleaned.startswith("(") and cleaned.endswith(")"):
        cleaned = cleaned[1:-1]
    cleaned = cleaned.replace(" ", "")
    parts = cleaned.split(";")
    if len(parts) not in (2, 3):
        raise DiagramError(f'params {text!r}: expected "g;k1,k2,k3[;b]"')
    try:
        genus = int(parts[0])
        ks = tuple(int(x) for x in parts[1].split(","))
        boundary = int(parts[2]) if len(parts) == 3 else 0
    except ValueError:
        raise DiagramError(f"params {text!r}: parts must be integers") from None
    if len(ks) != 3:
        raise DiagramError(f"params {text!r}: need exactly three k values")
    return TrisectionParams(genus, ks, boundary)


def format_params(p: TrisectionParams) -> str:
    if p.k is None:
        raise DiagramError("cannot format parameters with undetermined k")
    body = f"{p.genus};{p.k[0]},{p.k[1]},{p.k[2]}"
    return body if p.boundary == 0 else f"{body};{p.boundary}"


def genus1_pair_kind(x: Fraction, y: Fraction) -> str:
    """Kind of the genus-one diagram with slopes x, y: "S3", "S1xS2", or
    "Invalid" (pair distance outside {-1, 0, 1})."""
    d = x.num * y.den - x.den * y.num
    if d == 0:
        return "S1xS2"
    if abs(d) == 1:
        return "S3"
    return "Invalid"


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

_TOP_KEYS = ("basis", "genus", "boundary", "alpha", "beta", "gamma", "common", "geo")


def _expected_basis(genus: int) -> str:
    return " ".join(SymplecticLattice(genus).basis_names())


def _parse_system(name: str, raw, genus: int) -> CurveSystem:
    if not isinstance(raw, list):
        raise DiagramError(f"{name}: expected a list of class vectors")
    classes = []
    for i, vec in enumerate(raw):
        if not isinstance(vec, list):
            raise DiagramError(f"{name}[{i}]: expected a list of integers")
        if len(vec) != 2 * genus:
            raise VectorLength(f"{name}[{i}]: length {len(vec)} != {2 * genus}")
        for j, x in enumerate(vec):
            if isinstance(x, bool) or not isinstance(x, int):
                raise DiagramError(f"{name}[{i}][{j}]: not an integer: {x!r}")
        classes.append(tuple(vec))
    return CurveSystem(name, tuple(classes))


def _parse_geo_key(key: str) -> GeoKey:
    try:
        left, right = key.split(":")
        sys_a, ia = left.split(".")
        sys_b, ib = right.split(".")
        i, j = int(ia), int(ib)
    except ValueError:
        raise DiagramError(
            f'geo key {key!r}: expected "system.index:system.index"'
        ) from None
    for s in (sys_a, sys_b):
        if s not in SYSTEM_NAMES:
            raise DiagramError(f"geo key {key!r}: unknown system {s!r}")
    if (sys_a, i) == (sys_b, j):
        raise DiagramError(f"geo key {key!r}: a curve cannot pair with itself")
    return _norm_geo_key(sys_a, i, sys_b, j)


def parse_diagram(text: str) -> StarDiagram:
    """Parse the JSON diagram format; reject anything off-contract.

    Errors carry the offending field path (or line/column for malformed
    JSON).
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(raw, dict):
        raise DiagramError("top level: expected an object")
    for key in raw:
        if key not in _TOP_KEYS:
            raise DiagramError(f"unknown field {key!r}")
    for key in ("genus", "alpha", "beta", "gamma"):
        if key not in raw:
            raise DiagramError(f"missing field {key!r}")
    genus = raw["genus"]
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise DiagramError(f"genus: expected a nonnegative integer, got {genus!r}")
    boundary = raw.get("boundary", 0)
    if isinstance(boundary, bool) or not isinstance(boundary, int) or boundary < 0:
        raise DiagramError(f"boundary: expected a nonnegative integer, got {boundary!r}")
    if "basis" in raw:
        expected = _expected_basis(genus)
        if raw["basis"] != expected:
            raise DiagramError(f'basis: expected "{expected}", got {raw["basis"]!r}')
    systems = {name: _parse_system(name, raw[name], genus) for name in SYSTEM_NAMES}

    common: Dict[str, Tuple[int, ...]] = {}
    if "common" in raw:
        if not isinstance(raw["common"], dict):
            raise DiagramError("common: expected an object")
        for key, indices in raw["common"].items():
            if key not in COMMON_KEYS:
                raise DiagramError(f"common: unknown pair {key!r}")
            if not isinstance(indices, list) or not all(
                isinstance(i, int) and not isinstance(i, bool) for i in indices
            ):
                raise DiagramError(f"common.{key}: expected a list of integers")
            if len(set(indices)) != len(indices):
                raise DiagramError(f"common.{key}: duplicate index")
            sa, sb = _pair_systems(key)
            bound = min(len(systems[sa]), len(systems[sb]))
            for idx in indices:
                if idx < 0 or idx >= bound:
                    raise DiagramError(f"common.{key}: index {idx} out of range")
                if systems[sa].classes[idx] != systems[sb].classes[idx]:
                    raise DiagramError(
                        f"common.{key}: {sa}[{idx}] and {sb}[{idx}] differ"
                    )
            common[key] = tuple(sorted(indices))

    geo: Dict[GeoKey, int] = {}
    if "geo" in raw:
        if not isinstance(raw["geo"], dict):
            raise DiagramError("geo: expected an object")
        for key, count in raw["geo"].items():
            norm = _parse_geo_key(key)
            if isinstance(count, bool) or not isinstance(count, int) or count < 0:
                raise DiagramError(f"geo[{key!r}]: expected a nonnegative integer")
            if norm in geo:
                raise DiagramError(f"geo[{key!r}]: duplicate pair after normalization")
            sa, i, sb, j = norm
            for name, idx in ((sa, i), (sb, j)):
                if idx < 0 or idx >= len(systems[name]):
                    raise DiagramError(f"geo[{key!r}]: {name}.{idx} out of range")
            geo[norm] = count

    return StarDiagram(
        genus=genus,
        boundary=boundary,
        alpha=systems["alpha"],
        beta=systems["beta"],
        gamma=systems["gamma"],
        common=common,
        geo=geo,
    )


def serialize_diagram(d: StarDiagram) -> str:
    """Canonical serialization: fixed key order, sorted common/geo entries.

    parse . serialize is the identity on diagrams, and serialize . parse is
    the identity on canonical files.
    """
    obj: Dict[str, object] = {
        "basis": _expected_basis(d.genus),
        "genus": d.genus,
        "boundary": d.boundary,
        "alpha": [list(v) for v in d.alpha.classes],
        "beta": [list(v) for v in d.beta.classes],
        "gamma": [list(v) for v in d.gamma.classes],
    }
    if d.common:
        obj["common"] = {
            key: sorted(d.common[key]) for key in COMMON_KEYS if key in d.common
        }
    if d.geo:
        entries = {}
        for (sa, i, sb, j), count in sorted(
            d.geo.items(), key=lambda kv: (SYSTEM_NAMES.index(kv[0][0]), kv[0][1], SYSTEM_NAMES.index(kv[0][2]), kv[0][3])
        ):
            entries[f"{sa}.{i}:{sb}.{j}"] = count
        obj["geo"] = entries
    return json.dumps(obj, indent=1)
