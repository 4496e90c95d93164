"""Parameter arithmetic for pasting, fiber sums, poking, destabilization,
curve complements, ribbon-graph shadows, and torus-surgery planning.

Surgery plans are ordered block sequences over the alphabet
{Complement, Tau0, Tau12, Tau23, Tau31, ShearGlue(f), TauEmpty} whose
composite is the left-to-right product of the blocks' matrices.  The
permutation blocks act by the plain coordinate transpositions; all signs
live in the shear blocks, since every rotation [[0,-1],[1,0]] is itself a
legal SL2 payload.  ShearGlue(f) fixes the third coordinate and acts by f
on the first two.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .diagram import CurveSystem, StarDiagram, TrisectionParams
from .errors import (
    CannotDestabilize,
    CellDecompositionMismatch,
    DiagramError,
    NotSL2,
)
from .zmatrix import Gen, IntMatrix, identity, mat_mul, sl3_factor, gen_matrix

# ---------------------------------------------------------------------------
# pasting and fiber sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedPage:
    """Glue along a fibered boundary with closed fiber of this genus."""
    page_genus: int

    def __post_init__(self):
        if self.page_genus < 0:
            raise DiagramError("page genus must be >= 0")


@dataclass(frozen=True)
class BoundaryCircles:
    """Glue the two trisection surfaces along all n boundary circles."""
    circles: int

    def __post_init__(self):
        if self.circles < 1:
            raise CellDecompositionMismatch("boundary-circle pasting needs n >= 1")


@dataclass(frozen=True)
class PastingInput:
    left: TrisectionParams
    right: TrisectionParams
    mode: object  # ClosedPage | BoundaryCircles
    # per-sector common-curve counts; only consulted by BoundaryCircles
    common: Optional[Tuple[int, int, int]] = None


def paste(inp: PastingInput) -> TrisectionParams:
    """Genus/sector arithmetic of gluing two trisected pieces along their
    boundaries.

    ClosedPage(p): both sides closed surfaces; G = g + g' + 2 and
    K_i = k_i + k_i' + 2p.  BoundaryCircles(n): both surfaces expose
    exactly n circles, all glued; G = g + g' + n - 1, and K is reported
    only when common-curve counts are supplied (it is diagram data, not
    parameter data).
    """
    left, right, mode = inp.left, inp.right, inp.mode
    if isinstance(mode, ClosedPage):
        if left.boundary != 0 or right.boundary != 0:
            raise CellDecompositionMismatch(
                "closed-page pasting needs closed trisection surfaces on both sides"
            )
        genus = left.genus + right.genus + 2
        k = None
        if left.k is not None and right.k is not None:
            k = tuple(
                left.k[i] + right.k[i] + 2 * mode.page_genus for i in range(3)
            )
        return TrisectionParams(genus, k, 0)
    if isinstance(mode, BoundaryCircles):
        n = mode.circles
        if left.boundary != n or right.boundary != n:
            raise CellDecompositionMismatch(
                f"boundary-circle pasting over n = {n} circles needs both "
                f"surfaces to expose n (got {left.boundary} and {right.boundary})"
            )
        genus = left.genus + right.genus + n - 1
        k = None
        if inp.common is not None and left.k is not None and right.k is not None:
            if len(inp.common) != 3 or any(c < 0 for c in inp.common):
                raise DiagramError("common-curve counts must be three ints >= 0")
            k = tuple(left.k[i] + right.k[i] + inp.common[i] for i in range(3))
        return TrisectionParams(genus, k, 0)
    raise DiagramError(f"unknown pasting mode {mode!r}")


def fiber_sum(left: TrisectionParams, right: TrisectionParams) -> TrisectionParams:
    """Sum along embedded surfaces in matching bridge position:
    G = g + g' + 2b - 1, K_i = k_i + k_i' + c_i."""
    for p in (left, right):
        if p.boundary != 0:
            raise CellDecompositionMismatch("fiber sum needs closed inputs")
        if p.bridge is None:
            raise CellDecompositionMismatch("fiber sum needs bridge data on both sides")
        if p.k is None:
            raise DiagramError("fiber sum needs sector genera k on both sides")
    if left.bridge != right.bridge:
        raise CellDecompositionMismatch(
            f"bridge data differs: {left.bridge} vs {right.bridge}"
        )
    b, c = left.bridge.b, left.bridge.c
    genus = left.genus + right.genus + 2 * b - 1
    k = tuple(left.k[i] + right.k[i] + c[i] for i in range(3))
    return TrisectionParams(genus, k, 0)


def destabilize(p: TrisectionParams, sector: int, times: int = 1) -> TrisectionParams:
    """Drop genus and one sector count by `times`."""
    if sector not in (1, 2, 3):
        raise DiagramError(f"sector must be 1, 2, or 3, got {sector}")
    if times < 0:
        raise DiagramError("times must be >= 0")
    if p.k is None:
        raise CannotDestabilize("parameters carry no sector genera k")
    if p.k[sector - 1] < times or p.genus < times:
        raise CannotDestabilize(
            f"cannot destabilize {times} times in sector {sector} of "
            f"(g={p.genus}, k={p.k})"
        )
    k = tuple(p.k[i] - times if i == sector - 1 else p.k[i] for i in range(3))
    return TrisectionParams(p.genus - times, k, p.boundary)


def poke(d: StarDiagram, counts: Tuple[int, int, int]) -> StarDiagram:
    """Puncture the surface away from all curves, once per requested count,
    and add the puncture boundaries (null classes) to the systems."""
    if len(counts) != 3 or any(c < 0 for c in counts):
        raise DiagramError("poke counts must be three ints >= 0")
    zero = tuple([0] * (2 * d.genus))
    systems = []
    for name, extra in zip(("alpha", "beta", "gamma"), counts):
        sys = d.system(name)
        systems.append(CurveSystem(name, sys.classes + (zero,) * extra))
    return StarDiagram(
        genus=d.genus,
        boundary=d.boundary + sum(counts),
        alpha=systems[0],
        beta=systems[1],
        gamma=systems[2],
        common=d.common,
        geo=d.geo,
    )


@dataclass(frozen=True)
class ComplementResult:
    """Bookkeeping for removing a neighborhood of a decomposed curve."""
    params: TrisectionParams          # k undetermined; boundary grew by punctures
    punctures: int                    # 3a junction punctures
    curves_added: Tuple[int, int, int]
    closure_genus: Optional[int]      # genus after gluing a genus-0 filling


def curve_complement(p: TrisectionParams, arcs: Tuple[int, int, int]) -> ComplementResult:
    """Remove a decomposed curve written as a arcs per sector.

    Each sector contributes a junction punctures; every system gains the a
    junction circles plus the a arc-neighborhood curves, except that a
    closed manifold with a = 1 makes one of them redundant per system.
    The closure genus is what a genus-0 filling glued along all 3a circles
    would produce.
    """
    if len(arcs) != 3 or any(a < 0 for a in arcs):
        raise CellDecompositionMismatch("arc counts must be three ints >= 0")
    if len(set(arcs)) != 1:
        raise CellDecompositionMismatch(
            f"arc counts {arcs} differ; each arc meets one arc of each neighbor"
        )
    a = arcs[0]
    if a == 0:
        return ComplementResult(p, 0, (0, 0, 0), None)
    drop = 1 if (p.boundary == 0 and a == 1) else 0
    per_system = 2 * a - drop
    out = TrisectionParams(p.genus, None, p.boundary + 3 * a)
    return ComplementResult(out, 3 * a, (per_system,) * 3, p.genus + 3 * a - 1)


# ---------------------------------------------------------------------------
# ribbon graphs (shadow neighborhoods)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RibbonGraph:
    """Graph with a rotation system: rotations[v] lists the darts at vertex
    v in cyclic order; each edge is an unordered pair of darts."""
    rotations: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for v, rot in enumerate(self.rotations):
            for dart in rot:
                if dart in seen:
                    raise DiagramError(f"dart {dart} appears at two rotation slots")
                seen.add(dart)
        used = set()
        for a, b in self.edges:
            if a == b:
                raise DiagramError(f"edge ({a},{b}) must join two distinct darts")
            for dart in (a, b):
                if dart not in seen:
                    raise DiagramError(f"edge dart {dart} missing from the rotation system")
                if dart in used:
                    raise DiagramError(f"dart {dart} used by two edges")
                used.add(dart)
        dangling = seen - used
        if dangling:
            raise DiagramError(f"dangling darts with no edge: {sorted(dangling)}")

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _partner(self) -> Dict[int, int]:
        out = {}
        for a, b in self.edges:
            out[a] = b
            out[b] = a
        return out

    def _successor(self) -> Dict[int, int]:
        out = {}
        for rot in self.rotations:
            for i, dart in enumerate(rot):
                out[dart] = rot[(i + 1) % len(rot)]
        return out

    def _vertex_of(self) -> Dict[int, int]:
        out = {}
        for v, rot in enumerate(self.rotations):
            for dart in rot:
                out[dart] = v
        return out

    def faces(self) -> List[Tuple[int, ...]]:
        """Orbits of dart -> successor(partner(dart)): one per boundary
        component of the thickened graph."""
        partner = self._partner()
        succ = self._successor()
        remaining = set(partner)
        out = []
        while remaining:
            start = min(remaining)
            cycle = []
            d = start
            while True:
                cycle.append(d)
                remaining.discard(d)
                d = succ[partner[d]]
                if d == start:
                    break
            out.append(tuple(cycle))
        return out

    def components(self) -> List[Tuple[int, ...]]:
        """Vertex sets of connected components (isolated vertices count)."""
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        vertex_of = self._vertex_of()
        for a, b in self.edges:
            ra, rb = find(vertex_of[a]), find(vertex_of[b])
            if ra != rb:
                parent[ra] = rb
        groups: Dict[int, List[int]] = {}
        for v in range(self.vertex_count):
            groups.setdefault(find(v), []).append(v)
        return [tuple(vs) for vs in groups.values()]

    def genus_of_closure(self) -> int:
        """Genus of the closed surface obtained by capping the thickened
        graph's boundary circles; defined for connected graphs."""
        if len(self.components()) != 1:
            raise DiagramError("genus of closure defined for connected graphs")
        chi = self.vertex_count - self.edge_count + len(self.faces())
        if chi % 2 != 0 or chi > 2:
            raise DiagramError(f"inconsistent face trace: chi = {chi}")
        return (2 - chi) // 2


def shadow_boundary_curves(rg: RibbonGraph) -> Tuple[int, int]:
    """(boundary_parallel, essential) counts of the thickened graph's
    boundary circles.

    A component thickens to a disk exactly when it is a tree; its single
    boundary circle is then parallel to the puncture it came from.  Every
    other traced face encircles essential graph structure.
    """
    vertex_of = rg._vertex_of()
    edge_count: Dict[int, int] = {}
    face_count: Dict[int, int] = {}
    comp_of: Dict[int, int] = {}
    comps = rg.components()
    for idx, vs in enumerate(comps):
        for v in vs:
            comp_of[v] = idx
    for a, _b in rg.edges:
        c = comp_of[vertex_of[a]]
        edge_count[c] = edge_count.get(c, 0) + 1
    for face in rg.faces():
        c = comp_of[vertex_of[face[0]]]
        face_count[c] = face_count.get(c, 0) + 1
    boundary_parallel = 0
    essential = 0
    for idx, vs in enumerate(comps):
        e = edge_count.get(idx, 0)
        f = face_count.get(idx, 0)
        if e == 0:
            # bare vertex: a disk with one boundary circle, nothing traced
            boundary_parallel += 1
        elif e == len(vs) - 1:
            boundary_parallel += f  # tree: f is 1
        else:
            essential += f
    return boundary_parallel, essential


# ---------------------------------------------------------------------------
# surgery plans
# ---------------------------------------------------------------------------

BLOCK_KINDS = ("complement", "tau0", "tau12", "tau23", "tau31", "shear", "tauempty")

_P12: IntMatrix = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
_P23: IntMatrix = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
_P31: IntMatrix = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]

_ROT = ((0, -1), (1, 0))
_ROT_INV = ((0, 1), (-1, 0))


@dataclass(frozen=True)
class PlanBlock:
    kind: str
    shear: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None

    def __post_init__(self):
        if self.kind not in BLOCK_KINDS:
            raise DiagramError(f"unknown block kind {self.kind!r}")
        if (self.kind == "shear") != (self.shear is not None):
            raise DiagramError("exactly the shear blocks carry a 2x2 matrix")


COMPLEMENT = PlanBlock("complement")
TAU0 = PlanBlock("tau0")
TAU12 = PlanBlock("tau12")
TAU23 = PlanBlock("tau23")
TAU31 = PlanBlock("tau31")
TAUEMPTY = PlanBlock("tauempty")


def shear_block(f: Sequence[Sequence[int]]) -> PlanBlock:
    rows = tuple(tuple(x for x in row) for row in f)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise NotSL2("shear payload must be 2x2")
    for row in rows:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise NotSL2(f"shear payload entries must be integers, got {x!r}")
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if det != 1:
        raise NotSL2(f"shear payload must have determinant 1, got {det}")
    return PlanBlock("shear", rows)


def block_matrix(b: PlanBlock) -> IntMatrix:
    if b.kind in ("complement", "tau0", "tauempty"):
        return identity(3)
    if b.kind == "tau12":
        return [row[:] for row in _P12]
    if b.kind == "tau23":
        return [row[:] for row in _P23]
    if b.kind == "tau31":
        return [row[:] for row in _P31]
    f = b.shear
    return [[f[0][0], f[0][1], 0], [f[1][0], f[1][1], 0], [0, 0, 1]]


@dataclass(frozen=True)
class SurgeryPlan:
    blocks: Tuple[PlanBlock, ...]
    composite: IntMatrix

    def __post_init__(self):
        # composite is derived data; make_plan is the only sanctioned builder
        prod = _blocks_product(self.blocks)
        if prod != self.composite:
            raise DiagramError("plan composite does not equal the block product")


def _blocks_product(blocks: Iterable[PlanBlock]) -> IntMatrix:
    acc = identity(3)
    for b in blocks:
        acc = mat_mul(acc, block_matrix(b))
    return acc


def make_plan(blocks: Sequence[PlanBlock]) -> SurgeryPlan:
    blocks = tuple(blocks)
    return SurgeryPlan(blocks, _blocks_product(blocks))


def _gen_blocks(g: Gen) -> List[PlanBlock]:
    """Blocks realizing one SL3 generator.

    The plane rotations embed directly as shear payloads in coordinates
    (1,2); the other two planes are reached by conjugating with the
    transposition that swaps the fixed coordinate into slot 3.
    """
    if g.kind == "e":
        return [shear_block(((1, g.k), (0, 1)))]
    table = {
        "s12": [shear_block(_ROT)],
        "s12i": [shear_block(_ROT_INV)],
        "s23": [TAU31, shear_block(_ROT_INV), TAU31],
        "s23i": [TAU31, shear_block(_ROT), TAU31],
        "s31": [TAU23, shear_block(_ROT_INV), TAU23],
        "s31i": [TAU23, shear_block(_ROT), TAU23],
    }
    blocks = table[g.kind]
    if _blocks_product(blocks) != gen_matrix(g):
        raise AssertionError(f"generator conversion broken for {g}")
    return blocks


def surgery_plan_general(m: IntMatrix) -> SurgeryPlan:
    """Factor a determinant-1 gluing matrix into a block plan whose
    composite is exactly m."""
    word = sl3_factor(m)  # raises NotSL3 on bad input
    blocks: List[PlanBlock] = [COMPLEMENT, TAU0]
    for g in word.factors:
        blocks.extend(_gen_blocks(g))
    blocks.append(TAUEMPTY)
    plan = make_plan(blocks)
    if plan.composite != [list(row) for row in m]:
        raise AssertionError("surgery plan composite mismatch")
    return plan


def _check_sl2(a: Sequence[Sequence[int]]) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    rows = tuple(tuple(x for x in row) for row in a)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise NotSL2("need a 2x2 matrix")
    for row in rows:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise NotSL2(f"entries must be integers, got {x!r}")
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if det != 1:
        raise NotSL2(f"determinant must be 1, got {det}")
    return rows


def log_transform_plan(a: Sequence[Sequence[int]]) -> SurgeryPlan:
    """Plan for the torus surgery glued by a 2x2 determinant-1 matrix A;
    composite = [[1,0,0],[0,a11,a12],[0,a21,a22]].

    The payload is A conjugated by the antidiagonal flip, wrapped in the
    coordinate swap 1<->3: with J = [[0,1],[1,0]], the identity
    P31 . (JAJ + 1) . P31 = 1 + A holds exactly.
    """
    rows = _check_sl2(a)
    jaj = ((rows[1][1], rows[1][0]), (rows[0][1], rows[0][0]))
    plan = make_plan([COMPLEMENT, TAU0, TAU31, shear_block(jaj), TAU31, TAUEMPTY])
    expected = [
        [1, 0, 0],
        [0, rows[0][0], rows[0][1]],
        [0, rows[1][0], rows[1][1]],
    ]
    if plan.composite != expected:
        raise AssertionError("log transform composite mismatch")
    return plan


def luttinger_plan(m: int, n: int) -> SurgeryPlan:
    """Plan for the (m, n) torus twist; composite = [[1,0,m],[0,1,n],[0,0,1]]."""
    plan = make_plan(
        [
            COMPLEMENT,
            TAU0,
            TAU23,
            shear_block(((1, m), (0, 1))),
            TAU31,
            shear_block(((1, n), (0, 1))),
            TAU31,
            TAU23,
            TAUEMPTY,
        ]
    )
    if plan.composite != [[1, 0, m], [0, 1, n], [0, 0, 1]]:
        raise AssertionError("twist composite mismatch")
    return plan


# ---------------------------------------------------------------------------
# plan serialization
# ---------------------------------------------------------------------------

_KIND_TO_TOKEN = {
    "complement": "COMPLEMENT",
    "tau0": "TAU0",
    "tau12": "TAU12",
    "tau23": "TAU23",
    "tau31": "TAU31",
    "tauempty": "TAUEMPTY",
}
_TOKEN_TO_KIND = {v: k for k, v in _KIND_TO_TOKEN.items()}


def serialize_plan(plan: SurgeryPlan) -> str:
    """One line per block, then a COMPOSITE line with nine integers."""
    lines = []
    for b in plan.blocks:
        if b.kind == "shear":
            (p, q), (r, s) = b.shear
            lines.append(f"SHEAR {p} {q} {r} {s}")
        else:
            lines.append(_KIND_TO_TOKEN[b.kind])
    flat = " ".join(str(x) for row in plan.composite for x in row)
    lines.append(f"COMPOSITE {flat}")
    return "\n".join(lines) + "\n"


def parse_plan(text: str) -> SurgeryPlan:
    blocks: List[PlanBlock] = []
    stated: Optional[IntMatrix] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if stated is not None:
            raise DiagramError(f"line {lineno}: content after COMPOSITE")
        tokens = line.split()
        word = tokens[0]
        if word == "SHEAR":
            if len(tokens) != 5:
                raise DiagramError(f"line {lineno}: SHEAR needs 4 integers")
            try:
                p, q, r, s = (int(t) for t in tokens[1:])
            except ValueError:
                raise DiagramError(f"line {lineno}: SHEAR needs integers") from None
            blocks.append(shear_block(((p, q), (r, s))))
        elif word == "COMPOSITE":
            if len(tokens) != 10:
                raise DiagramError(f"line {lineno}: COMPOSITE needs 9 integers")
            try:
                vals = [int(t) for t in tokens[1:]]
            except ValueError:
                raise DiagramError(f"line {lineno}: COMPOSITE needs integers") from None
            stated = [vals[0:3], vals[3:6], vals[6:9]]
        elif word in _TOKEN_TO_KIND:
            if len(tokens) != 1:
                raise DiagramError(f"line {lineno}: {word} takes no arguments")
            blocks.append(PlanBlock(_TOKEN_TO_KIND[word]))
        else:
            raise DiagramError(f"line {lineno}: unknown block {word!r}")
    if stated is None:
        raise DiagramError("plan has no COMPOSITE line")
    plan = make_plan(blocks)
    if plan.composite != stated:
        raise DiagramError(
            f"stated composite {stated} does not match block product {plan.composite}"
        )
    return plan
