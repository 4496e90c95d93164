"""Exact integer linear algebra: Smith form, symmetric-form invariants,
and factorization in SL3(Z).

Matrices are plain lists of lists of Python ints (row major), so every
computation is arbitrary-precision exact.  Nothing here rounds.

The SL3 word alphabet consists of the three quarter-turn matrices

    s12 = [[0,-1,0],[1,0,0],[0,0,1]]
    s23 = [[1,0,0],[0,0,-1],[0,1,0]]
    s31 = [[0,0,1],[0,1,0],[-1,0,0]]

their inverses, and the shears E(k) = [[1,k,0],[0,1,0],[0,0,1]].  These
generate SL3(Z); `sl3_factor` writes any determinant-1 integer matrix as a
word in them by Euclidean row reduction.  Word length is bounded by
16 + 14*c where c is the number of Euclidean combine steps the reduction
performs (each combine emits at most one conjugated shear of <= 13 letters
plus bookkeeping); tests assert a generous closed-form cap.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import FormUndefined, NotSL3, NotUnimodular

IntMatrix = List[List[int]]


# ---------------------------------------------------------------------------
# basic matrix helpers
# ---------------------------------------------------------------------------

def check_int_matrix(m: Sequence[Sequence[int]], name: str = "matrix") -> None:
    """Validate a rectangular matrix of Python ints (bools rejected)."""
    if not isinstance(m, (list, tuple)):
        raise ValueError(f"{name}: expected a list of rows")
    width = None
    for i, row in enumerate(m):
        if not isinstance(row, (list, tuple)):
            raise ValueError(f"{name}[{i}]: expected a row (list of ints)")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"{name}[{i}]: ragged row (len {len(row)} != {width})")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"{name}[{i}][{j}]: not an integer: {x!r}")


def dims(m: Sequence[Sequence[int]]) -> Tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    out = [[0] * cb for _ in range(ra)]
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(cb):
                    orow[j] += x * brow[j]
    return out


def mat_copy(m: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(row) for row in m]


def transpose(m: Sequence[Sequence[int]]) -> IntMatrix:
    r, c = dims(m)
    return [[m[i][j] for i in range(r)] for j in range(c)]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n, c = dims(m)
    if n != c:
        raise ValueError(f"determinant of non-square {n}x{c} matrix")
    if n == 0:
        return 1
    a = mat_copy(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(m: Sequence[Sequence[int]]) -> bool:
    r, c = dims(m)
    return r == c and determinant(m) in (1, -1)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, S, V) with U*m*V = S in Smith normal form.

    U and V are unimodular; S is diagonal with nonnegative entries
    satisfying S[i][i] | S[i+1][i+1].
    """
    check_int_matrix(m)
    r, c = dims(m)
    s = mat_copy(m)
    u = identity(r)
    v = identity(c)

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def row_add(i, j, k):
        # row_i += k * row_j
        s[i] = [a + k * b for a, b in zip(s[i], s[j])]
        u[i] = [a + k * b for a, b in zip(u[i], u[j])]

    def row_neg(i):
        s[i] = [-a for a in s[i]]
        u[i] = [-a for a in u[i]]

    def col_swap(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def col_add(i, j, k):
        # col_i += k * col_j
        for row in s:
            row[i] += k * row[j]
        for row in v:
            row[i] += k * row[j]

    def col_neg(i):
        for row in s:
            row[i] = -row[i]
        for row in v:
            row[i] = -row[i]

    n = min(r, c)
    for t in range(n):
        while True:
            # locate a pivot: smallest nonzero magnitude in the block
            pi = pj = -1
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    x = abs(s[i][j])
                    if x and (best is None or x < best):
                        best, pi, pj = x, i, j
            if best is None:
                break
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            # clear column t, restarting if a smaller remainder shows up
            dirty = False
            for i in range(t + 1, r):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    row_add(i, t, -q)
                    if s[i][t]:
                        dirty = True
            for j in range(t + 1, c):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    col_add(j, t, -q)
                    if s[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot divides the whole remaining block?
            p = s[t][t]
            culprit = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if s[i][j] % p:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_add(t, culprit, 1)
        if t < r and t < c and s[t][t] < 0:
            row_neg(t)
    # sign fix for any trailing negative (cannot occur, but keep S canonical)
    for t in range(n):
        if s[t][t] < 0:
            row_neg(t)
    return u, s, v


@dataclass(frozen=True)
class CokernelInvariants:
    """Invariants of Z^rows / column-span(M)."""
    free_rank: int
    torsion: Tuple[int, ...]


def cokernel_invariants(m: Sequence[Sequence[int]]) -> CokernelInvariants:
    """Free rank and torsion factors (>1) of Z^rows / col-span(m)."""
    check_int_matrix(m)
    r, c = dims(m)
    if r == 0:
        return CokernelInvariants(0, ())
    if c == 0:
        return CokernelInvariants(r, ())
    _, s, _ = smith_normal_form(m)
    diag = [s[i][i] for i in range(min(r, c))]
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    return CokernelInvariants(r - rank, torsion)


# ---------------------------------------------------------------------------
# symmetric bilinear forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FormInvariants:
    rank: int
    signature: int
    parity: str  # "Even" or "Odd"
    det: int


def sym_form_invariants(q: Sequence[Sequence[int]]) -> FormInvariants:
    """Exact rank/signature/parity/determinant of a symmetric integer form.

    Signature comes from congruence diagonalization over the rationals with
    symmetric pivoting; a zero diagonal with nonzero off-diagonal entry is
    handled by the x -> x + y basis move.  Parity is Even iff every diagonal
    entry of q is even (equivalently q(x,x) is even for all x).
    """
    check_int_matrix(q, "form")
    n, c = dims(q)
    if n != c:
        raise FormUndefined(f"form must be square, got {n}x{c}")
    for i in range(n):
        for j in range(i + 1, n):
            if q[i][j] != q[j][i]:
                raise FormUndefined(f"form not symmetric at ({i},{j})")

    det = determinant(q)
    parity = "Even" if all(q[i][i] % 2 == 0 for i in range(n)) else "Odd"

    a = [[Fraction(x) for x in row] for row in q]

    def sym_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    def sym_add(i, j, f):
        # basis move x_i -> x_i + f * x_j : row then column
        a[i] = [x + f * y for x, y in zip(a[i], a[j])]
        for row in a:
            row[i] += f * row[j]

    pos = neg = 0
    for t in range(n):
        if a[t][t] == 0:
            # look for a later nonzero diagonal entry first
            piv = next((i for i in range(t + 1, n) if a[i][i] != 0), None)
            if piv is not None:
                sym_swap(t, piv)
            else:
                # all remaining diagonal zero: find any off-diagonal entry
                hit = None
                for i in range(t, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            hit = (i, j)
                            break
                    if hit:
                        break
                if hit is None:
                    break  # remaining block is zero
                i, j = hit
                sym_add(i, j, Fraction(1))  # makes a[i][i] = 2*a[i][j] != 0
                if i != t:
                    sym_swap(t, i)
        d = a[t][t]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            if a[i][t] != 0:
                sym_add(i, t, -a[i][t] / d)
    return FormInvariants(rank=pos + neg, signature=pos - neg, parity=parity, det=det)


@dataclass(frozen=True)
class FormClass:
    """Classification of a unimodular symmetric form.

    kind is one of "zero", "odd_indefinite" (params (p, q)),
    "even_indefinite" (params (hyperbolic_count,)), "positive_diagonal" /
    "negative_diagonal" (params (n,)), or "unclassified".
    """
    kind: str
    params: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.params:
            return f"{self.kind}{self.params}"
        return self.kind


def classify_unimodular(q: Sequence[Sequence[int]]) -> FormClass:
    """Classify a unimodular symmetric form up to integral equivalence.

    Indefinite forms are determined by (rank, signature, parity); definite
    forms are named only up to rank 3 (diagonalizable range), everything
    else is reported "unclassified".  Raises NotUnimodular when |det| != 1.
    """
    inv = sym_form_invariants(q)
    if abs(inv.det) != 1:
        raise NotUnimodular(f"form determinant is {inv.det}, need +-1")
    if inv.rank == 0:
        return FormClass("zero")
    p = (inv.rank + inv.signature) // 2
    m = (inv.rank - inv.signature) // 2
    if inv.parity == "Odd":
        if m == 0:
            return FormClass("positive_diagonal", (p,)) if p <= 3 else FormClass("unclassified")
        if p == 0:
            return FormClass("negative_diagonal", (m,)) if m <= 3 else FormClass("unclassified")
        return FormClass("odd_indefinite", (p, m))
    if p == m:
        return FormClass("even_indefinite", (p,))
    return FormClass("unclassified")


# ---------------------------------------------------------------------------
# SL3(Z) words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    """One letter of an SL3 word: kind in {s12, s23, s31, s12i, s23i, s31i, e};
    k is the shear amount and only meaningful for kind "e"."""
    kind: str
    k: int = 0

    def inverse(self) -> "Gen":
        if self.kind == "e":
            return Gen("e", -self.k)
        if self.kind.endswith("i"):
            return Gen(self.kind[:-1])
        return Gen(self.kind + "i")


SIGMA_12: IntMatrix = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
SIGMA_23: IntMatrix = [[1, 0, 0], [0, 0, -1], [0, 1, 0]]
SIGMA_31: IntMatrix = [[0, 0, 1], [0, 1, 0], [-1, 0, 0]]


def shear(k: int) -> IntMatrix:
    return [[1, k, 0], [0, 1, 0], [0, 0, 1]]


_GEN_FIXED = {
    "s12": SIGMA_12,
    "s23": SIGMA_23,
    "s31": SIGMA_31,
    "s12i": transpose(SIGMA_12),
    "s23i": transpose(SIGMA_23),
    "s31i": transpose(SIGMA_31),
}


def gen_matrix(g: Gen) -> IntMatrix:
    if g.kind == "e":
        return shear(g.k)
    try:
        return mat_copy(_GEN_FIXED[g.kind])
    except KeyError:
        raise ValueError(f"unknown generator kind {g.kind!r}") from None


@dataclass(frozen=True)
class SL3Word:
    factors: Tuple[Gen, ...]

    def product(self) -> IntMatrix:
        out = identity(3)
        for g in self.factors:
            out = mat_mul(out, gen_matrix(g))
        return out

    def __len__(self) -> int:
        return len(self.factors)


def _conjugator_table():
    """For each ordered pair (i, j), i != j, a shortest word w in the sigma
    letters whose matrix P satisfies P e1 = +-e_i and P e2 = +-e_j, plus the
    sign product.  Then P E(s*k) P^-1 = I + k e_ij."""
    target = {}
    seen = {}
    frontier = [((), identity(3))]
    seen[tuple(map(tuple, identity(3)))] = ()
    letters = [Gen(kind) for kind in ("s12", "s23", "s31", "s12i", "s23i", "s31i")]
    while frontier and len(target) < 6:
        nxt = []
        for word, mat in frontier:
            # column images of e1 and e2
            c1 = [mat[r][0] for r in range(3)]
            c2 = [mat[r][1] for r in range(3)]

            def axis(v):
                for idx in range(3):
                    if abs(v[idx]) == 1 and all(v[r] == 0 for r in range(3) if r != idx):
                        return idx, v[idx]
                return None

            a1, a2 = axis(c1), axis(c2)
            if a1 and a2:
                key = (a1[0] + 1, a2[0] + 1)
                if key[0] != key[1] and key not in target:
                    target[key] = (word, a1[1] * a2[1])
            for g in letters:
                m2 = mat_mul(mat, gen_matrix(g))
                k = tuple(map(tuple, m2))
                if k not in seen:
                    seen[k] = None
                    nxt.append((word + (g,), m2))
        frontier = nxt
    assert len(target) == 6
    return target


_CONJ = _conjugator_table()


def _row_add_word(i: int, j: int, k: int) -> Tuple[Gen, ...]:
    """Word whose product is I + k*e_ij (adds k*row_j to row_i on the left)."""
    if k == 0:
        return ()
    word, sign = _CONJ[(i + 1, j + 1)]
    inv = tuple(g.inverse() for g in reversed(word))
    return word + (Gen("e", sign * k),) + inv


def sl3_factor(m: Sequence[Sequence[int]]) -> SL3Word:
    """Factor a determinant-1 integer 3x3 matrix into the word alphabet.

    Raises NotSL3 for anything that is not a 3x3 integer matrix of
    determinant exactly 1.  The returned word multiplies back to m.
    """
    try:
        check_int_matrix(m)
    except ValueError as e:
        raise NotSL3(str(e)) from None
    if dims(m) != (3, 3):
        raise NotSL3(f"need a 3x3 matrix, got {dims(m)[0]}x{dims(m)[1]}")
    if determinant(m) != 1:
        raise NotSL3(f"determinant is {determinant(m)}, need 1")

    a = mat_copy(m)
    hist: List[Gen] = []

    def apply(gen: Gen):
        nonlocal a
        a = mat_mul(gen_matrix(gen), a)
        hist.append(gen)

    def row_add(i, j, k):
        # apply() left-multiplies, so feed the word back to front
        for g in reversed(_row_add_word(i, j, k)):
            apply(g)

    def reduce_column(col: int, rows: List[int]):
        # Euclidean reduction of a[r][col] for r in rows down to one entry
        while True:
            nz = [r for r in rows if a[r][col] != 0]
            if len(nz) <= 1:
                return nz[0] if nz else None
            piv = min(nz, key=lambda r: abs(a[r][col]))
            for r in nz:
                if r != piv:
                    row_add(r, piv, -(a[r][col] // a[piv][col]))

    # column 0 over all three rows
    lone = reduce_column(0, [0, 1, 2])
    if lone is None:
        raise NotSL3("singular matrix")  # unreachable for det 1
    if lone != 0:
        row_add(0, lone, a[lone][0])  # a[0][0] becomes +1
        row_add(lone, 0, -a[lone][0])
    elif a[0][0] < 0:
        apply(Gen("s12"))
        apply(Gen("s12"))  # negates rows 0 and 1
    # column 1 over rows 1, 2
    lone = reduce_column(1, [1, 2])
    if lone == 2:
        row_add(1, 2, a[2][1])
        row_add(2, 1, -a[2][1])
    elif a[1][1] < 0:
        apply(Gen("s23"))
        apply(Gen("s23"))  # negates rows 1 and 2
    # a is now upper triangular with diagonal (1, 1, 1); clear the tail
    row_add(1, 2, -a[1][2])
    row_add(0, 2, -a[0][2])
    row_add(0, 1, -a[0][1])
    assert a == identity(3)

    word = SL3Word(tuple(g.inverse() for g in hist))
    assert word.product() == [list(r) for r in m]
    return word
