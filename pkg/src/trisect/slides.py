"""Genus-one decomposed-curve rewriting: words over {mu, lambda} with twist
counters, five slide moves, and the two-stage normal-form reduction.

A curve in class m*mu + n*lambda is held as three arc words w1, w2, w3.
Phase one eliminates every mu from the words one at a time, trading each
for a twist of a1 around b3 (counter t3).  Phase two consumes the lambda
run, trading all but the last lambda for twists of a2 around b1 (counter
t1); the final lambda disappears into the closing isotopy, which is why
t1 ends at n - 1.

Internally letters are "M" and "L"; input accepts the Greek forms too,
and rendering emits them.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import IllegalMove, MalformedWord, NotApplicable

MU = "M"
LAM = "L"
_ALPHABET = frozenset((MU, LAM))

_INPUT_LETTERS = {"M": MU, "m": MU, "μ": MU, "L": LAM, "l": LAM, "λ": LAM}
_RENDER = {MU: "μ", LAM: "λ"}


def parse_word(text: str) -> str:
    out = []
    for ch in text:
        if ch in (" ", ","):
            continue
        if ch not in _INPUT_LETTERS:
            raise MalformedWord(f"letter {ch!r} is not mu or lambda")
        out.append(_INPUT_LETTERS[ch])
    return "".join(out)


def render_word(word: str) -> str:
    return "".join(_RENDER[ch] for ch in word)


@dataclass(frozen=True)
class SlideState:
    w1: str
    w2: str
    w3: str
    t3: int
    t1: int
    target: Tuple[int, int]  # (m, n) curve class

    def __post_init__(self):
        for w in (self.w1, self.w2, self.w3):
            if not _ALPHABET.issuperset(w):
                raise MalformedWord(f"word {w!r} contains letters outside the alphabet")

    def counts(self) -> Tuple[int, int]:
        """(mu letters, lambda letters) across all three words."""
        whole = self.w1 + self.w2 + self.w3
        return whole.count(MU), whole.count(LAM)


def initial_state(w3: str) -> SlideState:
    """Fresh reduction input: the whole curve word sits in w3."""
    word = parse_word(w3)
    return SlideState("", "", word, 0, 0, (word.count(MU), word.count(LAM)))


def mu_conserved(s: SlideState) -> bool:
    """Twists plus surviving mu letters always account for the full class."""
    return s.counts()[0] + s.t3 == s.target[0]


def lambda_conserved(s: SlideState) -> bool:
    """Phase-one bookkeeping: no lambda has been consumed yet."""
    return s.counts()[1] == s.target[1] and s.t1 == 0


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------

MOVE_KINDS = (
    "ExtendB1",
    "CommuteLambdaMu",
    "SlideA1OverAlpha",
    "ShrinkA2",
    "SlideA2OverBeta",
)

_ANCHORS = {
    "ExtendB1": "push the junction b1 backwards along a3, absorbing a prefix of w3 into w2",
    "CommuteLambdaMu": "slide a lambda crossing past the mu crossing just after it in w2",
    "SlideA1OverAlpha": "slide a1 across the alpha curve, trading the mu in w1 for a twist around b3",
    "ShrinkA2": "shrink a2 toward b1, returning its lambda run to the front of w3",
    "SlideA2OverBeta": "slide a2 across the beta curve, trading one lambda for a twist around b1; "
    "the last lambda is absorbed by the closing isotopy",
}


@dataclass(frozen=True)
class SlideMove:
    kind: str
    arg: Optional[int] = None

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise IllegalMove(f"unknown move kind {self.kind!r}")
        needs_arg = self.kind in ("ExtendB1", "CommuteLambdaMu")
        if needs_arg != (self.arg is not None):
            raise IllegalMove(f"move {self.kind} argument mismatch")

    @property
    def anchor(self) -> str:
        return _ANCHORS[self.kind]

    def __str__(self) -> str:
        return self.kind if self.arg is None else f"{self.kind}({self.arg})"


def _illegal(mv: SlideMove, why: str) -> IllegalMove:
    return IllegalMove(f"{mv}: {why} [{mv.anchor}]")


def apply_move(s: SlideState, mv: SlideMove) -> SlideState:
    """One slide move; raises IllegalMove when the state is outside its
    domain.  After the two w2-front moves, a leading mu of w2 hops to the
    empty w1 (an isotopy, not a move of its own)."""
    w1, w2, w3, t3, t1 = s.w1, s.w2, s.w3, s.t3, s.t1
    if mv.kind == "ExtendB1":
        count = mv.arg
        if count < 1 or count > len(w3):
            raise _illegal(mv, f"w3 = {w3!r} has no prefix of length {count}")
        w2, w3 = w2 + w3[:count], w3[count:]
    elif mv.kind == "CommuteLambdaMu":
        pos = mv.arg
        if pos < 0 or pos + 1 >= len(w2) or w2[pos] != LAM or w2[pos + 1] != MU:
            raise _illegal(mv, f"w2 = {w2!r} has no lambda-mu pair at {pos}")
        w2 = w2[:pos] + MU + LAM + w2[pos + 2:]
    elif mv.kind == "SlideA1OverAlpha":
        if w1 != MU:
            raise _illegal(mv, f"w1 = {w1!r}, need a lone mu")
        w1, t3 = "", t3 + 1
    elif mv.kind == "ShrinkA2":
        if w1 != "":
            raise _illegal(mv, "a1 still crosses something (w1 nonempty)")
        if MU in w2:
            raise _illegal(mv, f"w2 = {w2!r} is not a lambda run")
        w2, w3 = "", w2 + w3
    elif mv.kind == "SlideA2OverBeta":
        if w1 != "" or w3 != "":
            raise _illegal(mv, "w1 and w3 must be empty")
        if len(w2) < 1 or MU in w2:
            raise _illegal(mv, f"w2 = {w2!r} is not a nonempty lambda run")
        if len(w2) >= 2:
            w2, t1 = w2[1:], t1 + 1
        else:
            w2 = ""  # terminal lambda: absorbed, no twist
    if mv.kind in ("ExtendB1", "CommuteLambdaMu") and w1 == "" and w2.startswith(MU):
        w1, w2 = MU, w2[1:]
    return SlideState(w1, w2, w3, t3, t1, s.target)


# ---------------------------------------------------------------------------
# reductions
# ---------------------------------------------------------------------------

def _require_initial(s: SlideState) -> None:
    if s.w1 != "" or s.w2 != "" or s.t3 != 0 or s.t1 != 0:
        raise MalformedWord("reduction starts from w1 = w2 = empty, t3 = t1 = 0")
    if s.counts() != s.target:
        raise MalformedWord(
            f"w3 letter counts {s.counts()} do not match the target class {s.target}"
        )


def reduce_mu(s: SlideState) -> Tuple[SlideState, List[SlideMove]]:
    """Phase one: eliminate every mu from w3, one four-step cycle each;
    ends with w3 = lambda^n and t3 = m."""
    _require_initial(s)
    trace: List[SlideMove] = []

    def step(state: SlideState, mv: SlideMove) -> SlideState:
        trace.append(mv)
        return apply_move(state, mv)

    while MU in s.w3:
        j = s.w3.index(MU)
        s = step(s, SlideMove("ExtendB1", j + 1))
        for pos in range(j - 1, -1, -1):
            s = step(s, SlideMove("CommuteLambdaMu", pos))
        s = step(s, SlideMove("SlideA1OverAlpha"))
        s = step(s, SlideMove("ShrinkA2"))
    assert s.w3 == LAM * s.target[1] and s.t3 == s.target[0]
    return s, trace


def reduce_full(s: SlideState) -> Tuple[SlideState, List[SlideMove]]:
    """Both phases: all words empty, t3 = m, t1 = n - 1.  Refuses n = 0:
    the closing isotopy needs one lambda to absorb."""
    _require_initial(s)
    n = s.target[1]
    if n == 0:
        raise NotApplicable("reduction to empty words needs at least one lambda")
    s, trace = reduce_mu(s)

    def step(state: SlideState, mv: SlideMove) -> SlideState:
        trace.append(mv)
        return apply_move(state, mv)

    s = step(s, SlideMove("ExtendB1", n))
    for _ in range(n):
        s = step(s, SlideMove("SlideA2OverBeta"))
    assert s.w1 == s.w2 == s.w3 == ""
    assert (s.t3, s.t1) == (s.target[0], s.target[1] - 1)
    return s, trace


def replay(initial: SlideState, trace: List[SlideMove]) -> SlideState:
    s = initial
    for mv in trace:
        s = apply_move(s, mv)
    return s


def format_state(s: SlideState) -> str:
    return (
        f"w1={render_word(s.w1)} w2={render_word(s.w2)} "
        f"w3={render_word(s.w3)} t3={s.t3} t1={s.t1}"
    )


def trace_lines(initial: SlideState, trace: List[SlideMove]) -> List[str]:
    """One line per move in the documented `MOVE <kind> | state` shape."""
    out = []
    s = initial
    for mv in trace:
        s = apply_move(s, mv)
        out.append(f"MOVE {mv} | {format_state(s)}")
    return out
