"""Greedy expansions in base beta and the automaton of admissible sequences.

The expansion of one drives everything: if it terminates the base is a
simple Parry number, if its exact remainders repeat the base is a Parry
number, and the quasi-greedy form of that word yields the one-state-per-
position automaton accepting exactly the greedy sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import BUCHI, AlphabetInfo, Automaton, State
from .errors import InputError, OutOfRangeX, UndeterminedInput
from .field import BetaContext, FieldElement

SIMPLE_PARRY = "simple_parry"
PARRY = "parry"
UNDETERMINED = "undetermined_within_budget"


def _primitive_period(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period == period[:p] * (n // p):
            return period[:p]
    return period


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    """A digit word of shape preperiod (period)^omega; empty period means the
    word is finite (ends in zeros, which are omitted).

    Instances are canonical: the period is primitive and the preperiod is as
    short as possible.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()

    def __post_init__(self):
        pre = tuple(self.preperiod)
        per = tuple(self.period)
        if per and all(d == 0 for d in per):
            per = ()
        if per:
            per = _primitive_period(per)
            while pre and pre[-1] == per[-1]:
                pre = pre[:-1]
                per = (per[-1],) + per[:-1]
        else:
            while pre and pre[-1] == 0:
                pre = pre[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @property
    def is_finite(self) -> bool:
        return not self.period

    def digit(self, i: int) -> int:
        """Digit at position i (0-based)."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            return 0
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> list[int]:
        return [self.digit(i) for i in range(n)]

    def text(self) -> str:
        return word_to_text(self)

    def __str__(self):
        return self.text()


def _digits_to_text(digits) -> str:
    if all(0 <= d <= 9 for d in digits):
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def word_to_text(w: EventuallyPeriodicWord) -> str:
    """Render as ``pre(per)``: compact digits when all lie in 0..9,
    comma-separated otherwise; finite words drop the parentheses."""
    pre = _digits_to_text(w.preperiod)
    if w.is_finite:
        return pre if pre else "0"
    return f"{pre}({_digits_to_text(w.period)})"


def _parse_digits(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    if "," in text or "-" in text:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    return tuple(int(ch) for ch in text)


def word_from_text(text: str) -> EventuallyPeriodicWord:
    text = text.strip()
    if "(" in text:
        if not text.endswith(")"):
            raise InputError(f"bad word text: {text!r}")
        head, _, tail = text.partition("(")
        return EventuallyPeriodicWord(_parse_digits(head),
                                      _parse_digits(tail[:-1]))
    return EventuallyPeriodicWord(_parse_digits(text))


@dataclass(frozen=True)
class ParryVerdict:
    kind: str  # simple_parry | parry | undetermined_within_budget
    word: EventuallyPeriodicWord | None

    @property
    def determined(self) -> bool:
        return self.kind != UNDETERMINED


def greedy_digits(ctx: BetaContext, x: FieldElement, n: int) -> list[int]:
    """First n digits of the greedy expansion of x in [0, 1).

    Each step multiplies the exact remainder by beta and splits off the
    integer part, so the digits are the lexicographically greatest
    representation and lie in the canonical alphabet.
    """
    if x.sign() < 0 or (x - 1).sign() >= 0:
        raise OutOfRangeX("x must satisfy 0 <= x < 1")
    digits = []
    r = x
    for _ in range(n):
        r = r.mul_by_beta()
        d = r.floor()
        digits.append(d)
        r = r - d
    return digits


def expansion_of_one(ctx: BetaContext, max_steps: int = 10_000) -> ParryVerdict:
    """Run the greedy iteration at one; detect termination or an exact
    remainder repeat.

    Remainders are exact field elements, so cycle detection is sound; a base
    whose expansion neither terminates nor cycles within ``max_steps`` is
    reported undetermined.  Integer bases give the single-digit word "b".
    """
    if max_steps < 1:
        raise InputError("max_steps must be at least 1")
    r = ctx.one()
    seen = {r: 0}
    digits: list[int] = []
    for i in range(1, max_steps + 1):
        r = r.mul_by_beta()
        d = r.floor()
        digits.append(d)
        r = r - d
        if r.is_zero():
            return ParryVerdict(SIMPLE_PARRY,
                                EventuallyPeriodicWord(tuple(digits)))
        if r in seen:
            j = seen[r]
            return ParryVerdict(PARRY,
                                EventuallyPeriodicWord(tuple(digits[:j]),
                                                       tuple(digits[j:])))
        seen[r] = i
    return ParryVerdict(UNDETERMINED, None)


def quasi_greedy(ctx: BetaContext, verdict: ParryVerdict) -> EventuallyPeriodicWord:
    """Quasi-greedy expansion of one: for a finite expansion t_1..t_m the
    purely periodic word (t_1 .. t_{m-1} (t_m - 1))^omega, otherwise the
    expansion itself."""
    if not verdict.determined:
        raise UndeterminedInput("expansion of one is undetermined")
    w = verdict.word
    if verdict.kind == SIMPLE_PARRY:
        t = w.preperiod
        return EventuallyPeriodicWord((), t[:-1] + (t[-1] - 1,))
    return w


def greedy_automaton(ctx: BetaContext, verdict: ParryVerdict) -> Automaton:
    """Buchi automaton accepting exactly the admissible (greedy) sequences.

    One state per position of the quasi-greedy word; reading the expected
    digit advances (cyclically within the period), reading any smaller digit
    restarts.  All states are terminal.

    Integer-base caveat: with the one-digit convention for the expansion of
    one, the single-state automaton accepts all sequences including the tail
    of maximal digits, which the strict greedy set excludes.
    """
    dstar = quasi_greedy(ctx, verdict)
    pre, per = dstar.preperiod, dstar.period
    seq = pre + per
    n = len(seq)
    wrap = len(pre)
    bound = ctx.ceil_beta() - 1
    states = [State(i, f"p{i}", i == 0, True) for i in range(n)]
    edges = []
    for i, t in enumerate(seq):
        nxt = i + 1 if i + 1 < n else wrap
        edges.append((i, nxt, t))
        for a in range(0, t):
            edges.append((i, 0, a))
    return Automaton(AlphabetInfo(bound, "canonical"), BUCHI, states, edges,
                     ctx.input_poly)


def is_admissible(ctx: BetaContext, verdict: ParryVerdict,
                  w: EventuallyPeriodicWord) -> bool:
    """Exact acceptance of an eventually periodic word by the greedy
    automaton: simulate the preperiod, then iterate the period until the
    entry state repeats."""
    aut = greedy_automaton(ctx, verdict)
    trans = aut.transition_map()
    state = 0
    for d in w.preperiod:
        state = trans.get((state, (d,)))
        if state is None:
            return False
    period = w.period if w.period else (0,)
    seen = set()
    while state not in seen:
        seen.add(state)
        for d in period:
            state = trans.get((state, (d,)))
            if state is None:
                return False
    return True
