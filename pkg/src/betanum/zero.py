"""Automata of beta-representations of zero, built by bounded exploration.

States are the exact values of digit-string prefixes, kept while they stay
inside the certified embedding bounds; the edge relation is t = beta*s + a.
Budgets turn non-recognizability into observable behavior: a base whose
zero-representation set has no finite automaton shows strictly growing
state counts until the budget is exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import classify
from .automata import BUCHI, FINITE, AlphabetInfo, Automaton, State, \
    prune_non_live, trim_coaccessible
from .errors import InputError, SearchSpaceTooLarge
from .expansion import EventuallyPeriodicWord
from .field import BetaContext, FieldElement

FINITE_STATUS = "finite"
BUDGET_EXCEEDED = "budget_exceeded"

RIGIDITY_GUARD = 10**7


@dataclass(frozen=True)
class ExplorationBudget:
    max_states: int = 10_000
    max_depth: int = 64

    def __post_init__(self):
        if self.max_states < 1 or self.max_depth < 1:
            raise InputError("budget bounds must be positive")


@dataclass
class BuildOutcome:
    """Either a completed finite automaton or a budget-exceeded report.

    ``growth`` is the cumulative number of distinct states discovered after
    each BFS depth (depth zero counts the start state alone).
    """

    status: str
    automaton: Automaton | None
    growth: list[int]


def _explore(ctx: BetaContext, d: int, budget: ExplorationBudget, keep):
    """Deterministic BFS over t = beta*s + a from zero, digits -d..d ascending."""
    zero = ctx.zero()
    index = {zero: 0}
    elems = [zero]
    edges = []
    growth = [1]
    frontier = [zero]
    depth = 0
    while frontier:
        depth += 1
        if depth > budget.max_depth:
            return None, growth, elems, edges
        nxt = []
        for s in frontier:
            sb = s.mul_by_beta()
            for a in range(-d, d + 1):
                t = sb + a
                if not keep(t):
                    continue
                if t not in index:
                    if len(index) >= budget.max_states:
                        growth.append(len(index))
                        return None, growth, elems, edges
                    index[t] = len(elems)
                    elems.append(t)
                    nxt.append(t)
                edges.append((index[s], index[t], a))
        growth.append(len(index))
        frontier = nxt
    return index, growth, elems, edges


def _as_automaton(ctx, d, elems, edges, acceptance, terminal_ids=None):
    states = []
    for i, e in enumerate(elems):
        terminal = True if terminal_ids is None else (i in terminal_ids)
        states.append(State(i, e.text(), i == 0, terminal))
    return Automaton(AlphabetInfo(d, "signed"), acceptance, states, list(edges),
                     ctx.input_poly, list(elems))


def build_zero_automaton(ctx: BetaContext, d: int,
                         budget: ExplorationBudget | None = None,
                         conjugate_pruning: str = "auto") -> BuildOutcome:
    """Buchi automaton of the infinite zero representations on digits -d..d.

    States are kept inside the closed real interval of radius d/(beta-1);
    with ``conjugate_pruning="auto"`` the conjugate bounds are added too
    whenever every conjugate has modulus below one, which provably keeps the
    accepted language (prefix values then satisfy those bounds outright).
    All states are terminal; dead branches are pruned afterwards.
    """
    if d < 0:
        raise InputError("digit bound must be nonnegative")
    if conjugate_pruning not in ("auto", "off"):
        raise InputError("conjugate_pruning must be 'auto' or 'off'")
    budget = budget or ExplorationBudget()
    strengthen = (
        conjugate_pruning == "auto"
        and all(v == classify.LESS for v in classify.conjugate_verdicts(ctx))
    )
    if strengthen:
        def keep(t):
            return classify.within_finite_word_bounds(ctx, t, d)
    else:
        def keep(t):
            return classify.test_within_bounds(ctx, t, d, "real_only")
    index, growth, elems, edges = _explore(ctx, d, budget, keep)
    if index is None:
        return BuildOutcome(BUDGET_EXCEEDED, None, growth)
    aut = _as_automaton(ctx, d, elems, edges, BUCHI)
    return BuildOutcome(FINITE_STATUS, prune_non_live(aut), growth)


def build_finite_zero_automaton(ctx: BetaContext, d: int,
                                budget: ExplorationBudget | None = None
                                ) -> BuildOutcome:
    """Finite automaton of the finite zero representations on digits -d..d.

    Exploration prunes with every embedding of modulus != 1 (real bound
    d/(beta-1), conjugate bounds d/(|c|-1) or d/(1-|c|)); unit-modulus
    conjugates impose no bound, so only the budget stops growth there.
    The result is trimmed to paths from zero back to zero; zero is the only
    terminal state.
    """
    if d < 0:
        raise InputError("digit bound must be nonnegative")
    budget = budget or ExplorationBudget()

    def keep(t):
        return classify.within_finite_word_bounds(ctx, t, d)

    index, growth, elems, edges = _explore(ctx, d, budget, keep)
    if index is None:
        return BuildOutcome(BUDGET_EXCEEDED, None, growth)
    aut = _as_automaton(ctx, d, elems, edges, FINITE, terminal_ids={0})
    return BuildOutcome(FINITE_STATUS, trim_coaccessible(aut, {0}), growth)


def growth_probe(ctx: BetaContext, d: int, max_depth: int) -> list[int]:
    """Cumulative count of distinct prefix values per BFS depth under the
    real-only bound, without building edges; evidence of (non-)finiteness."""
    if d < 0:
        raise InputError("digit bound must be nonnegative")
    seen = {ctx.zero()}
    frontier = [ctx.zero()]
    growth = [1]
    for _ in range(max_depth):
        nxt = []
        for s in frontier:
            sb = s.mul_by_beta()
            for a in range(-d, d + 1):
                t = sb + a
                if t in seen:
                    continue
                if classify.test_within_bounds(ctx, t, d, "real_only"):
                    seen.add(t)
                    nxt.append(t)
        growth.append(len(seen))
        if not nxt:
            break
        frontier = nxt
    return growth


def value_of_word(ctx: BetaContext, w: EventuallyPeriodicWord) -> FieldElement:
    """Exact value 0.z_1 z_2 ... of an eventually periodic word in Q(beta).

    The periodic tail contributes V * beta^-p / (beta^m - 1) ... with V the
    period read as a polynomial in beta; beta > 1 keeps the denominator
    nonzero.
    """
    p = len(w.preperiod)
    total = ctx.zero()
    acc = ctx.zero()
    for digit in w.preperiod:
        acc = acc.mul_by_beta() + digit
    total = acc * ctx.pow_beta(-p) if p else total
    if w.period:
        m = len(w.period)
        v = ctx.zero()
        for digit in w.period:
            v = v.mul_by_beta() + digit
        tail = v * ctx.invert(ctx.pow_beta(m) - 1)
        total = total + tail * ctx.pow_beta(-p)
    return total


def is_zero_word(ctx: BetaContext, d: int, w: EventuallyPeriodicWord) -> bool:
    """Exact test that a word is a beta-representation of zero."""
    if any(abs(digit) > d for digit in w.preperiod + w.period):
        raise InputError("word digits exceed the digit bound")
    return value_of_word(ctx, w).is_zero()


def is_rigid_prefix(ctx: BetaContext, d: int, prefix) -> bool:
    """Exhaustive check that no same-length word starting with digit zero has
    the same value as the prefix.

    Works on the single length j = len(prefix); the defining property
    quantifies over all lengths >= 2, so a length-one prefix is vacuously
    rigid.  This is an independent brute-force oracle: values are compared
    exactly and no automaton is consulted.
    """
    prefix = list(prefix)
    if not prefix:
        raise InputError("prefix must be nonempty")
    if any(abs(digit) > d for digit in prefix):
        raise InputError("prefix digits exceed the digit bound")
    j = len(prefix)
    if j == 1:
        return True
    if (2 * d + 1) ** (j - 1) > RIGIDITY_GUARD:
        raise SearchSpaceTooLarge("rigidity search space exceeds the guard")
    # Compare scaled values sum z_i beta^(j-i), exact in the field.  The
    # search runs most-significant digit first and discards a partial word
    # once the digits still to come cannot close the gap to the target.
    target = ctx.zero()
    for digit in prefix:
        target = target.mul_by_beta() + digit
    geom = [ctx.zero()]  # geom[m] = d * (beta^m - 1) / (beta - 1)
    for m in range(1, j):
        geom.append(geom[-1].mul_by_beta() + d)
    pow_beta = [ctx.one()]
    for m in range(1, j):
        pow_beta.append(pow_beta[-1].mul_by_beta())

    def search(partial: FieldElement, remaining: int) -> bool:
        """True iff some completion of ``partial`` hits the target."""
        if remaining == 0:
            return partial == target
        gap = target - partial * pow_beta[remaining]
        if (gap - geom[remaining]).sign() > 0 or (gap + geom[remaining]).sign() < 0:
            return False
        shifted = partial.mul_by_beta()
        return any(search(shifted + a, remaining - 1) for a in range(-d, d + 1))

    return not search(ctx.zero(), j - 1)
