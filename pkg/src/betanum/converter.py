"""Normalization in base beta: converter automaton and direct routine.

The converter reads pairs (a, b) of canonical digits and accepts exactly
the pairs of words with equal value: it is the zero-representation
automaton on digit differences, with every edge labeled c expanded into the
pairs a - b = c.  Intersecting the second component with the greedy
automaton restricts outputs to admissible expansions.  The direct
``normalize`` routine recomputes the value exactly and re-expands it
greedily; it is independent of the automata and serves as their oracle.
"""

from __future__ import annotations

from .automata import BUCHI, AlphabetInfo, Automaton, State, prune_non_live
from .errors import InputError, ValueOutOfRange, ZNotFiniteWithinBudget
from .expansion import ParryVerdict, expansion_of_one, greedy_automaton, \
    greedy_digits
from .field import BetaContext
from .zero import BUDGET_EXCEEDED, ExplorationBudget, build_zero_automaton


def build_converter(ctx: BetaContext,
                    budget: ExplorationBudget | None = None) -> Automaton:
    """Pair automaton over the canonical alphabet recognizing equal-value
    couples.  Requires the zero automaton on digits up to ceil(beta)-1 to be
    finite within the budget."""
    top = ctx.ceil_beta() - 1
    outcome = build_zero_automaton(ctx, top, budget)
    if outcome.status == BUDGET_EXCEEDED:
        raise ZNotFiniteWithinBudget(
            "zero automaton did not close within the budget")
    z = outcome.automaton
    edges = []
    for frm, to, c in z.edges:
        for b in range(0, top + 1):
            a = c + b
            if 0 <= a <= top:
                edges.append((frm, to, (a, b)))
    return Automaton(AlphabetInfo(top, "pairs"), BUCHI, list(z.states), edges,
                     ctx.input_poly, z.elements)


def normalization_automaton(ctx: BetaContext,
                            budget: ExplorationBudget | None = None
                            ) -> Automaton:
    """Product of the converter with the greedy automaton on second
    components: accepted pairs have equal value and an admissible second
    word.  Both factors have all states terminal, so the plain product is a
    sound Buchi intersection."""
    conv = build_converter(ctx, budget)
    verdict = expansion_of_one(ctx)
    greedy = greedy_automaton(ctx, verdict)
    gtrans = greedy.transition_map()
    csucc = conv.successors()

    start = (0, 0)
    index = {start: 0}
    labels = [f"{conv.label_of(0)}|{greedy.label_of(0)}"]
    edges = []
    queue = [start]
    while queue:
        cs, gs = queue.pop(0)
        sid = index[(cs, gs)]
        for (pair, ct) in sorted(csucc[cs], key=lambda e: (e[0], e[1])):
            gt = gtrans.get((gs, (pair[1],)))
            if gt is None:
                continue
            key = (ct, gt)
            if key not in index:
                index[key] = len(index)
                labels.append(f"{conv.label_of(ct)}|{greedy.label_of(gt)}")
                queue.append(key)
            edges.append((sid, index[key], pair))
    states = [State(i, lab, i == 0, True) for i, lab in enumerate(labels)]
    aut = Automaton(conv.alphabet, BUCHI, states, edges, ctx.input_poly)
    return prune_non_live(aut)


def _zero_pair_live_states(aut: Automaton) -> set[int]:
    """States from which an infinite all-(0,0) path exists.

    The (0,0)-edges form a deterministic partial map, so a state is live
    exactly when its chain under that map reaches a cycle before falling
    off the domain.
    """
    follow = {frm: to for frm, to, letter in aut.edges if letter == (0, 0)}
    status: dict[int, bool] = {}
    for start in follow:
        chain: list[int] = []
        pos: set[int] = set()
        cur = start
        while cur not in status and cur in follow and cur not in pos:
            pos.add(cur)
            chain.append(cur)
            cur = follow[cur]
        if cur in status:
            verdict = status[cur]
        elif cur in pos:
            verdict = True
        else:
            verdict = False
        for s in chain:
            status[s] = verdict
    return {s for s, alive in status.items() if alive}


def accepts_pair(aut: Automaton, first, second) -> bool:
    """Finite-word acceptance through the Buchi pair automaton.

    The two words are padded with zeros to a common length; the pair is
    accepted when the walk survives and ends in a state with a live
    all-(0,0) continuation.
    """
    first, second = list(first), list(second)
    n = max(len(first), len(second))
    first += [0] * (n - len(first))
    second += [0] * (n - len(second))
    trans = aut.transition_map()
    state = aut.initial_ids()[0]
    for a, b in zip(first, second):
        state = trans.get((state, (a, b)))
        if state is None:
            return False
    return state in _zero_pair_live_states(aut)


def normalize(ctx: BetaContext, word, out_len: int | None = None) -> list[int]:
    """Greedy expansion of the value of ``word`` (digits on the canonical
    alphabet, value in [0, 1)).  Exact: the value is computed in the field
    and re-expanded, independently of any automaton."""
    word = list(word)
    top = ctx.ceil_beta() - 1
    if any(not 0 <= a <= top for a in word):
        raise InputError("digits outside the canonical alphabet")
    if out_len is None:
        out_len = len(word)
    if out_len < len(word):
        raise InputError("out_len must be at least the word length")
    acc = ctx.zero()
    for digit in word:
        acc = acc.mul_by_beta() + digit
    value = acc * ctx.pow_beta(-len(word)) if word else acc
    if value.sign() < 0 or (value - 1).sign() >= 0:
        raise ValueOutOfRange("word value must lie in [0, 1)")
    return greedy_digits(ctx, value, out_len)
