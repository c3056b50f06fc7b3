"""Digit-labeled automaton container with trimming and DOT/JSON export.

States carry canonical text labels (reduced field elements, or pair labels
for products), so two automata over the same base have a canonical identity
and can be compared without any isomorphism search.  Letters are integer
digits, or ordered digit pairs in pair mode.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import MalformedJson

FINITE = "finite"
BUCHI = "buchi"


@dataclass(frozen=True)
class AlphabetInfo:
    digit_bound: int
    mode: str  # "signed" | "canonical" | "pairs"


@dataclass(frozen=True)
class State:
    id: int
    label: str
    initial: bool
    terminal: bool


def _letter_key(letter):
    return letter if isinstance(letter, tuple) else (letter,)


@dataclass
class Automaton:
    """Labeled directed digit graph with finite or Buchi acceptance.

    ``edges`` holds (from_id, to_id, letter) triples.  ``elements`` is an
    optional parallel list of exact field elements for the state labels; it
    is carried by builders for exact checks but never serialized and never
    takes part in equality.
    """

    alphabet: AlphabetInfo
    acceptance: str
    states: list[State]
    edges: list[tuple]
    beta_poly: tuple[int, ...] = ()
    elements: list | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        labels = [s.label for s in self.states]
        if len(set(labels)) != len(labels):
            raise ValueError("state labels must be pairwise distinct")

    # -- views ------------------------------------------------------------

    def initial_ids(self) -> list[int]:
        return [s.id for s in self.states if s.initial]

    def terminal_ids(self) -> set[int]:
        return {s.id for s in self.states if s.terminal}

    def successors(self) -> dict[int, list[tuple]]:
        out: dict[int, list[tuple]] = {s.id: [] for s in self.states}
        for frm, to, letter in self.edges:
            out[frm].append((letter, to))
        return out

    def predecessors(self) -> dict[int, list[int]]:
        back: dict[int, list[int]] = {s.id: [] for s in self.states}
        for frm, to, _ in self.edges:
            back[to].append(frm)
        return back

    def step(self, state_id: int, letter):
        """Deterministic transition, or None."""
        for frm, to, lab in self.edges:
            if frm == state_id and lab == letter:
                return to
        return None

    def transition_map(self) -> dict[tuple, int]:
        return {(frm, _letter_key(letter)): to for frm, to, letter in self.edges}

    def label_of(self, state_id: int) -> str:
        return self.states[state_id].label

    def num_states(self) -> int:
        return len(self.states)

    def num_edges(self) -> int:
        return len(self.edges)


def _restrict(aut: Automaton, keep: set[int]) -> Automaton:
    """Subautomaton on ``keep``, states renumbered in original id order."""
    order = [s for s in aut.states if s.id in keep]
    remap = {s.id: i for i, s in enumerate(order)}
    states = [State(i, s.label, s.initial, s.terminal) for i, s in enumerate(order)]
    edges = [(remap[f], remap[t], a) for f, t, a in aut.edges
             if f in keep and t in keep]
    elements = None
    if aut.elements is not None:
        elements = [aut.elements[s.id] for s in order]
    return Automaton(aut.alphabet, aut.acceptance, states, edges,
                     aut.beta_poly, elements)


def trim_coaccessible(aut: Automaton, targets: set[int]) -> Automaton:
    """Restrict to states reachable from an initial state and co-reachable
    to some target state."""
    succ = aut.successors()
    reach = set()
    stack = list(aut.initial_ids())
    while stack:
        s = stack.pop()
        if s in reach:
            continue
        reach.add(s)
        stack.extend(t for _, t in succ[s])
    pred = aut.predecessors()
    coreach = set()
    stack = [t for t in targets if t in {s.id for s in aut.states}]
    while stack:
        s = stack.pop()
        if s in coreach:
            continue
        coreach.add(s)
        stack.extend(pred[s])
    return _restrict(aut, reach & coreach)


def prune_non_live(aut: Automaton) -> Automaton:
    """Buchi liveness with all states terminal: drop states that cannot start
    an infinite path, i.e. iteratively remove out-degree-zero states."""
    if aut.acceptance != BUCHI:
        raise ValueError("prune_non_live expects a Buchi automaton")
    alive = {s.id for s in aut.states}
    changed = True
    while changed:
        changed = False
        outdeg = {s: 0 for s in alive}
        for f, t, _ in aut.edges:
            if f in alive and t in alive:
                outdeg[f] += 1
        dead = {s for s, n in outdeg.items() if n == 0}
        if dead:
            alive -= dead
            changed = True
    return _restrict(aut, alive)


def equal_by_labels(a: Automaton, b: Automaton) -> bool:
    """Canonical equality: same label-indexed states (with flags) and same
    label-indexed edge relation.  Requires matching alphabet descriptors."""
    if a.alphabet != b.alphabet:
        raise ValueError("automata have different alphabet descriptors")
    sa = {(s.label, s.initial, s.terminal) for s in a.states}
    sb = {(s.label, s.initial, s.terminal) for s in b.states}
    if sa != sb:
        return False
    ea = {(a.label_of(f), _letter_key(x), a.label_of(t)) for f, t, x in a.edges}
    eb = {(b.label_of(f), _letter_key(x), b.label_of(t)) for f, t, x in b.edges}
    return ea == eb


def _negate_label(label: str) -> str:
    parts = []
    for tok in label.split(","):
        q = -Fraction(tok)
        parts.append(str(q.numerator) if q.denominator == 1
                     else f"{q.numerator}/{q.denominator}")
    return ",".join(parts)


def negate(aut: Automaton) -> Automaton:
    """Image of the automaton under (state x -> -x, digit a -> -a)."""
    states = [State(s.id, _negate_label(s.label), s.initial, s.terminal)
              for s in aut.states]
    def neg_letter(letter):
        if isinstance(letter, tuple):
            return tuple(-a for a in letter)
        return -letter
    edges = [(f, t, neg_letter(x)) for f, t, x in aut.edges]
    elements = None
    if aut.elements is not None:
        elements = [-e for e in aut.elements]
    return Automaton(aut.alphabet, aut.acceptance, states, edges,
                     aut.beta_poly, elements)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _sorted_edges(aut: Automaton) -> list[tuple]:
    return sorted(aut.edges, key=lambda e: (e[0], _letter_key(e[2]), e[1]))


def to_json(aut: Automaton) -> str:
    doc = {
        "beta_poly": list(aut.beta_poly),
        "digit_bound": aut.alphabet.digit_bound,
        "mode": aut.alphabet.mode,
        "acceptance": aut.acceptance,
        "states": [
            {"id": s.id, "label": s.label, "initial": s.initial,
             "terminal": s.terminal}
            for s in aut.states
        ],
        "edges": [
            {"from": f, "to": t, "a": x[0], "b": x[1]}
            if isinstance(x, tuple) else {"from": f, "to": t, "digit": x}
            for f, t, x in _sorted_edges(aut)
        ],
    }
    return json.dumps(doc, indent=2)


def from_json(text: str) -> Automaton:
    try:
        doc = json.loads(text)
        alphabet = AlphabetInfo(int(doc["digit_bound"]), doc["mode"])
        states = [State(int(s["id"]), s["label"], bool(s["initial"]),
                        bool(s["terminal"])) for s in doc["states"]]
        edges = []
        for e in doc["edges"]:
            if "digit" in e:
                letter = int(e["digit"])
            else:
                letter = (int(e["a"]), int(e["b"]))
            edges.append((int(e["from"]), int(e["to"]), letter))
        return Automaton(alphabet, doc["acceptance"], states, edges,
                         tuple(int(c) for c in doc["beta_poly"]))
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise MalformedJson(f"not a valid automaton document: {exc}") from exc


def to_dot(aut: Automaton) -> str:
    """GraphViz rendering: labels on nodes, doubled circles for terminal
    states, an arrow from a point node into each initial state."""
    lines = ["digraph automaton {", "  rankdir=LR;"]
    for s in aut.states:
        shape = "doublecircle" if s.terminal else "circle"
        lines.append(f'  q{s.id} [label="{s.label}", shape={shape}];')
    for s in aut.states:
        if s.initial:
            lines.append(f"  start{s.id} [shape=point];")
            lines.append(f"  start{s.id} -> q{s.id};")
    for f, t, x in _sorted_edges(aut):
        text = f"{x[0]},{x[1]}" if isinstance(x, tuple) else str(x)
        lines.append(f'  q{f} -> q{t} [label="{text}"];')
    lines.append("}")
    return "\n".join(lines)
