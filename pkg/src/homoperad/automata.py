"""Tree grammars recognizing reducible plane monomials, and their
determinization into bottom-up automata by the subset construction.

State 0 generates the reducible plane monomials, state 1 generates all
plane monomials, and every internal edge of a rule pattern contributes
one further state describing the subtree hanging below that edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .rewrite import Rule
from .terms import TermError

LEAF = ("leaf",)


@dataclass(frozen=True)
class TreeGrammar:
    states: tuple[int, ...]
    productions: dict  # state -> frozenset of ("leaf",) | ("a", c) | ("m", c, d)


def _check_signature(rule: Rule):
    for tok in rule.lhs.word:
        if isinstance(tok, int):
            continue
        if tok not in ("a", "m"):
            raise TermError(f"unsupported symbol {tok!r} in grammar construction")


def grammar_from_rules(rules) -> TreeGrammar:
    """Grammar whose language is the set of plane monomials over {m/2, a/1}
    reducible by at least one of the rules."""
    prods = {
        0: {("a", 0), ("m", 0, 1), ("m", 1, 0)},
        1: {LEAF, ("a", 1), ("m", 1, 1)},
    }
    next_state = 2

    for rule in rules:
        _check_signature(rule)
        word = rule.lhs.word

        def subterm_end(i):
            need = 1
            while need:
                t = word[i]
                need += (0 if isinstance(t, int) else (2 if t == "m" else 1)) - 1
                i += 1
            return i

        # Assign states to internal edges breadth-first from the root, so
        # the numbering matches the natural reading of the pattern.
        queue = deque([(0, 0)])
        while queue:
            s, pos = queue.popleft()
            sym = word[pos]
            kids = [pos + 1]
            if sym == "m":
                kids.append(subterm_end(pos + 1))
            child_states = []
            for p in kids:
                if isinstance(word[p], int):
                    child_states.append(1)
                else:
                    child_states.append(next_state)
                    queue.append((next_state, p))
                    next_state += 1
            prods.setdefault(s, set()).add((sym, *child_states))

    states = tuple(sorted(prods))
    return TreeGrammar(states, {b: frozenset(p) for b, p in prods.items()})


@dataclass(frozen=True)
class BottomUpAutomaton:
    states: tuple[tuple[int, ...], ...]  # sorted subsets, reachable only
    leaf_state: tuple[int, ...]
    f_a: dict  # state -> state
    f_m: dict  # (state, state) -> state

    def accepting(self, state) -> bool:
        return 0 in state

    def run(self, word) -> tuple[int, ...]:
        """Evaluate a plane monomial bottom-up; returns the final state."""
        stack = []
        for tok in reversed(word):
            if isinstance(tok, int):
                stack.append(self.leaf_state)
            elif tok == "a":
                stack.append(self.f_a[stack.pop()])
            elif tok == "m":
                left, right = stack.pop(), stack.pop()
                stack.append(self.f_m[(left, right)])
            else:
                raise TermError(f"unsupported symbol {tok!r}")
        (final,) = stack
        return final

    def accepts(self, word) -> bool:
        return self.accepting(self.run(word))


def determinize(g: TreeGrammar) -> BottomUpAutomaton:
    """Reachable-subset construction."""
    a_prods = {}  # c -> set of b with b -> a(c)
    m_prods = {}  # (c, d) -> set of b with b -> m(c, d)
    leaf = set()
    for b, ps in g.productions.items():
        for p in ps:
            if p == LEAF:
                leaf.add(b)
            elif p[0] == "a":
                a_prods.setdefault(p[1], set()).add(b)
            else:
                m_prods.setdefault((p[1], p[2]), set()).add(b)

    leaf_state = tuple(sorted(leaf))
    states = [leaf_state]
    seen = {leaf_state}
    f_a, f_m = {}, {}

    def subset_a(s):
        out = set()
        for c in s:
            out |= a_prods.get(c, set())
        return tuple(sorted(out))

    def subset_m(s, t):
        out = set()
        for c in s:
            for d in t:
                out |= m_prods.get((c, d), set())
        return tuple(sorted(out))

    frontier = [leaf_state]
    while frontier:
        new = []
        for s in frontier:
            targets = [subset_a(s)]
            for t in states:
                targets.append(subset_m(s, t))
                if t != s:
                    targets.append(subset_m(t, s))
            for u in targets:
                if u not in seen:
                    seen.add(u)
                    states.append(u)
                    new.append(u)
        # fill the tables over the enlarged state set
        for s in states:
            f_a[s] = subset_a(s)
            for t in states:
                f_m[(s, t)] = subset_m(s, t)
        frontier = new
    return BottomUpAutomaton(tuple(states), leaf_state, f_a, f_m)


def format_automaton(aut: BottomUpAutomaton) -> str:
    """Plain-text dump: state list, f_a column, f_m matrix."""

    def name(s):
        return "{" + ",".join(map(str, s)) + "}"

    lines = ["states: " + " ".join(name(s) for s in aut.states)]
    lines.append("leaf: " + name(aut.leaf_state))
    lines.append("f_a:")
    for s in aut.states:
        lines.append(f"  {name(s)}\t{name(aut.f_a[s])}")
    lines.append("f_m:")
    header = "\t".join(name(t) for t in aut.states)
    lines.append("  \t" + header)
    for s in aut.states:
        row = "\t".join(name(aut.f_m[(s, t)]) for t in aut.states)
        lines.append(f"  {name(s)}\t{row}")
    return "\n".join(lines) + "\n"
