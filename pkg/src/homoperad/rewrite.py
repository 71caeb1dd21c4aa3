"""Rules, rewriting systems, redex matching and reduction to normal form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linear import LinComb
from .orders import GT, TermOrder
from .scalars import parse_scalar
from .terms import Context, Signature, TermError, planarize


class RuleError(TermError):
    """A rule violates the structural or order-compatibility requirements."""


@dataclass(frozen=True)
class Rule:
    """An oriented pair: a plane monomial pattern and its replacement."""

    id: str
    lhs: Context
    rhs: LinComb

    @property
    def order(self) -> int:
        return self.lhs.order

    def __str__(self):
        return f"{self.lhs} -> {self.rhs}"


def make_rule(rule_id: str, lhs: Context, rhs: LinComb, order: TermOrder) -> Rule:
    """Normalize the lhs to its plane representative (permuting the rhs to
    match) and check the descending-monomial condition."""
    if lhs.arity != rhs.arity:
        raise RuleError(f"rule {rule_id}: lhs arity {lhs.arity} != rhs arity {rhs.arity}")
    if lhs.order == 0:
        raise RuleError(f"rule {rule_id}: lhs must contain at least one operation")
    if not lhs.is_plane():
        plane, sigma = planarize(lhs)
        # lhs = act(sigma, plane), so the rule says act(sigma, plane) -> rhs,
        # equivalently plane -> act(sigma^-1, rhs).
        lhs, rhs = plane, rhs.act(sigma.inverse())
    if lhs in rhs.terms:
        raise RuleError(f"rule {rule_id}: lhs occurs in its own replacement")
    for mono in rhs.support():
        if order.compare(lhs, mono) != GT:
            raise RuleError(
                f"rule {rule_id}: replacement monomial {mono} is not strictly "
                f"below the pattern {lhs} under {order.name}"
            )
    return Rule(rule_id, lhs, rhs)


class RewritingSystem:
    """An immutable, validated collection of rules sharing one term order."""

    def __init__(self, sig: Signature, order: TermOrder, rules):
        self.sig = sig
        self.order = order
        self.rules = tuple(rules)
        ids = [r.id for r in self.rules]
        if len(set(ids)) != len(ids):
            raise RuleError(f"duplicate rule ids: {ids}")
        self._by_root = {}
        for r in self.rules:
            self._by_root.setdefault(r.lhs.word[0], []).append(r)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def rule(self, rule_id: str) -> Rule:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise KeyError(rule_id)


@dataclass(frozen=True)
class Redex:
    """A match of a rule pattern inside a term: the span of the matched
    subterm and the fragment of the host bound to each pattern box."""

    rule: Rule
    position: int
    end: int
    bindings: tuple  # bindings[i] = token span for pattern Box_{i+1}


def _match_at(lhs: Context, t: Context, pos: int):
    """Match the plane pattern against the subterm of t rooted at pos;
    boxes are wildcards capturing whole fragments."""
    bindings = [None] * lhs.arity
    j = pos
    for tok in lhs.word:
        if isinstance(tok, int):
            end = t.subterm_end(j)
            bindings[tok - 1] = t.word[j:end]
            j = end
        else:
            if j >= len(t.word) or t.word[j] != tok:
                return None
            j += 1
    return Redex(None, pos, j, tuple(bindings))


def find_redexes(t: Context, sys: RewritingSystem) -> list[Redex]:
    """All rule matches in t, ordered by Polish position then rule id."""
    out = []
    for pos, tok in enumerate(t.word):
        if isinstance(tok, int):
            continue
        for r in sys._by_root.get(tok, ()):
            m = _match_at(r.lhs, t, pos)
            if m is not None:
                out.append(Redex(r, m.position, m.end, m.bindings))
    out.sort(key=lambda rd: (rd.position, rd.rule.id))
    return out


def apply_redex(t: Context, redex: Redex) -> LinComb:
    """Replace the matched subterm by the rule's replacement, splicing the
    captured fragments back in.  Box numbering of t is untouched."""
    head = t.word[: redex.position]
    tail = t.word[redex.end :]
    out = LinComb(t.arity)
    for mono, coeff in redex.rule.rhs.terms.items():
        mid = []
        for tok in mono.word:
            if isinstance(tok, int):
                mid.extend(redex.bindings[tok - 1])
            else:
                mid.append(tok)
        ctx = Context(head + tuple(mid) + tail, t.sig, _checked=True)
        s = out.terms.get(ctx, 0) + coeff
        if s:
            out.terms[ctx] = s
        else:
            out.terms.pop(ctx, None)
    return out


def is_irreducible(x: LinComb | Context, sys: RewritingSystem) -> bool:
    monos = [x] if isinstance(x, Context) else list(x.support())
    return all(not find_redexes(m, sys) for m in monos)


def _word_key(word):
    return tuple((0, t, "") if isinstance(t, int) else (1, 0, t) for t in word)


def _pick_greatest(monos, order, log):
    """The order-greatest monomial; Polish-lex-least fallback among maximal
    candidates when the order cannot decide, recorded in ``log``."""
    maximal = [
        m
        for m in monos
        if not any(order.compare(o, m) == GT for o in monos if o is not m)
    ]
    if len(maximal) == 1:
        return maximal[0]
    pick = min(maximal, key=lambda m: _word_key(m.word))
    if log is not None:
        log.append(("tie", tuple(sorted(str(m) for m in maximal)), str(pick)))
    return pick


def reduce_once(x: LinComb, sys: RewritingSystem, log=None):
    """One rewriting step at the order-greatest reducible monomial, first
    redex in Polish position order.  Returns (result, progressed)."""
    reducible = {}
    for mono in x.support():
        reds = find_redexes(mono, sys)
        if reds:
            reducible[mono] = reds[0]
    if not reducible:
        return x, False
    target = _pick_greatest(list(reducible), sys.order, log)
    replaced = apply_redex(target, reducible[target]).scale(x.terms[target])
    rest = LinComb(x.arity)
    rest.terms = {m: c for m, c in x.terms.items() if m != target}
    return rest + replaced, True


def normal_form(x: LinComb, sys: RewritingSystem, log=None, rng=None) -> LinComb:
    """Iterate reduction to a fixed point.  With ``rng`` supplied, the
    monomial and redex are chosen at random each step instead of by the
    deterministic strategy; a complete system reaches the same answer."""
    while True:
        if rng is None:
            x, progressed = reduce_once(x, sys, log)
            if not progressed:
                return x
        else:
            choices = []
            for mono in x.support():
                for red in find_redexes(mono, sys):
                    choices.append((mono, red))
            if not choices:
                return x
            mono, red = choices[rng.randrange(len(choices))]
            replaced = apply_redex(mono, red).scale(x.terms[mono])
            rest = LinComb(x.arity)
            rest.terms = {m: c for m, c in x.terms.items() if m != mono}
            x = rest + replaced


def normal_form_term(t: Context, sys: RewritingSystem, log=None, rng=None) -> LinComb:
    return normal_form(LinComb.monomial(t), sys, log=log, rng=rng)


# --- rule file format -------------------------------------------------------


def _split_summands(tokens):
    """Split a signed-sum token list at top-level + and - separators."""
    out, current, sign, depth = [], [], 1, 0
    for tok in tokens:
        if depth == 0 and tok in ("+", "-") and not current:
            if tok == "-":
                sign = -sign
            continue
        if depth == 0 and tok in ("+", "-"):
            out.append((sign, current))
            current, sign = [], (1 if tok == "+" else -1)
            continue
        depth += tok.count("(") - tok.count(")")
        current.append(tok)
    if current:
        out.append((sign, current))
    return out


def parse_lincomb(text: str, sig: Signature) -> LinComb:
    """Parse `[c *] <polish> { (+|-) [c *] <polish> }`."""
    from .terms import parse as parse_term

    tokens = text.split()
    if not tokens:
        raise TermError("empty linear combination")
    result = None
    for sign, toks in _split_summands(tokens):
        coeff = Fraction(sign)
        if "*" in toks:
            cut = toks.index("*")
            coeff = coeff * parse_scalar(" ".join(toks[:cut]))
            toks = toks[cut + 1 :]
        ctx = parse_term(" ".join(toks), sig)
        piece = LinComb.monomial(ctx, coeff)
        result = piece if result is None else result + piece
    if result is None:
        raise TermError(f"cannot parse linear combination {text!r}")
    return result


def format_lincomb(x: LinComb) -> str:
    return str(x)


def parse_rules(text: str, sig: Signature, order: TermOrder, prefix="r") -> list[Rule]:
    """Read the one-rule-per-line format `<lhs> -> <signed sum>`."""
    from .terms import parse as parse_term

    rules = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise RuleError(f"line {lineno}: expected `<lhs> -> <rhs>`")
        left, right = line.split("->", 1)
        lhs = parse_term(left.strip(), sig)
        rhs = parse_lincomb(right.strip(), sig)
        rules.append(make_rule(f"{prefix}{len(rules) + 1}", lhs, rhs, order))
    return rules


def format_rules(rules) -> str:
    return "\n".join(f"{r.lhs} -> {r.rhs}" for r in rules) + "\n"
