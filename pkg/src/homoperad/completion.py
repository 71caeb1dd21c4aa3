"""Plane critical ambiguities and the critical-pairs/completion procedure."""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field

from .linear import IncomparableLeading, LinComb, leading_monomial
from .rewrite import (
    Redex,
    RewritingSystem,
    Rule,
    RuleError,
    _match_at,
    apply_redex,
    make_rule,
    normal_form,
)
from .terms import Context, Signature, TermError, grading

BOX = 0  # placeholder while building a superposition; renumbered afterwards


@dataclass(frozen=True)
class Ambiguity:
    """A plane site reducible by two overlapping rule applications."""

    site: Context
    rule1: str
    pos1: int
    rule2: str
    pos2: int

    @property
    def order(self) -> int:
        return self.site.order


def _sub_end(word, sig, start):
    need, i = 1, start
    while need:
        t = word[i]
        need += (0 if isinstance(t, int) else sig.arity(t)) - 1
        i += 1
    return i


def _merge(a, i, b, j, sig):
    """Unify two linear patterns token-wise; boxes are local wildcards.
    Returns (merged tokens, end in a, end in b) or None on symbol clash."""
    ta, tb = a[i], b[j]
    if isinstance(ta, int) and isinstance(tb, int):
        return [BOX], i + 1, j + 1
    if isinstance(ta, int):
        end = _sub_end(b, sig, j)
        frag = [BOX if isinstance(t, int) else t for t in b[j:end]]
        return frag, i + 1, end
    if isinstance(tb, int):
        end = _sub_end(a, sig, i)
        frag = [BOX if isinstance(t, int) else t for t in a[i:end]]
        return frag, end, j + 1
    if ta != tb:
        return None
    out = [ta]
    i, j = i + 1, j + 1
    for _ in range(sig.arity(ta)):
        got = _merge(a, i, b, j, sig)
        if got is None:
            return None
        frag, i, j = got
        out.extend(frag)
    return out, i, j


def _renumber(tokens, sig) -> Context:
    k = iter(range(1, sum(1 for t in tokens if isinstance(t, int)) + 1))
    word = tuple(next(k) if isinstance(t, int) else t for t in tokens)
    return Context(word, sig, _checked=True)


def _superpositions(s1: Rule, s2: Rule, sig: Signature):
    """Sites where lhs(s2), rooted at a vertex of lhs(s1), unifies with it.
    Yields (site, position of the s2 embedding); s1 embeds at the root."""
    w1 = s1.lhs.word
    for p, tok in enumerate(w1):
        if isinstance(tok, int):
            continue
        got = _merge(w1, p, s2.lhs.word, 0, sig)
        if got is None:
            continue
        merged, _, jend = got
        if jend != len(s2.lhs.word):
            continue
        head = [BOX if isinstance(t, int) else t for t in w1[:p]]
        tail = [BOX if isinstance(t, int) else t for t in w1[_sub_end(w1, sig, p) :]]
        yield _renumber(head + merged + tail, sig), p


def overlaps(s1: Rule, s2: Rule, sig: Signature) -> list[Ambiguity]:
    """All plane critical ambiguities between the two rules (both directions,
    deduplicated; the trivial root self-overlap is dropped)."""
    seen = {}
    for a, b in ((s1, s2), (s2, s1)):
        for site, p in _superpositions(a, b, sig):
            if p == 0 and a.id == b.id:
                continue  # identical embeddings, nothing to compare
            key = (site.word, frozenset({(a.id, 0), (b.id, p)}))
            if key not in seen:
                seen[key] = Ambiguity(site, a.id, 0, b.id, p)
    return list(seen.values())


def _reduction_of(amb_site: Context, rule: Rule, pos: int) -> LinComb:
    m = _match_at(rule.lhs, amb_site, pos)
    if m is None:
        raise TermError(f"rule {rule.id} does not match the ambiguity site")
    return apply_redex(amb_site, Redex(rule, m.position, m.end, m.bindings))


@dataclass(frozen=True)
class Resolved:
    pass


@dataclass(frozen=True)
class Candidate:
    diff: LinComb


@dataclass(frozen=True)
class Failure:
    diff: LinComb
    reason: str


def resolve(amb: Ambiguity, sys: RewritingSystem):
    """Reduce the site along both redexes; Resolved when the normal forms
    agree, otherwise a Candidate for orientation (Failure when the term
    order cannot orient the difference)."""
    left = normal_form(_reduction_of(amb.site, sys.rule(amb.rule1), amb.pos1), sys)
    right = normal_form(_reduction_of(amb.site, sys.rule(amb.rule2), amb.pos2), sys)
    d = left - right
    if not d:
        return Resolved()
    try:
        leading_monomial(d, sys.order)
    except IncomparableLeading as e:
        return Failure(d, str(e))
    return Candidate(d)


def is_homogeneous(lhs: Context, rhs: LinComb) -> bool:
    g = grading(lhs)
    return all(grading(m) == g for m in rhs.support())


@dataclass
class CompletionState:
    system: RewritingSystem
    status: str  # "complete" | "budget" | "order_failure"
    max_order: int
    log: list = field(default_factory=list)
    failure: Failure | None = None

    def census(self) -> dict[int, int]:
        out = {}
        for r in self.system:
            out[r.order] = out.get(r.order, 0) + 1
        return dict(sorted(out.items()))


def _word_key(word):
    return tuple((0, t, "") if isinstance(t, int) else (1, 0, t) for t in word)


def _candidate_rule(diff: LinComb, order, rule_id: str) -> Rule:
    lead, coeff = leading_monomial(diff, order)
    rest = LinComb(diff.arity)
    rest.terms = {m: c for m, c in diff.terms.items() if m != lead}
    return make_rule(rule_id, lead, rest.scale(_inv_neg(coeff)), order)


def _inv_neg(coeff):
    from fractions import Fraction

    if isinstance(coeff, Fraction):
        return Fraction(-1) / coeff
    from .scalars import RatFunc

    return RatFunc.const(-1) / coeff


def complete(
    initial: RewritingSystem,
    max_order: int,
    budget_seconds: float | None = None,
    inter_reduce: bool = True,
    require_homogeneous: bool = True,
) -> CompletionState:
    """Run the critical-pairs/completion procedure up to sites of the given
    order.  Ambiguities are processed in increasing (site order, site word,
    rule pair) priority; candidate differences are normalized, oriented and
    adjoined; with ``inter_reduce`` the system is kept fully reduced."""
    sig, order = initial.sig, initial.order
    if require_homogeneous:
        for r in initial:
            if not is_homogeneous(r.lhs, r.rhs):
                raise RuleError(f"rule {r.id} is not grading-homogeneous")
    rules: dict[str, Rule] = {r.id: r for r in initial}
    counter = len(rules)
    heap = []
    log = []
    seq = iter(range(10**9))

    def push_overlaps(a: Rule, b: Rule):
        for amb in overlaps(a, b, sig):
            if amb.order <= max_order:
                key = (
                    amb.order,
                    _word_key(amb.site.word),
                    tuple(sorted((amb.rule1, amb.rule2))),
                )
                heapq.heappush(heap, (key, next(seq), amb))

    ids = list(rules)
    for i, x in enumerate(ids):
        for y in ids[i:]:
            push_overlaps(rules[x], rules[y])

    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds

    def current_system() -> RewritingSystem:
        return RewritingSystem(sig, order, rules.values())

    def adjoin(diff: LinComb) -> list[Rule]:
        """Orient a normalized nonzero difference, add it, and inter-reduce.
        Returns the rules added (the oriented one plus any re-derived)."""
        nonlocal counter
        added = []
        work = [diff]
        while work:
            d = work.pop()
            d = normal_form(d, current_system())
            if not d:
                continue
            counter += 1
            new = _candidate_rule(d, order, f"r{counter}")
            if require_homogeneous and not is_homogeneous(new.lhs, new.rhs):
                raise RuleError(f"generated rule {new.id} is not homogeneous")
            rules[new.id] = new
            added.append(new)
            if not inter_reduce:
                continue
            one = RewritingSystem(sig, order, [new])
            from .rewrite import find_redexes, is_irreducible

            for rid in list(rules):
                if rid == new.id:
                    continue
                old = rules[rid]
                if find_redexes(old.lhs, one):
                    del rules[rid]
                    work.append(LinComb.monomial(old.lhs) - old.rhs)
                elif not is_irreducible(old.rhs, one):
                    rhs = normal_form(old.rhs, current_system())
                    del rules[rid]
                    if rhs == LinComb.monomial(old.lhs):
                        continue
                    rules[rid] = make_rule(rid, old.lhs, rhs, order)
        return added

    while heap:
        if deadline is not None and time.monotonic() > deadline:
            return CompletionState(current_system(), "budget", max_order, log)
        (key, _, amb) = heapq.heappop(heap)
        if amb.rule1 not in rules or amb.rule2 not in rules:
            continue
        outcome = resolve(amb, current_system())
        if isinstance(outcome, Resolved):
            log.append((amb, "resolved"))
            continue
        if isinstance(outcome, Failure):
            log.append((amb, "order_failure"))
            return CompletionState(
                current_system(), "order_failure", max_order, log, outcome
            )
        try:
            added = adjoin(outcome.diff)
        except IncomparableLeading as e:
            log.append((amb, "order_failure"))
            return CompletionState(
                current_system(),
                "order_failure",
                max_order,
                log,
                Failure(outcome.diff, str(e)),
            )
        log.append((amb, "new_rule " + ",".join(r.id for r in added)))
        for new in added:
            for other in list(rules.values()):
                push_overlaps(new, other)
    return CompletionState(current_system(), "complete", max_order, log)
