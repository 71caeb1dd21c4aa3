"""Linear combinations of same-arity monomials: the free linear operad."""

from __future__ import annotations

from fractions import Fraction

from .terms import Context, Permutation, TermError, act, compose, print_term


class IncomparableLeading(ValueError):
    """The active term order cannot single out a leading monomial."""


class LinComb:
    """A finite Context -> Scalar map; zero coefficients are never stored."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: dict | None = None):
        self.arity = arity
        self.terms = {}
        if terms:
            for ctx, c in terms.items():
                if ctx.arity != arity:
                    raise TermError(
                        f"mixed arities {ctx.arity} and {arity} in one combination"
                    )
                if c:
                    self.terms[ctx] = c

    @staticmethod
    def monomial(ctx: Context, coeff=Fraction(1)) -> "LinComb":
        return LinComb(ctx.arity, {ctx: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, LinComb)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other: "LinComb") -> "LinComb":
        if self.arity != other.arity:
            raise TermError("arity mismatch in addition")
        terms = dict(self.terms)
        for ctx, c in other.terms.items():
            s = terms.get(ctx, 0) + c
            if s:
                terms[ctx] = s
            else:
                terms.pop(ctx, None)
        out = LinComb(self.arity)
        out.terms = terms
        return out

    def __neg__(self):
        out = LinComb(self.arity)
        out.terms = {ctx: -c for ctx, c in self.terms.items()}
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, c) -> "LinComb":
        out = LinComb(self.arity)
        if c:
            out.terms = {ctx: c * v for ctx, v in self.terms.items()}
        return out

    def act(self, sigma: Permutation) -> "LinComb":
        out = LinComb(self.arity)
        out.terms = {act(sigma, ctx): c for ctx, c in self.terms.items()}
        return out

    def support(self):
        return self.terms.keys()

    def __str__(self):
        if not self.terms:
            return "0"
        parts = sorted(self.terms.items(), key=lambda kv: _word_key(kv[0].word))
        out = []
        for i, (ctx, c) in enumerate(parts):
            sign = "-" if _is_negative(c) else "+"
            mag = -c if _is_negative(c) else c
            coeff = "" if mag == 1 else f"{_fmt(mag)} * "
            if i == 0:
                out.append(("-" if sign == "-" else "") + coeff + print_term(ctx.word))
            else:
                out.append(f"{sign} {coeff}{print_term(ctx.word)}")
        return " ".join(out)

    __repr__ = __str__


def _word_key(word):
    return tuple((0, t, "") if isinstance(t, int) else (1, 0, t) for t in word)


def _is_negative(c) -> bool:
    if isinstance(c, Fraction):
        return c < 0
    return False  # rational functions print with explicit sign inside


def _fmt(c) -> str:
    from .scalars import format_scalar

    s = format_scalar(c)
    return f"({s})" if any(op in s for op in " +-/") and not s.lstrip("-").replace("/", "").isdigit() else s


def compose_linear(outer: LinComb, inners: list[LinComb]) -> LinComb:
    """Multilinear extension of monomial composition."""
    if len(inners) != outer.arity:
        raise TermError(f"need {outer.arity} inners, got {len(inners)}")
    result_arity = sum(x.arity for x in inners)
    out = LinComb(result_arity)
    for octx, oc in outer.terms.items():
        stack = [(oc, [])]
        for inner in inners:
            stack = [
                (c * ic, picked + [ictx])
                for c, picked in stack
                for ictx, ic in inner.terms.items()
            ]
        for c, picked in stack:
            ctx = compose(octx, picked)
            s = out.terms.get(ctx, 0) + c
            if s:
                out.terms[ctx] = s
            else:
                out.terms.pop(ctx, None)
    return out


def leading_monomial(x: LinComb, order) -> tuple[Context, object]:
    """The unique order-maximum of the support, or IncomparableLeading."""
    if not x.terms:
        raise ValueError("empty linear combination has no leading monomial")
    lead = None
    for ctx in x.terms:
        if lead is None:
            lead = ctx
            continue
        rel = order.compare(ctx, lead)
        if rel == "GT":
            lead = ctx
        elif rel == "INC":
            raise IncomparableLeading(
                f"cannot compare {ctx} with {lead} under {order.name}"
            )
    # confirm maximality against the whole support (order is only partial)
    for ctx in x.terms:
        if ctx is lead:
            continue
        if order.compare(lead, ctx) != "GT":
            raise IncomparableLeading(
                f"no unique maximum: {lead} vs {ctx} under {order.name}"
            )
    return lead, x.terms[lead]
