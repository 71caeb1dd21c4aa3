"""Truncated bivariate power series and Hilbert-series computation.

The counting variables are a (unary-vertex degree) and m (binary-vertex
degree); all coefficients are exact rationals.  Series are computed over
plane monomials directly, so the coefficients are the plane counts.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .automata import BottomUpAutomaton, determinize, grammar_from_rules


class BivariateSeries:
    """Coefficients for total degree <= D; zero coefficients not stored."""

    __slots__ = ("D", "coeffs")

    def __init__(self, D: int, coeffs: dict | None = None):
        self.D = D
        self.coeffs = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i + j <= D and c:
                    self.coeffs[(i, j)] = Fraction(c)

    @staticmethod
    def zero(D: int) -> "BivariateSeries":
        return BivariateSeries(D)

    @staticmethod
    def one(D: int) -> "BivariateSeries":
        return BivariateSeries(D, {(0, 0): 1})

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, BivariateSeries)
            and self.D == other.D
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        D = min(self.D, other.D)
        out = BivariateSeries(D)
        for key in set(self.coeffs) | set(other.coeffs):
            if key[0] + key[1] > D:
                continue
            c = self.coeffs.get(key, 0) + other.coeffs.get(key, 0)
            if c:
                out.coeffs[key] = c
        return out

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "BivariateSeries":
        out = BivariateSeries(self.D)
        if c:
            out.coeffs = {k: Fraction(c) * v for k, v in self.coeffs.items()}
        return out

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        D = min(self.D, other.D)
        out = BivariateSeries(D)
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j > D:
                    continue
                key = (i, j)
                s = out.coeffs.get(key, 0) + c1 * c2
                if s:
                    out.coeffs[key] = s
                else:
                    out.coeffs.pop(key, None)
        return out

    def shift(self, da: int, dm: int) -> "BivariateSeries":
        """Multiply by a^da * m^dm."""
        out = BivariateSeries(self.D)
        for (i, j), c in self.coeffs.items():
            if i + da + j + dm <= self.D:
                out.coeffs[(i + da, j + dm)] = c
        return out

    def __str__(self):
        return format_series(self)


def format_series(x: BivariateSeries) -> str:
    """One line `a^i m^j<TAB>p/q` per coefficient with i+j <= D, in graded
    lexicographic order; zero coefficients are included for completeness."""
    lines = []
    for total in range(x.D + 1):
        for i in range(total + 1):
            j = total - i
            lines.append(f"a^{i} m^{j}\t{x.coefficient(i, j)}")
    return "\n".join(lines) + "\n"


def series_sub(x: BivariateSeries, y: BivariateSeries) -> BivariateSeries:
    return x - y


def free_series(D: int) -> BivariateSeries:
    """Closed-form count of all plane monomials over {m/2, a/1}: the
    coefficient of a^k m^l is (1/(l+1)) * (k+2l)!/(k! l! l!)."""
    out = BivariateSeries(D)
    for k in range(D + 1):
        for l in range(D - k + 1):
            out.coeffs[(k, l)] = Fraction(
                factorial(k + 2 * l), factorial(k) * factorial(l) ** 2 * (l + 1)
            )
    return out


def solve_series(aut: BottomUpAutomaton, D: int) -> dict:
    """Least fixed point of the generating-function system
    G_b = [b = leaf] + a * sum_{f_a(c)=b} G_c + m * sum_{f_m(c,d)=b} G_c G_d,
    truncated at total degree D.  D+1 iterations reach the fixed point since
    every production raises total degree by exactly one."""
    a_into = {b: [] for b in aut.states}
    m_into = {b: [] for b in aut.states}
    for c, b in aut.f_a.items():
        if b in a_into:
            a_into[b].append(c)
    for (c, d), b in aut.f_m.items():
        if b in m_into:
            m_into[b].append((c, d))
    g = {b: BivariateSeries.zero(D) for b in aut.states}
    base = {
        b: (BivariateSeries.one(D) if b == aut.leaf_state else BivariateSeries.zero(D))
        for b in aut.states
    }
    for _ in range(D + 1):
        new = {}
        for b in aut.states:
            acc = base[b]
            for c in a_into[b]:
                acc = acc + g[c].shift(1, 0)
            for c, d in m_into[b]:
                acc = acc + (g[c] * g[d]).shift(0, 1)
            new[b] = acc
        g = new
    return g


def hilbert_series(rules, D: int) -> BivariateSeries:
    """Count of irreducible plane monomials by grading: the sum of G_b over
    non-accepting (reducible-free) automaton states."""
    aut = determinize(grammar_from_rules(rules))
    g = solve_series(aut, D)
    out = BivariateSeries.zero(D)
    for b in aut.states:
        if not aut.accepting(b):
            out = out + g[b]
    return out


def unstable_degrees(stable_gradings, D: int) -> list[tuple[int, int]]:
    """Degrees (i, j) with i+j <= D not guaranteed stable by any processed
    grading (k, l) via i <= k and j <= l.  An empty ``stable_gradings``
    means nothing was declared and every nonzero a-degree is suspect."""
    out = []
    for total in range(D + 1):
        for i in range(total + 1):
            j = total - i
            if i == 0:
                continue  # no rule pattern is a-free; these stay free counts
            if not any(i <= k and j <= l for k, l in stable_gradings):
                out.append((i, j))
    return out
