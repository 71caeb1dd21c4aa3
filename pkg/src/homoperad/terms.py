"""Polish-notation contexts over a signature: the free operad of monomials.

A context is stored as a flat tuple of tokens in (left-)Polish order.
Operation symbols are strings, input boxes are positive ints.  Structural
equality and hashing are therefore O(n) tuple operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial


class TermError(ValueError):
    """Malformed signature, term, or composition request."""


@dataclass(frozen=True)
class Signature:
    """Operation symbols with arities.  Constants (arity 0) are allowed."""

    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self):
        seen = {}
        for name, arity in self.symbols:
            if not name or any(ch.isspace() or ch.isdigit() for ch in name):
                raise TermError(f"bad symbol name {name!r}")
            if name in seen:
                raise TermError(f"duplicate symbol {name!r}")
            if arity < 0:
                raise TermError(f"negative arity for {name!r}")
            seen[name] = arity
        object.__setattr__(self, "_arity", seen)

    def arity(self, name: str) -> int:
        try:
            return self._arity[name]
        except KeyError:
            raise TermError(f"unknown symbol {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._arity

    @staticmethod
    def parse(text: str) -> "Signature":
        """Read the `op <name> <arity>` line format; `#` starts a comment."""
        syms = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3 or parts[0] != "op":
                raise TermError(f"line {lineno}: expected `op <name> <arity>`")
            syms.append((parts[1], int(parts[2])))
        return Signature(tuple(syms))

    def __str__(self) -> str:
        return "\n".join(f"op {n} {a}" for n, a in self.symbols)


HOM_SIGNATURE = Signature((("m", 2), ("a", 1)))
ASS_SIGNATURE = Signature((("m", 2),))

Token = str | int  # symbol name or box index


class Context:
    """An n-context: a Polish word using each of Box_1..Box_n exactly once."""

    __slots__ = ("word", "sig", "arity", "_hash")

    def __init__(self, word: tuple[Token, ...], sig: Signature, _checked=False):
        self.word = word
        self.sig = sig
        if _checked:
            self.arity = sum(1 for t in word if isinstance(t, int))
        else:
            boxes = [t for t in word if isinstance(t, int)]
            n = len(boxes)
            if sorted(boxes) != list(range(1, n + 1)):
                raise TermError(f"boxes must be 1..{n} each once, got {boxes}")
            need = 1
            for t in word:
                if need <= 0:
                    raise TermError("trailing tokens after complete term")
                need += (0 if isinstance(t, int) else sig.arity(t)) - 1
            if need != 0:
                raise TermError("truncated Polish term")
            self.arity = n
        self._hash = hash(word)

    def __eq__(self, other):
        return isinstance(other, Context) and self.word == other.word

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Context({print_term(self.word)!r})"

    def __str__(self):
        return print_term(self.word)

    @property
    def order(self) -> int:
        """Vertex count: number of non-box tokens."""
        return len(self.word) - self.arity

    def is_plane(self) -> bool:
        expect = 1
        for t in self.word:
            if isinstance(t, int):
                if t != expect:
                    return False
                expect += 1
        return True

    def subterm_end(self, start: int) -> int:
        """Index one past the subterm whose root token sits at ``start``."""
        need, i = 1, start
        word, sig = self.word, self.sig
        while need:
            t = word[i]
            need += (0 if isinstance(t, int) else sig.arity(t)) - 1
            i += 1
        return i


def parse(text: str, sig: Signature) -> Context:
    """Parse whitespace-separated Polish tokens; digits 1-9 are boxes and
    bracketed decimals like [12] are boxes with larger indices."""
    word = []
    for tok in text.split():
        if len(tok) == 1 and tok.isdigit():
            if tok == "0":
                raise TermError("box indices start at 1")
            word.append(int(tok))
        elif tok.startswith("[") and tok.endswith("]"):
            idx = int(tok[1:-1])
            if idx < 1:
                raise TermError("box indices start at 1")
            word.append(idx)
        else:
            if tok not in sig:
                raise TermError(f"unknown symbol {tok!r}")
            word.append(tok)
    return Context(tuple(word), sig)


def print_term(word: tuple[Token, ...]) -> str:
    out = []
    for t in word:
        if isinstance(t, int):
            out.append(str(t) if t <= 9 else f"[{t}]")
        else:
            out.append(t)
    return " ".join(out)


def compose(outer: Context, inners: list[Context]) -> Context:
    """Substitute ``inners[i-1]`` for Box_i of ``outer`` and renumber boxes,
    keeping relative order within each inner and ordering blocks by i."""
    if len(inners) != outer.arity:
        raise TermError(f"need {outer.arity} inners, got {len(inners)}")
    offsets = [0] * (outer.arity + 1)
    for i, inner in enumerate(inners):
        offsets[i + 1] = offsets[i] + inner.arity
    word: list[Token] = []
    for t in outer.word:
        if isinstance(t, int):
            off = offsets[t - 1]
            for u in inners[t - 1].word:
                word.append(u + off if isinstance(u, int) else u)
        else:
            word.append(t)
    return Context(tuple(word), outer.sig)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise TermError(f"not a bijection of 1..{n}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, 1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def after(self, other: "Permutation") -> "Permutation":
        """Composite self∘other (apply ``other`` first)."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.degree + 1)))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))


def act(sigma: Permutation, c: Context) -> Context:
    """Right action: Box_i becomes Box_{sigma^-1(i)}."""
    if sigma.degree != c.arity:
        raise TermError(f"degree {sigma.degree} != arity {c.arity}")
    inv = sigma.inverse()
    word = tuple(inv(t) if isinstance(t, int) else t for t in c.word)
    return Context(word, c.sig, _checked=True)


def planarize(c: Context) -> tuple[Context, Permutation]:
    """Return the unique plane representative p and sigma with act(sigma, p) = c."""
    reading = [t for t in c.word if isinstance(t, int)]
    k = iter(range(1, c.arity + 1))
    word = tuple(next(k) if isinstance(t, int) else t for t in c.word)
    plane = Context(word, c.sig, _checked=True)
    # act replaces Box_k by Box_{sigma^-1(k)}, so sigma^-1 is the box reading.
    return plane, Permutation(tuple(reading)).inverse()


def grading(c: Context) -> tuple[int, int]:
    """(count of unary a-vertices, count of binary m-vertices)."""
    k = sum(1 for t in c.word if t == "a")
    l = sum(1 for t in c.word if t == "m")
    return k, l


def plane_count(k: int, l: int) -> int:
    """Closed-form number of plane {m,a}-contexts with k a's and l m's."""
    return factorial(k + 2 * l) // (factorial(k) * factorial(l) * factorial(l) * (l + 1))


@lru_cache(maxsize=None)
def _plane_words(k: int, l: int) -> tuple[tuple[Token, ...], ...]:
    if k == 0 and l == 0:
        return ((1,),)
    out = []
    if k > 0:
        out.extend(("a",) + w for w in _plane_words(k - 1, l))
    if l > 0:
        for k1 in range(k + 1):
            for l1 in range(l):
                for w1 in _plane_words(k1, l1):
                    n1 = sum(1 for t in w1 if isinstance(t, int))
                    for w2 in _plane_words(k - k1, l - 1 - l1):
                        shifted = tuple(t + n1 if isinstance(t, int) else t for t in w2)
                        out.append(("m",) + w1 + shifted)
    return tuple(out)


def enumerate_plane(k: int, l: int, limit: int = 20) -> list[Context]:
    """All plane contexts over {m/2, a/1} with k a-vertices and l m-vertices."""
    if k + l > limit:
        raise TermError(f"order {k + l} exceeds limit {limit}")
    return [Context(w, HOM_SIGNATURE, _checked=True) for w in _plane_words(k, l)]


@dataclass(frozen=True)
class WeightedTree:
    """A plane binary tree with natural weights on internal vertices only.

    ``shape`` is either an int (a leaf, carrying its input number) or a pair
    of subtrees; ``weights`` assigns each internal vertex, addressed by its
    root path (tuple of 0/1 steps), the number of unary wraps above it.
    """

    shape: object
    weights: tuple[tuple[tuple[int, ...], int], ...]

    def weight_map(self) -> dict:
        return dict(self.weights)


class WeightedTreeError(TermError):
    """The term applies the unary map directly to an input box."""


def to_weighted_tree(c: Context) -> WeightedTree:
    """Encode a hom-term as a weighted binary tree.  Partial: every a-token
    must sit above an m-vertex, since leaves carry no weight."""
    word = c.word
    weights = []

    def walk(i: int, path: tuple[int, ...]):
        wraps = 0
        while i < len(word) and word[i] == "a":
            wraps += 1
            i += 1
        t = word[i]
        if isinstance(t, int):
            if wraps:
                raise WeightedTreeError(
                    f"unary map applied to input box at token {i - wraps}"
                )
            return i + 1, t
        if t != "m":
            raise TermError(f"unsupported symbol {t!r} in weighted-tree encoding")
        weights.append((path, wraps))
        i, left = walk(i + 1, path + (0,))
        i, right = walk(i, path + (1,))
        return i, (left, right)

    end, shape = walk(0, ())
    assert end == len(word)
    return WeightedTree(shape, tuple(weights))


def from_weighted_tree(t: WeightedTree, sig: Signature = HOM_SIGNATURE) -> Context:
    wmap = t.weight_map()

    def build(node, path):
        if isinstance(node, int):
            return (node,)
        left, right = node
        return ("a",) * wmap[path] + ("m",) + build(left, path + (0,)) + build(
            right, path + (1,)
        )

    return Context(build(t.shape, ()), sig)
