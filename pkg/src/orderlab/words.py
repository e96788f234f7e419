"""Words in the free group F on the two generators x and t.

Words are stored run-length encoded as ``(generator, exponent)`` pairs and
are freely reduced eagerly on construction, so structural equality is
equality in F.  Exponents are ordinary Python integers (arbitrary
precision).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import (
    DegenerateRelator,
    EmptyRelator,
    IdentityInput,
    WordSyntaxError,
)

GENERATORS = ("x", "t")


def _reduce_runs(runs: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[tuple[str, int]] = []
    for g, e in runs:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            g0, e0 = stack.pop()
            e += e0
            if e == 0:
                continue
        stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; adjacent runs always use distinct generators."""

    runs: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for g, _e in self.runs:
            if g not in GENERATORS:
                raise ValueError(f"unknown generator {g!r}")
        reduced = _reduce_runs(self.runs)
        if reduced != self.runs:
            object.__setattr__(self, "runs", reduced)

    @property
    def is_identity(self) -> bool:
        return not self.runs

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.runs + other.runs)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.runs)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, c: "Word") -> "Word":
        """self conjugated by c, i.e. c^-1 * self * c."""
        return c.inverse() * self * c

    def length(self) -> int:
        return sum(abs(e) for _g, e in self.runs)

    def letters(self) -> Iterator[tuple[str, int]]:
        """Yield single-letter factors (g, +1|-1) left to right."""
        for g, e in self.runs:
            s = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield (g, s)

    def render(self) -> str:
        if not self.runs:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.runs)

    def __str__(self) -> str:
        return self.render()


def identity() -> Word:
    return Word()


def generator(name: str, exponent: int = 1) -> Word:
    return Word(((name, exponent),))


X = generator("x")
T = generator("t")


def conjugate(u: Word, v: Word) -> Word:
    """u^v = v^-1 u v."""
    return u.conj(v)


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v."""
    return u.inverse() * v.inverse() * u * v


def free_reduce(w: Word) -> Word:
    """Words reduce on construction; provided for explicit call sites."""
    return Word(w.runs)


# ---------------------------------------------------------------------------
# parsing
#
# word := item+ ; item := atom pow? ;
# atom := 'x' | 't' | '1' | '(' word ')' | 'c(' word ',' word ')' | 'k(' word ',' word ')'
# pow  := '^' int
#
# c(u,v) denotes v^-1 u v and k(u,v) the commutator u^-1 v^-1 u v; '1' is the
# identity (render() emits it, so parse accepts it).
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> WordSyntaxError:
        return WordSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        digits = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer exponent")
        return int(self.text[start:self.pos])

    def parse_word(self) -> Word:
        items: list[Word] = []
        while True:
            self.skip_ws()
            ch = self.peek()
            if ch == "" or ch in "),":
                break
            items.append(self.parse_item())
        if not items:
            raise self.error("expected a word")
        result = identity()
        for item in items:
            result = result * item
        return result

    def parse_item(self) -> Word:
        atom = self.parse_atom()
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            return atom ** self.parse_int()
        return atom

    def parse_atom(self) -> Word:
        self.skip_ws()
        ch = self.peek()
        if ch == "1":
            self.pos += 1
            return identity()
        if ch in ("x", "t"):
            self.pos += 1
            return generator(ch)
        if ch == "(":
            self.pos += 1
            inner = self.parse_word()
            self.expect(")")
            return inner
        if ch in ("c", "k"):
            mark = self.pos
            self.pos += 1
            if self.peek() != "(":
                self.pos = mark
                raise self.error(f"{ch!r} must be followed by '('")
            self.pos += 1
            u = self.parse_word()
            self.expect(",")
            v = self.parse_word()
            self.expect(")")
            return conjugate(u, v) if ch == "c" else commutator(u, v)
        raise self.error(f"unexpected character {ch!r}" if ch else "unexpected end of input")


def parse_word(text: str) -> Word:
    """Parse the word grammar; raises WordSyntaxError with a position."""
    parser = _Parser(text)
    word = parser.parse_word()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input")
    return word


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------


def exponent_sum(w: Word, gen: str) -> int:
    return sum(e for g, e in w.runs if g == gen)


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Return (core, conjugator) with w == conjugator^-1 * core * conjugator."""
    runs = list(w.runs)
    conj: list[tuple[str, int]] = []
    while len(runs) >= 2 and runs[0][0] == runs[-1][0] and (runs[0][1] > 0) != (runs[-1][1] > 0):
        g, a = runs[0]
        _g, b = runs[-1]
        k = min(abs(a), abs(b))
        s = 1 if b > 0 else -1
        conj.insert(0, (g, s * k))
        a += s * k
        b -= s * k
        if b == 0:
            runs.pop()
        else:
            runs[-1] = (g, b)
        if a == 0:
            runs.pop(0)
        else:
            runs[0] = (g, a)
    return Word(tuple(runs)), Word(tuple(conj))


# ---------------------------------------------------------------------------
# basis changes (elementary Nielsen-style substitutions)
# ---------------------------------------------------------------------------

ELEMENTARY_KINDS = ("x_to_xtk", "t_to_txk", "swap", "invert_x", "invert_t")


@dataclass(frozen=True)
class Elementary:
    """One invertible substitution: x->x t^k, t->t x^k, swap, or an inversion."""

    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in ELEMENTARY_KINDS:
            raise ValueError(f"unknown elementary kind {self.kind!r}")

    def images(self) -> dict[str, Word]:
        if self.kind == "x_to_xtk":
            return {"x": Word((("x", 1), ("t", self.k))), "t": T}
        if self.kind == "t_to_txk":
            return {"x": X, "t": Word((("t", 1), ("x", self.k)))}
        if self.kind == "swap":
            return {"x": T, "t": X}
        if self.kind == "invert_x":
            return {"x": X.inverse(), "t": T}
        return {"x": X, "t": T.inverse()}

    def inverse(self) -> "Elementary":
        if self.kind == "x_to_xtk":
            return Elementary("x_to_xtk", -self.k)
        if self.kind == "t_to_txk":
            return Elementary("t_to_txk", -self.k)
        return self


BasisChange = tuple[Elementary, ...]


def inverse_basis_change(bc: BasisChange) -> BasisChange:
    return tuple(el.inverse() for el in reversed(bc))


def substitute(w: Word, bc: Iterable[Elementary]) -> Word:
    """Image of w under the automorphism given by the substitutions, in order."""
    for el in bc:
        images = el.images()
        acc = identity()
        for g, e in w.runs:
            acc = acc * images[g] ** e
        w = acc
    return w


def zero_t_weight(w: Word) -> tuple[Word, BasisChange]:
    """Change generators so the t-exponent sum vanishes.

    The elementary steps run the Euclidean algorithm on the weight pair
    (sigma_x, sigma_t); when sigma_t is already zero the change is empty.
    """
    if w.is_identity:
        raise EmptyRelator("cannot normalize the identity relator")
    sx = exponent_sum(w, "x")
    st = exponent_sum(w, "t")
    bc: list[Elementary] = []
    while st != 0:
        if sx == 0:
            bc.append(Elementary("swap"))
            sx, st = st, 0
        elif st % sx == 0:
            bc.append(Elementary("x_to_xtk", -(st // sx)))
            st = 0
        else:
            k = -(sx // st)
            bc.append(Elementary("t_to_txk", k))
            sx += k * st
            bc.append(Elementary("swap"))
            sx, st = st, sx
    w2 = substitute(w, bc)
    assert exponent_sum(w2, "t") == 0
    if not any(g == "x" for g, _e in w2.runs):
        raise DegenerateRelator("relator involves no x after the basis change")
    return w2, tuple(bc)


def is_proper_power(w: Word) -> Optional[tuple[Word, int]]:
    """Return (root, k) with w == root**k and k maximal >= 2, else None.

    A cyclically reduced word is a proper power exactly when its letter
    sequence is a full repetition of a shorter block; the conjugator is
    carried over to the root.
    """
    if w.is_identity:
        raise IdentityInput("the identity has no well-defined root")
    core, conj = cyclic_reduce(w)
    letters = list(core.letters())
    n = len(letters)
    for period in range(1, n):
        if n % period:
            continue
        block = letters[:period]
        if block * (n // period) == letters:
            root_core = Word(tuple(block))
            root = root_core.conj(conj)
            return root, n // period
    return None
