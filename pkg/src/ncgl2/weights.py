"""The weight monoid Lambda and its two partial orders.

Elements are alternating words in the symbols delta (invertible, rendered
D, inverse Di) and d.  The canonical form is a letter tuple over
{D, Di, d} with no adjacent D Di or Di D pair; multiplication is
concatenation followed by cancellation.

Lambda carries a length function ell, a weight map wt into the character
lattice of the diagonal torus, two mutually inverse star operations, and
two orders: le2 compares weights, le1 is generated by two covering moves
that each strictly drop ell.

>>> from ncgl2.weights import parse_lambda
>>> lam = parse_lambda("d.Di.d")
>>> lam.ell(), str(lam.wt())
(3, 'a^-1*d')
>>> [str(mu) for mu in sorted(lam.covers_down(), key=lambda m: str(m))]
['1']
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Weight",
    "LambdaWord",
    "LambdaSyntaxError",
    "parse_lambda",
    "parse_weight",
    "render_weight",
    "weight_star",
    "weight_sigma",
    "weight_key",
    "is_dominant",
    "enumerate_lambda",
    "pi_below",
    "is_saturated",
]

_LAMBDA_LETTERS = ("D", "Di", "d")
_LAMBDA_ORDER = {"D": 0, "Di": 1, "d": 2}
_INVERSE = {"D": "Di", "Di": "D"}


class Weight(NamedTuple):
    """A torus weight a^i d^j."""

    i: int
    j: int

    def __str__(self) -> str:
        return render_weight(self)


def weight_key(w: Weight) -> tuple[int, int]:
    """Sort key for the weight order: compare j first, then i."""
    return (w.j, w.i)


def weight_star(w: Weight) -> Weight:
    return Weight(-w.j, -w.i)


def weight_sigma(w: Weight) -> Weight:
    return Weight(w.j, w.i)


def is_dominant(w: Weight) -> bool:
    return w.j >= w.i


def render_weight(w: Weight) -> str:
    if w.i == 0 and w.j == 0:
        return "1"
    parts = []
    for name, exp in (("a", w.i), ("d", w.j)):
        if exp == 1:
            parts.append(name)
        elif exp != 0:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


def _reduce(letters: Iterable[str]) -> tuple[str, ...]:
    stack: list[str] = []
    for letter in letters:
        if stack and _INVERSE.get(letter) == stack[-1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class LambdaWord:
    """A canonical element of Lambda.

    Stored as the reduced letter tuple.  atoms() groups the letters into
    maximal runs: ('delta', x) with x a nonzero integer, or ('d', y) with
    y >= 1, alternating in kind.
    """

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[str] = ()):
        letters = tuple(letters)
        for letter in letters:
            if letter not in _LAMBDA_ORDER:
                raise ValueError(f"unknown Lambda letter {letter!r}")
        self._letters = _reduce(letters)

    @classmethod
    def one(cls) -> "LambdaWord":
        return cls(())

    @classmethod
    def from_atoms(cls, atoms: Iterable[tuple[str, int]]) -> "LambdaWord":
        letters: list[str] = []
        for kind, n in atoms:
            if kind == "delta":
                letters.extend(("D" if n > 0 else "Di") * abs(n))
            elif kind == "d":
                letters.extend("d" * n)
            else:
                raise ValueError(f"unknown atom kind {kind!r}")
        return cls(letters)

    @property
    def letters(self) -> tuple[str, ...]:
        return self._letters

    def atoms(self) -> tuple[tuple[str, int], ...]:
        out: list[tuple[str, int]] = []
        for letter in self._letters:
            kind = "d" if letter == "d" else "delta"
            step = 1 if letter in ("D", "d") else -1
            if out and out[-1][0] == kind and (kind == "d" or (out[-1][1] > 0) == (step > 0)):
                out[-1] = (kind, out[-1][1] + step)
            else:
                out.append((kind, step))
        return tuple(out)

    def ell(self) -> int:
        return len(self._letters)

    def is_one(self) -> bool:
        return not self._letters

    def wt(self) -> Weight:
        delta_sum = sum(1 if l == "D" else -1 for l in self._letters if l != "d")
        d_count = sum(1 for l in self._letters if l == "d")
        return Weight(delta_sum, delta_sum + d_count)

    def __mul__(self, other: "LambdaWord") -> "LambdaWord":
        if not isinstance(other, LambdaWord):
            return NotImplemented
        word = LambdaWord.__new__(LambdaWord)
        word._letters = _reduce(self._letters + other._letters)
        return word

    def __pow__(self, n: int) -> "LambdaWord":
        if n < 0:
            raise ValueError("Lambda is a monoid; only d-free words are invertible")
        result = LambdaWord.one()
        for _ in range(n):
            result = result * self
        return result

    def star(self) -> "LambdaWord":
        """The star anti-homomorphism: d -> d.Di, delta -> delta inverse."""
        images = {"d": ("d", "Di"), "D": ("Di",), "Di": ("D",)}
        letters: list[str] = []
        for letter in reversed(self._letters):
            letters.extend(images[letter])
        return LambdaWord(letters)

    def star_inv(self) -> "LambdaWord":
        """The inverse anti-homomorphism: d -> Di.d, delta -> delta inverse."""
        images = {"d": ("Di", "d"), "D": ("Di",), "Di": ("D",)}
        letters: list[str] = []
        for letter in reversed(self._letters):
            letters.extend(images[letter])
        return LambdaWord(letters)

    def covers_down(self) -> set["LambdaWord"]:
        """Elements reached by one downward move.

        Move one deletes a contiguous d.Di.d; move two replaces a
        contiguous d.d by D.  Both strictly decrease ell.
        """
        found: set[LambdaWord] = set()
        letters = self._letters
        n = len(letters)
        for p in range(n - 2):
            if letters[p : p + 3] == ("d", "Di", "d"):
                found.add(LambdaWord(letters[:p] + letters[p + 3 :]))
        for p in range(n - 1):
            if letters[p : p + 2] == ("d", "d"):
                found.add(LambdaWord(letters[:p] + ("D",) + letters[p + 2 :]))
        return found

    def le1(self, other: "LambdaWord") -> bool:
        """Whether self <= other in the move order (reflexive)."""
        if self == other:
            return True
        return self in pi_below(other)

    def lt1(self, other: "LambdaWord") -> bool:
        return self != other and self in pi_below(other)

    def le2(self, other: "LambdaWord") -> bool:
        """Whether self <= other in the weight order (reflexive)."""
        if self == other:
            return True
        return weight_key(self.wt()) < weight_key(other.wt())

    def __eq__(self, other):
        return isinstance(other, LambdaWord) and self._letters == other._letters

    def __hash__(self):
        return hash(self._letters)

    def sort_key(self) -> tuple:
        return (len(self._letters), tuple(_LAMBDA_ORDER[l] for l in self._letters))

    def __str__(self) -> str:
        if not self._letters:
            return "1"
        parts = []
        for kind, n in self.atoms():
            if kind == "d":
                parts.append("d" if n == 1 else f"d^{n}")
            elif n > 0:
                parts.append("D" if n == 1 else f"D^{n}")
            else:
                parts.append("Di" if n == -1 else f"Di^{-n}")
        return ".".join(parts)

    def __repr__(self):
        return f"LambdaWord({str(self)!r})"


class LambdaSyntaxError(ValueError):
    """Raised on malformed Lambda or weight expressions; column is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"syntax error at column {column}: {message}")
        self.column = column


def parse_lambda(text: str) -> LambdaWord:
    """Parse dot-separated blocks: 'd.Di.d^2', 'D^3', '1'.

    The result is reduced, so 'd.D.Di.d' parses to d^2.
    """
    stripped = text.strip()
    if stripped == "1":
        return LambdaWord.one()
    letters: list[str] = []
    i = 0
    n = len(text)
    expect_block = True
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        if not expect_block:
            if text[i] == ".":
                i += 1
                expect_block = True
                continue
            raise LambdaSyntaxError("expected '.'", i + 1)
        if text.startswith("Di", i):
            letter, i = "Di", i + 2
        elif text[i] == "D":
            letter, i = "D", i + 1
        elif text[i] == "d":
            letter, i = "d", i + 1
        else:
            raise LambdaSyntaxError("expected d, D, or Di", i + 1)
        count = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j == i:
                raise LambdaSyntaxError("expected a positive integer exponent", i + 1)
            count = int(text[i:j])
            if count < 1:
                raise LambdaSyntaxError("expected a positive integer exponent", i + 1)
            i = j
        letters.extend([letter] * count)
        expect_block = False
    if expect_block:
        raise LambdaSyntaxError("expected a block", n + 1)
    return LambdaWord(letters)


def parse_weight(text: str) -> Weight:
    """Parse a torus weight like 'a^2*d^-1', 'a*d', 'd^3', or '1'."""
    stripped = text.strip()
    if stripped == "1":
        return Weight(0, 0)
    i_total = 0
    j_total = 0
    i = 0
    n = len(text)
    expect_factor = True
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        if not expect_factor:
            if text[i] == "*":
                i += 1
                expect_factor = True
                continue
            raise LambdaSyntaxError("expected '*'", i + 1)
        if text[i] not in ("a", "d"):
            raise LambdaSyntaxError("expected a or d", i + 1)
        name = text[i]
        i += 1
        exponent = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            if j < n and text[j] == "-":
                j += 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i or text[i:j] == "-":
                raise LambdaSyntaxError("expected an integer exponent", i + 1)
            exponent = int(text[i:j])
            i = j
        if name == "a":
            i_total += exponent
        else:
            j_total += exponent
        expect_factor = False
    if expect_factor:
        raise LambdaSyntaxError("expected a factor", n + 1)
    return Weight(i_total, j_total)


def enumerate_lambda(max_ell: int) -> list[LambdaWord]:
    """All elements with ell <= max_ell, ordered by ell then lexicographically
    with D < Di < d."""
    out: list[LambdaWord] = []
    layer: list[tuple[str, ...]] = [()]
    out.append(LambdaWord.one())
    for _ in range(max_ell):
        next_layer: list[tuple[str, ...]] = []
        for word in layer:
            for letter in _LAMBDA_LETTERS:
                if word and _INVERSE.get(letter) == word[-1]:
                    continue
                next_layer.append(word + (letter,))
        next_layer.sort(key=lambda w: tuple(_LAMBDA_ORDER[l] for l in w))
        for word in next_layer:
            lam = LambdaWord.__new__(LambdaWord)
            lam._letters = word
            out.append(lam)
        layer = next_layer
    return out


def pi_below(lam: LambdaWord) -> set[LambdaWord]:
    """All mu strictly below lam in the move order."""
    seen: set[LambdaWord] = set()
    frontier = [lam]
    while frontier:
        nxt: list[LambdaWord] = []
        for word in frontier:
            for cover in word.covers_down():
                if cover not in seen:
                    seen.add(cover)
                    nxt.append(cover)
        frontier = nxt
    return seen


def is_saturated(collection: Iterable[LambdaWord]) -> bool:
    """Whether the set is closed under downward moves."""
    pool = set(collection)
    return all(cover in pool for lam in pool for cover in lam.covers_down())


if __name__ == "__main__":
    import doctest

    doctest.testmod()
    for n in range(4):
        print(f"Lambda words with ell <= {n}: {len(enumerate_lambda(n))}")
    lam = parse_lambda("d^3")
    print(f"covers below d^3: {sorted(str(m) for m in lam.covers_down())}")
    print(f"pi strictly below d^3: {sorted(str(m) for m in pi_below(lam))}")
