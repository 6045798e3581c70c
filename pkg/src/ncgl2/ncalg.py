"""The algebra O of the universal quantum group of 2x2 matrices.

O is generated by the matrix entries a, b, c, d and a central invertible
element D (rendered as the determinant delta) with inverse Di, subject to
ten relations.  Oriented by the degree-then-lex order with
Di < D < a < b < c < d, they form a confluent, terminating rewrite system,
so every element has a unique normal form.

>>> from ncgl2.ncalg import parse_expression
>>> print(parse_expression("d*a"))
b*c + D
>>> print(parse_expression("d*a - b*c"))
D

Words are tuples of letter names, elements are dicts mapping normal words
to Fractions.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "LETTERS",
    "LETTER_ORDER",
    "RULES",
    "NCElement",
    "TensorElement",
    "ExprSyntaxError",
    "normal_form",
    "normal_form_word",
    "is_normal_word",
    "word_key",
    "render_word",
    "render_element",
    "parse_expression",
    "enumerate_basis",
    "enumerate_basis_by_pattern",
    "check_confluence",
    "coproduct",
    "coproduct_leg",
    "counit",
    "counit_leg",
    "antipode",
    "antipode_inv",
    "antipode_leg",
    "multiply_legs",
    "tensor_of",
    "grouplike_words",
    "one",
    "gen",
]

# Letter names.  D is the determinant delta, Di its inverse.
LETTERS = ("Di", "D", "a", "b", "c", "d")
LETTER_ORDER = {letter: index for index, letter in enumerate(LETTERS)}

# Matrix position of the four entry letters: a, b sit in row 1, c, d in
# row 2; a, c sit in column 1, b, d in column 2.
ROW = {"a": 1, "b": 1, "c": 2, "d": 2}
COL = {"a": 1, "b": 2, "c": 1, "d": 2}

Word = tuple  # tuple of letter names

# The ten oriented rules.  Left sides are words, right sides map words to
# integer coefficients.  Each rule strictly decreases the deglex order.
RULES: tuple[tuple[Word, dict[Word, int]], ...] = (
    (("c", "a"), {("a", "c"): 1}),
    (("d", "b"), {("b", "d"): 1}),
    (("d", "a"), {("b", "c"): 1, ("D",): 1}),
    (("c", "b"), {("a", "d"): 1, ("D",): -1}),
    (("D", "Di"), {(): 1}),
    (("Di", "D"), {(): 1}),
    (("b", "Di", "a"), {("a", "Di", "b"): 1}),
    (("d", "Di", "c"), {("c", "Di", "d"): 1}),
    (("b", "Di", "c"), {("a", "Di", "d"): 1, (): -1}),
    (("d", "Di", "a"), {("c", "Di", "b"): 1, (): 1}),
)

_LHS_BY_LENGTH: dict[int, dict[Word, dict[Word, int]]] = {}
for _lhs, _rhs in RULES:
    _LHS_BY_LENGTH.setdefault(len(_lhs), {})[_lhs] = _rhs

_MAX_LHS_LEN = max(_LHS_BY_LENGTH)


def word_key(word: Word) -> tuple:
    """Sort key realizing the deglex order: length first, then letters."""
    return (len(word), tuple(LETTER_ORDER[letter] for letter in word))


def _first_redex(word: Word):
    """Leftmost rule match, or None.  At most one rule matches a position."""
    n = len(word)
    for i in range(n):
        for length, table in _LHS_BY_LENGTH.items():
            if i + length <= n:
                rhs = table.get(word[i : i + length])
                if rhs is not None:
                    return i, length, rhs
    return None


def is_normal_word(word: Word) -> bool:
    return _first_redex(word) is None


_NF_CACHE: dict[Word, dict[Word, Fraction]] = {}


def normal_form_word(word: Word) -> dict[Word, Fraction]:
    """Normal form of a single word as a dict of normal words to Fractions.

    Iterative so that long reduction chains cannot overflow the stack;
    every intermediate word is cached.
    """
    word = tuple(word)
    cached = _NF_CACHE.get(word)
    if cached is not None:
        return cached
    stack = [word]
    while stack:
        w = stack[-1]
        if w in _NF_CACHE:
            stack.pop()
            continue
        redex = _first_redex(w)
        if redex is None:
            _NF_CACHE[w] = {w: Fraction(1)}
            stack.pop()
            continue
        i, length, rhs = redex
        prefix, suffix = w[:i], w[i + length :]
        children = [(prefix + rw + suffix, rc) for rw, rc in rhs.items()]
        missing = [cw for cw, _ in children if cw not in _NF_CACHE]
        if missing:
            stack.extend(missing)
            continue
        acc: dict[Word, Fraction] = {}
        for cw, rc in children:
            for nw, coeff in _NF_CACHE[cw].items():
                value = acc.get(nw, Fraction(0)) + rc * coeff
                if value:
                    acc[nw] = value
                else:
                    acc.pop(nw, None)
        _NF_CACHE[w] = acc
        stack.pop()
    return _NF_CACHE[word]


def normal_form(terms: Mapping[Word, Fraction | int]) -> dict[Word, Fraction]:
    """Normal form of a linear combination {word: coefficient}."""
    acc: dict[Word, Fraction] = {}
    for word, coeff in terms.items():
        coeff = Fraction(coeff)
        if not coeff:
            continue
        for nw, c in normal_form_word(tuple(word)).items():
            value = acc.get(nw, Fraction(0)) + coeff * c
            if value:
                acc[nw] = value
            else:
                acc.pop(nw, None)
    return acc


class NCElement:
    """An element of O, stored as {normal word: Fraction}.

    Supports +, -, * (with elements and scalars), integer powers, and
    exact equality.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Fraction | int] | None = None):
        self._terms = normal_form(terms or {})

    @classmethod
    def _raw(cls, normal_terms: dict[Word, Fraction]) -> "NCElement":
        el = object.__new__(cls)
        el._terms = normal_terms
        return el

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def __add__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            value = acc.get(w, Fraction(0)) + c
            if value:
                acc[w] = value
            else:
                acc.pop(w, None)
        return NCElement._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return NCElement._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            if not scalar:
                return NCElement._raw({})
            return NCElement._raw({w: c * scalar for w, c in self._terms.items()})
        if isinstance(other, NCElement):
            acc: dict[Word, Fraction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    coeff = c1 * c2
                    for nw, c in normal_form_word(w1 + w2).items():
                        value = acc.get(nw, Fraction(0)) + coeff * c
                        if value:
                            acc[nw] = value
                        else:
                            acc.pop(nw, None)
            return NCElement._raw(acc)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers of algebra elements must be integers >= 0")
        result = one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"NCElement({render_element(self)!r})"

    def __str__(self):
        return render_element(self)


def _as_element(value) -> "NCElement":
    if isinstance(value, NCElement):
        return value
    if isinstance(value, (int, Fraction)):
        if value == 0:
            return NCElement._raw({})
        return NCElement._raw({(): Fraction(value)})
    return NotImplemented


def one() -> NCElement:
    return NCElement._raw({(): Fraction(1)})


def gen(letter: str) -> NCElement:
    if letter not in LETTER_ORDER:
        raise ValueError(f"unknown generator {letter!r}")
    return NCElement._raw({(letter,): Fraction(1)})


# ---------------------------------------------------------------------------
# Basis enumeration

def enumerate_basis(max_len: int) -> list[Word]:
    """All normal words of length <= max_len, sorted by deglex.

    A word is normal iff no rule left side occurs in it, and left sides
    have length 2 or 3, so extending a normal word by one letter stays
    normal iff no left side ends at the new letter.
    """
    basis: list[Word] = [()]
    layer: list[Word] = [()]
    for _ in range(max_len):
        next_layer: list[Word] = []
        for word in layer:
            for letter in LETTERS:
                extended = word + (letter,)
                if _suffix_normal(extended):
                    next_layer.append(extended)
        layer = next_layer
        basis.extend(layer)
    return basis


def _suffix_normal(word: Word) -> bool:
    for length, table in _LHS_BY_LENGTH.items():
        if len(word) >= length and word[-length:] in table:
            return False
    return True


def enumerate_basis_by_pattern(max_len: int) -> list[Word]:
    """Normal words of length <= max_len by a structural description.

    Independent of the rule table: a word is accepted iff
      (1) every maximal run of determinant letters uses only D or only Di,
      (2) adjacent entry letters have non-decreasing row index,
      (3) a lone Di flanked by entry letters has non-decreasing column
          index across it.
    """
    accepted: list[Word] = []
    stack: list[Word] = [()]
    while stack:
        word = stack.pop()
        if _pattern_accepts(word):
            accepted.append(word)
            if len(word) < max_len:
                stack.extend(word + (letter,) for letter in LETTERS)
    return sorted(accepted, key=word_key)


def _pattern_accepts(word: Word) -> bool:
    n = len(word)
    for i in range(n - 1):
        x, y = word[i], word[i + 1]
        if x in ROW and y in ROW and ROW[x] > ROW[y]:
            return False
        if {x, y} == {"D", "Di"}:
            return False
    for i in range(1, n - 1):
        if word[i] == "Di" and word[i - 1] in ROW and word[i + 1] in ROW:
            if COL[word[i - 1]] > COL[word[i + 1]]:
                return False
    return True


# ---------------------------------------------------------------------------
# Confluence

def check_confluence() -> dict:
    """Resolve every critical pair of the rule table.

    Overlaps come in two shapes: a proper suffix of one left side equal to
    a proper prefix of another, and one left side contained in another.
    For each overlap word the two one-step reducts are brought to normal
    form and compared.  Returns a report dict with the full list.
    """
    overlaps = []
    for i1, (lhs1, rhs1) in enumerate(RULES):
        for i2, (lhs2, rhs2) in enumerate(RULES):
            for k in range(1, min(len(lhs1), len(lhs2))):
                if lhs1[-k:] == lhs2[:k]:
                    word = lhs1 + lhs2[k:]
                    left = _apply_rule_at(word, 0, lhs1, rhs1)
                    right = _apply_rule_at(word, len(lhs1) - k, lhs2, rhs2)
                    overlaps.append((word, i1, i2, left, right))
            if len(lhs2) < len(lhs1):
                for pos in range(len(lhs1) - len(lhs2) + 1):
                    if lhs1[pos : pos + len(lhs2)] == lhs2:
                        left = _apply_rule_at(lhs1, 0, lhs1, rhs1)
                        right = _apply_rule_at(lhs1, pos, lhs2, rhs2)
                        overlaps.append((lhs1, i1, i2, left, right))
    report = []
    all_ok = True
    for word, i1, i2, left, right in overlaps:
        nf_left = normal_form(left)
        nf_right = normal_form(right)
        ok = nf_left == nf_right
        all_ok = all_ok and ok
        report.append(
            {
                "word": word,
                "rules": (i1, i2),
                "joinable": ok,
                "nf": nf_left if ok else (nf_left, nf_right),
            }
        )
    return {"pass": all_ok, "count": len(report), "overlaps": report}


def _apply_rule_at(word: Word, pos: int, lhs: Word, rhs: dict[Word, int]):
    assert word[pos : pos + len(lhs)] == lhs
    prefix, suffix = word[:pos], word[pos + len(lhs) :]
    return {prefix + rw + suffix: Fraction(rc) for rw, rc in rhs.items()}


# ---------------------------------------------------------------------------
# Hopf structure

# Coproduct of a single letter, as {(left word, right word): coefficient}.
_COPROD_LETTER: dict[str, dict[tuple[Word, Word], int]] = {
    "a": {(("a",), ("a",)): 1, (("b",), ("c",)): 1},
    "b": {(("a",), ("b",)): 1, (("b",), ("d",)): 1},
    "c": {(("c",), ("a",)): 1, (("d",), ("c",)): 1},
    "d": {(("c",), ("b",)): 1, (("d",), ("d",)): 1},
    "D": {(("D",), ("D",)): 1},
    "Di": {(("Di",), ("Di",)): 1},
}

_COUNIT_LETTER = {"a": 1, "b": 0, "c": 0, "d": 1, "D": 1, "Di": 1}

# Antipode of a single letter; an algebra anti-homomorphism on words.
_ANTIPODE_LETTER: dict[str, dict[Word, int]] = {
    "a": {("Di", "d"): 1},
    "b": {("Di", "b"): -1},
    "c": {("Di", "c"): -1},
    "d": {("Di", "a"): 1},
    "D": {("Di",): 1},
    "Di": {("D",): 1},
}

# Inverse antipode: the determinant factor moves to the other side.
_ANTIPODE_INV_LETTER: dict[str, dict[Word, int]] = {
    "a": {("d", "Di"): 1},
    "b": {("b", "Di"): -1},
    "c": {("c", "Di"): -1},
    "d": {("a", "Di"): 1},
    "D": {("Di",): 1},
    "Di": {("D",): 1},
}


class TensorElement:
    """An element of a tensor power of O: {tuple of words: Fraction}.

    Keys are k-tuples of normal words, one per tensor leg.  The arity is
    fixed per instance.
    """

    __slots__ = ("_arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[tuple, Fraction | int] | None = None):
        self._arity = arity
        acc: dict[tuple, Fraction] = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            assert len(key) == arity
            expansion = [normal_form_word(tuple(w)) for w in key]
            for combo, c in _expand(expansion):
                value = acc.get(combo, Fraction(0)) + coeff * c
                if value:
                    acc[combo] = value
                else:
                    acc.pop(combo, None)
        self._terms = acc

    @classmethod
    def _raw(cls, arity: int, terms: dict[tuple, Fraction]) -> "TensorElement":
        el = object.__new__(cls)
        el._arity = arity
        el._terms = terms
        return el

    @property
    def arity(self) -> int:
        return self._arity

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "TensorElement"):
        assert self._arity == other._arity
        acc = dict(self._terms)
        for key, c in other._terms.items():
            value = acc.get(key, Fraction(0)) + c
            if value:
                acc[key] = value
            else:
                acc.pop(key, None)
        return TensorElement._raw(self._arity, acc)

    def __neg__(self):
        return TensorElement._raw(self._arity, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorElement"):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            if not scalar:
                return TensorElement._raw(self._arity, {})
            return TensorElement._raw(
                self._arity, {k: c * scalar for k, c in self._terms.items()}
            )
        if isinstance(other, TensorElement):
            assert self._arity == other._arity
            acc: dict[tuple, Fraction] = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    coeff = c1 * c2
                    expansion = [
                        normal_form_word(w1 + w2) for w1, w2 in zip(k1, k2)
                    ]
                    for combo, c in _expand(expansion):
                        value = acc.get(combo, Fraction(0)) + coeff * c
                        if value:
                            acc[combo] = value
                        else:
                            acc.pop(combo, None)
            return TensorElement._raw(self._arity, acc)
        return NotImplemented

    __rmul__ = __mul__

    def leg(self, index: int) -> "NCElement":
        """Collapse to the given leg; only valid when all other legs are 1."""
        acc: dict[Word, Fraction] = {}
        for key, c in self._terms.items():
            for j, w in enumerate(key):
                if j != index and w != ():
                    raise ValueError("tensor element is not concentrated in one leg")
            acc[key[index]] = acc.get(key[index], Fraction(0)) + c
        return NCElement._raw({w: c for w, c in acc.items() if c})

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self._arity == other._arity
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self._arity, frozenset(self._terms.items())))

    def __repr__(self):
        parts = []
        for key in sorted(self._terms, key=lambda k: tuple(word_key(w) for w in k)):
            coeff = self._terms[key]
            legs = " # ".join(render_word(w) for w in key)
            parts.append(f"{coeff}*({legs})")
        return "TensorElement(" + (" + ".join(parts) if parts else "0") + ")"


def _expand(factors: list[dict[Word, Fraction]]) -> Iterator[tuple[tuple, Fraction]]:
    """Cartesian expansion of per-leg normal forms."""
    combos: list[tuple[tuple, Fraction]] = [((), Fraction(1))]
    for factor in factors:
        combos = [
            (key + (w,), c * cw) for key, c in combos for w, cw in factor.items()
        ]
    return iter(combos)


def tensor_of(*elements: NCElement) -> TensorElement:
    """Tensor product of algebra elements as a TensorElement."""
    acc: dict[tuple, Fraction] = {(): Fraction(1)}
    for el in elements:
        acc = {
            key + (w,): c * cw
            for key, c in acc.items()
            for w, cw in el.items()
        }
    return TensorElement._raw(len(elements), {k: c for k, c in acc.items() if c})


def coproduct(element: NCElement) -> TensorElement:
    """The coproduct O -> O # O."""
    return _coproduct_element(element)


def _coproduct_word(word: Word) -> dict[tuple[Word, Word], Fraction]:
    pairs: dict[tuple[Word, Word], Fraction] = {((), ()): Fraction(1)}
    for letter in word:
        nxt: dict[tuple[Word, Word], Fraction] = {}
        for (u1, u2), c in pairs.items():
            for (v1, v2), cl in _COPROD_LETTER[letter].items():
                key = (u1 + v1, u2 + v2)
                value = nxt.get(key, Fraction(0)) + c * cl
                if value:
                    nxt[key] = value
                else:
                    nxt.pop(key, None)
        pairs = nxt
    return pairs


def _coproduct_element(element: NCElement) -> TensorElement:
    acc: dict[tuple, Fraction] = {}
    for word, coeff in element.items():
        for (w1, w2), c in _coproduct_word(word).items():
            nf1 = normal_form_word(w1)
            nf2 = normal_form_word(w2)
            for n1, c1 in nf1.items():
                for n2, c2 in nf2.items():
                    key = (n1, n2)
                    value = acc.get(key, Fraction(0)) + coeff * c * c1 * c2
                    if value:
                        acc[key] = value
                    else:
                        acc.pop(key, None)
    return TensorElement._raw(2, acc)


def coproduct_leg(tensor: TensorElement, leg: int) -> TensorElement:
    """Apply the coproduct to one leg of a tensor element."""
    acc: dict[tuple, Fraction] = {}
    for key, coeff in tensor.items():
        for (w1, w2), c in _coproduct_word(key[leg]).items():
            for n1, c1 in normal_form_word(w1).items():
                for n2, c2 in normal_form_word(w2).items():
                    new_key = key[:leg] + (n1, n2) + key[leg + 1 :]
                    value = acc.get(new_key, Fraction(0)) + coeff * c * c1 * c2
                    if value:
                        acc[new_key] = value
                    else:
                        acc.pop(new_key, None)
    return TensorElement._raw(tensor.arity + 1, acc)


def counit(element: NCElement) -> Fraction:
    total = Fraction(0)
    for word, coeff in element.items():
        value = coeff
        for letter in word:
            value *= _COUNIT_LETTER[letter]
            if not value:
                break
        total += value
    return total


def counit_leg(tensor: TensorElement, leg: int) -> TensorElement:
    """Apply the counit to one leg, dropping it."""
    acc: dict[tuple, Fraction] = {}
    for key, coeff in tensor.items():
        value = coeff
        for letter in key[leg]:
            value *= _COUNIT_LETTER[letter]
            if not value:
                break
        if not value:
            continue
        new_key = key[:leg] + key[leg + 1 :]
        total = acc.get(new_key, Fraction(0)) + value
        if total:
            acc[new_key] = total
        else:
            acc.pop(new_key, None)
    return TensorElement._raw(tensor.arity - 1, acc)


def _anti_hom(element: NCElement, letter_images: dict[str, dict[Word, int]]) -> NCElement:
    result: dict[Word, Fraction] = {}
    for word, coeff in element.items():
        factor = one()
        for letter in reversed(word):
            factor = factor * NCElement._raw(
                {w: Fraction(c) for w, c in letter_images[letter].items()}
            )
        for w, c in factor.items():
            value = result.get(w, Fraction(0)) + coeff * c
            if value:
                result[w] = value
            else:
                result.pop(w, None)
    return NCElement._raw(result)


def antipode(element: NCElement) -> NCElement:
    """The antipode S, an algebra anti-homomorphism."""
    return _anti_hom(element, _ANTIPODE_LETTER)


def antipode_inv(element: NCElement) -> NCElement:
    """The inverse of the antipode, also an anti-homomorphism."""
    return _anti_hom(element, _ANTIPODE_INV_LETTER)


def antipode_leg(tensor: TensorElement, leg: int) -> TensorElement:
    acc: dict[tuple, Fraction] = {}
    for key, coeff in tensor.items():
        image = antipode(NCElement._raw({key[leg]: Fraction(1)}))
        for w, c in image.items():
            new_key = key[:leg] + (w,) + key[leg + 1 :]
            value = acc.get(new_key, Fraction(0)) + coeff * c
            if value:
                acc[new_key] = value
            else:
                acc.pop(new_key, None)
    return TensorElement._raw(tensor.arity, acc)


def multiply_legs(tensor: TensorElement) -> NCElement:
    """Multiply all legs together in order (the convolution product step)."""
    acc: dict[Word, Fraction] = {}
    for key, coeff in tensor.items():
        concatenated = ()
        for w in key:
            concatenated = concatenated + w
        for nw, c in normal_form_word(concatenated).items():
            value = acc.get(nw, Fraction(0)) + coeff * c
            if value:
                acc[nw] = value
            else:
                acc.pop(nw, None)
    return NCElement._raw(acc)


def grouplike_words(max_len: int) -> list[Word]:
    """Normal words g with coproduct g # g and counit 1."""
    found = []
    for word in enumerate_basis(max_len):
        el = NCElement._raw({word: Fraction(1)})
        if counit(el) != 1:
            continue
        if _coproduct_element(el) == TensorElement._raw(2, {(word, word): Fraction(1)}):
            found.append(word)
    return found


# ---------------------------------------------------------------------------
# Expression syntax

class ExprSyntaxError(ValueError):
    """Raised on malformed expressions; column is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"syntax error at column {column}: {message}")
        self.column = column


_TOKEN_LETTERS = ("Di", "D", "a", "b", "c", "d")


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i + 1))
            i = j
            continue
        if text.startswith("Di", i):
            tokens.append(("letter", "Di", i + 1))
            i += 2
            continue
        if ch in "Dabcd":
            tokens.append(("letter", ch, i + 1))
            i += 1
            continue
        if ch in "+-*^()/":
            tokens.append((ch, ch, i + 1))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse_expr(self) -> NCElement:
        result = NCElement._raw({})
        sign = Fraction(1)
        kind, _, _ = self.peek()
        if kind in ("+", "-"):
            sign = Fraction(-1) if kind == "-" else Fraction(1)
            self.advance()
        result = result + self.parse_term() * sign
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.advance()
                result = result + self.parse_term()
            elif kind == "-":
                self.advance()
                result = result - self.parse_term()
            else:
                return result

    def parse_term(self) -> NCElement:
        result = self.parse_factor()
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                self.advance()
                result = result * self.parse_factor()
            elif kind in ("letter", "num", "("):
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> NCElement:
        base = self.parse_atom()
        kind, _, _ = self.peek()
        if kind == "^":
            self.advance()
            kind, value, column = self.peek()
            if kind != "num":
                raise ExprSyntaxError("expected a positive integer exponent", column)
            self.advance()
            exponent = int(value)
            if exponent < 1:
                raise ExprSyntaxError("expected a positive integer exponent", column)
            return base**exponent
        return base

    def parse_atom(self) -> NCElement:
        kind, value, column = self.peek()
        if kind == "num":
            self.advance()
            numerator = int(value)
            kind, _, _ = self.peek()
            if kind == "/":
                self.advance()
                kind, value, column = self.peek()
                if kind != "num":
                    raise ExprSyntaxError("expected a denominator", column)
                self.advance()
                denominator = int(value)
                if denominator == 0:
                    raise ExprSyntaxError("zero denominator", column)
                return one() * Fraction(numerator, denominator)
            return one() * numerator
        if kind == "letter":
            self.advance()
            return gen(value)
        if kind == "(":
            self.advance()
            inner = self.parse_expr()
            kind, _, column = self.peek()
            if kind != ")":
                raise ExprSyntaxError("expected ')'", column)
            self.advance()
            return inner
        raise ExprSyntaxError(
            "expected a generator, number, or '('" if kind != "end" else "unexpected end of input",
            column,
        )


def parse_expression(text: str) -> NCElement:
    """Parse an algebra expression and return its normal form.

    Generators a b c d D Di, juxtaposition or * for products, + and -,
    rational coefficients like 3/2, and positive integer powers via ^.

    >>> print(parse_expression("(a + b)^2"))
    b^2 + b*a + a*b + a^2
    """
    parser = _Parser(_tokenize(text))
    result = parser.parse_expr()
    kind, _, column = parser.peek()
    if kind != "end":
        raise ExprSyntaxError("unexpected trailing input", column)
    return result


def render_word(word: Word) -> str:
    """Canonical word rendering with runs collapsed: ('a','Di','d') -> a*Di*d."""
    if not word:
        return "1"
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    return "*".join(l if k == 1 else f"{l}^{k}" for l, k in runs)


def render_element(element: NCElement) -> str:
    """Canonical rendering: terms in decreasing deglex order."""
    if element.is_zero():
        return "0"
    parts = []
    for word in sorted(element.terms, key=word_key, reverse=True):
        coeff = element.coefficient(word)
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        if word and magnitude == 1:
            body = render_word(word)
        elif word:
            body = f"{magnitude}*{render_word(word)}"
        else:
            body = str(magnitude)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


if __name__ == "__main__":
    import doctest

    doctest.testmod()
    report = check_confluence()
    print(f"critical pairs: {report['count']}, all joinable: {report['pass']}")
    for n in range(4):
        print(f"normal words of length <= {n}: {len(enumerate_basis(n))}")
