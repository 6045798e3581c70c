"""Triangular quotients, semi-invariants, and truncated induction.

The quantized coordinate ring has three distinguished quotient algebras,
obtained by killing the strictly-upper letter b, the strictly-lower letter c,
or both:

    lower triangular  O(B)   = O / (b)
    upper triangular  O(B+)  = O / (c)
    diagonal torus    O(T)   = O / (b, c)

None of these is simply "drop the letter from normal words": killing a letter
collapses relations (for example da = bc + delta forces da = delta in both
triangular quotients, so a and d become inverses of each other up to delta).
Each quotient therefore carries its own monomial basis:

  * O(B):  a^s . w with s an integer and w a word in c, d, d^{-1}, where
    a is central and only d and d^{-1} cancel;
  * O(B+): d^s . w with s an integer and w a word in b, a, a^{-1};
  * O(T):  Laurent monomials a^i d^j.

The module provides the projections onto these bases, the group-like
characters g_t, the diagram flip psi (a Hopf automorphism exchanging the two
triangular quotients), semi-invariant vectors of comodules, and the truncated
induction spaces, i.e. elements of bounded length in the coordinate ring that
transform by g_t under the right triangular coaction.

>>> from fractions import Fraction
>>> from .ncalg import gen
>>> BOREL_LOWER.project(gen("b"))
{}
>>> sorted(BOREL_LOWER.project(gen("D")).items())
[((1, ('d',)), Fraction(1, 1))]
>>> from .weights import Weight
>>> [len(induced_truncated(Weight(0, 1), n)) for n in (1, 2, 3)]
[2, 2, 6]
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .ncalg import (
    NCElement,
    Word,
    coproduct,
    enumerate_basis,
    normal_form_word,
    word_key,
)
from .weights import LambdaWord, Weight, is_dominant
from .comodules import Comodule, comodule_from_regular, generated_subcomodule
from . import linalg

__all__ = [
    "TriangularQuotient",
    "BOREL_LOWER",
    "BOREL_UPPER",
    "TORUS",
    "psi",
    "semi_invariants",
    "semi_invariant_weights",
    "subrep_containment_test",
    "induced_truncated",
    "induced_predicted",
    "induced_comodule",
    "left_semi_invariance_check",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class TriangularQuotient:
    """A quotient of the coordinate ring with a monomial basis.

    Basis keys are pairs (s, word): s is the exponent of the central
    invertible generator and word is a reduced word in the residual letters.
    The reduction cancels adjacent inverse pairs (named in `inverses`) and
    nothing else.  `letter_image` maps each of the six generators to a key
    (or None when the generator is killed); `project` pushes a whole element
    of the coordinate ring through the quotient.
    """

    def __init__(self, name, killed, letter_image, inverses):
        self.name = name
        self.killed = killed
        self._letter_image = letter_image
        self._inverses = inverses

    def _reduce(self, word: tuple[str, ...]) -> tuple[str, ...]:
        out: list[str] = []
        for letter in word:
            if out and self._inverses.get(out[-1]) == letter:
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    @property
    def one_key(self):
        return (0, ())

    def multiply(self, k1, k2):
        return (k1[0] + k2[0], self._reduce(k1[1] + k2[1]))

    def project_word(self, word: Word):
        """Image of a monomial; None when some letter is killed."""
        key = self.one_key
        for letter in word:
            image = self._letter_image[letter]
            if image is None:
                return None
            key = self.multiply(key, image)
        return key

    def project(self, element: NCElement) -> dict:
        out: dict = {}
        for word, coeff in element.items():
            key = self.project_word(word)
            if key is None:
                continue
            value = out.get(key, _ZERO) + coeff
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return out

    def grouplike(self, t: Weight):
        """The character key g_t; every integral weight t = (i, j) has one."""
        raise NotImplementedError

    def __repr__(self):
        return f"TriangularQuotient({self.name})"


class _LowerBorel(TriangularQuotient):
    def __init__(self):
        super().__init__(
            name="B",
            killed=("b",),
            letter_image={
                "a": (1, ()),
                "b": None,
                "c": (0, ("c",)),
                "d": (0, ("d",)),
                "D": (1, ("d",)),
                "Di": (-1, ("di",)),
            },
            inverses={"d": "di", "di": "d"},
        )

    def grouplike(self, t: Weight):
        word = ("d",) * t.j if t.j >= 0 else ("di",) * (-t.j)
        return (t.i, word)


class _UpperBorel(TriangularQuotient):
    def __init__(self):
        super().__init__(
            name="B+",
            killed=("c",),
            letter_image={
                "a": (0, ("a",)),
                "b": (0, ("b",)),
                "c": None,
                "d": (1, ()),
                "D": (1, ("a",)),
                "Di": (-1, ("ai",)),
            },
            inverses={"a": "ai", "ai": "a"},
        )

    def grouplike(self, t: Weight):
        word = ("a",) * t.i if t.i >= 0 else ("ai",) * (-t.i)
        return (t.j, word)


class _Torus(TriangularQuotient):
    def __init__(self):
        super().__init__(
            name="T",
            killed=("b", "c"),
            letter_image={
                "a": (1, ()),
                "b": None,
                "c": None,
                "d": (0, ("d",)),
                "D": (1, ("d",)),
                "Di": (-1, ("di",)),
            },
            inverses={"d": "di", "di": "d"},
        )

    def grouplike(self, t: Weight):
        word = ("d",) * t.j if t.j >= 0 else ("di",) * (-t.j)
        return (t.i, word)


BOREL_LOWER = _LowerBorel()
BOREL_UPPER = _UpperBorel()
TORUS = _Torus()


_PSI_SWAP = {"a": "d", "d": "a", "b": "c", "c": "b", "D": "D", "Di": "Di"}


def psi(element: NCElement) -> NCElement:
    """The diagram flip: the Hopf automorphism a <-> d, b <-> c, delta fixed.

    It is an involution and exchanges the two triangular quotients, so it
    transports lower semi-invariants to upper ones.
    """
    acc: dict[Word, Fraction] = {}
    for word, coeff in element.items():
        swapped = tuple(_PSI_SWAP[letter] for letter in word)
        for nw, c in normal_form_word(swapped).items():
            value = acc.get(nw, _ZERO) + coeff * c
            if value:
                acc[nw] = value
            else:
                acc.pop(nw, None)
    return NCElement._raw(acc)


# ---------------------------------------------------------------------------
# semi-invariants of comodules


def semi_invariants(X: Comodule, quotient: TriangularQuotient, t: Weight):
    """Vectors x with rho(x) = g_t (x) x after pushing into the quotient.

    Returns a reduced basis (list of coefficient vectors over the basis of
    X).  For a costandard comodule and the upper quotient the space is a
    line when t is the top weight and zero at every other weight.
    """
    g = quotient.grouplike(t)
    equations: list[dict[int, Fraction]] = []
    for j in range(X.dim):
        rows: dict = {}
        for i in range(X.dim):
            for key, coeff in quotient.project(X.coaction[i][j]).items():
                row = rows.setdefault(key, {})
                row[i] = row.get(i, _ZERO) + coeff
        row = rows.setdefault(g, {})
        row[j] = row.get(j, _ZERO) - _ONE
        equations.extend(rows.values())
    return linalg.nullspace_sparse(equations, X.dim)


def semi_invariant_weights(X: Comodule, quotient: TriangularQuotient, weights):
    """dim of the semi-invariant space at each candidate weight (dict)."""
    return {t: len(semi_invariants(X, quotient, t)) for t in weights}


def subrep_containment_test(X: Comodule, top_index: int, trials: int = 50, seed: int = 20260818) -> bool:
    """Probe whether every nonzero subcomodule of X contains basis vector top_index.

    Checks the subcomodules generated by each basis vector and by `trials`
    seeded random vectors.  A True answer is evidence (not proof) that the
    socle is simple with top line inside; False gives a genuine witness.
    """
    import random

    rng = random.Random(seed)
    probes = [
        [(_ONE if i == k else _ZERO) for i in range(X.dim)] for k in range(X.dim)
    ]
    for _ in range(trials):
        vec = [Fraction(rng.randint(-4, 4)) for _ in range(X.dim)]
        if any(vec):
            probes.append(vec)
    target = [(_ONE if i == top_index else _ZERO) for i in range(X.dim)]
    for vec in probes:
        sub, incl = generated_subcomodule(X, vec)
        rows = [
            [incl.matrix[r][c] for r in range(X.dim)] for c in range(sub.dim)
        ]
        if not linalg.span_contains(rows, target):
            return False
    return True


# ---------------------------------------------------------------------------
# truncated induction


def induced_truncated(t: Weight, n: int) -> list[NCElement]:
    """Basis of {f in O, len <= n : (1 (x) pi_B) Delta(f) = f (x) g_t}.

    The right-hand leg of the coproduct is pushed into the lower triangular
    quotient; solutions transform like the character g_t under the right
    B-coaction.  Returns a reduced basis, deterministic in the graded word
    order.
    """
    words = enumerate_basis(n)
    index = {w: k for k, w in enumerate(words)}
    g = BOREL_LOWER.grouplike(t)
    rows: dict = {}
    for w in words:
        k = index[w]
        expansion = coproduct(NCElement._raw({w: _ONE}))
        for (u, v), coeff in expansion.items():
            key = BOREL_LOWER.project_word(v)
            if key is None:
                continue
            row = rows.setdefault((u, key), {})
            row[k] = row.get(k, _ZERO) + coeff
    for w in words:
        row = rows.setdefault((w, g), {})
        k = index[w]
        row[k] = row.get(k, _ZERO) - _ONE
    basis = linalg.nullspace_sparse(list(rows.values()), len(words))
    out = []
    for vec in basis:
        out.append(
            NCElement({w: vec[k] for w, k in index.items() if vec[k]})
        )
    return out


def induced_predicted(t: Weight, n: int) -> list[Word]:
    """Monomial semi-invariants predicted to span the truncated induction.

    These are the normal words in b, d, delta^{+-1} (no a, no c) of length
    at most n whose right B-character is g_t: with x the net delta exponent
    and m the number of b's and d's, the character is (x, x + m).  Outside
    the dominant cone the list is empty.
    """
    out: list[Word] = []
    for length in range(n + 1):
        for word in product(("b", "d", "D", "Di"), repeat=length):
            ok = True
            for p in range(length - 1):
                if word[p] == "d" and word[p + 1] == "b":
                    ok = False
                    break
                if word[p] == "D" and word[p + 1] == "Di":
                    ok = False
                    break
                if word[p] == "Di" and word[p + 1] == "D":
                    ok = False
                    break
            if not ok:
                continue
            x = word.count("D") - word.count("Di")
            m = word.count("b") + word.count("d")
            if Weight(x, x + m) == t:
                out.append(word)
    out.sort(key=word_key)
    return out


def induced_comodule(t: Weight, n: int):
    """The truncated induction space as a comodule (with its regular basis).

    Returns (comodule, basis elements); the space is a left coideal of the
    coordinate ring, so the restriction of the coproduct makes it a comodule.
    Raises ValueError when the space is zero.
    """
    elements = induced_truncated(t, n)
    if not elements:
        raise ValueError(f"truncated induction at {t} with n={n} is zero")
    return comodule_from_regular(elements)


def left_semi_invariance_check(
    element: NCElement, quotient: TriangularQuotient, t: Weight
) -> bool:
    """Check (pi_Q (x) 1) Delta(f) = g_t (x) f, the left-handed eigencondition."""
    g = quotient.grouplike(t)
    lhs: dict = {}
    for (u, v), coeff in coproduct(element).items():
        key = quotient.project_word(u)
        if key is None:
            continue
        value = lhs.get((key, v), _ZERO) + coeff
        if value:
            lhs[(key, v)] = value
        else:
            lhs.pop((key, v), None)
    rhs = {(g, w): coeff for w, coeff in element.items()}
    return lhs == rhs


if __name__ == "__main__":
    import doctest

    failures, _ = doctest.testmod()
    basis = induced_truncated(Weight(0, 1), 3)
    print(f"induced basis at weight d, n=3: {[str(f) for f in basis]}")
    raise SystemExit(1 if failures else 0)
