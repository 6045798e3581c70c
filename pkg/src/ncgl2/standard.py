"""Named comodules and highest-weight structure.

Catalog of the distinguished comodules over the quantized 2x2 coordinate
ring: the defining comodule V, the determinant powers R^k, symmetric powers
S^y V, their twisted duals T^y V, the monoid comodules M(lam), the costandard
comodules nabla(lam) and standard comodules Delta(lam), the simple socles
L(lam), and the combinatorics that glues them together (filtration multisets,
formal characters, the layer decomposition of the coordinate ring).

Everything is indexed by words lam in the weight monoid of `weights`: a word
in d and delta^{+-1} picks the tensor factors

    delta^{x}            -> R^x        (a line)
    d^{y} (a run of d's) -> S^y V      (dimension y + 1)

and nabla(lam) is the tensor product of those factors in the order the atoms
appear in lam.  Delta(lam) is the dual of nabla(star_inv(lam)) taken with the
inverse antipode, which is the dual for which V* (x) R ~ V; since the
determinant is not central the two duals genuinely differ and only this one
makes the canonical map Delta(lam) -> nabla(lam) exist.

>>> from .weights import parse_lambda
>>> build_nabla(parse_lambda("d^2")).dim
3
>>> sorted(str(m) for m in nabla_multiset(parse_lambda("d^4")).elements())
['D.d^2', 'D^2', 'd.D.d', 'd^2.D', 'd^4']
>>> build_L(parse_lambda("d.Di.d"))[0].dim
3
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product

from .ncalg import NCElement, gen, one
from .weights import (
    LambdaWord,
    Weight,
    parse_lambda,
    weight_key,
)
from .comodules import (
    Comodule,
    ComoduleMap,
    char_mul,
    generated_subcomodule,
    hom_space,
    image,
    left_dual,
    tensor,
    tensor_many,
    torus_diagonal_weights,
    trivial,
)
from . import linalg

__all__ = [
    "build_V",
    "build_R",
    "build_SymV",
    "sym_power_via_quotient",
    "build_TV",
    "build_M",
    "build_nabla",
    "nabla_surjection",
    "build_delta",
    "canonical_map",
    "build_L",
    "nabla_multiset",
    "delta_multiset",
    "char_V",
    "char_R",
    "char_S",
    "char_T",
    "char_M",
    "char_nabla",
    "char_delta",
    "decompose_layer",
    "layer_dimension",
    "repring_decompose",
    "evaluation_map",
    "coevaluation_map",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# basic comodules


def build_V() -> Comodule:
    """The defining two dimensional comodule, rho(e_i) = sum_j C[i][j] (x) e_j."""
    return Comodule(
        ("e1", "e2"),
        (
            (gen("a"), gen("b")),
            (gen("c"), gen("d")),
        ),
    )


def build_R(k: int = 1) -> Comodule:
    """The determinant line R^k; k may be negative (then delta^{-|k|} coacts)."""
    if k >= 0:
        element = NCElement({("D",) * k: _ONE})
    else:
        element = NCElement({("Di",) * (-k): _ONE})
    label = "r" if k == 1 else f"r{k}"
    return Comodule((label,), ((element,),))


def build_SymV(y: int) -> Comodule:
    """Symmetric power S^y V on monomial lines m_0 .. m_y.

    The coaction entry P[k][l] collects, over all ways to route the k-th
    monomial to the l-th, the product of matrix letters; since a, b commute
    and c, d commute and (row 2)(row 1) products rewrite without leaving the
    two-letter alphabet of their columns, each entry is already a polynomial
    in normal words with nonnegative integer coefficients.
    """
    if y < 0:
        raise ValueError("symmetric power needs y >= 0")
    if y == 0:
        return Comodule(("m0",), ((one(),),))
    letters = (("a", "b"), ("c", "d"))
    labels = tuple(f"m{k}" for k in range(y + 1))
    coaction = []
    for k in range(y + 1):
        rows = (0,) * (y - k) + (1,) * k
        entries = []
        for l in range(y + 1):
            terms: dict[tuple[str, ...], Fraction] = {}
            for cols in product((0, 1), repeat=y):
                if sum(cols) != l:
                    continue
                word = tuple(letters[rows[t]][cols[t]] for t in range(y))
                terms[word] = terms.get(word, _ZERO) + _ONE
            entries.append(NCElement(terms))
        coaction.append(tuple(entries))
    return Comodule(labels, tuple(coaction))


def sym_power_via_quotient(y: int):
    """S^y V as the quotient of V^{(x) y} by adjacent transposition differences.

    Returns (quotient comodule, projection map from V^{(x) y}).  Used to
    cross-check the direct construction in `build_SymV`.
    """
    from .comodules import quotient

    V = build_V()
    Vy = tensor_many([V] * y) if y > 0 else trivial()
    if y <= 1:
        return Vy, ComoduleMap(Vy, Vy, linalg.identity(Vy.dim))
    relations = []
    for pos in range(y - 1):
        for bits in product((0, 1), repeat=y):
            if bits[pos] != 0 or bits[pos + 1] != 1:
                continue
            swapped = list(bits)
            swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
            vec = [_ZERO] * Vy.dim
            vec[_flat(bits)] = _ONE
            vec[_flat(tuple(swapped))] -= _ONE
            relations.append(vec)
    return quotient(Vy, relations)


def _flat(bits: tuple[int, ...]) -> int:
    index = 0
    for b in bits:
        index = 2 * index + b
    return index


def build_TV(y: int) -> Comodule:
    """The twisted dual T^y V = (S^y V)* (x) R, again of dimension y + 1.

    T^0 V ~ R and T^1 V ~ V; for y >= 2 the comodule is not isomorphic to
    S^y V even though the characters agree up to a determinant twist.
    """
    return tensor(left_dual(build_SymV(y)), build_R(1))


# ---------------------------------------------------------------------------
# lam-indexed families


def _atom_factors(lam: LambdaWord, sym: bool) -> list[Comodule]:
    """Tensor factors of M(lam) (sym=False) or nabla(lam) (sym=True)."""
    factors: list[Comodule] = []
    V = build_V()
    for kind, value in lam.atoms():
        if kind == "delta":
            factors.append(build_R(value))
        elif sym:
            factors.append(build_SymV(value))
        else:
            factors.extend([V] * value)
    return factors


def build_M(lam: LambdaWord) -> Comodule:
    """The monoid comodule M(lam): delta^x -> R^x and each run d^y -> V^{(x) y}."""
    return tensor_many(_atom_factors(lam, sym=False))


def build_nabla(lam: LambdaWord) -> Comodule:
    """The costandard comodule nabla(lam): delta^x -> R^x and d^y -> S^y V."""
    return tensor_many(_atom_factors(lam, sym=True))


def nabla_surjection(lam: LambdaWord) -> ComoduleMap:
    """The canonical surjection M(lam) ->> nabla(lam).

    On each d-run it is the symmetrization projector V^{(x) y} ->> S^y V that
    sends a tensor monomial to the symmetric monomial of the same content;
    on delta-atoms it is the identity of the line.  The full map is the
    Kronecker product of the per-atom blocks.
    """
    M = build_M(lam)
    N = build_nabla(lam)
    blocks: list[list[list[Fraction]]] = []
    for kind, value in lam.atoms():
        if kind == "delta":
            blocks.append([[_ONE]])
        else:
            block = [[_ZERO] * (2**value) for _ in range(value + 1)]
            for bits in product((0, 1), repeat=value):
                block[sum(bits)][_flat(bits)] = _ONE
            blocks.append(block)
    matrix = [[_ONE]]
    for block in blocks:
        matrix = _kron(matrix, block)
    if not lam.atoms():
        matrix = linalg.identity(1)
    matrix_t = tuple(tuple(row) for row in matrix)
    f = ComoduleMap(M, N, matrix_t)
    if f.rank() != N.dim:
        raise ValueError("symmetrization map failed to surject")
    return f


def _kron(A: list[list[Fraction]], B: list[list[Fraction]]) -> list[list[Fraction]]:
    if not A or not B:
        return []
    ra, ca = len(A), len(A[0])
    rb, cb = len(B), len(B[0])
    out = [[_ZERO] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            if A[i][j] == 0:
                continue
            for p in range(rb):
                for q in range(cb):
                    out[i * rb + p][j * cb + q] = A[i][j] * B[p][q]
    return out


def build_delta(lam: LambdaWord) -> Comodule:
    """The standard comodule Delta(lam) = nabla(star_inv(lam))*.

    The dual is taken with the inverse antipode (`left_dual`), the unique
    choice for which Delta(d) ~ V and more generally Hom(Delta(lam),
    nabla(lam)) is one dimensional.
    """
    return left_dual(build_nabla(lam.star_inv()))


def _weight_index(X: Comodule, target: Weight) -> int:
    """Index of the unique basis vector of torus weight `target` (diagonal case)."""
    diagonal = torus_diagonal_weights(X)
    if diagonal is None:
        raise ValueError("comodule is not torus-diagonal")
    hits = [i for i, w in enumerate(diagonal) if w == target]
    if len(hits) != 1:
        raise ValueError(
            f"weight {target} has multiplicity {len(hits)}, expected 1"
        )
    return hits[0]


def canonical_map(lam: LambdaWord) -> ComoduleMap:
    """The canonical map Delta(lam) -> nabla(lam), normalized on the top line.

    The hom space is required to be exactly one dimensional; the generator is
    scaled so that the coefficient between the two weight-wt(lam) basis
    vectors equals 1.  Its image is the simple socle L(lam).
    """
    Delta = build_delta(lam)
    Nabla = build_nabla(lam)
    maps = hom_space(Delta, Nabla)
    if len(maps) != 1:
        raise ValueError(
            f"Hom(Delta, nabla) for {lam} has dimension {len(maps)}, expected 1"
        )
    f = maps[0]
    top = lam.wt()
    src = _weight_index(Delta, top)
    dst = _weight_index(Nabla, top)
    scale = f.matrix[dst][src]
    if scale == 0:
        raise ValueError(f"canonical map for {lam} vanishes on the top weight line")
    matrix = tuple(tuple(entry / scale for entry in row) for row in f.matrix)
    return ComoduleMap(Delta, Nabla, matrix)


def build_L(lam: LambdaWord):
    """The simple comodule L(lam) inside nabla(lam).

    Returns (L, inclusion into nabla(lam)).  Constructed as the image of the
    canonical map and cross-checked against the subcomodule of nabla(lam)
    generated by the top weight vector; the two agree because the image is
    simple and contains the top line.
    """
    f = canonical_map(lam)
    L, incl = image(f)
    Nabla = f.target
    top_vec = [_ZERO] * Nabla.dim
    top_vec[_weight_index(Nabla, lam.wt())] = _ONE
    generated, gen_incl = generated_subcomodule(Nabla, top_vec)
    image_rows = [[incl.matrix[r][c] for r in range(Nabla.dim)] for c in range(L.dim)]
    gen_rows = [
        [gen_incl.matrix[r][c] for r in range(Nabla.dim)] for c in range(generated.dim)
    ]
    if not linalg.same_row_space(image_rows, gen_rows):
        raise ValueError(
            f"image of the canonical map for {lam} is not generated by the top line"
        )
    return L, incl


# ---------------------------------------------------------------------------
# filtration multisets


def nabla_multiset(lam: LambdaWord) -> Counter:
    """Multiset N(lam) of costandard factors in a nabla-filtration of M(lam).

    Computed by the letter recursion: appending delta^{+-1} multiplies every
    member on the right; appending d sends mu to mu.d, and when mu already
    ends in a d-run d^y it additionally produces the member with that run
    replaced by d^{y-1}.delta.  Multiplicities are genuine (a member may
    arise along several branches).

    >>> sorted(str(m) for m in nabla_multiset(parse_lambda("d^2.Di.d")).elements())
    ['d', 'd^2.Di.d']
    """
    members: Counter = Counter({LambdaWord.one(): 1})
    for letter in lam.letters:
        step: Counter = Counter()
        if letter in ("D", "Di"):
            suffix = LambdaWord((letter,))
            for mu, mult in members.items():
                step[mu * suffix] += mult
        else:
            for mu, mult in members.items():
                step[mu * LambdaWord(("d",))] += mult
                if mu.letters and mu.letters[-1] == "d":
                    run = 0
                    for previous in reversed(mu.letters):
                        if previous != "d":
                            break
                        run += 1
                    replaced = (
                        mu.letters[: len(mu.letters) - run]
                        + ("d",) * (run - 1)
                        + ("D",)
                    )
                    step[LambdaWord(replaced)] += mult
        members = step
    return members


def delta_multiset(lam: LambdaWord) -> Counter:
    """Multiset D(lam) of standard factors in a Delta-filtration of M(lam).

    Obtained from the nabla recursion by transport along the star duality:
    D(lam) = { star(mu) : mu in N(star_inv(lam)) }.
    """
    return Counter(
        {mu.star(): mult for mu, mult in nabla_multiset(lam.star_inv()).items()}
    )


# ---------------------------------------------------------------------------
# characters


def char_V() -> dict[Weight, int]:
    return {Weight(1, 0): 1, Weight(0, 1): 1}


def char_R(k: int = 1) -> dict[Weight, int]:
    return {Weight(k, k): 1}


def char_S(y: int) -> dict[Weight, int]:
    return {Weight(y - k, k): 1 for k in range(y + 1)}


def char_T(y: int) -> dict[Weight, int]:
    """Character of T^y V: the S^y V character shifted by (ad)^{1-y}."""
    return {Weight(k - y + 1, 1 - k): 1 for k in range(y + 1)}


def char_nabla(lam: LambdaWord) -> dict[Weight, int]:
    out: dict[Weight, int] = {Weight(0, 0): 1}
    for kind, value in lam.atoms():
        factor = char_R(value) if kind == "delta" else char_S(value)
        out = char_mul(out, factor)
    return out


def char_delta(lam: LambdaWord) -> dict[Weight, int]:
    """Character of Delta(lam): the negated character of nabla(star_inv(lam))."""
    inner = char_nabla(lam.star_inv())
    return {Weight(-w.i, -w.j): m for w, m in inner.items()}


def char_M(lam: LambdaWord) -> dict[Weight, int]:
    out: dict[Weight, int] = {Weight(0, 0): 1}
    for kind, value in lam.atoms():
        if kind == "delta":
            out = char_mul(out, char_R(value))
        else:
            for _ in range(value):
                out = char_mul(out, char_V())
    return out


# ---------------------------------------------------------------------------
# layer decomposition of the coordinate ring


_LAYER_LETTERS = ("c", "d", "D", "Di")


def decompose_layer(n: int) -> list[tuple[tuple[str, ...], LambdaWord]]:
    """Indexing data for the n-th filtration layer of the coordinate ring.

    The layer O_{<=n} / O_{<=n-1} decomposes as a direct sum of costandard
    comodules indexed by the normal words of length n in the letters
    c, d, delta^{+-1} (no a, no b); the costandard label of a word is
    obtained by replacing every c with d.  Returns (word, label) pairs.

    >>> [(w, str(t)) for w, t in decompose_layer(1)]
    [(('D',), 'D'), (('Di',), 'Di'), (('c',), 'd'), (('d',), 'd')]
    """
    if n < 0:
        raise ValueError("layer index must be nonnegative")
    if n == 0:
        return [((), LambdaWord.one())]
    out = []
    for word in product(_LAYER_LETTERS, repeat=n):
        if _layer_word_ok(word):
            label = LambdaWord(tuple("d" if x == "c" else x for x in word))
            out.append((word, label))
    out.sort(key=lambda pair: pair[0])
    return out


def _layer_word_ok(word: tuple[str, ...]) -> bool:
    for t in range(len(word) - 1):
        if word[t] == "D" and word[t + 1] == "Di":
            return False
        if word[t] == "Di" and word[t + 1] == "D":
            return False
    for t in range(len(word) - 2):
        if word[t] == "d" and word[t + 1] == "Di" and word[t + 2] == "c":
            return False
    return True


def layer_dimension(n: int) -> int:
    """Dimension of the n-th layer, as a sum of costandard dimensions."""
    total = 0
    for _, label in decompose_layer(n):
        dims = 1
        for kind, value in label.atoms():
            if kind == "d":
                dims *= value + 1
        total += dims
    return total


def repring_decompose(symbols: list[str]) -> Counter:
    """Costandard multiset of a tensor product of V, R, Ri in the given order.

    Each symbol contributes a letter (V -> d, R -> D = delta, Ri -> Di) and
    the product word is decomposed by the nabla-filtration recursion:

    >>> sorted(str(m) for m in repring_decompose(["V", "V"]).elements())
    ['D', 'd^2']
    """
    letter_for = {"V": "d", "R": "D", "Ri": "Di"}
    letters = []
    for symbol in symbols:
        if symbol not in letter_for:
            raise ValueError(f"unknown symbol {symbol!r} (expected V, R, or Ri)")
        letters.append(letter_for[symbol])
    lam = LambdaWord.one()
    for letter in letters:
        lam = lam * LambdaWord((letter,))
    return nabla_multiset(lam)


# ---------------------------------------------------------------------------
# rigidity data for W = V (x) R^{-1}


def evaluation_map() -> ComoduleMap:
    """Evaluation (V (x) R^{-1}) (x) V -> 1 for the twisted dual of V."""
    V = build_V()
    W = tensor(V, build_R(-1))
    source = tensor(W, V)
    matrix = (tuple(Fraction(x) for x in (0, -1, 1, 0)),)
    return ComoduleMap(source, trivial(), matrix)


def coevaluation_map() -> ComoduleMap:
    """Coevaluation 1 -> V (x) (V (x) R^{-1}) pairing off with `evaluation_map`."""
    V = build_V()
    W = tensor(V, build_R(-1))
    target = tensor(V, W)
    matrix = tuple((Fraction(x),) for x in (0, 1, -1, 0))
    return ComoduleMap(trivial(), target, matrix)


if __name__ == "__main__":
    import doctest

    failures, _ = doctest.testmod()
    lam = parse_lambda("d.Di.d")
    L, _ = build_L(lam)
    print(f"L({lam}) has dimension {L.dim}")
    print(f"layer dimensions: {[layer_dimension(n) for n in range(4)]}")
    raise SystemExit(1 if failures else 0)
