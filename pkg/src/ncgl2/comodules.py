"""Finite dimensional right comodules over the quantum group algebra O.

A comodule of dimension n is a coaction matrix C of algebra elements:
rho(v_i) = sum_j C[i][j] # v_j, subject to the coassociativity and counit
axioms checked by comodule_axiom_failures.

Maps are stored column-wise: a ComoduleMap f with matrix F sends
f(v_i) = sum_k F[k][i] w_k.  hom_space solves the intertwining equations
exactly; when both sides are diagonal for the torus quotient the solver
restricts to weight-compatible matrix entries first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .ncalg import (
    NCElement,
    TensorElement,
    coproduct,
    counit,
    antipode,
    antipode_inv,
    one,
    tensor_of,
    word_key,
    render_element,
    parse_expression,
)
from .weights import Weight, weight_key

__all__ = [
    "Comodule",
    "ComoduleMap",
    "comodule_axiom_failures",
    "verify_comodule",
    "trivial",
    "tensor",
    "tensor_many",
    "right_dual",
    "left_dual",
    "torus_project",
    "torus_diagonal_weights",
    "hom_space",
    "are_isomorphic",
    "subspace_comodule",
    "quotient",
    "image",
    "kernel",
    "generated_subcomodule",
    "comodule_from_regular",
    "weight_decomposition",
    "highest_weight",
    "lowest_weight",
    "char_mul",
    "comodule_to_json",
    "comodule_from_json",
    "map_to_json",
    "map_from_json",
]


class Comodule:
    """A right comodule given by its coaction matrix."""

    __slots__ = ("dim", "labels", "coaction")

    def __init__(self, labels: Sequence[str], coaction: Sequence[Sequence[NCElement]]):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        rows = tuple(tuple(entry for entry in row) for row in coaction)
        assert len(rows) == self.dim and all(len(row) == self.dim for row in rows)
        self.coaction = rows

    def entry(self, i: int, j: int) -> NCElement:
        return self.coaction[i][j]

    def __repr__(self):
        return f"Comodule(dim={self.dim}, labels={list(self.labels)})"


class ComoduleMap:
    """A linear map between comodules, stored as a column-convention matrix."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Comodule, target: Comodule, matrix: Sequence[Sequence]):
        self.source = source
        self.target = target
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        assert len(rows) == target.dim and all(len(row) == source.dim for row in rows)
        self.matrix = rows

    def apply(self, vector: Sequence) -> list[Fraction]:
        assert len(vector) == self.source.dim
        return [
            sum((row[i] * Fraction(vector[i]) for i in range(self.source.dim)), Fraction(0))
            for row in self.matrix
        ]

    def compose(self, other: "ComoduleMap") -> "ComoduleMap":
        """self after other."""
        assert other.target is self.source or other.target.dim == self.source.dim
        product = linalg.mat_mul(self.matrix, other.matrix)
        return ComoduleMap(other.source, self.target, product)

    def rank(self) -> int:
        return linalg.rank(self.matrix)

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.rank() == self.source.dim

    def is_intertwiner(self) -> bool:
        X, Y, F = self.source, self.target, self.matrix
        for i in range(X.dim):
            for m in range(Y.dim):
                lhs = NCElement({})
                for k in range(Y.dim):
                    if F[k][i]:
                        lhs = lhs + Y.coaction[k][m] * F[k][i]
                rhs = NCElement({})
                for j in range(X.dim):
                    if F[m][j]:
                        rhs = rhs + X.coaction[i][j] * F[m][j]
                if lhs != rhs:
                    return False
        return True

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return ComoduleMap(
                self.source,
                self.target,
                [[x * Fraction(scalar) for x in row] for row in self.matrix],
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ComoduleMap)
            and self.matrix == other.matrix
            and self.source.dim == other.source.dim
            and self.target.dim == other.target.dim
        )

    def __repr__(self):
        return f"ComoduleMap({self.source.dim} -> {self.target.dim}, rank {self.rank()})"


def comodule_axiom_failures(X: Comodule) -> list[str]:
    """Violations of the comodule axioms, empty if X is a comodule."""
    problems = []
    for i in range(X.dim):
        for j in range(X.dim):
            left = coproduct(X.coaction[i][j])
            right = TensorElement(2, {})
            for k in range(X.dim):
                right = right + tensor_of(X.coaction[i][k], X.coaction[k][j])
            if left != right:
                problems.append(f"coassociativity fails at entry ({i}, {j})")
            expected = Fraction(1 if i == j else 0)
            if counit(X.coaction[i][j]) != expected:
                problems.append(f"counit fails at entry ({i}, {j})")
    return problems


def verify_comodule(X: Comodule) -> bool:
    return not comodule_axiom_failures(X)


def trivial() -> Comodule:
    return Comodule(("1",), ((one(),),))


def tensor(X: Comodule, Y: Comodule) -> Comodule:
    """Tensor product; basis (i, p) flattens to i * Y.dim + p."""
    labels = tuple(f"{lx}*{ly}" for lx in X.labels for ly in Y.labels)
    coaction = [
        [
            X.coaction[i][j] * Y.coaction[p][q]
            for j in range(X.dim)
            for q in range(Y.dim)
        ]
        for i in range(X.dim)
        for p in range(Y.dim)
    ]
    return Comodule(labels, coaction)


def tensor_many(factors: Sequence[Comodule]) -> Comodule:
    if not factors:
        return trivial()
    result = factors[0]
    for factor in factors[1:]:
        result = tensor(result, factor)
    return result


def right_dual(X: Comodule) -> Comodule:
    """The dual comodule with coaction entries S(C[j][i])."""
    labels = tuple(f"{l}*" for l in X.labels)
    coaction = [
        [antipode(X.coaction[j][i]) for j in range(X.dim)] for i in range(X.dim)
    ]
    return Comodule(labels, coaction)


def left_dual(X: Comodule) -> Comodule:
    """The dual comodule built with the inverse antipode.

    The determinant is not central, so the two duals are genuinely
    different twists: left_dual(V) is isomorphic to V # R^-1 while
    right_dual(V) is isomorphic to R^-1 # V.
    """
    labels = tuple(f"*{l}" for l in X.labels)
    coaction = [
        [antipode_inv(X.coaction[j][i]) for j in range(X.dim)] for i in range(X.dim)
    ]
    return Comodule(labels, coaction)


# ---------------------------------------------------------------------------
# Torus weights

def torus_project(element: NCElement) -> dict[Weight, Fraction]:
    """Image of an element in the torus quotient, as a Laurent polynomial."""
    out: dict[Weight, Fraction] = {}
    for word, coeff in element.items():
        i = j = 0
        dead = False
        for letter in word:
            if letter in ("b", "c"):
                dead = True
                break
            if letter == "a":
                i += 1
            elif letter == "d":
                j += 1
            elif letter == "D":
                i += 1
                j += 1
            else:
                i -= 1
                j -= 1
        if dead:
            continue
        w = Weight(i, j)
        value = out.get(w, Fraction(0)) + coeff
        if value:
            out[w] = value
        else:
            out.pop(w, None)
    return out


def torus_diagonal_weights(X: Comodule) -> list[Weight] | None:
    """Basis weights if the coaction is diagonal for the torus quotient."""
    weights = []
    for i in range(X.dim):
        for j in range(X.dim):
            projected = torus_project(X.coaction[i][j])
            if i == j:
                if len(projected) != 1:
                    return None
                (w, c), = projected.items()
                if c != 1:
                    return None
                weights.append(w)
            elif projected:
                return None
    return weights


def weight_decomposition(X: Comodule) -> dict[Weight, int]:
    """Multiplicities of torus weights; their total equals the dimension."""
    diagonal = torus_diagonal_weights(X)
    if diagonal is not None:
        out: dict[Weight, int] = {}
        for w in diagonal:
            out[w] = out.get(w, 0) + 1
        return out
    projected = [
        [torus_project(X.coaction[i][j]) for j in range(X.dim)] for i in range(X.dim)
    ]
    candidates = sorted(
        {w for row in projected for entry in row for w in entry}, key=weight_key
    )
    out = {}
    total = 0
    for t in candidates:
        equations = []
        for j in range(X.dim):
            per_word: dict[Weight, dict[int, Fraction]] = {}
            for i in range(X.dim):
                for w, c in projected[i][j].items():
                    row = per_word.setdefault(w, {})
                    row[i] = row.get(i, Fraction(0)) + c
            row = per_word.setdefault(t, {})
            row[j] = row.get(j, Fraction(0)) - 1
            equations.extend(per_word[w] for w in sorted(per_word, key=weight_key))
        mult = len(linalg.nullspace_sparse(equations, X.dim))
        if mult:
            out[t] = mult
            total += mult
    assert total == X.dim, "torus action is not semisimple on this basis"
    return out


def highest_weight(X: Comodule) -> tuple[Weight, int]:
    decomposition = weight_decomposition(X)
    w = max(decomposition, key=weight_key)
    return w, decomposition[w]


def lowest_weight(X: Comodule) -> tuple[Weight, int]:
    decomposition = weight_decomposition(X)
    w = min(decomposition, key=weight_key)
    return w, decomposition[w]


def char_mul(c1: dict[Weight, int], c2: dict[Weight, int]) -> dict[Weight, int]:
    out: dict[Weight, int] = {}
    for w1, m1 in c1.items():
        for w2, m2 in c2.items():
            w = Weight(w1.i + w2.i, w1.j + w2.j)
            value = out.get(w, 0) + m1 * m2
            if value:
                out[w] = value
            else:
                out.pop(w, None)
    return out


# ---------------------------------------------------------------------------
# Hom spaces

def hom_space(X: Comodule, Y: Comodule, use_weight_blocking: bool = True) -> list[ComoduleMap]:
    """Basis of the space of comodule maps X -> Y.

    The intertwining condition, entrywise over normal words, is a sparse
    homogeneous linear system in the matrix entries.  When both comodules
    are torus-diagonal, entries pairing different weights vanish and are
    excluded up front.
    """
    allowed: list[tuple[int, int]] = []
    if use_weight_blocking:
        wx = torus_diagonal_weights(X)
        wy = torus_diagonal_weights(Y)
    else:
        wx = wy = None
    if wx is not None and wy is not None:
        for k in range(Y.dim):
            for i in range(X.dim):
                if wy[k] == wx[i]:
                    allowed.append((k, i))
    else:
        allowed = [(k, i) for k in range(Y.dim) for i in range(X.dim)]
    var_index = {pair: n for n, pair in enumerate(allowed)}
    equations: list[dict[int, Fraction]] = []
    for i in range(X.dim):
        for m in range(Y.dim):
            per_word: dict[tuple, dict[int, Fraction]] = {}
            for k in range(Y.dim):
                var = var_index.get((k, i))
                if var is None:
                    continue
                for w, c in Y.coaction[k][m].items():
                    row = per_word.setdefault(w, {})
                    value = row.get(var, Fraction(0)) + c
                    if value:
                        row[var] = value
                    else:
                        row.pop(var, None)
            for j in range(X.dim):
                var = var_index.get((m, j))
                if var is None:
                    continue
                for w, c in X.coaction[i][j].items():
                    row = per_word.setdefault(w, {})
                    value = row.get(var, Fraction(0)) - c
                    if value:
                        row[var] = value
                    else:
                        row.pop(var, None)
            equations.extend(per_word[w] for w in sorted(per_word, key=word_key) if per_word[w])
    solutions = linalg.nullspace_sparse(equations, len(allowed))
    maps = []
    for sol in solutions:
        matrix = [[Fraction(0)] * X.dim for _ in range(Y.dim)]
        for (k, i), var in var_index.items():
            matrix[k][i] = sol[var]
        maps.append(ComoduleMap(X, Y, matrix))
    return maps


def are_isomorphic(X: Comodule, Y: Comodule) -> bool:
    """Whether some comodule map X -> Y is invertible."""
    if X.dim != Y.dim:
        return False
    if X.dim == 0:
        return True
    maps = hom_space(X, Y)
    for f in maps:
        if f.is_isomorphism():
            return True
    # an invertible combination may exist even if no basis map is invertible
    import random

    rng = random.Random(20260818)
    for _ in range(32):
        if not maps:
            return False
        matrix = [[Fraction(0)] * X.dim for _ in range(Y.dim)]
        for f in maps:
            weight = rng.randint(-4, 4)
            for k in range(Y.dim):
                for i in range(X.dim):
                    matrix[k][i] += weight * f.matrix[k][i]
        if linalg.rank(matrix) == X.dim:
            return True
    return False


# ---------------------------------------------------------------------------
# Subquotients

def _coaction_components(X: Comodule, vector: Sequence[Fraction]):
    """rho(vector) as {word: coefficient vector over the basis of X}."""
    entries = []
    for j in range(X.dim):
        el = NCElement({})
        for i in range(X.dim):
            if vector[i]:
                el = el + X.coaction[i][j] * vector[i]
        entries.append(el)
    words = sorted({w for el in entries for w in el.terms}, key=word_key)
    return [(w, [el.coefficient(w) for el in entries]) for w in words]


def subspace_comodule(X: Comodule, vectors: Iterable[Sequence]) -> tuple[Comodule, ComoduleMap]:
    """The comodule on a coaction-closed subspace, with its inclusion.

    Raises ValueError if the span is not closed under the coaction.
    """
    rows, pivots = linalg.rref([list(v) for v in vectors])
    r = len(rows)
    coaction = [[NCElement({}) for _ in range(r)] for _ in range(r)]
    for p in range(r):
        for w, component in _coaction_components(X, rows[p]):
            coords = [component[pivot] for pivot in pivots]
            rebuilt = [Fraction(0)] * X.dim
            for q in range(r):
                if coords[q]:
                    for idx in range(X.dim):
                        rebuilt[idx] += coords[q] * rows[q][idx]
            if rebuilt != list(component):
                raise ValueError("span is not closed under the coaction")
            for q in range(r):
                if coords[q]:
                    coaction[p][q] = coaction[p][q] + NCElement({w: coords[q]})
    labels = tuple(f"u{p + 1}" for p in range(r))
    sub = Comodule(labels, coaction)
    inclusion = ComoduleMap(sub, X, [[rows[q][i] for q in range(r)] for i in range(X.dim)])
    return sub, inclusion


def quotient(X: Comodule, vectors: Iterable[Sequence]) -> tuple[Comodule, ComoduleMap]:
    """The quotient by a coaction-closed span, with its projection."""
    vectors = [list(v) for v in vectors]
    subspace_comodule(X, vectors)  # raises if not a subcomodule
    rows, pivots = linalg.rref(vectors)
    free = [i for i in range(X.dim) if i not in set(pivots)]
    proj = [[Fraction(0)] * X.dim for _ in range(len(free))]
    for t, f in enumerate(free):
        proj[t][f] = Fraction(1)
        for q, p in enumerate(pivots):
            proj[t][p] = -rows[q][f]
    coaction = [[NCElement({}) for _ in range(len(free))] for _ in range(len(free))]
    for s, f in enumerate(free):
        for j in range(X.dim):
            entry = X.coaction[f][j]
            if entry.is_zero():
                continue
            for t in range(len(free)):
                if proj[t][j]:
                    coaction[s][t] = coaction[s][t] + entry * proj[t][j]
    labels = tuple(f"q{t + 1}" for t in range(len(free)))
    quo = Comodule(labels, coaction)
    return quo, ComoduleMap(X, quo, proj)


def image(f: ComoduleMap) -> tuple[Comodule, ComoduleMap]:
    """The image subcomodule of the target, with its inclusion."""
    columns = [[f.matrix[k][i] for k in range(f.target.dim)] for i in range(f.source.dim)]
    rows, _ = linalg.rref(columns)
    return subspace_comodule(f.target, rows)


def kernel(f: ComoduleMap) -> tuple[Comodule, ComoduleMap]:
    """The kernel subcomodule of the source, with its inclusion."""
    null = linalg.nullspace([list(row) for row in f.matrix], f.source.dim)
    return subspace_comodule(f.source, null)


def generated_subcomodule(X: Comodule, vector: Sequence) -> tuple[Comodule, ComoduleMap]:
    """The smallest subcomodule containing the vector."""
    echelon = linalg.Echelon(X.dim)
    echelon.insert([Fraction(x) for x in vector])
    grew = True
    while grew:
        grew = False
        for row in list(echelon.basis()):
            for _, component in _coaction_components(X, row):
                if echelon.insert(component):
                    grew = True
        assert len(echelon) <= X.dim
    return subspace_comodule(X, echelon.basis())


# ---------------------------------------------------------------------------
# Comodules inside the regular comodule

class _RegularEchelon:
    """Reduced echelon set of algebra elements, keyed by leading word."""

    def __init__(self):
        self.rows: dict[tuple, NCElement] = {}

    def reduce(self, element: NCElement) -> NCElement:
        while not element.is_zero():
            lead = max(element.terms, key=word_key)
            row = self.rows.get(lead)
            if row is None:
                return element
            element = element - row * element.coefficient(lead)
        return element

    def insert(self, element: NCElement) -> bool:
        element = self.reduce(element)
        if element.is_zero():
            return False
        lead = max(element.terms, key=word_key)
        element = element * (Fraction(1) / element.coefficient(lead))
        for key, row in list(self.rows.items()):
            coeff = row.coefficient(lead)
            if coeff:
                self.rows[key] = row - element * coeff
        self.rows[lead] = element
        return True

    def basis(self) -> list[NCElement]:
        return [self.rows[key] for key in sorted(self.rows, key=word_key)]

    def coordinates(self, element: NCElement) -> list[Fraction] | None:
        order = sorted(self.rows, key=word_key)
        coords = {key: Fraction(0) for key in order}
        while not element.is_zero():
            lead = max(element.terms, key=word_key)
            row = self.rows.get(lead)
            if row is None:
                return None
            coeff = element.coefficient(lead)
            coords[lead] = coeff
            element = element - row * coeff
        return [coords[key] for key in order]


def _coproduct_components(element: NCElement) -> list[tuple[tuple, NCElement]]:
    """Delta(element) grouped by the left leg: [(word, right component)]."""
    grouped: dict[tuple, dict[tuple, Fraction]] = {}
    for (w1, w2), coeff in coproduct(element).items():
        row = grouped.setdefault(w1, {})
        value = row.get(w2, Fraction(0)) + coeff
        if value:
            row[w2] = value
        else:
            row.pop(w2, None)
    out = []
    for w1 in sorted(grouped, key=word_key):
        if grouped[w1]:
            out.append((w1, NCElement(grouped[w1])))
    return out


def comodule_from_regular(elements: Iterable[NCElement]) -> tuple[Comodule, list[NCElement]]:
    """The subcomodule of O generated by the given elements.

    The span is closed under taking right coproduct components; the
    returned basis elements realize the abstract comodule inside O.
    """
    echelon = _RegularEchelon()
    for element in elements:
        echelon.insert(element)
    grew = True
    while grew:
        grew = False
        for row in echelon.basis():
            for _, component in _coproduct_components(row):
                if echelon.insert(component):
                    grew = True
    basis = echelon.basis()
    n = len(basis)
    coaction = [[NCElement({}) for _ in range(n)] for _ in range(n)]
    for p, row in enumerate(basis):
        for w1, component in _coproduct_components(row):
            coords = echelon.coordinates(component)
            assert coords is not None, "closure failed to capture a component"
            for q in range(n):
                if coords[q]:
                    coaction[p][q] = coaction[p][q] + NCElement({w1: coords[q]})
    labels = tuple(f"f{p + 1}" for p in range(n))
    return Comodule(labels, coaction), basis


# ---------------------------------------------------------------------------
# Serialization

def comodule_to_json(X: Comodule) -> dict:
    return {
        "dim": X.dim,
        "labels": list(X.labels),
        "coaction": [[render_element(e) for e in row] for row in X.coaction],
    }


def comodule_from_json(data: dict) -> Comodule:
    labels = tuple(data["labels"])
    coaction = [[parse_expression(text) for text in row] for row in data["coaction"]]
    return Comodule(labels, coaction)


def map_to_json(f: ComoduleMap) -> dict:
    return {
        "dimSource": f.source.dim,
        "dimTarget": f.target.dim,
        "matrix": [[str(x) for x in row] for row in f.matrix],
    }


def map_from_json(data: dict, source: Comodule, target: Comodule) -> ComoduleMap:
    matrix = [[Fraction(x) for x in row] for row in data["matrix"]]
    return ComoduleMap(source, target, matrix)
