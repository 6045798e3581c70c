"""Combinatorial classification of the simple comodules.

Every simple comodule is a tensor product of blocks S^k V, T^t V, and
determinant lines R^i, read off from the weight word lam by a greedy
rewriting of its delta^{-1}-linked runs of d's.  The pipeline:

  1. `split_segments`: cut lam at every delta power other than -1; each
     segment is a chain of d-runs z = (z_0, ..., z_m) joined by single
     delta^{-1}'s, and the powers between segments become R^i factors.
  2. `delta_grouping`: inside a segment, maximal chains of gaps whose shared
     runs have length 1 become T-blocks (a chain of t-1 gaps eats one d from
     each run it touches and yields T^t); leftover d's stay as S-blocks.
  3. `classify`: unit transfers T^t, S^k -> T^(t-1), R^(-1), S^(k+1) are
     applied greedily while the donated T stays within one of the receiving
     S (the inequality table below), empty blocks are collapsed, the result
     is checked against the adjacency table and normalized to the canonical
     representative of its exchange-isomorphism orbit.

The adjacency table (which tensor products of adjacent blocks remain
simple):

    T^a (x) S^b          simple iff a >= b + 1
    T^a (x) R^-1 (x) S^b simple iff a + 1 <= b
    (and the two mirror images; T next to T and S next to S are free)

is justified by an independent classical oracle: `sl2_rank_oracle`
differentiates polynomial bimodules and reports injectivity/surjectivity of
the transfer operator, which match the two inequalities exactly.

>>> from .weights import parse_lambda
>>> classify(parse_lambda("d.Di.d^2")).render()
'T2 * S1'
>>> classify(parse_lambda("d.Di.d^2")).dim
6
>>> classify(parse_lambda("d^2")).render()
'S2'
"""

from __future__ import annotations

from fractions import Fraction

from .weights import LambdaWord, Weight
from .comodules import Comodule, char_mul, tensor_many, trivial
from . import linalg

__all__ = [
    "BlockExpression",
    "ClassifierError",
    "split_segments",
    "delta_grouping",
    "classify",
    "block_comodule",
    "block_char",
    "classify_crosscheck",
    "validate_adjacency",
    "sl2_rank_oracle",
    "sl2_commutation_check",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

Factor = tuple[str, int]


class ClassifierError(ValueError):
    """Raised when a classifier invariant fails (an internal contradiction)."""


class BlockExpression:
    """A tensor word in the blocks S^k V, T^t V, R^i.

    Factors are (kind, exponent) pairs with kind in {"S", "T", "R"}; the
    expression denotes the tensor product of the named comodules in order.
    """

    __slots__ = ("factors",)

    def __init__(self, factors):
        self.factors = tuple((str(k), int(e)) for k, e in factors)

    @property
    def dim(self) -> int:
        out = 1
        for kind, exp in self.factors:
            if kind in ("S", "T"):
                out *= exp + 1
        return out

    def render(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for kind, exp in self.factors:
            if kind == "S":
                parts.append(f"S{exp}")
            elif kind == "T":
                parts.append(f"T{exp}")
            elif exp == 1:
                parts.append("R")
            elif exp == -1:
                parts.append("Ri")
            else:
                parts.append(f"R^{exp}")
        return " * ".join(parts)

    def rinv_count(self) -> int:
        return sum(1 for kind, exp in self.factors if kind == "R" and exp == -1)

    def __eq__(self, other):
        return isinstance(other, BlockExpression) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"BlockExpression({self.render()!r})"


# ---------------------------------------------------------------------------
# segment combinatorics


def split_segments(lam: LambdaWord):
    """Cut lam into delta^{-1}-linked segments.

    Returns (lead, segments, connectors, trail): `segments` is a list of
    tuples of d-run lengths, `connectors` the delta powers between
    consecutive segments (never -1), and lead/trail the outer delta powers
    (0 when absent).
    """
    atoms = lam.atoms()
    lead = 0
    trail = 0
    segments: list[tuple[int, ...]] = []
    connectors: list[int] = []
    current: list[int] = []
    pending_delta = None
    for kind, value in atoms:
        if kind == "delta":
            if not current and not segments:
                lead = value
            else:
                pending_delta = value
        else:
            if current and pending_delta == -1:
                current.append(value)
            elif current:
                segments.append(tuple(current))
                connectors.append(pending_delta)
                current = [value]
            elif segments:
                segments.append(tuple(current)) if current else None
                connectors.append(pending_delta)
                current = [value]
            else:
                current = [value]
            pending_delta = None
    if current:
        segments.append(tuple(current))
    if pending_delta is not None:
        trail = pending_delta
    return lead, segments, connectors, trail


def delta_grouping(z: tuple[int, ...]) -> BlockExpression:
    """The symmetrized block grouping of one segment.

    Gaps whose shared run has length 1 chain together; a chain of g gaps
    absorbs one d from each of the g+1 runs it touches and becomes T^{g+1}.
    Each run keeps its leftover d's as an S-block (omitted when empty).  The
    product of (t_i + 1) over the T-blocks times 2^(leftover d count) equals
    the dimension of the standard comodule of the segment.

    >>> delta_grouping((1, 2)).render()
    'T2 * S1'
    >>> delta_grouping((2,)).render()
    'S2'
    """
    m = len(z) - 1
    if m == 0:
        return BlockExpression([("S", z[0])])
    chains: list[list[int]] = [[1]]
    for gap in range(2, m + 1):
        if z[gap - 1] == 1:
            chains[-1].append(gap)
        else:
            chains.append([gap])
    factors: list[Factor] = []
    if z[0] - 1 > 0:
        factors.append(("S", z[0] - 1))
    for c, chain in enumerate(chains):
        factors.append(("T", len(chain) + 1))
        if c + 1 < len(chains):
            shared = z[chain[-1]]
            if shared - 2 > 0:
                factors.append(("S", shared - 2))
    if z[m] - 1 > 0:
        factors.append(("S", z[m] - 1))
    return BlockExpression(factors)


# ---------------------------------------------------------------------------
# the greedy classifier


def _classify_segment(z: tuple[int, ...]) -> list[Factor]:
    """Greedy normal form of one segment, as a factor list (S/T/R only)."""
    grouped = list(delta_grouping(z).factors)
    blocks: list[list] = []
    for kind, exp in grouped:
        if blocks and blocks[-1][0] == "T" and kind == "T":
            blocks.append(["S", 0])
        blocks.append([kind, exp])
    connectors = [0] * (len(blocks) - 1)
    pendings: list[tuple[int, int]] = []
    for i in range(len(blocks) - 1):
        left, right = blocks[i][0], blocks[i + 1][0]
        if left == "S" and right == "T":
            pendings.append((i + 1, i))
        elif left == "T" and right == "S":
            pendings.append((i, i + 1))
    while True:
        chosen = None
        for p, (donor, receiver) in enumerate(pendings):
            if blocks[donor][1] >= 1 and blocks[donor][1] <= blocks[receiver][1] + 1:
                chosen = p
                break
        if chosen is None:
            break
        donor, receiver = pendings.pop(chosen)
        blocks[donor][1] -= 1
        blocks[receiver][1] += 1
        connectors[min(donor, receiver)] = -1
    factors: list[Factor] = []
    for i, (kind, exp) in enumerate(blocks):
        if i > 0 and connectors[i - 1] == -1:
            factors.append(("R", -1))
        factors.append((kind, exp))
    factors = _collapse_empty(factors)
    return factors


def _collapse_empty(factors: list[Factor]) -> list[Factor]:
    """Remove T^0 (which is R, cancelling its two R^-1 flanks) and S^0."""
    out = list(factors)
    while True:
        for i, (kind, exp) in enumerate(out):
            if kind == "T" and exp == 0:
                if not (
                    i > 0
                    and i + 1 < len(out)
                    and out[i - 1] == ("R", -1)
                    and out[i + 1] == ("R", -1)
                ):
                    raise ClassifierError(
                        f"empty T-block not flanked by two R^-1 factors in {out}"
                    )
                out[i - 1 : i + 2] = [("R", -1)]
                break
            if kind == "S" and exp == 0:
                if (i > 0 and out[i - 1][0] == "R") or (
                    i + 1 < len(out) and out[i + 1][0] == "R"
                ):
                    raise ClassifierError(
                        f"empty S-block touching an R factor in {out}"
                    )
                del out[i]
                break
        else:
            return out


def validate_adjacency(factors) -> None:
    """Check every adjacent S/T pair against the simplicity table.

    Raises ClassifierError on a violation; R^i factors with i != -1 separate
    their neighbours completely and impose no constraint.
    """
    factors = list(factors)
    for i, (kind, exp) in enumerate(factors):
        if kind not in ("S", "T"):
            continue
        j = i + 1
        rinv = False
        if j < len(factors) and factors[j][0] == "R":
            if factors[j][1] != -1:
                continue
            rinv = True
            j += 1
        if j >= len(factors) or factors[j][0] not in ("S", "T"):
            continue
        kind2, exp2 = factors[j]
        if kind == kind2:
            continue
        a = exp if kind == "T" else exp2
        b = exp2 if kind == "T" else exp
        if rinv:
            if not a + 1 <= b:
                raise ClassifierError(
                    f"T^{a} and S^{b} joined by R^-1 need a+1 <= b: {factors}"
                )
        else:
            if not a >= b + 1:
                raise ClassifierError(
                    f"adjacent T^{a} and S^{b} need a >= b+1: {factors}"
                )


def _exchange_neighbours(factors: tuple[Factor, ...]):
    """All factor lists one exchange isomorphism away.

    The moves T^a, S^(a-1) <-> T^(a-1), R^-1, S^a (and mirror images) with
    every exponent kept >= 1.
    """
    out = []
    n = len(factors)
    for i in range(n - 1):
        (k1, e1), (k2, e2) = factors[i], factors[i + 1]
        if k1 == "T" and k2 == "S" and e2 == e1 - 1 and e1 - 1 >= 1:
            out.append(factors[:i] + (("T", e1 - 1), ("R", -1), ("S", e1)) + factors[i + 2 :])
        if k1 == "S" and k2 == "T" and e1 == e2 - 1 and e2 - 1 >= 1:
            out.append(factors[:i] + (("S", e2), ("R", -1), ("T", e2 - 1)) + factors[i + 2 :])
    for i in range(n - 2):
        (k1, e1), (k2, e2), (k3, e3) = factors[i], factors[i + 1], factors[i + 2]
        if (k2, e2) != ("R", -1):
            continue
        if k1 == "T" and k3 == "S" and e3 == e1 + 1 and e1 >= 1:
            out.append(factors[:i] + (("T", e1 + 1), ("S", e1)) + factors[i + 3 :])
        if k1 == "S" and k3 == "T" and e1 == e3 + 1 and e3 >= 1:
            out.append(factors[:i] + (("S", e3), ("T", e3 + 1)) + factors[i + 3 :])
    return out


def _normalize(factors: list[Factor]) -> tuple[Factor, ...]:
    """Canonical representative of the exchange orbit.

    Breadth-first search over the exchange moves; the representative has the
    fewest R^-1 factors, ties broken by the rendered string.  Every member
    of the orbit must itself pass the adjacency table.
    """
    start = tuple(factors)
    seen = {start}
    queue = [start]
    while queue:
        current = queue.pop(0)
        validate_adjacency(current)
        for neighbour in _exchange_neighbours(current):
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    def sort_key(fs):
        expr = BlockExpression(fs)
        return (expr.rinv_count(), expr.render())
    return min(seen, key=sort_key)


def classify(lam: LambdaWord) -> BlockExpression:
    """The block expression of the simple comodule L(lam).

    Segments separated by delta powers other than -1 classify independently
    and are joined by R^i factors; inside a segment the greedy unit-transfer
    loop runs on the symmetrized grouping and the result is normalized.

    >>> from .weights import parse_lambda
    >>> classify(parse_lambda("d.Di.d.Di.d^3")).render()
    'T3 * S2'
    >>> classify(parse_lambda("D^2")).render()
    'R^2'
    """
    lead, segments, connectors, trail = split_segments(lam)
    factors: list[Factor] = []
    if lead:
        factors.append(("R", lead))
    for s, z in enumerate(segments):
        if s > 0:
            factors.append(("R", connectors[s - 1]))
        factors.extend(_normalize(_classify_segment(z)))
    if trail:
        factors.append(("R", trail))
    validate_adjacency(factors)
    return BlockExpression(factors)


# ---------------------------------------------------------------------------
# realization and cross-checks


def block_comodule(expr: BlockExpression) -> Comodule:
    """The tensor product comodule named by a block expression."""
    from .standard import build_R, build_SymV, build_TV

    if not expr.factors:
        return trivial()
    parts = []
    for kind, exp in expr.factors:
        if kind == "S":
            parts.append(build_SymV(exp))
        elif kind == "T":
            parts.append(build_TV(exp))
        else:
            parts.append(build_R(exp))
    return tensor_many(parts)


def block_char(expr: BlockExpression) -> dict[Weight, int]:
    """Formal character of a block expression (product of factor characters)."""
    from .standard import char_R, char_S, char_T

    out: dict[Weight, int] = {Weight(0, 0): 1}
    for kind, exp in expr.factors:
        if kind == "S":
            out = char_mul(out, char_S(exp))
        elif kind == "T":
            out = char_mul(out, char_T(exp))
        else:
            out = char_mul(out, char_R(exp))
    return out


def classify_crosscheck(lam: LambdaWord) -> dict:
    """Compare the combinatorial answer with the linear-algebra construction.

    Returns a report dict; `consistent` requires the block dimension to
    equal the rank of the canonical map Delta(lam) -> nabla(lam) and the
    block character to equal the character of its image L(lam).
    """
    from .standard import canonical_map
    from .comodules import image, weight_decomposition

    expr = classify(lam)
    f = canonical_map(lam)
    rank = f.rank()
    L, _ = image(f)
    char_ok = block_char(expr) == weight_decomposition(L)
    return {
        "lambda": str(lam),
        "expression": expr.render(),
        "dim": expr.dim,
        "rank": rank,
        "dimL": L.dim,
        "consistent": expr.dim == rank == L.dim and char_ok,
    }


# ---------------------------------------------------------------------------
# the classical rank oracle


def sl2_rank_oracle(a: int, b: int, direction: str = "left") -> dict:
    """Rank of the polynomial transfer operator between adjacent blocks.

    On monomials x1^i x2^(a-i) y1^j y2^(b-j) the operator E = y1 d/dx1 +
    y2 d/dx2 maps the bidegree (a, b) space to the bidegree (a-1, b+1)
    space (direction "left"); direction "right" uses x1 d/dy1 + x2 d/dy2
    instead.  Exact integer ranks give the classical criteria

        left  injective  iff a >= b + 1    (plain adjacency)
        right injective  iff b >= a + 1    (adjacency across R^-1)

    >>> sl2_rank_oracle(2, 1)["injective"], sl2_rank_oracle(2, 1)["surjective"]
    (True, True)
    >>> sl2_rank_oracle(1, 3)["rank"]
    5
    """
    if direction not in ("left", "right"):
        raise ValueError("direction must be 'left' or 'right'")
    source_dim = (a + 1) * (b + 1)
    if direction == "left":
        target_dim = a * (b + 2) if a >= 1 else 0
    else:
        target_dim = (a + 2) * b if b >= 1 else 0
    rows = []
    for i in range(a + 1):
        for j in range(b + 1):
            row = [_ZERO] * target_dim
            if direction == "left":
                if i >= 1:
                    row[(i - 1) * (b + 2) + (j + 1)] += Fraction(i)
                if a - i >= 1 and a >= 1:
                    row[i * (b + 2) + j] += Fraction(a - i)
            else:
                if j >= 1:
                    row[(i + 1) * b + (j - 1)] += Fraction(j)
                if b - j >= 1:
                    row[i * b + j] += Fraction(b - j)
            rows.append(row)
    rank = linalg.rank(rows) if target_dim else 0
    return {
        "a": a,
        "b": b,
        "direction": direction,
        "rank": rank,
        "source_dim": source_dim,
        "target_dim": target_dim,
        "injective": rank == source_dim,
        "surjective": rank == target_dim,
    }


def _apply_operator(poly: dict, pairs) -> dict:
    """Apply sum of (out_index, in_index) first-order operators to a polynomial.

    Monomials are exponent tuples over (x1, x2, y1, y2, z1, z2); the
    operator summand (o, i) is variable_o * d/d variable_i.
    """
    out: dict = {}
    for mono, coeff in poly.items():
        for o, i in pairs:
            if mono[i] == 0:
                continue
            new = list(mono)
            new[i] -= 1
            new[o] += 1
            key = tuple(new)
            value = out.get(key, _ZERO) + coeff * mono[i]
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return out


def sl2_commutation_check(max_exp: int = 4) -> bool:
    """The two transfer operators donating into a shared middle commute.

    E1 = y1 d/dx1 + y2 d/dx2 and E2 = y1 d/dz1 + y2 d/dz2 are checked on
    every monomial of x-degree a, y-degree b, z-degree c with a, b, c up to
    max_exp.
    """
    from itertools import product as iproduct

    E1 = ((2, 0), (3, 1))
    E2 = ((2, 4), (3, 5))
    for a, b, c in iproduct(range(max_exp + 1), repeat=3):
        for i in range(a + 1):
            for j in range(b + 1):
                for k in range(c + 1):
                    mono = (i, a - i, j, b - j, k, c - k)
                    poly = {mono: _ONE}
                    lhs = _apply_operator(_apply_operator(poly, E1), E2)
                    rhs = _apply_operator(_apply_operator(poly, E2), E1)
                    if lhs != rhs:
                        return False
    return True


if __name__ == "__main__":
    import doctest
    from .weights import parse_lambda

    failures, _ = doctest.testmod()
    for text in ("d.Di.d^2", "d.Di.d.Di.d^3", "d.Di.d^4.Di.d.Di.d.Di.d.Di.d"):
        lam = parse_lambda(text)
        expr = classify(lam)
        print(f"{text}  ->  {expr.render()}   (dim {expr.dim})")
    raise SystemExit(1 if failures else 0)
