"""Standard and costandard comodules, filtration multisets, graded layers.

Run with: python3 demos/filtrations.py
"""

from collections import Counter

from ncgl2 import (
    build_L,
    build_M,
    build_delta,
    build_nabla,
    delta_multiset,
    enumerate_basis,
    nabla_multiset,
    parse_lambda,
    weight_decomposition,
)
from ncgl2.standard import decompose_layer, layer_dimension

print("Costandard comodules nabla(lambda): tensor words in symmetric powers")
print("of the standard comodule V and determinant powers.")
print()
for text in ("d", "d^2", "d.Di.d", "d^2.Di.d"):
    lam = parse_lambda(text)
    nab = build_nabla(lam)
    char = ", ".join(f"{w}:{m}" for w, m in sorted(weight_decomposition(nab).items()))
    print(f"  nabla({text}): dim {nab.dim}, character {{{char}}}")

print()
print("Standards and costandards at the same label can differ in dimension;")
print("d^2 is the smallest witness:")
lam = parse_lambda("d^2")
print(f"  dim delta(d^2) = {build_delta(lam).dim}, dim nabla(d^2) = {build_nabla(lam).dim}")
L, _ = build_L(lam)
print(f"  their common simple quotient/sub L(d^2) has dim {L.dim}")

print()
print("The tensor word M(lambda) carries a costandard filtration whose")
print("multiset comes from a two-case letter recursion:")
for text in ("d^4", "d^2.Di.d"):
    lam = parse_lambda(text)
    members = sorted(nabla_multiset(lam).items(), key=lambda kv: str(kv[0]))
    listing = ", ".join(f"{k}" for k, v in members for _ in range(v))
    total = sum(build_nabla(mu).dim * m for mu, m in nabla_multiset(lam).items())
    print(f"  M({text}), dim {build_M(lam).dim}: nabla layers [{listing}]")
    print(f"    dimension audit: sum of layer dims = {total}")

print()
print("The mirrored recursion gives the standard filtration:")
lam = parse_lambda("d^2.Di.d")
members = sorted(str(k) for k in delta_multiset(lam))
print(f"  delta layers of M(d^2.Di.d): {members}")

print()
print("Graded layers of the algebra itself decompose into costandards:")
basis = enumerate_basis(5)
counts = Counter(len(w) for w in basis)
for n in range(1, 6):
    labels = Counter(str(label) for _, label in decompose_layer(n))
    head = ", ".join(f"{k}" + (f" x{v}" if v > 1 else "") for k, v in sorted(labels.items())[:5])
    more = "" if len(labels) <= 5 else ", ..."
    print(
        f"  length {n}: {counts[n]} normal words = "
        f"{layer_dimension(n)} from layers [{head}{more}]"
    )
