"""Walk through the rewriting system and the Hopf structure.

Run with: python3 demos/rewrite_and_hopf.py
"""

from collections import Counter

from ncgl2 import (
    antipode,
    coproduct,
    enumerate_basis,
    gen,
    parse_expression,
    render_element,
)
from ncgl2.ncalg import check_confluence, render_word


def show(text):
    el = parse_expression(text)
    print(f"  {text:14s} ->  {render_element(el)}")


print("Defining relations, applied as left-to-right rewrites:")
for sample in ("c*a", "d*a", "c*b", "D*Di", "b*Di*c", "d*Di*a"):
    show(sample)

print()
print("The determinant d*a - b*c reduces to the group-like generator D:")
show("d*a - b*c")

print()
print("D is invertible but NOT central; conjugation by it moves elements:")
show("Di*a*D")
show("a")

print()
report = check_confluence()
print(
    f"Overlap check: {report['count']} ambiguities, "
    f"all joinable = {report['pass']}"
)

basis = enumerate_basis(4)
counts = Counter(len(w) for w in basis)
print("Normal words per length:", dict(sorted(counts.items())))

print()
print("Comultiplication is matrix-style on the generator matrix [[a,b],[c,d]]:")
for letter in ("a", "b"):
    legs = coproduct(gen(letter))
    terms = " + ".join(
        f"{render_word(w1)}(x){render_word(w2)}"
        for (w1, w2), c in sorted(legs.items())
    )
    print(f"  Delta({letter}) = {terms}")

print()
print("The antipode inverts the generator matrix against the determinant:")
for letter in ("a", "b", "c", "d", "D"):
    print(f"  S({letter}) = {render_element(antipode(gen(letter)))}")

a = gen("a")
s2 = antipode(antipode(a))
print()
print(f"S(S(a)) = {render_element(s2)}  (conjugation by D, so S has infinite order)")
