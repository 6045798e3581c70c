"""Triangular quotients, semi-invariant vectors, and truncated induction.

Run with: python3 demos/borel_induction.py
"""

from ncgl2 import (
    BOREL_LOWER,
    BOREL_UPPER,
    build_nabla,
    gen,
    parse_expression,
    parse_lambda,
    parse_weight,
    psi,
    semi_invariants,
)
from ncgl2.borel import induced_predicted, induced_truncated
from ncgl2.ncalg import render_element, render_word
from ncgl2.standard import char_nabla

print("Two triangular quotients kill one off-diagonal generator each.")
print("Images of the generators (None means killed):")
for letter in ("a", "b", "c", "d", "D"):
    low = BOREL_LOWER.project(gen(letter))
    up = BOREL_UPPER.project(gen(letter))
    fmt = lambda img: "0" if not img else next(iter(img.items()))[0]
    print(f"  {letter}:  lower {fmt(low)},  upper {fmt(up)}")

print()
print("The flip a<->d, b<->c is a Hopf algebra automorphism exchanging the")
print("two quotients.  On the mixed relation d*a = b*c + D it gives:")
print(f"  psi(d*a) = {render_element(psi(parse_expression('d*a')))}")

print()
print("A costandard comodule has exactly one upper-semi-invariant line,")
print("sitting at the label's weight:")
lam = parse_lambda("d^2")
nab = build_nabla(lam)
for t in sorted(char_nabla(lam)):
    vecs = semi_invariants(nab, BOREL_UPPER, t)
    marker = "  <- wt(lambda)" if t == lam.wt() else ""
    print(f"  weight {str(t):8s}: {len(vecs)} line(s){marker}")

print()
print("Truncated induction from a character of the lower quotient, solved")
print("as a linear system over normal words of bounded length, against the")
print("predicted combinatorial basis:")
for w_text, n in (("d", 1), ("d", 3), ("a*d", 2), ("a^2*d^2", 2), ("a", 3)):
    t = parse_weight(w_text)
    solved = sorted(render_element(f) for f in induced_truncated(t, n))
    predicted = sorted(render_word(w) for w in induced_predicted(t, n))
    status = "match" if solved == predicted else "MISMATCH"
    print(f"  weight {w_text:8s} cutoff {n}: dim {len(solved):2d}  [{status}]")
    if solved:
        print(f"    basis: {', '.join(solved)}")

print()
print("Non-dominant weights induce zero, as the last line shows.")
