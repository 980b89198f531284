"""
Presentation of the index-30 subgroup
=====================================

Gamma is the preimage of the order-2 subgroup generated by the image of W.
Reidemeister-Schreier gives 31 generators and relators from x^3, y^5 and W^2.
"""

from tracelab import gamma_presentation, parse_word
from tracelab.exact import ZERO, PHI
from tracelab.subgroups import abelianization

g = gamma_presentation(parse_word("x y"), ZERO)
for key, value in g.summary().items():
    print(f"{key:<26} {value}")

# the two squared relators
p = g.presentation
for r in p.relators:
    if r.provenance == "from_W2_square":
        print("square:", p.word_text(r.word))

# a word with a double root: the abelianisation has free rank 2
g = gamma_presentation(parse_word("x^2 y^3 x^2 y^4 x y"), PHI - 1)
print("abelianisation:", abelianization(g.presentation))
