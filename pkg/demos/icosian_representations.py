"""
Representations onto A5 through the icosians
============================================

The 120 unit icosians form the binary icosahedral group; projectively they
are A5.  An exceptional root of tau_W gives an onto representation.
"""

from collections import Counter

from tracelab import binary_icosahedral, essential_representation, parse_word
from tracelab.exact import PHI

G = binary_icosahedral()
print("order", len(G))
print("traces:", dict(Counter(t.pretty() for t in G.traces)))

rep = essential_representation(parse_word("x y^2"), PHI - 1)
print("X =", rep.X)
print("Y =", rep.Y)
print("W =", rep.W, " trace", rep.W.trace.pretty())
print("image order", rep.image_order)
