"""
Trace polynomials of relator words
==================================

tr X = 1 and tr Y = phi are fixed; tr W(X, Y) is then a polynomial in
lambda = tr XY with coefficients in Q(sqrt5).
"""

import numpy as np

from tracelab import parse_word, trace_polynomial
from tracelab.trace import numeric_trace_oracle

# a few words and their polynomials
for text in ["x y", "x y^4", "x y^2", "x y x y", "x^2 y^3 x y"]:
    w = parse_word(text)
    print(f"{str(w):<16} k={w.k}  tau = {trace_polynomial(w)}")

# the exact answer agrees with random 2x2 matrices having the right traces
w = parse_word("x^2 y^3 x^2 y^4 x y")
tau = trace_polynomial(w)
rng = np.random.default_rng(0)
for lam0 in (0.3, -1.2, 0.5 + 0.7j):
    print(f"lambda={lam0}: exact {tau.eval_complex(lam0):.10f}  numeric {numeric_trace_oracle(w, lam0, rng=rng):.10f}")
