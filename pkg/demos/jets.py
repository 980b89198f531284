"""
First-order deformations with dual numbers
==========================================

Working over C[lambda]/(lambda - alpha)^2 means carrying a value and a
derivative.  The trace of W then returns (tau(alpha), tau'(alpha)).
"""

import numpy as np

from tracelab import lambda_representation, parse_word
from tracelab.exact import PHI, ZERO
from tracelab.jets import VERBATIM, base_jets, nilpotent_square_identity, z_conjugates

print(tuple(lambda_representation(parse_word("x y"), ZERO).trW))
print(tuple(lambda_representation(parse_word("x y^2"), PHI - 1).trW))

# a double root: both value and derivative vanish
print(tuple(lambda_representation(parse_word("x y x y^2 x^2 y^3"), ZERO).trW))

# with tr XY = eps, (XY)^2 = -I + eps Z
X, Y = base_jets(0, VERBATIM)
Z, _ = nilpotent_square_identity(X @ Y)
print(np.round(Z.value_part(), 6))

conj, group = z_conjugates()
print(len(conj), "conjugates of Z under a group of order", len(group))
