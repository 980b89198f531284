"""
Mod-2 homology of abelian covers
================================

Z/n x Z/n covers of presentation complexes, built cell by cell.  For the
index-30 subgroup, removing the squared 2-cells does not change H1.
"""

from tracelab.covers import (CoverSpec, free_abelian_cover_spec, genus2_presentation,
                             h1_growth_experiment, torus_presentation, wedge_presentation)
from tracelab import gamma_presentation, parse_word
from tracelab.exact import PHI

standard = lambda n: CoverSpec.of(n, [(1, 0), (0, 1)])
for name, p in [("torus", torus_presentation()), ("wedge", wedge_presentation(2))]:
    T = h1_growth_experiment(p, standard, [3, 5])
    print(name, [(r.n, r.h_K) for r in T.rows])

genus2 = lambda n: CoverSpec.of(n, [(1, 0), (0, 0), (0, 1), (0, 0)])
print("genus 2", [(r.n, r.h_K) for r in h1_growth_experiment(genus2_presentation(), genus2, [2, 3]).rows])

p = gamma_presentation(parse_word("x^2 y^3 x^2 y^4 x y"), PHI - 1).presentation
T = h1_growth_experiment(p, lambda n: free_abelian_cover_spec(p, n), [3, 5, 7])
print(T.to_csv())
