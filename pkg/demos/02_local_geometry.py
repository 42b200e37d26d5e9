"""Local computations: A_n points from jets, blowups and the ledger.

Run with ``python3 demos/02_local_geometry.py``.
"""

import random

from sextic.conic import STANDARD_IDENTITIES, IntersectionLedger, ledger_eval_product
from sextic.families import an_model, disguised_an
from sextic.lattice import lattice_check_surf
from sextic.singularities import An, blowup_chain, classify_An, tjurina_number

# The splitting lemma recovers n from a disguised A_n germ; the Tjurina
# number of the germ is an independent check.
rng = random.Random(1)
for n in (1, 3, 5):
    f = disguised_an(rng, n)
    print(f"A{n}: jets give {classify_An(f).label()}, Tjurina number {tjurina_number(f)}")
print("model A4:", an_model(4))

# Repeated blowups of an A_n point end at a smooth point.
print("chain from A5:", [k.label() for k in blowup_chain(An(5))])

# Intersection numbers after blowing up a cA/2 point.
L = IntersectionLedger()
for name, factors, expected in STANDARD_IDENTITIES:
    print(f"{name} = {ledger_eval_product(L, *factors)} (expected {expected})")

# The Picard lattice of the blown-up cubic surface with l extra points.
for l in range(3):
    rep = lattice_check_surf(l, 8)
    print(f"l={l}: K^2={rep.k_squared}, {rep.enumerated} classes, {len(rep.violations)} violations")
