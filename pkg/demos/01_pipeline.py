"""Walk through the analysis of a few sextics in P(1,1,2,2,3).

Run with ``python3 demos/01_pipeline.py``.
"""

import random

from sextic.analysis import analyze
from sextic.families import disguise
from sextic.io.parse import parse_polynomial
from sextic.io.report import render_text, report_json
from sextic.verdict import Flags

# A sextic whose quadratic part in (x2, y2) has rank one: the normal form
# is found over Q and a birational map to P^3 is written down and checked.
F = parse_polynomial("x3^2 + x2^2*y2 + y2^2*x1^2 + x1^6 + y1^6")
print(render_text(report_json(analyze(F))))
print()

# The same sextic after a random change of coordinates.  The case, the
# singularity multiset and the verdict do not change.
G = disguise(random.Random(7), F)
print("disguised:", G)
r = analyze(G)
print("case:", r.case, "| singularities:", r.profile.multiset(), "| verdict:", r.verdict.tag)
print()

# A Fermat-type sextic.  Its quadratic part vanishes, so the cubic decides;
# with terminality and Q-factoriality asserted the verdict is NonRational.
H = parse_polynomial("x3^2 + x2^3 + y2^3 + x1^6 + y1^6")
r = analyze(H, Flags(terminal=True, q_factorial=True))
print(render_text(report_json(r)))
