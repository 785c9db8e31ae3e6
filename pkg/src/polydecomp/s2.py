"""The interval [-1, 1] worked end to end.

The closed unit interval is the image of the height function on the round
two-sphere under a circle action, which makes it the smallest interesting
polytope: all three decompositions are two or three rays. This module
builds those decompositions through the real pipeline (nothing here is
baked data) and verifies each one, so the emitted document cannot drift
from the engine.

Expected cells:

* linear taming, vector +1:   +[-1, oo), -[1, oo)
* squared distance to 0:      -(-oo, -1], -[1, oo), +R
* negated squared distance:   +[-1, oo), +(-oo, 1], -R
"""

from .decompose import decomposition_to_doc
from .measure import verify_measure, verify_pointwise
from .shapes import interval
from .taming import TamingSpec, induced_decomposition

DEFAULT_SEED = 7


def example_s2_document(points=1000, boxes=32, seed=DEFAULT_SEED) -> dict:
    P = interval(-1, 1)
    specs = [
        ("linear", TamingSpec.linear((1,))),
        ("normsq", TamingSpec.norm_square((0,))),
        ("negnormsq", TamingSpec.neg_norm_square((0,))),
    ]
    entries = []
    all_pass = True
    for label, spec in specs:
        D = induced_decomposition(P, spec)
        pw = verify_pointwise(P, D, points, seed, avoid_facet_spans=(D.kind != "bg"))
        ms = verify_measure(P, D, boxes, seed)
        all_pass = all_pass and pw.passed and ms.passed
        entries.append({
            "taming": label,
            "decomposition": decomposition_to_doc(D),
            "pointwise": pw.to_doc(),
            "measure": ms.to_doc(),
        })
    return {
        "polytope": P.to_doc(),
        "decompositions": entries,
        "pass": all_pass,
    }
