"""Indication classes across generators, found by exhaustive interleaving.

    python demos/04_indication.py
"""

from adw.analysis import classify_indication, explore
from adw.boolean_core import function_from_spec
from adw.synthesis import dims_synthesize, drcl_translate, fig5_netlist, synthesize_dsop

and2 = function_from_spec(2, [3])
maj = function_from_spec(3, [3, 5, 6, 7])

rows = [
    ("DIMS a.b", dims_synthesize(and2)),
    ("DIMS majority", dims_synthesize(maj)),
    ("DSOP majority + CD", synthesize_dsop(maj)),
    ("DRCL majority", drcl_translate(maj)),
    ("DRCL ab + cd + CD", fig5_netlist(with_cd=True)),
]
print(f"{'circuit':24} {'class':14} {'states':>8}")
for label, n in rows:
    res = explore(n)
    print(f"{label:24} {classify_indication(n, result=res):14} {res.states:>8}")
