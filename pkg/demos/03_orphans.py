"""Wire and gate orphans, and what an isochronic fork buys.

    python demos/03_orphans.py
"""

from adw.analysis import EnvSpec, analyze
from adw.synthesis import fig5_netlist, fig7_netlist


def show(title, n, env, phase):
    report = analyze(n, env, checks=["orphans"])
    hits = [o for o in report.orphans if o.phase == phase]
    print(f"--- {title}")
    for o in hits:
        print(f"{o.kind} orphan on {o.net}, silent reader(s): {', '.join(o.unacknowledged_by)}")
    if hits:
        print("shortest witness:")
        for e in hits[0].trace.events:
            print("  ", e)
    else:
        print("none")
    print()


z = fig5_netlist()
show("Z = ab + cd, a and c arrive first (codeword 0)", z,
     EnvSpec.single(0, [["a", "c"], ["b", "d"]]), "valid")
show("Z = ab + cd, a and b arrive first (codeword 15)", z,
     EnvSpec.single(15, [["a", "b"], ["c", "d"]]), "valid")
show("same circuit with completion detection, isochronic inputs", fig5_netlist(True, True),
     EnvSpec.single(0, [["a", "c"], ["b", "d"]]), "valid")
show("NAND5 split into NAND4 + INV + NAND2, t returns to zero first", fig7_netlist(),
     EnvSpec.single(31, None, [["t"], ["p", "q", "r", "s"]]), "rtz")
