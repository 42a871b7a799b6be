"""Internal-node completion detection deadlocks on the return to spacer.

The kernel-factored NAND realization taps one node from each rail (n1, m1)
into the completion C-element.  Both nodes idle high, so after the inputs
return to zero the tap OR stays high while every other C input falls.

    python demos/02_completion_deadlock.py
"""

from adw.analysis import EnvSpec, analyze
from adw.boolean_core import function_from_spec
from adw.netlist import serialize
from adw.synthesis import synthesize_dsop, synthesize_method1

f = function_from_spec(4, [1, 2, 3, 5, 6, 7, 9, 10, 11, 13], var_names="abcd")

for variant in ("or", "nor"):
    n = synthesize_method1(f, variant)
    if variant == "or":
        print(serialize(n))
    report = analyze(n, EnvSpec((13,)), checks=["deadlock"], method=f"method1/{variant}")
    print(report.narrative())
    print()

print("Disjoint two-level rails with full completion detection, all 16 codewords:")
report = analyze(synthesize_dsop(f), checks=["deadlock", "mcc"])
print(report.narrative())
