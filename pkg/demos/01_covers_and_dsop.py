"""From a minterm list to dual-rail covers, and why a factored cover is not disjoint.

    python demos/01_covers_and_dsop.py
"""

from adw.boolean_core import (
    dual_rail_encode,
    equivalent,
    factor_single_kernel,
    function_from_spec,
    is_dsop,
    minimize_cover,
    parse_expression,
    sop_to_dsop,
)

f = function_from_spec(4, [1, 2, 3, 5, 6, 7, 9, 10, 11, 13], var_names="abcd")

on = minimize_cover(f, "on")
off = minimize_cover(f, "off")
print(f"ON cover:  {on}   ({len(on)} terms)")
print(f"OFF cover: {off}   ({len(off)} terms)")

factored = factor_single_kernel(on)
print(f"factored ON cover: {factored}   ({factored.literal_count()} literals)")

enc = dual_rail_encode(f, "onoff", factor=True)
print("\nrail equations:")
print(enc.to_text(parens=True))

# A shared kernel hides overlapping products.
v = is_dsop(enc.true_rail)
a, b = v.witness
print(f"\ntrue rail disjoint? {bool(v)}: {a.to_text(True, True)} and {b.to_text(True, True)} "
      f"both hold when {a.conjoin(b).to_text(True, True)}")

fixed = sop_to_dsop(on)
print(f"disjoint rewrite: {fixed.to_text(True, True)}  (DSOP: {bool(is_dsop(fixed))}, "
      f"same function: {equivalent(fixed, on)})")

alt = parse_expression("a(0)b(1)c(1) + b(0)c(1) + c(0)d(1)")
print(f"alternative:      {alt.to_text(True, True)}  (DSOP: {bool(is_dsop(alt))}, "
      f"same function: {equivalent(alt, on)})")

for text in ("c(a+b) + dc'", "ab'c + bc + dc'", "ac + a'bc + dc'"):
    print(f"{text:>18}: {'DSOP' if is_dsop(parse_expression(text)) else 'not DSOP'}")
