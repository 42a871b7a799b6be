import itertools

import pytest

from adw.netlist import Netlist, evaluate_gate


def settle(n: Netlist, inputs: dict[str, int], start: dict[str, int] | None = None) -> dict[str, int]:
    """Fixpoint of all gate equations from ``start`` with inputs held.

    Plain Gauss-Seidel iteration, independent of the explorer.  Only
    meaningful for circuits whose steady state does not depend on order.
    """
    values = dict(start or {})
    for net in n.nets:
        values.setdefault(net, 0)
    values.update(inputs)
    if start is None:
        for g in n.gates:
            values[g.output] = g.init
    for _ in range(4 * len(n.gates) + 4):
        changed = False
        for g in n.gates:
            new = evaluate_gate(g.kind, [values[i] for i in g.inputs], values[g.output])
            if new != values[g.output]:
                values[g.output] = new
                changed = True
        if not changed:
            return values
    raise AssertionError("netlist did not settle")


def codeword_rails(n: Netlist, codeword: int) -> dict[str, int]:
    width = len(n.inputs)
    rails = {}
    for i, p in enumerate(n.inputs):
        bit = (codeword >> (width - 1 - i)) & 1
        if p.dualrail:
            rails[f"{p.name}.1"], rails[f"{p.name}.0"] = bit, 1 - bit
        else:
            rails[p.name] = bit
    return rails


def spacer(n: Netlist) -> dict[str, int]:
    return {net: 0 for net in n.input_nets}


def brute_minterms(expr_fn, nvars: int) -> set[int]:
    out = set()
    for m, bits in enumerate(itertools.product((0, 1), repeat=nvars)):
        if expr_fn(*bits):
            out.add(m)
    return out


@pytest.fixture
def F_minterms():
    return frozenset({1, 2, 3, 5, 6, 7, 9, 10, 11, 13})
