"""Generators from Boolean specifications to dual-rail netlists.

Rail nets follow the ``x.0`` / ``x.1`` convention of :mod:`adw.netlist`.
Four flows are provided:

* :func:`drcl_translate` - gate-by-gate De Morgan mirroring of an SOP.
* :func:`synthesize_method1` - the factored ON/OFF-set NAND network with an
  OR (or NOR) internal completion detector.  It deadlocks; that is the point.
* :func:`synthesize_dsop` - two-level AND-OR from disjoint covers with full
  input/output completion detection.
* :func:`dims_synthesize` - one C-element per minterm, the strongly
  indicating reference.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .boolean_core import (
    NULL,
    BooleanFunction,
    Factored,
    ProductTerm,
    SopExpression,
    default_names,
    expand_factored,
    factor_single_kernel,
    minimize_cover,
    rail_net,
    sop_to_dsop,
)
from .netlist import Gate, GateKind, Netlist, Port

DIMS_MAX_VARS = 6


@dataclass(frozen=True)
class SynthesisOptions:
    method: str = "dsop"
    cd_variant: str = "or"
    max_fanin: int | None = None
    decompose: str = "none"

    def __post_init__(self):
        if self.method not in ("drcl", "method1", "dsop", "dims"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.cd_variant not in ("or", "nor", "none"):
            raise ValueError(f"unknown cd variant {self.cd_variant!r}")
        if self.cd_variant == "nor" and self.method != "method1":
            raise ValueError("the NOR completion detector only exists for method1")
        if self.decompose not in ("none", "naive"):
            raise ValueError(f"unknown decomposition {self.decompose!r}")
        if self.max_fanin is not None and self.max_fanin < 2:
            raise ValueError("max_fanin must be at least 2")
        if self.decompose == "naive" and self.max_fanin is None:
            raise ValueError("naive decomposition needs max_fanin")


class _Builder:
    def __init__(self, name: str, var_names: Sequence[str], outputs: Sequence[str] = ("F",)):
        self.name = name
        self.inputs = tuple(Port(v) for v in var_names)
        self.outputs = tuple(Port(o) for o in outputs)
        self.gates: list[Gate] = []
        self._nets = {n for p in self.inputs for n in p.nets}
        self._count = 0
        self._zero: str | None = None
        self._one: str | None = None
        self.cd_output: str | None = None

    def net(self, prefix: str) -> str:
        k = 1
        while f"{prefix}{k}" in self._nets:
            k += 1
        name = f"{prefix}{k}"
        self._nets.add(name)
        return name

    def gate_id(self, prefix: str = "g") -> str:
        self._count += 1
        return f"{prefix}{self._count}"

    def add(self, kind: GateKind, inputs: Sequence[str], output: str, gid: str | None = None,
            init: int = 0) -> str:
        self._nets.add(output)
        self.gates.append(Gate(gid or self.gate_id(), GateKind(kind), tuple(inputs), output, init))
        return output

    def join(self, kind: GateKind, inputs: Sequence[str], output: str, gid: str | None = None) -> str:
        """``kind`` over ``inputs``, or a BUF when there is only one input."""
        if len(inputs) == 1:
            return self.add(GateKind.BUF, inputs, output, gid)
        return self.add(kind, inputs, output, gid)

    def zero(self) -> str:
        # x.0 and x.1 are never high together under the dual-rail code
        if self._zero is None:
            v = self.inputs[0].name
            self._zero = self.add(GateKind.AND, (f"{v}.0", f"{v}.1"), self.net("zero"), "const0")
        return self._zero

    def one(self) -> str:
        """High once every input is valid, low once every input is spacer."""
        if self._one is None:
            arr = [self.add(GateKind.OR, p.nets, self.net("arr"), f"arr_g{i}")
                   for i, p in enumerate(self.inputs, 1)]
            self._one = self.join(GateKind.C, arr, self.net("one"), "const1")
        return self._one

    def build(self) -> Netlist:
        return Netlist(self.name, self.inputs, self.outputs, tuple(self.gates), self.cd_output)


def _rails(term: ProductTerm) -> list[str]:
    return [rail_net(v, p) for v, p in term.literals]


def _constant_rails(b: _Builder, value: int, out: str) -> None:
    hi, lo = (f"{out}.1", f"{out}.0") if value else (f"{out}.0", f"{out}.1")
    b.add(GateKind.BUF, [b.one()], hi, f"{hi}_tie")
    b.add(GateKind.BUF, [b.zero()], lo, f"{lo}_tie")


def _cover_constant(expr: SopExpression):
    terms = expr.flat_terms()
    if not terms:
        return 0
    if any(t.is_tautology() for t in terms):
        return 1
    return None


# ---------------------------------------------------------------- DRCL


def drcl_translate(spec: BooleanFunction | SopExpression, output: str = "F",
                   term_names: Sequence[str] | None = None, var_names: Sequence[str] | None = None,
                   name: str = "drcl") -> Netlist:
    """Dual-rail translation: each SOP gate becomes a (gate, De Morgan mirror) pair.

    Term ``i`` yields gates ``g{i}1`` (true rail) and ``g{i}0`` (false rail);
    the output join is ``g{k+1}1`` / ``g{k+1}0``.
    """
    if isinstance(spec, BooleanFunction):
        sop = minimize_cover(spec, "on")
        var_names = spec.var_names
    else:
        sop = expand_factored(spec)
        if var_names is None:
            var_names = sorted(sop.variables) or default_names(1)
    b = _Builder(name, var_names, (output,))
    const = _cover_constant(sop)
    if const is not None:
        _constant_rails(b, const, output)
        return b.build()
    terms = sop.flat_terms()
    k = len(terms)
    names = list(term_names or [])
    names += [f"t{i}" for i in range(len(names) + 1, k + 1)]
    t_nets, f_nets = [], []
    for i, term in enumerate(terms, 1):
        if len(term) == 1:
            (v, p), = term.literals
            t_nets.append(rail_net(v, p))
            f_nets.append(rail_net(v, not p))
            continue
        t_nets.append(b.add(GateKind.AND, _rails(term), f"{names[i - 1]}.1", f"g{i}1"))
        mirrored = [rail_net(v, not p) for v, p in term.literals]
        f_nets.append(b.add(GateKind.OR, mirrored, f"{names[i - 1]}.0", f"g{i}0"))
    b.join(GateKind.OR, t_nets, f"{output}.1", f"g{k + 1}1")
    b.join(GateKind.AND, f_nets, f"{output}.0", f"g{k + 1}0")
    return b.build()


# ---------------------------------------------------------------- completion detection


def _add_cd(b: _Builder, taps: Sequence[str], variant: str, d_init: int = 0,
            ids: dict[str, str] | None = None) -> str:
    ids = ids or {}
    join = GateKind.NOR if variant == "nor" else GateKind.OR
    prefix = "nor" if variant == "nor" else "or"
    c_inputs = []
    for i, p in enumerate(b.inputs, 1):
        if p.dualrail:
            net = f"cd{i}"
            c_inputs.append(b.add(GateKind.OR, p.nets, net, ids.get(net, f"g_{net}")))
    if taps:
        net = f"{prefix}1"
        kind = join if len(taps) > 1 else (GateKind.INV if variant == "nor" else GateKind.BUF)
        c_inputs.append(b.add(kind, taps, net, ids.get(net, f"g_{net}")))
    for j, p in enumerate(b.outputs, 2):
        if p.dualrail:
            net = f"{prefix}{j}"
            c_inputs.append(b.add(join, p.nets, net, ids.get(net, f"g_{net}")))
    if not c_inputs:
        raise ValueError("completion detection needs dual-rail ports")
    kind = GateKind.C if len(c_inputs) > 1 else GateKind.BUF
    b.add(kind, c_inputs, "D", ids.get("D", "g_D"), init=d_init)
    b.cd_output = "D"
    return "D"


def build_completion_detector(n: Netlist, internal_taps: Sequence[str] = (), variant: str = "or",
                              d_init: int = 0) -> Netlist:
    """Add per-input ORs, an output-rail detector, optional tap detector and the C-element ``D``."""
    if n.cd_output is not None:
        raise ValueError(f"netlist already has completion output {n.cd_output!r}")
    if not any(p.dualrail for p in n.inputs):
        raise ValueError("completion detection needs at least one dual-rail input")
    if variant not in ("or", "nor"):
        raise ValueError("variant must be 'or' or 'nor'")
    nets = set(n.nets)
    missing = [t for t in internal_taps if t not in nets]
    if missing:
        raise ValueError(f"taps not in netlist: {missing}")
    b = _Builder(n.name, [], ())
    b.inputs, b.outputs = n.inputs, n.outputs
    b.gates = list(n.gates)
    b._nets = nets
    clash = {"D", *(f"cd{i}" for i in range(1, len(n.inputs) + 1))} & nets
    if clash:
        raise ValueError(f"net names reserved for the detector already used: {sorted(clash)}")
    _add_cd(b, internal_taps, variant, d_init)
    return replace(b.build(), isochronic=n.isochronic)


# ---------------------------------------------------------------- kernel-factored NAND flow


def _nand_rail(b: _Builder, expr: SopExpression, out: str, node_prefix: str) -> list[str]:
    """NAND-NAND realization of one rail; returns the idle-high node nets."""
    nodes = []
    for node in expr.terms:
        if isinstance(node, Factored):
            ks = []
            for k in node.kernel:
                kind = GateKind.INV if len(k) == 1 else GateKind.NAND
                ks.append(b.add(kind, _rails(k), b.net("inv" if len(k) == 1 else "kt"), b.gate_id("f")))
            kern = b.add(GateKind.NAND, ks, b.net("kern"), b.gate_id("f"))
            cube = _rails(node.cube)
            kind = GateKind.NAND if cube else GateKind.INV
            nodes.append(b.add(kind, [kern, *cube], b.net(node_prefix), b.gate_id("f")))
        else:
            kind = GateKind.INV if len(node) == 1 else GateKind.NAND
            nodes.append(b.add(kind, _rails(node), b.net(node_prefix), b.gate_id("f")))
    b.add(GateKind.NAND if len(nodes) > 1 else GateKind.INV, nodes, out, b.gate_id("f"))
    return nodes


def synthesize_method1(f: BooleanFunction, cd_variant: str = "or", d_init: int | None = None,
                       name: str = "method1") -> Netlist:
    """Factored ON/OFF covers mapped to NAND/INV with an internal-tap completion detector.

    The detector is ``C(cd1..cdn, or1, or2)`` where ``or1`` joins the first
    true-rail node ``n1`` and the first false-rail node ``m1``, both high in
    the spacer state, and ``or2`` joins the output rails.  ``d_init``
    defaults to 0 for the OR detector and 1 for the NOR one: the NOR
    detector can never see all-ones during evaluation, so only a ``D``
    that idles high lets the handshake reach the return-to-zero phase.
    """
    if cd_variant not in ("or", "nor", "none"):
        raise ValueError(f"unknown cd variant {cd_variant!r}")
    on = factor_single_kernel(minimize_cover(f, "on"))
    off = factor_single_kernel(minimize_cover(f, "off"))
    b = _Builder(name, f.var_names)
    taps: list[str] = []
    const = f.is_constant()
    if const is not None:
        _constant_rails(b, const, "F")
    else:
        n_nodes = _nand_rail(b, on, "F.1", "n")
        m_nodes = _nand_rail(b, off, "F.0", "m")
        taps = [n_nodes[0], m_nodes[0]]
    if cd_variant != "none":
        n = f.var_count
        tag, gk = ("nor", "nk") if cd_variant == "nor" else ("or", "k")
        ids = {f"cd{i}": f"k{9 + i}" for i in range(1, n + 1)}
        ids.update({f"{tag}1": f"{gk}9", f"{tag}2": f"{gk}{10 + n}", "D": "cdc"})
        if d_init is None:
            d_init = 1 if cd_variant == "nor" else 0
        _add_cd(b, taps, cd_variant, d_init, ids)
    return b.build()


# ---------------------------------------------------------------- DSOP flow


def _and_or_rail(b: _Builder, expr: SopExpression, out: str, prefix: str) -> None:
    nets = []
    for term in expr.flat_terms():
        if len(term) == 1:
            nets.append(_rails(term)[0])
        else:
            nets.append(b.add(GateKind.AND, _rails(term), b.net(prefix), f"a_{prefix}{len(nets) + 1}"))
    b.join(GateKind.OR, nets, out, f"o_{out}")


def synthesize_dsop(f: BooleanFunction, cd_variant: str = "or", name: str = "dsop") -> Netlist:
    """Two-level AND-OR rails from disjoint ON/OFF covers plus full completion detection."""
    if cd_variant == "nor":
        raise ValueError("the NOR completion detector only exists for method1")
    b = _Builder(name, f.var_names)
    const = f.is_constant()
    if const is not None:
        _constant_rails(b, const, "F")
    else:
        _and_or_rail(b, sop_to_dsop(minimize_cover(f, "on")), "F.1", "p")
        _and_or_rail(b, sop_to_dsop(minimize_cover(f, "off")), "F.0", "q")
    if cd_variant == "or":
        _add_cd(b, (), "or")
    return b.build()


# ---------------------------------------------------------------- DIMS


def dims_synthesize(f: BooleanFunction, cd_variant: str = "none", name: str = "dims") -> Netlist:
    """One C-element per care minterm, ORed per output rail."""
    if f.var_count > DIMS_MAX_VARS:
        raise ValueError(f"DIMS limited to {DIMS_MAX_VARS} variables, got {f.var_count}")
    b = _Builder(name, f.var_names)
    n = f.var_count
    mts: dict[int, str] = {}
    for m in sorted(f.care_set):
        rails = [f"{v}.{(m >> (n - 1 - i)) & 1}" for i, v in enumerate(f.var_names)]
        kind = GateKind.C if n > 1 else GateKind.BUF
        mts[m] = b.add(kind, rails, f"mt{m}", f"c{m}")
    for rail, group in (("1", f.on_set), ("0", f.off_set)):
        nets = [mts[m] for m in sorted(group)]
        if nets:
            b.join(GateKind.OR, nets, f"F.{rail}", f"o_F.{rail}")
        else:
            b.add(GateKind.BUF, [b.zero()], f"F.{rail}", f"F.{rail}_tie")
    if cd_variant == "or":
        _add_cd(b, (), "or")
    elif cd_variant != "none":
        raise ValueError("dims supports cd_variant 'or' or 'none'")
    return b.build()


# ---------------------------------------------------------------- decomposition


def nand_decompose_naive(g: Gate, max_fanin: int, gate_prefix: str = "m", net_prefix: str = "net",
                         inv_prefix: str = "inv") -> list[Gate]:
    """Split a wide NAND into a NAND/INV chain (the orphan-prone scheme).

    The first ``max_fanin`` inputs feed a NAND whose output is re-inverted
    and joined with the next inputs, until the remainder fits one gate.
    """
    if g.kind is not GateKind.NAND:
        raise ValueError(f"only NAND gates are decomposed, got {g.kind.value}")
    if max_fanin < 2:
        raise ValueError("max_fanin must be at least 2")
    if len(g.inputs) <= max_fanin:
        return [g]
    out: list[Gate] = []
    pending = list(g.inputs)
    carry: list[str] = []
    stage = 0
    while len(carry) + len(pending) > max_fanin:
        stage += 1
        take = max_fanin - len(carry)
        ins = carry + pending[:take]
        pending = pending[take:]
        nand_out = f"{net_prefix}{2 * stage - 1}"
        inv_out = f"{net_prefix}{2 * stage}"
        out.append(Gate(f"{gate_prefix}{stage}", GateKind.NAND, tuple(ins), nand_out))
        out.append(Gate(f"{inv_prefix}{stage}", GateKind.INV, (nand_out,), inv_out))
        carry = [inv_out]
    out.append(Gate(f"{gate_prefix}{stage + 1}", GateKind.NAND, tuple(carry + pending), g.output))
    return out


def decompose_netlist(n: Netlist, max_fanin: int) -> Netlist:
    gates: list[Gate] = []
    for g in n.gates:
        if g.kind is GateKind.NAND and len(g.inputs) > max_fanin:
            gates.extend(nand_decompose_naive(g, max_fanin, f"{g.id}_m", f"{g.id}_net", f"{g.id}_inv"))
        else:
            gates.append(g)
    return n.with_gates(gates)


def synthesize(f: BooleanFunction, options: SynthesisOptions = SynthesisOptions()) -> Netlist:
    if options.method == "drcl":
        n = drcl_translate(f)
        if options.cd_variant == "or":
            n = build_completion_detector(n)
    elif options.method == "method1":
        n = synthesize_method1(f, options.cd_variant)
    elif options.method == "dsop":
        n = synthesize_dsop(f, options.cd_variant)
    else:
        n = dims_synthesize(f, options.cd_variant)
    if options.decompose == "naive":
        n = decompose_netlist(n, options.max_fanin)
    return n


# ---------------------------------------------------------------- reference circuits


def fig5_netlist(with_cd: bool = False, isochronic_inputs: bool = False) -> Netlist:
    """DRCL realization of ``Z = ab + cd`` with intermediate rails X and Y."""
    from .boolean_core import parse_expression

    n = drcl_translate(parse_expression("ab + cd"), output="Z", term_names=("X", "Y"),
                       var_names="abcd", name="fig5")
    if with_cd:
        n = build_completion_detector(n)
    if isochronic_inputs:
        n = replace(n, isochronic=frozenset(n.input_nets))
    return n


def fig7_netlist() -> Netlist:
    """The five-input NAND split into NAND4 + INV + NAND2."""
    wide = Gate("m", GateKind.NAND, tuple("pqrst"), "N")
    gates = nand_decompose_naive(wide, 4)
    return Netlist("fig7", tuple(Port(p, False) for p in "pqrst"), (Port("N", False),), tuple(gates))


def fig6_function() -> BooleanFunction:
    return BooleanFunction(4, frozenset({1, 2, 3, 5, 6, 7, 9, 10, 11, 13}))


def net_product(n: Netlist, net: str):
    """The rail product a net computes: a primary rail or an AND of primary rails."""
    if net in n.input_nets:
        base, _, rail = net.rpartition(".")
        return ProductTerm.of([(base, rail == "1")])
    g = n.driver(net)
    if g is None or g.kind is not GateKind.AND or not all(i in n.input_nets for i in g.inputs):
        return None
    lits = []
    for i in g.inputs:
        base, _, rail = i.rpartition(".")
        lits.append((base, rail == "1"))
    t = ProductTerm.of(lits)
    return None if t is NULL else t
