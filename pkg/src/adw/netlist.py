"""Gate-level netlist IR with dual-rail ports and a line-oriented text format.

Text format, one statement per line, ``#`` starts a comment::

    circuit fig7
    input p:wire
    input a:dualrail          # nets a.0 and a.1
    output F:dualrail
    gate m1 NAND p q r s -> net1
    cgate c1 C x y -> D init=1
    cdout D
    isochronic a.1
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Sequence


class GateKind(str, Enum):
    AND = "AND"
    OR = "OR"
    NAND = "NAND"
    NOR = "NOR"
    INV = "INV"
    BUF = "BUF"
    C = "C"

    @property
    def unary(self) -> bool:
        return self in (GateKind.INV, GateKind.BUF)


def evaluate_gate(kind: GateKind, values: Sequence[int], current: int = 0) -> int:
    """Steady-state output; the C-element holds ``current`` on mixed inputs."""
    if kind is GateKind.AND:
        return int(all(values))
    if kind is GateKind.OR:
        return int(any(values))
    if kind is GateKind.NAND:
        return int(not all(values))
    if kind is GateKind.NOR:
        return int(not any(values))
    if kind is GateKind.INV:
        return int(not values[0])
    if kind is GateKind.BUF:
        return int(values[0])
    if all(values):
        return 1
    if not any(values):
        return 0
    return current


@dataclass(frozen=True)
class Gate:
    id: str
    kind: GateKind
    inputs: tuple[str, ...]
    output: str
    init: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "inputs", tuple(self.inputs))


@dataclass(frozen=True)
class Port:
    name: str
    dualrail: bool = True

    @property
    def nets(self) -> tuple[str, ...]:
        """``(rail0, rail1)`` for dual-rail ports, ``(name,)`` for wires."""
        return (f"{self.name}.0", f"{self.name}.1") if self.dualrail else (self.name,)

    def __str__(self):
        return f"{self.name}:{'dualrail' if self.dualrail else 'wire'}"


@dataclass(frozen=True)
class Diagnostic:
    rule: str
    subject: str
    message: str
    severity: str = "error"

    def __str__(self):
        return f"{self.severity}: [{self.rule}] {self.subject}: {self.message}"


@dataclass(frozen=True)
class Netlist:
    name: str = "circuit"
    inputs: tuple[Port, ...] = ()
    outputs: tuple[Port, ...] = ()
    gates: tuple[Gate, ...] = ()
    cd_output: str | None = None
    isochronic: frozenset[str] = field(default_factory=frozenset)

    @property
    def input_nets(self) -> tuple[str, ...]:
        return tuple(n for p in self.inputs for n in p.nets)

    @property
    def output_nets(self) -> tuple[str, ...]:
        return tuple(n for p in self.outputs for n in p.nets)

    @property
    def nets(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for n in self.input_nets:
            seen[n] = None
        for g in self.gates:
            for n in (*g.inputs, g.output):
                seen[n] = None
        for n in self.output_nets:
            seen[n] = None
        if self.cd_output:
            seen[self.cd_output] = None
        return tuple(seen)

    def gate(self, gid: str) -> Gate:
        for g in self.gates:
            if g.id == gid:
                return g
        raise KeyError(gid)

    def driver(self, net: str) -> Gate | None:
        for g in self.gates:
            if g.output == net:
                return g
        return None

    def with_gates(self, gates: Iterable[Gate]) -> "Netlist":
        return replace(self, gates=tuple(gates))

    def gate_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for g in self.gates:
            counts[g.kind.value] = counts.get(g.kind.value, 0) + 1
        return counts

    def __str__(self):
        return serialize(self)


def fanout(n: Netlist, net: str) -> frozenset[str]:
    if net not in n.nets:
        raise KeyError(f"unknown net {net!r}")
    return frozenset(g.id for g in n.gates if net in g.inputs)


def topological_gates(n: Netlist) -> list[Gate]:
    """Gates in driver-before-reader order; raises ValueError on a cycle."""
    drivers = {g.output: g for g in n.gates}
    order: list[Gate] = []
    state: dict[str, int] = {}

    for root in n.gates:
        if root.id in state:
            continue
        stack = [(root, iter(root.inputs))]
        state[root.id] = 1
        while stack:
            g, it = stack[-1]
            for net in it:
                d = drivers.get(net)
                if d is None:
                    continue
                if state.get(d.id) == 1:
                    raise ValueError(f"cycle through gate {d.id}")
                if d.id not in state:
                    state[d.id] = 1
                    stack.append((d, iter(d.inputs)))
                    break
            else:
                stack.pop()
                state[g.id] = 2
                order.append(g)
    return order


def _find_cycle(n: Netlist) -> list[str] | None:
    drivers = {g.output: g for g in n.gates}
    color: dict[str, int] = {}
    path: list[str] = []

    def visit(g: Gate):
        color[g.id] = 1
        path.append(g.id)
        for net in g.inputs:
            d = drivers.get(net)
            if d is None:
                continue
            if color.get(d.id) == 1:
                return path[path.index(d.id):] + [d.id]
            if d.id not in color:
                found = visit(d)
                if found:
                    return found
        color[g.id] = 2
        path.pop()
        return None

    for g in n.gates:
        if g.id not in color:
            found = visit(g)
            if found:
                return found
    return None


def validate(n: Netlist) -> list[Diagnostic]:
    """Check the structural invariants; warnings do not block analysis."""
    diags: list[Diagnostic] = []
    ids: set[str] = set()
    drivers: dict[str, list[str]] = {}
    inputs = set(n.input_nets)
    port_names = [p.name for p in (*n.inputs, *n.outputs)]
    for name in sorted({p for p in port_names if port_names.count(p) > 1}):
        diags.append(Diagnostic("duplicate-port", name, "port declared more than once"))
    for g in n.gates:
        if g.id in ids:
            diags.append(Diagnostic("duplicate-gate", g.id, "gate id used more than once"))
        ids.add(g.id)
        drivers.setdefault(g.output, []).append(g.id)
        if g.kind.unary and len(g.inputs) != 1:
            diags.append(Diagnostic("fanin", g.id, f"{g.kind.value} needs exactly one input, has {len(g.inputs)}"))
        if not g.kind.unary and len(g.inputs) < 2:
            diags.append(Diagnostic("fanin", g.id, f"{g.kind.value} needs at least two inputs, has {len(g.inputs)}"))
        if g.init not in (0, 1):
            diags.append(Diagnostic("init", g.id, "init must be 0 or 1"))
    for net, ds in drivers.items():
        if len(ds) > 1:
            diags.append(Diagnostic("multiple-drivers", net, f"driven by {', '.join(ds)}"))
        if net in inputs:
            diags.append(Diagnostic("driven-input", net, f"primary input driven by {', '.join(ds)}"))
    read = {net for g in n.gates for net in g.inputs}
    for net in sorted(read - inputs - set(drivers)):
        diags.append(Diagnostic("undriven", net, "net is read but has no driver"))
    for net in n.output_nets:
        if net not in drivers and net not in inputs:
            diags.append(Diagnostic("undriven", net, "primary output has no driver"))
    cycle = _find_cycle(n)
    if cycle:
        diags.append(Diagnostic("cycle", cycle[0], "wiring cycle: " + " -> ".join(cycle)))
    if n.cd_output is not None:
        d = drivers.get(n.cd_output)
        if not d:
            diags.append(Diagnostic("cd-output", n.cd_output, "completion output has no driver"))
        elif n.gate(d[0]).kind is not GateKind.C:
            diags.append(Diagnostic("cd-output", n.cd_output, "completion output must be driven by a C-element"))
    all_nets = set(n.nets)
    for net in sorted(n.isochronic - all_nets):
        diags.append(Diagnostic("isochronic", net, "isochronic annotation on unknown net"))
    outs = set(n.output_nets) | ({n.cd_output} if n.cd_output else set())
    for net in sorted(all_nets - read - outs):
        diags.append(Diagnostic("dangling", net, "net has no readers", severity="warning"))
    return diags


def errors(n: Netlist) -> list[Diagnostic]:
    return [d for d in validate(n) if d.severity == "error"]


class NetlistSyntaxError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _port(tok: str, lineno: int) -> Port:
    name, _, kind = tok.partition(":")
    if kind not in ("dualrail", "wire") or not name:
        raise NetlistSyntaxError(lineno, f"port must be name:dualrail or name:wire, got {tok!r}")
    return Port(name, kind == "dualrail")


def parse(text: str) -> Netlist:
    name = "circuit"
    inputs: list[Port] = []
    outputs: list[Port] = []
    gates: list[Gate] = []
    cd = None
    iso: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        head, args = toks[0], toks[1:]
        if head == "circuit":
            if len(args) != 1:
                raise NetlistSyntaxError(lineno, "circuit takes one name")
            name = args[0]
        elif head in ("input", "output"):
            if not args:
                raise NetlistSyntaxError(lineno, f"{head} needs at least one port")
            (inputs if head == "input" else outputs).extend(_port(a, lineno) for a in args)
        elif head == "cdout":
            if len(args) != 1:
                raise NetlistSyntaxError(lineno, "cdout takes one net")
            cd = args[0]
        elif head == "isochronic":
            if not args:
                raise NetlistSyntaxError(lineno, "isochronic needs a net")
            iso.update(args)
        elif head in ("gate", "cgate"):
            init = 0
            if args and args[-1].startswith("init="):
                val = args.pop()[5:]
                if val not in ("0", "1"):
                    raise NetlistSyntaxError(lineno, f"init must be 0 or 1, got {val!r}")
                init = int(val)
            if "->" not in args or args.index("->") != len(args) - 2 or len(args) < 4:
                raise NetlistSyntaxError(lineno, "expected: gate <id> <KIND> <in...> -> <out>")
            gid, kind, *ins = args[:-2]
            try:
                kind = GateKind(kind.upper())
            except ValueError:
                raise NetlistSyntaxError(lineno, f"unknown gate kind {kind!r}") from None
            if head == "cgate" and kind is not GateKind.C:
                raise NetlistSyntaxError(lineno, "cgate must have kind C")
            if not ins:
                raise NetlistSyntaxError(lineno, "gate needs at least one input")
            gates.append(Gate(gid, kind, tuple(ins), args[-1], init))
        else:
            raise NetlistSyntaxError(lineno, f"unknown statement {head!r}")
    return Netlist(name, tuple(inputs), tuple(outputs), tuple(gates), cd, frozenset(iso))


def serialize(n: Netlist) -> str:
    lines = [f"circuit {n.name}"]
    lines += [f"input {p}" for p in n.inputs]
    lines += [f"output {p}" for p in n.outputs]
    if n.cd_output:
        lines.append(f"cdout {n.cd_output}")
    for g in n.gates:
        if g.kind is GateKind.C:
            lines.append(f"cgate {g.id} C {' '.join(g.inputs)} -> {g.output} init={g.init}")
        else:
            init = f" init={g.init}" if g.init else ""
            lines.append(f"gate {g.id} {g.kind.value} {' '.join(g.inputs)} -> {g.output}{init}")
    lines += [f"isochronic {net}" for net in sorted(n.isochronic)]
    return "\n".join(lines) + "\n"


def rail_label(net: str) -> str:
    """``a.1`` -> ``a(1)``; other nets unchanged."""
    base, dot, rail = net.rpartition(".")
    if dot and rail in ("0", "1") and base:
        return f"{base}({rail})"
    return net
