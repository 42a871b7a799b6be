"""Unbounded-delay exploration of dual-rail circuits under a 4-phase RTZ environment.

Every excited gate may fire at any moment, and the environment delivers input
rail transitions in every order.  The environment waits for quiescence
before starting the next wave of inputs or the next phase; a quiescent
end-of-phase state that fails the completion predicate is a deadlock.

Acknowledgment is tracked per fork branch: a transition on net ``x`` sent to
gate ``g`` is acknowledged once ``g`` fires after it, inside the same phase.
A net annotated isochronic has one shared branch, acknowledged when any of
its readers fires.  Branches still pending when the phase settles are
orphans: wire orphans on primary inputs, gate orphans elsewhere.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .netlist import Gate, GateKind, Netlist, errors, rail_label, topological_gates

DEFAULT_MAX_STATES = 10**6
DEFAULT_MAX_DEPTH = 10**4

PHASES = ("valid", "rtz")

_AND, _OR, _NAND, _NOR, _INV, _BUF, _C = range(7)
_KIND_CODE = {GateKind.AND: _AND, GateKind.OR: _OR, GateKind.NAND: _NAND, GateKind.NOR: _NOR,
              GateKind.INV: _INV, GateKind.BUF: _BUF, GateKind.C: _C}


class ExplorationLimitError(RuntimeError):
    pass


def default_max_states() -> int:
    env = os.environ.get("ADW_LIMIT_STATES")
    return int(env) if env else DEFAULT_MAX_STATES


@dataclass(frozen=True)
class Limits:
    max_states: int = field(default_factory=default_max_states)
    max_depth: int = DEFAULT_MAX_DEPTH


@dataclass(frozen=True)
class EnvSpec:
    """Codewords applied in sequence, each followed by a return to spacer.

    A codeword is an integer over the input ports, first port most
    significant.  ``valid_waves`` / ``rtz_waves`` optionally split the
    inputs into groups by port name: a group is released only after the
    circuit has settled on the previous one.  Ports not named go last.
    """

    codewords: tuple[int, ...] | None = None
    valid_waves: tuple[tuple[str, ...], ...] | None = None
    rtz_waves: tuple[tuple[str, ...], ...] | None = None

    @classmethod
    def single(cls, codeword: int, valid_waves=None, rtz_waves=None) -> "EnvSpec":
        def norm(w):
            return tuple(tuple(g) for g in w) if w is not None else None
        return cls((codeword,), norm(valid_waves), norm(rtz_waves))


@dataclass(frozen=True)
class CircuitState:
    net_values: dict[str, int]
    phase: str
    pending_env: frozenset[str]
    applied_codeword: int | None

    def snapshot(self, nets: Iterable[str]) -> dict[str, int]:
        return {n: self.net_values[n] for n in nets}


@dataclass(frozen=True)
class TransitionEvent:
    seq: int
    net: str
    new_value: int
    source: str
    phase: str

    def to_dict(self) -> dict:
        return {"seq": self.seq, "net": self.net, "value": self.new_value,
                "source": self.source, "phase": self.phase}

    def __str__(self):
        arrow = "rises" if self.new_value else "falls"
        who = "environment" if self.source == "env" else f"gate {self.source}"
        return f"{self.seq:3d}. [{self.phase}] {rail_label(self.net)} {arrow} ({who})"


@dataclass(frozen=True)
class Trace:
    initial_state: CircuitState
    events: tuple[TransitionEvent, ...]

    def replay(self) -> dict[str, int]:
        values = dict(self.initial_state.net_values)
        for e in self.events:
            if values[e.net] == e.new_value:
                raise ValueError(f"event {e.seq} on {e.net} is not a transition")
            values[e.net] = e.new_value
        return values

    def to_dict(self) -> dict:
        return {"initial": dict(self.initial_state.net_values),
                "events": [e.to_dict() for e in self.events]}

    def __len__(self):
        return len(self.events)


@dataclass(frozen=True)
class DeadlockFinding:
    phase: str
    codeword: int
    snapshot: dict[str, int]
    trace: Trace

    def cd_inputs(self, n: Netlist) -> dict[str, int]:
        if n.cd_output is None:
            return {}
        g = n.driver(n.cd_output)
        return {i: self.snapshot[i] for i in g.inputs}


@dataclass(frozen=True)
class OrphanFinding:
    kind: str
    net: str
    phase: str
    codeword: int
    unacknowledged_by: tuple[str, ...]
    trace: Trace


@dataclass(frozen=True)
class MccFinding:
    rule: str
    subject: str
    phase: str
    codeword: int
    snapshot: dict[str, int]
    trace: Trace


class _Compiled:
    """Bit-level view of a netlist for fast state stepping."""

    def __init__(self, n: Netlist):
        problems = errors(n)
        if problems:
            raise ValueError("netlist does not validate: " + "; ".join(map(str, problems)))
        self.netlist = n
        self.nets = list(n.nets)
        self.index = {net: i for i, net in enumerate(self.nets)}
        self.gates: list[Gate] = topological_gates(n)
        idx = self.index
        self.g_kind = [_KIND_CODE[g.kind] for g in self.gates]
        self.g_imask = [sum(1 << idx[i] for i in set(g.inputs)) for g in self.gates]
        self.g_in0 = [1 << idx[g.inputs[0]] for g in self.gates]
        self.g_out = [1 << idx[g.output] for g in self.gates]
        self.input_mask = sum(1 << idx[i] for i in n.input_nets)

        # fork branches: one per (net, reader) pair, or one per isochronic net
        self.branch_net: list[str] = []
        self.branch_gate: list[str | None] = []
        net_branches = [0] * len(self.nets)
        gate_ack = [0] * len(self.gates)
        readers: dict[str, list[int]] = {}
        for gi, g in enumerate(self.gates):
            for i in dict.fromkeys(g.inputs):
                readers.setdefault(i, []).append(gi)
        for net, gis in readers.items():
            if net in n.isochronic:
                b = len(self.branch_net)
                self.branch_net.append(net)
                self.branch_gate.append(None)
                net_branches[idx[net]] |= 1 << b
                for gi in gis:
                    gate_ack[gi] |= 1 << b
            else:
                for gi in gis:
                    b = len(self.branch_net)
                    self.branch_net.append(net)
                    self.branch_gate.append(self.gates[gi].id)
                    net_branches[idx[net]] |= 1 << b
                    gate_ack[gi] |= 1 << b
        self.net_branches = net_branches
        self.gate_ack = gate_ack

        drivers = {g.output: g for g in n.gates}
        self.joins = []
        for gi, g in enumerate(self.gates):
            if g.kind in (GateKind.OR, GateKind.NOR):
                self.joins.append((gi, self.g_imask[gi], 1))
            elif g.kind is GateKind.NAND and all(
                    i in drivers and drivers[i].kind in (GateKind.INV, GateKind.NAND) for i in g.inputs):
                self.joins.append((gi, self.g_imask[gi], 0))

        self.out_ports = []
        for p in n.outputs:
            mask = sum(1 << idx[x] for x in p.nets)
            if p.dualrail:
                self.out_ports.append((True, 1 << idx[p.nets[0]], 1 << idx[p.nets[1]], mask))
            else:
                self.out_ports.append((False, 0, 1 << idx[p.nets[0]], mask))
        self.cd_bit = 1 << idx[n.cd_output] if n.cd_output else 0

    def initial_values(self) -> int:
        v = 0
        for gi, g in enumerate(self.gates):
            nxt = self._eval(gi, v, g.init)
            if nxt:
                v |= self.g_out[gi]
        return v

    def _eval(self, gi: int, v: int, current: int) -> int:
        k = self.g_kind[gi]
        m = self.g_imask[gi]
        if k == _AND:
            return int(v & m == m)
        if k == _OR:
            return int(v & m != 0)
        if k == _NAND:
            return int(v & m != m)
        if k == _NOR:
            return int(v & m == 0)
        if k == _INV:
            return int(not v & self.g_in0[gi])
        if k == _BUF:
            return int(bool(v & self.g_in0[gi]))
        if v & m == m:
            return 1
        if v & m == 0:
            return 0
        return current

    def excited(self, v: int) -> list[int]:
        out = []
        for gi in range(len(self.gates)):
            cur = int(bool(v & self.g_out[gi]))
            if self._eval(gi, v, cur) != cur:
                out.append(gi)
        return out

    def values_dict(self, v: int) -> dict[str, int]:
        return {net: (v >> i) & 1 for i, net in enumerate(self.nets)}

    def outputs_ok(self, v: int, phase: int) -> bool:
        for dual, r0, r1, _ in self.out_ports:
            if not dual:
                continue
            hi0, hi1 = bool(v & r0), bool(v & r1)
            if phase == 0 and hi0 == hi1:
                return False
            if phase == 1 and (hi0 or hi1):
                return False
        if self.cd_bit:
            return bool(v & self.cd_bit) == (phase == 0)
        return True

    def decode_outputs(self, v: int) -> tuple:
        out = []
        for dual, r0, r1, _ in self.out_ports:
            if dual:
                hi0, hi1 = bool(v & r0), bool(v & r1)
                out.append(1 if hi1 and not hi0 else 0 if hi0 and not hi1 else None)
            else:
                out.append(int(bool(v & r1)))
        return tuple(out)


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass
class ExploreResult:
    netlist: Netlist
    env: EnvSpec
    codewords: tuple[int, ...]
    states: int = 0
    transitions: int = 0
    max_depth: int = 0
    truncated: str | None = None
    valuations: int = 0
    # raw observations: key -> state id (first, hence shortest, occurrence)
    deadlock_ids: dict = field(default_factory=dict)
    orphan_ids: dict = field(default_factory=dict)
    mcc_ids: dict = field(default_factory=dict)
    early_some: int | None = None
    early_all: int | None = None
    valid_outputs: dict = field(default_factory=dict)
    _c: _Compiled | None = None
    _parent: list = field(default_factory=list)
    _event: list = field(default_factory=list)
    _key: list = field(default_factory=list)
    _stages: list = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.truncated is None

    def state(self, sid: int) -> CircuitState:
        values, stage, pending, _start, _un = self._key[sid]
        k, phase, _wave, _ = self._stages[stage]
        c = self._c
        return CircuitState(c.values_dict(values), PHASES[phase],
                            frozenset(c.nets[i] for i in range(len(c.nets)) if pending >> i & 1),
                            self.codewords[k] if k < len(self.codewords) else None)

    def trace(self, sid: int) -> Trace:
        events = []
        while self._parent[sid] is not None:
            ev = self._event[sid]
            if ev is not None:
                events.append(ev)
            sid = self._parent[sid]
        events.reverse()
        c = self._c
        out = []
        for seq, (ni, val, src, phase) in enumerate(events, 1):
            source = "env" if src < 0 else c.gates[src].id
            out.append(TransitionEvent(seq, c.nets[ni], val, source, PHASES[phase]))
        return Trace(self.state(sid), tuple(out))

    def confluent(self) -> bool:
        """Each codeword settles to a single output word across all interleavings."""
        return all(len(words) == 1 for words in self.valid_outputs.values())

    def stats(self) -> dict:
        return {"states": self.states, "transitions": self.transitions, "max_depth": self.max_depth,
                "valuations": self.valuations, "codewords": len(self.codewords),
                "truncated": self.truncated}


def _wave_masks(c: _Compiled, n: Netlist, codeword: int, waves) -> list[int]:
    ports = list(n.inputs)
    width = len(ports)
    rails: dict[str, int] = {}
    for i, p in enumerate(ports):
        bit = (codeword >> (width - 1 - i)) & 1
        if p.dualrail:
            rails[p.name] = 1 << c.index[p.nets[bit]]
        else:
            rails[p.name] = (1 << c.index[p.nets[0]]) if bit else 0
    groups: list[list[str]] = [list(w) for w in (waves or [])]
    named = {p for g in groups for p in g}
    unknown = named - set(rails)
    if unknown:
        raise ValueError(f"waves name unknown ports: {sorted(unknown)}")
    rest = [p.name for p in ports if p.name not in named]
    if rest or not groups:
        groups.append(rest)
    return [sum(rails[p] for p in g) for g in groups]


def explore(n: Netlist, env: EnvSpec | None = None, limits: Limits | None = None) -> ExploreResult:
    """Breadth-first reachability over all interleavings; findings keep shortest traces."""
    env = env or EnvSpec()
    limits = limits or Limits()
    c = _Compiled(n)
    width = len(n.inputs)
    codewords = tuple(env.codewords) if env.codewords is not None else tuple(range(1 << width))
    for cw in codewords:
        if not 0 <= cw < (1 << width) and width:
            raise ValueError(f"codeword {cw} out of range for {width} inputs")

    stages = []  # (codeword position, phase, wave, wave mask)
    first_stage: dict[tuple[int, int], int] = {}
    for k, cw in enumerate(codewords):
        for phase, waves in ((0, env.valid_waves), (1, env.rtz_waves)):
            first_stage[(k, phase)] = len(stages)
            masks = _wave_masks(c, n, cw, waves)
            for w, m in enumerate(masks):
                stages.append((k, phase, w, m))
    done_stage = len(stages)
    stages.append((len(codewords), 1, 0, 0))

    res = ExploreResult(n, env, codewords, _c=c, _stages=stages)
    ids: dict[tuple, int] = {}
    parent, event, keys, depth = res._parent, res._event, res._key, []
    seen_vals: set[int] = set()

    def add(key, par, ev, d):
        sid = ids.get(key)
        if sid is not None:
            return None
        sid = len(keys)
        ids[key] = sid
        keys.append(key)
        parent.append(par)
        event.append(ev)
        depth.append(d)
        seen_vals.add(key[0])
        return sid

    v0 = c.initial_values()
    start = (v0, 0, stages[0][3], v0, 0) if done_stage else (v0, done_stage, 0, v0, 0)
    queue = deque([add(start, None, None, 0)])

    while queue:
        sid = queue.popleft()
        values, stage, pending, start_v, unacked = keys[sid]
        d = depth[sid]
        res.max_depth = max(res.max_depth, d)
        if stage == done_stage:
            continue
        k, phase, wave, _ = stages[stage]
        changed = values ^ start_v

        for gi, imask, ctrl in c.joins:
            asserted = (values if ctrl else ~values) & imask & changed
            if _popcount(asserted) >= 2:
                res.mcc_ids.setdefault(("non-disjoint", c.gates[gi].id, k, phase), sid)

        # outputs moving while inputs are still outstanding
        produced = [bool(changed & pm) for (_, _, _, pm) in c.out_ports]
        waiting = pending or stages[stage + 1][:3] == (k, phase, wave + 1)
        if waiting and any(produced) and res.early_some is None:
            res.early_some = sid
        if waiting and produced and all(produced) and res.early_all is None:
            res.early_all = sid

        if d >= limits.max_depth:
            res.truncated = f"depth limit {limits.max_depth} reached"
            continue

        succ = []
        bits = pending
        while bits:
            b = bits & -bits
            bits ^= b
            ni = b.bit_length() - 1
            nv = values ^ b
            succ.append(((nv, stage, pending ^ b, start_v, unacked | c.net_branches[ni]),
                         (ni, (nv >> ni) & 1, -1, phase)))
        for gi in c.excited(values):
            ob = c.g_out[gi]
            ni = ob.bit_length() - 1
            if changed & ob:
                res.mcc_ids.setdefault(("non-monotone", c.nets[ni], k, phase), sid)
            nv = values ^ ob
            un = (unacked & ~c.gate_ack[gi]) | c.net_branches[ni]
            succ.append(((nv, stage, pending, start_v, un), (ni, (nv >> ni) & 1, gi, phase)))

        if not succ:
            # quiescent: release the next wave, or close the phase
            nxt = stage + 1
            if nxt < done_stage and stages[nxt][:2] == (k, phase):
                succ.append(((values, nxt, stages[nxt][3], start_v, unacked), None))
            else:
                if unacked:
                    for b in range(len(c.branch_net)):
                        if unacked >> b & 1:
                            net = c.branch_net[b]
                            kind = "wire" if net in n.input_nets else "gate"
                            res.orphan_ids.setdefault((kind, net, k, phase), sid)
                if phase == 0:
                    res.valid_outputs.setdefault(k, set()).add(c.decode_outputs(values))
                if not c.outputs_ok(values, phase):
                    res.deadlock_ids.setdefault((k, phase, values), sid)
                    continue
                if nxt < done_stage:
                    succ.append(((values, nxt, stages[nxt][3], values, 0), None))
                else:
                    succ.append(((values, done_stage, 0, values, 0), None))

        for key, ev in succ:
            res.transitions += 1
            new = add(key, sid, ev, d + (ev is not None))
            if new is not None:
                if len(keys) > limits.max_states:
                    res.truncated = f"state limit {limits.max_states} reached"
                    queue.clear()
                    break
                queue.append(new)
        if res.truncated and res.truncated.startswith("state"):
            break

    res.states = len(keys)
    res.valuations = len(seen_vals)
    return res


# ---------------------------------------------------------------- detectors


def _sorted(findings, key):
    return sorted(findings, key=key)


def detect_deadlock(result: ExploreResult) -> list[DeadlockFinding]:
    out = []
    for (k, phase, _values), sid in result.deadlock_ids.items():
        st = result.state(sid)
        out.append(DeadlockFinding(PHASES[phase], result.codewords[k], st.net_values, result.trace(sid)))
    return _sorted(out, key=lambda f: (f.codeword, f.phase, sorted(f.snapshot.items())))


def detect_orphans(result: ExploreResult) -> list[OrphanFinding]:
    c = result._c
    out = []
    for (kind, net, k, phase), sid in result.orphan_ids.items():
        unacked = result._key[sid][4]
        by = tuple(sorted(c.branch_gate[b] or "*" for b in range(len(c.branch_net))
                          if unacked >> b & 1 and c.branch_net[b] == net))
        out.append(OrphanFinding(kind, net, PHASES[phase], result.codewords[k], by, result.trace(sid)))
    return _sorted(out, key=lambda f: (f.codeword, f.phase, f.kind, f.net))


def check_monotonic_cover(result: ExploreResult) -> list[MccFinding]:
    out = []
    for (rule, subject, k, phase), sid in result.mcc_ids.items():
        out.append(MccFinding(rule, subject, PHASES[phase], result.codewords[k],
                              result.state(sid).net_values, result.trace(sid)))
    return _sorted(out, key=lambda f: (f.rule, f.codeword, f.phase, f.subject))


def enabled_transitions(n: Netlist, state: CircuitState) -> list[TransitionEvent]:
    """Events enabled in ``state``: undelivered environment rails plus excited gates."""
    c = _Compiled(n)
    v = sum(1 << c.index[net] for net, val in state.net_values.items() if val)
    out = []
    for net in sorted(state.pending_env):
        out.append(TransitionEvent(0, net, 1 - state.net_values[net], "env", state.phase))
    for gi in c.excited(v):
        g = c.gates[gi]
        out.append(TransitionEvent(0, g.output, 1 - state.net_values[g.output], g.id, state.phase))
    return [TransitionEvent(i, e.net, e.new_value, e.source, e.phase) for i, e in enumerate(out, 1)]


def initial_state(n: Netlist) -> CircuitState:
    c = _Compiled(n)
    return CircuitState(c.values_dict(c.initial_values()), "valid", frozenset(), None)


def classify_indication(n: Netlist, env: EnvSpec | None = None, limits: Limits | None = None,
                        result: ExploreResult | None = None) -> str:
    """``strong``, ``weak``, ``early_output`` or ``not_self_timed``."""
    result = result or explore(n, env, limits)
    if not result.complete:
        raise ExplorationLimitError(result.truncated)
    return _classify(result)


def _classify(result: ExploreResult) -> str:
    if result.deadlock_ids:
        return "not_self_timed"
    strong = result.early_some is None
    weak = result.early_all is None
    assert weak or not strong, "strong indication must imply weak indication"
    if strong:
        return "strong"
    if weak:
        return "weak"
    return "early_output"


# ---------------------------------------------------------------- report


@dataclass
class AnalysisReport:
    circuit: str
    method: str | None
    deadlocks: list[DeadlockFinding]
    orphans: list[OrphanFinding]
    mcc_violations: list[MccFinding]
    indication_class: str | None
    stats: dict
    netlist: Netlist | None = None

    @property
    def clean(self) -> bool:
        return not (self.deadlocks or self.orphans or self.mcc_violations) and (
            self.indication_class in (None, "strong", "weak", "early_output"))

    def to_dict(self) -> dict:
        return {
            "circuit": self.circuit,
            "method": self.method,
            "deadlocks": [{"phase": f.phase, "codeword": f.codeword, "snapshot": f.snapshot,
                           "cd_inputs": f.cd_inputs(self.netlist) if self.netlist else {},
                           "trace": f.trace.to_dict()["events"]} for f in self.deadlocks],
            "orphans": [{"kind": f.kind, "net": f.net, "phase": f.phase, "codeword": f.codeword,
                         "unacknowledged_by": list(f.unacknowledged_by),
                         "trace": f.trace.to_dict()["events"]} for f in self.orphans],
            "mcc": [{"rule": f.rule, "subject": f.subject, "phase": f.phase, "codeword": f.codeword,
                     "trace": f.trace.to_dict()["events"]} for f in self.mcc_violations],
            "classification": self.indication_class,
            "stats": self.stats,
        }

    def narrative(self) -> str:
        lines = [f"circuit {self.circuit}" + (f" ({self.method})" if self.method else "")]
        s = self.stats
        lines.append(f"explored {s['states']} states, {s['transitions']} transitions"
                     + (f"; TRUNCATED: {s['truncated']}" if s.get("truncated") else ""))
        for f in self.deadlocks:
            lines.append(f"DEADLOCK in {f.phase} phase after codeword {f.codeword}:")
            if self.netlist is not None and self.netlist.cd_output:
                ins = f.cd_inputs(self.netlist)
                lines.append("  C-element inputs " + ", ".join(f"{k}={v}" for k, v in ins.items())
                             + f"; {self.netlist.cd_output} held at {f.snapshot[self.netlist.cd_output]}")
            lines.extend("  " + str(e) for e in f.trace.events)
        for f in self.orphans:
            lines.append(f"{f.kind.upper()} ORPHAN on {rail_label(f.net)} in {f.phase} phase "
                         f"(codeword {f.codeword}), not acknowledged by {', '.join(f.unacknowledged_by)}")
            lines.extend("  " + str(e) for e in f.trace.events)
        for f in self.mcc_violations:
            what = ("two or more inputs asserted on join" if f.rule == "non-disjoint"
                    else "second transition within the phase on")
            lines.append(f"MCC {f.rule}: {what} {rail_label(f.subject)} in {f.phase} phase "
                         f"(codeword {f.codeword})")
        if self.indication_class:
            lines.append(f"indication: {self.indication_class}")
        if s.get("truncated"):
            lines.append("exploration incomplete: absence of findings is not a verdict")
        elif self.clean:
            lines.append("no findings")
        return "\n".join(lines)


ALL_CHECKS = ("deadlock", "orphans", "mcc", "classify")


def analyze(n: Netlist, env: EnvSpec | None = None, limits: Limits | None = None,
            checks: Sequence[str] = ALL_CHECKS, method: str | None = None) -> AnalysisReport:
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    result = explore(n, env, limits)
    cls = None
    if "classify" in checks and result.complete:
        cls = _classify(result)
    return AnalysisReport(
        circuit=n.name,
        method=method,
        deadlocks=detect_deadlock(result) if "deadlock" in checks else [],
        orphans=detect_orphans(result) if "orphans" in checks else [],
        mcc_violations=check_monotonic_cover(result) if "mcc" in checks else [],
        indication_class=cls,
        stats=result.stats(),
        netlist=n,
    )


_EVENT = {"type": "object", "required": ["seq", "net", "value", "source", "phase"],
          "properties": {"seq": {"type": "integer", "minimum": 1}, "net": {"type": "string"},
                         "value": {"enum": [0, 1]}, "source": {"type": "string"},
                         "phase": {"enum": list(PHASES)}}}
_TRACE = {"type": "array", "items": _EVENT}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "adw analysis report",
    "type": "object",
    "required": ["circuit", "method", "deadlocks", "orphans", "mcc", "classification", "stats"],
    "properties": {
        "circuit": {"type": "string"},
        "method": {"type": ["string", "null"]},
        "deadlocks": {"type": "array", "items": {
            "type": "object", "required": ["phase", "codeword", "snapshot", "trace"],
            "properties": {"phase": {"enum": list(PHASES)}, "codeword": {"type": "integer"},
                           "snapshot": {"type": "object", "additionalProperties": {"enum": [0, 1]}},
                           "cd_inputs": {"type": "object"}, "trace": _TRACE}}},
        "orphans": {"type": "array", "items": {
            "type": "object", "required": ["kind", "net", "phase", "codeword", "trace"],
            "properties": {"kind": {"enum": ["gate", "wire"]}, "net": {"type": "string"},
                           "phase": {"enum": list(PHASES)}, "codeword": {"type": "integer"},
                           "unacknowledged_by": {"type": "array", "items": {"type": "string"}},
                           "trace": _TRACE}}},
        "mcc": {"type": "array", "items": {
            "type": "object", "required": ["rule", "subject", "phase", "codeword", "trace"],
            "properties": {"rule": {"enum": ["non-disjoint", "non-monotone"]},
                           "subject": {"type": "string"}, "phase": {"enum": list(PHASES)},
                           "codeword": {"type": "integer"}, "trace": _TRACE}}},
        "classification": {"enum": ["strong", "weak", "early_output", "not_self_timed", None]},
        "stats": {"type": "object", "required": ["states", "transitions", "truncated"],
                  "properties": {"states": {"type": "integer"}, "transitions": {"type": "integer"},
                                 "truncated": {"type": ["string", "null"]}}},
    },
}
