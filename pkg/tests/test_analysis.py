import json

import jsonschema
import pytest

from adw.analysis import (
    REPORT_SCHEMA,
    EnvSpec,
    ExplorationLimitError,
    Limits,
    analyze,
    check_monotonic_cover,
    classify_indication,
    detect_deadlock,
    detect_orphans,
    enabled_transitions,
    explore,
    initial_state,
)
from adw.boolean_core import function_from_spec
from adw.netlist import evaluate_gate, parse
from adw.synthesis import (
    dims_synthesize,
    drcl_translate,
    fig5_netlist,
    fig6_function,
    fig7_netlist,
    synthesize_dsop,
    synthesize_method1,
)

from conftest import codeword_rails, settle, spacer

F = fig6_function()


def assert_trace_feasible(n, trace):
    """Every gate event must be an excited gate; every env event an input rail."""
    values = dict(trace.initial_state.net_values)
    inputs = set(n.input_nets)
    for e in trace.events:
        assert values[e.net] != e.new_value
        if e.source == "env":
            assert e.net in inputs
        else:
            g = n.gate(e.source)
            assert g.output == e.net
            assert evaluate_gate(g.kind, [values[i] for i in g.inputs], values[g.output]) == e.new_value
        values[e.net] = e.new_value
    assert values == trace.replay()
    return values


def test_initial_state_is_spacer_fixpoint():
    n = synthesize_method1(F)
    st = initial_state(n)
    assert st.net_values == settle(n, spacer(n))
    assert st.phase == "valid"


def test_enabled_transitions():
    n = fig7_netlist()
    st = initial_state(n)
    assert enabled_transitions(n, st) == []
    pending = type(st)(st.net_values, "valid", frozenset({"p", "t"}), 31)
    evs = enabled_transitions(n, pending)
    assert [(e.net, e.new_value, e.source) for e in evs] == [("p", 1, "env"), ("t", 1, "env")]


@pytest.mark.parametrize("variant,want", [
    ("or", {"cd1": 0, "cd2": 0, "cd3": 0, "cd4": 0, "or1": 1, "or2": 0}),
    ("nor", {"cd1": 0, "cd2": 0, "cd3": 0, "cd4": 0, "nor1": 0, "nor2": 1}),
])
def test_method1_rtz_deadlock(variant, want):
    n = synthesize_method1(F, variant)
    res = explore(n, EnvSpec((13,)))
    assert res.complete
    dls = [d for d in detect_deadlock(res) if d.phase == "rtz"]
    assert dls and all(d.cd_inputs(n) == want and d.snapshot["D"] == 1 for d in dls)
    for d in dls:
        final = assert_trace_feasible(n, d.trace)
        assert final == d.snapshot
    assert classify_indication(n, result=res) == "not_self_timed"


def test_nor_detector_with_low_reset_deadlocks_while_evaluating():
    n = synthesize_method1(F, "nor", d_init=0)
    dls = detect_deadlock(explore(n, EnvSpec((13,))))
    assert dls and {d.phase for d in dls} == {"valid"}


def test_dsop_has_no_deadlock_and_is_confluent():
    n = synthesize_dsop(F)
    res = explore(n)
    assert res.complete and not detect_deadlock(res)
    assert res.confluent()
    for k, cw in enumerate(res.codewords):
        assert res.valid_outputs[k] == {(1 if cw in F.on_set else 0,)}
    assert not [m for m in check_monotonic_cover(res) if m.rule == "non-disjoint"]


def test_explorer_outputs_agree_with_settling_oracle():
    n = drcl_translate(F)
    res = explore(n)
    for k, cw in enumerate(res.codewords):
        settled = settle(n, codeword_rails(n, cw), settle(n, spacer(n)))
        assert res.valid_outputs[k] == {(settled["F.1"],)}


def test_fig5_scenario_orphans():
    n = fig5_netlist()
    s1 = detect_orphans(explore(n, EnvSpec.single(0, [["a", "c"], ["b", "d"]])))
    valid1 = {(o.kind, o.net) for o in s1 if o.phase == "valid"}
    assert valid1 == {("wire", "b.0"), ("wire", "d.0")}
    s2 = detect_orphans(explore(n, EnvSpec.single(15, [["a", "b"], ["c", "d"]])))
    valid2 = {(o.kind, o.net) for o in s2 if o.phase == "valid"}
    assert valid2 == {("gate", "Y.1")}
    for o in s1 + s2:
        assert_trace_feasible(n, o.trace)


def test_fig5_orphan_witness_names_the_silent_reader():
    n = fig5_netlist()
    s1 = detect_orphans(explore(n, EnvSpec.single(0, [["a", "c"], ["b", "d"]])))
    by = {o.net: o.unacknowledged_by for o in s1 if o.phase == "valid"}
    assert by == {"b.0": ("g10",), "d.0": ("g20",)}


def test_isochronic_inputs_remove_wire_orphans():
    env = EnvSpec.single(0, [["a", "c"], ["b", "d"]])
    # the detector's own fork branch is not enough without the annotation
    plain = detect_orphans(explore(fig5_netlist(with_cd=True), env))
    assert {o.net for o in plain if o.kind == "wire"} == {"b.0", "d.0"}
    iso = detect_orphans(explore(fig5_netlist(with_cd=True, isochronic_inputs=True), env))
    assert [o for o in iso if o.kind == "wire"] == []


def test_fig7_gate_orphan():
    n = fig7_netlist()
    res = explore(n, EnvSpec.single(31, None, [["t"], ["p", "q", "r", "s"]]))
    gate = [o for o in detect_orphans(res) if o.kind == "gate"]
    assert [(o.net, o.phase, o.unacknowledged_by) for o in gate] == [("net2", "rtz", ("m2",))]
    # t falling last acknowledges everything
    late = explore(n, EnvSpec.single(31, None, [["p", "q", "r", "s"], ["t"]]))
    assert not [o for o in detect_orphans(late) if o.kind == "gate"]


def test_classification():
    c = parse("circuit c\ninput a:wire b:wire\noutput z:wire\ncgate c1 C a b -> z init=0\n")
    assert classify_indication(c) == "strong"
    o = parse("circuit o\ninput a:wire b:wire\noutput z:wire\ngate g1 OR a b -> z\n")
    assert classify_indication(o, EnvSpec((3,))) == "early_output"
    assert classify_indication(dims_synthesize(function_from_spec(2, [3]))) == "strong"
    assert classify_indication(fig5_netlist(with_cd=True)) == "early_output"


def test_weak_indication():
    # z waits for both inputs but y fires on a alone
    n = parse("circuit w\ninput a:wire b:wire\noutput y:wire z:wire\n"
              "gate g1 BUF a -> y\ncgate c1 C a b -> z init=0\n")
    assert classify_indication(n, EnvSpec((3,))) == "weak"


def test_mcc_on_kernel_join():
    res = explore(synthesize_method1(F), EnvSpec((0,)))
    hits = [m for m in check_monotonic_cover(res) if m.rule == "non-disjoint"]
    assert [(m.subject, m.phase) for m in hits] == [("f3", "valid")]


def test_mcc_second_transition():
    # a glitch: y rises on a then falls when the inverted path catches up
    n = parse("circuit g\ninput a:wire\noutput y:wire\n"
              "gate i1 INV a -> na\ngate g1 AND a na -> y\n")
    res = explore(n, EnvSpec((1,)))
    rules = {m.rule for m in check_monotonic_cover(res)}
    assert "non-monotone" in rules


def test_limits_truncate_and_classify_refuses():
    n = synthesize_dsop(F)
    res = explore(n, limits=Limits(max_states=50))
    assert not res.complete and "state limit" in res.truncated
    with pytest.raises(ExplorationLimitError):
        classify_indication(n, limits=Limits(max_states=50))
    assert not explore(n, limits=Limits(max_depth=5)).complete


def test_limit_env_override(monkeypatch):
    monkeypatch.setenv("ADW_LIMIT_STATES", "40")
    assert Limits().max_states == 40


def test_invalid_netlist_rejected():
    bad = parse("circuit b\ninput a:wire\noutput z:wire\ngate g1 AND a ghost -> z\n")
    with pytest.raises(ValueError):
        explore(bad)
    with pytest.raises(ValueError):
        explore(fig7_netlist(), EnvSpec.single(0, [["nope"]]))
    with pytest.raises(ValueError):
        analyze(fig7_netlist(), checks=["bogus"])


def test_report_json_matches_schema():
    n = synthesize_method1(F)
    rep = analyze(n, EnvSpec((13,)), method="method1")
    data = json.loads(json.dumps(rep.to_dict()))
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["classification"] == "not_self_timed"
    assert data["deadlocks"][0]["cd_inputs"]["or1"] == 1
    fig7 = analyze(fig7_netlist(), EnvSpec.single(31, None, [["t"], ["p", "q", "r", "s"]]))
    jsonschema.validate(fig7.to_dict(), REPORT_SCHEMA)
    assert {"seq", "net", "value", "source", "phase"} == set(fig7.to_dict()["orphans"][0]["trace"][0])


def test_narrative_uses_rail_notation():
    rep = analyze(fig5_netlist(), EnvSpec.single(0, [["a", "c"], ["b", "d"]]), checks=["orphans"])
    text = rep.narrative()
    assert "WIRE ORPHAN on b(0)" in text
    assert "a(0) rises (environment)" in text
