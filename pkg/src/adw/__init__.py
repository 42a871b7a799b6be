"""Dual-rail asynchronous logic workbench: minimization, synthesis and unbounded-delay analysis."""

from .analysis import AnalysisReport, EnvSpec, Limits, analyze, classify_indication, explore
from .boolean_core import (
    BooleanFunction,
    ProductTerm,
    SopExpression,
    dual_rail_encode,
    function_from_spec,
    is_dsop,
    minimize_cover,
    parse_expression,
    sop_to_dsop,
)
from .netlist import Gate, GateKind, Netlist, Port, parse, serialize, validate
from .synthesis import SynthesisOptions, synthesize

__all__ = [
    "AnalysisReport", "EnvSpec", "Limits", "analyze", "classify_indication", "explore",
    "BooleanFunction", "ProductTerm", "SopExpression", "dual_rail_encode", "function_from_spec",
    "is_dsop", "minimize_cover", "parse_expression", "sop_to_dsop",
    "Gate", "GateKind", "Netlist", "Port", "parse", "serialize", "validate",
    "SynthesisOptions", "synthesize",
]
