"""Synthesis, simulation, and resource accounting for non-restoring
square-root quantum circuits.

The heavy lifting lives in the compiled extension ``_qsqrt``; this package
re-exports its public surface.
"""

from ._qsqrt import (
    Circuit,
    Level,
    OracleResult,
    SqrtLayout,
    analytic_qubits,
    analytic_tcount,
    analytic_tdepth,
    analytic_toffoli_count,
    build_sqrt_circuit,
    comparison_csv,
    comparison_text,
    design_costs,
    expand_circuit,
    format_pct_x100,
    improvement_x100,
    invert,
    measure_resources,
    oracle,
    parse_netlist,
    simulate_sqrt,
    verify_sqrt,
)

__all__ = [
    "Circuit",
    "Level",
    "OracleResult",
    "SqrtLayout",
    "analytic_qubits",
    "analytic_tcount",
    "analytic_tdepth",
    "analytic_toffoli_count",
    "build_sqrt_circuit",
    "comparison_csv",
    "comparison_text",
    "design_costs",
    "expand_circuit",
    "format_pct_x100",
    "improvement_x100",
    "invert",
    "measure_resources",
    "oracle",
    "parse_netlist",
    "simulate_sqrt",
    "verify_sqrt",
]
