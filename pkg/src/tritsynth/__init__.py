"""Ternary reversible-logic synthesis.

Truth tables over {0,1,2} go in; verified netlists of controlled-shift
gates come out, along with the reduced sum-of-products expressions and
the rewrite steps that produced them.
"""

from .core import (
    ALL_SHIFTS,
    BUFFER,
    DUAL_SHIFT,
    SELF_DUAL_SHIFT,
    SELF_SHIFT,
    SELF_SINGLE_SHIFT,
    SINGLE_SHIFT,
    ProjFamily,
    ShiftOp,
    Trit,
    gf3_add,
    gf3_mul,
    proj,
    shift_by_name,
    t_and,
    t_not,
    t_or,
)
from .expr import (
    Const,
    Expr,
    Fused,
    Pair,
    Proj,
    Term,
    expr_equiv,
    make_pair,
    make_term,
    minterm_extract,
)
from .gates import (
    C2NOT,
    COST_MODELS,
    GTG,
    CostModel,
    Feynman,
    MaxGate,
    MinGate,
    MSGate,
    MultiGTG,
    Netlist,
    Toffoli,
    netlist_depth,
)
from .sim import CheckResult, SimResult, VerificationError, exhaustive_check, simulate
from .simplify import (
    PRIORITY,
    RULES,
    RewriteSoundnessError,
    RewriteTrace,
    apply_rule,
    replay,
    simplify,
)
from .synth import (
    SynthOptions,
    SynthReport,
    max_ancilla,
    synth,
    synth_mul3,
    synth_prod_n,
    synth_sum_n,
)
from .bench import run_benchmarks
from .truthtables import (
    MultiOutputFunction,
    TernaryFunction,
    TruthTableFormatError,
    builtin,
    format_truth_table,
    linear_detect,
    list_builtins,
    parse_truth_table,
)

__version__ = "0.1.0"

__all__ = [
    "Trit",
    "ProjFamily",
    "proj",
    "t_and",
    "t_or",
    "t_not",
    "gf3_add",
    "gf3_mul",
    "ShiftOp",
    "shift_by_name",
    "BUFFER",
    "SINGLE_SHIFT",
    "DUAL_SHIFT",
    "SELF_SHIFT",
    "SELF_SINGLE_SHIFT",
    "SELF_DUAL_SHIFT",
    "ALL_SHIFTS",
    "TernaryFunction",
    "MultiOutputFunction",
    "TruthTableFormatError",
    "builtin",
    "list_builtins",
    "linear_detect",
    "parse_truth_table",
    "format_truth_table",
    "Proj",
    "Fused",
    "Pair",
    "Const",
    "Term",
    "Expr",
    "make_term",
    "make_pair",
    "minterm_extract",
    "expr_equiv",
    "simplify",
    "apply_rule",
    "replay",
    "RULES",
    "PRIORITY",
    "RewriteTrace",
    "RewriteSoundnessError",
    "MSGate",
    "Feynman",
    "Toffoli",
    "GTG",
    "MultiGTG",
    "C2NOT",
    "MaxGate",
    "MinGate",
    "Netlist",
    "CostModel",
    "COST_MODELS",
    "netlist_depth",
    "simulate",
    "exhaustive_check",
    "SimResult",
    "CheckResult",
    "VerificationError",
    "synth",
    "SynthOptions",
    "SynthReport",
    "max_ancilla",
    "synth_sum_n",
    "synth_prod_n",
    "synth_mul3",
    "run_benchmarks",
]
