"""Exact integer/modular linear algebra for the obstruction to trivialising
PGL(m)-bundles on the complement of a divisor in an A_n-degenerating family
of curves.
"""
from .degeneration import (
    CTILDE, DTILDE, E, F1, F2, FTILDE, ConfigError, Curve, DualGraph, Fiber,
    ResolutionConfig, UndefinedPairingError, build_resolution,
    intersection_number, to_dot,
)
from .obstruction import (
    Interpretation, ObstructionSystem, Path, RecurrenceTrace, Verdict,
    assemble_system, closed_form_verdict, decide_membership, kernel_generators,
    recurrence_trace,
)
from .oracle import (
    AgreementReport, GridSpec, brute_force_membership, enumerate_solution,
    run_agreement,
)
from .zlattice import (
    DimensionError, FailingCongruence, IntegerMatrix, NormalFormResult,
    SolveOutcome, Status, hnf, snf, solve_integer, solve_mod,
)

__version__ = "0.1.0"
