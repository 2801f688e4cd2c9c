"""Span membership of the class of C in the classes of D and the E_i, mod m.

The obstruction class of the PGL(m)-bundle built from ``O(C)`` vanishes on
the complement of ``D`` (after some etale base change) exactly when

    [C] = a [D] + sum_i b_i [E_i]    in H^2(Q, mu_m)

has a solution. Restricting to each proper curve of the special fibre and
taking degrees turns this into an integer linear system mod ``m``. Over a
strictly henselian base the numerical system is also sufficient, so the
numerical verdict is the cohomological one.

Three routes decide the same question: the general SNF solver
(:func:`decide_membership`), the closed-form criterion
(:func:`closed_form_verdict`) and the hand elimination
(:func:`recurrence_trace`). :mod:`andegen.oracle` adds brute force.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .degeneration import (
    CTILDE, DTILDE, Curve, DualGraph, ResolutionConfig, build_resolution,
    intersection_number,
)
from .zlattice import FailingCongruence, IntegerMatrix, solve_mod


class Path(str, Enum):
    SOLVER = "Solver"
    CLOSED_FORM = "ClosedForm"
    ORACLE = "Oracle"


class Interpretation(str, Enum):
    # solvable: the obstruction dies after etale base change; this does not
    # by itself make the bundle trivial
    OBSTRUCTION_CAN_VANISH = "ObstructionCanVanish"
    PROPERTY_L_FAILS = "PropertyLFails"


@dataclass(frozen=True)
class ObstructionSystem:
    """``matrix @ (a, b_1, ..., b_n) = target (mod m)``.

    Rows are the proper test curves ``E_1..E_n`` followed by the fibre
    component(s); columns are ``D, E_1..E_n``.
    """

    graph: DualGraph
    test_curves: tuple[Curve, ...]
    span_classes: tuple[Curve, ...]
    matrix: IntegerMatrix
    target: tuple[int, ...]

    @property
    def config(self) -> ResolutionConfig:
        return self.graph.config

    def residual(self, x, m: int) -> tuple[int, ...]:
        """``(matrix @ x - target) mod m``; all zero iff ``x`` solves."""
        return tuple((v - c) % m for v, c in zip(self.matrix.apply(x), self.target))

    def satisfied_by(self, x, m: int) -> bool:
        return not any(self.residual(x, m))


@dataclass(frozen=True)
class Verdict:
    config: ResolutionConfig
    m: int
    solvable: bool
    path: Path
    witness: Optional[tuple[int, ...]] = None
    certificate: Optional[FailingCongruence] = None

    @property
    def interpretation(self) -> Interpretation:
        if self.solvable:
            return Interpretation.OBSTRUCTION_CAN_VANISH
        return Interpretation.PROPERTY_L_FAILS

    def to_json(self) -> dict:
        out = {
            "config": self.config.to_json(),
            "m": self.m,
            "solvable": self.solvable,
            "path": self.path.value,
            "interpretation": self.interpretation.value,
        }
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def kernel_generators(graph: DualGraph) -> tuple[Curve, ...]:
    """Boundary curves whose classes generate the kernel of restriction to
    the complement: ``D`` and ``E_1..E_n``."""
    return (DTILDE,) + graph.exceptional


def assemble_system(graph: DualGraph) -> ObstructionSystem:
    tests = graph.exceptional + graph.fiber_components
    span = kernel_generators(graph)
    M = IntegerMatrix.from_rows(
        [[intersection_number(graph, g, s) for s in span] for g in tests])
    c = tuple(intersection_number(graph, CTILDE, g) for g in tests)
    return ObstructionSystem(graph, tests, span, M, c)


def _check_modulus(m, minimum: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"modulus must be an integer, got {m!r}")
    if m < minimum:
        raise ValueError(f"modulus must be >= {minimum}, got {m}")
    return m


def decide_membership(system: ObstructionSystem, m: int) -> Verdict:
    """Decide solvability with the general SNF solver."""
    m = _check_modulus(m, 1)
    out = solve_mod(system.matrix, system.target, m)
    return Verdict(system.config, m, out.solvable, Path.SOLVER,
                   witness=out.witness, certificate=out.certificate)


def _solve_scalar(d: int, e: int, m: int) -> Optional[int]:
    """Least ``x`` in ``[0, m)`` with ``d*x = e (mod m)``, or ``None``."""
    g = math.gcd(d, m)
    if e % g:
        return None
    mm = m // g
    if mm == 1:
        return 0
    return (e // g) * pow(d // g, -1, mm) % mm


def _back_substitute(config: ResolutionConfig, m: int, b1: int, bn: int) -> tuple[int, ...]:
    """Fill ``(a, b_1..b_n)`` from ``b_1`` and ``b_n`` using the linear
    profile of ``b`` on each side of ``E_t``."""
    n, t = config.n, config.t
    b = [0] * (n + 2)  # b[0] = b[n+1] = 0 pad the chain
    for i in range(1, n + 1):
        b[i] = i * b1 if i <= t else (n + 1 - i) * bn
    # row E_t is the only row involving a
    a = -(b[t - 1] - 2 * b[t] + b[t + 1])
    return tuple(v % m for v in [a] + b[1:n + 1])


def closed_form_verdict(config: ResolutionConfig, m: int) -> Verdict:
    """Reducible fibre: solvable iff ``m | t``. Irreducible fibre: solvable
    iff ``gcd(n + 1, m) | t``.

    A solvable verdict carries the witness obtained by back-substitution;
    an unsolvable one carries the failing scalar congruence.
    """
    m = _check_modulus(m, 2)
    n, t = config.n, config.t
    if config.irreducible:
        bn = _solve_scalar(n + 1, t, m)
        if bn is None:
            return Verdict(config, m, False, Path.CLOSED_FORM,
                           certificate=FailingCongruence(n + 1, t % m, m))
        witness = _back_substitute(config, m, 1 - bn, bn)
    else:
        if t % m:
            # b_1 = 1 forces t*b_1 = t, which must vanish: 0*x = t (mod m)
            return Verdict(config, m, False, Path.CLOSED_FORM,
                           certificate=FailingCongruence(0, t % m, m))
        witness = _back_substitute(config, m, 1, 0)
    return Verdict(config, m, True, Path.CLOSED_FORM, witness=witness)


@dataclass(frozen=True)
class TraceStep:
    label: str
    relation: str

    def to_json(self) -> dict:
        return {"label": self.label, "relation": self.relation}


@dataclass(frozen=True)
class TerminalCongruence:
    """``coefficient * variable = rhs (mod modulus)``.

    When ``pinned`` is set the variable is already forced to that value and
    the relation is a consistency check rather than an equation.
    """

    variable: str
    coefficient: int
    rhs: int
    modulus: int
    pinned: Optional[int] = None

    @property
    def solvable(self) -> bool:
        if self.pinned is not None:
            return (self.coefficient * self.pinned - self.rhs) % self.modulus == 0
        return self.rhs % math.gcd(self.coefficient, self.modulus) == 0

    @property
    def relation(self) -> str:
        if self.pinned is not None:
            return f"{self.coefficient}·{self.variable} = {self.rhs}"
        return f"{self.variable}·{self.coefficient} = {self.rhs}"

    def to_json(self) -> dict:
        out = {"variable": self.variable, "coefficient": self.coefficient,
               "rhs": self.rhs, "modulus": self.modulus,
               "relation": self.relation, "solvable": self.solvable}
        if self.pinned is not None:
            out["pinned"] = self.pinned
        return out


@dataclass(frozen=True)
class RecurrenceTrace:
    config: ResolutionConfig
    m: int
    steps: tuple[TraceStep, ...]
    terminal: TerminalCongruence
    conclusion: str

    @property
    def solvable(self) -> bool:
        return self.terminal.solvable

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps] + [
            {"terminal": self.terminal.to_json(), "conclusion": self.conclusion}]

    def render(self) -> str:
        width = max(len(s.label) for s in self.steps)
        body = [f"  [{s.label:>{width}}]  {s.relation}" for s in self.steps]
        return "\n".join(body + [f"  => {self.conclusion}"])


def _verdict_word(ok: bool) -> str:
    return "solvable" if ok else "unsolvable"


def recurrence_trace(config: ResolutionConfig, m: int) -> RecurrenceTrace:
    """Eliminate the system by hand, one curve at a time.

    Rows ``E_1..E_{t-1}`` propagate ``b_i = i*b_1`` up the chain, rows
    ``E_n..E_{t+1}`` propagate down from ``b_n``, row ``E_t`` fixes ``a``
    (so ``a`` never obstructs), and the fibre row(s) close the loop in one
    scalar congruence. For ``n = 1`` the fibre rows alone decide.
    """
    m = _check_modulus(m, 2)
    n, t = config.n, config.t
    steps: list[TraceStep] = []
    add = lambda label, rel: steps.append(TraceStep(label, rel))

    if n == 1:
        if config.irreducible:
            add("Ftilde", "2·b_1 = 1  (F meets E_1 in two points)")
            add("E_1", "a = 2·b_1")
            term = TerminalCongruence("b_1", 2, 1, m)
            g = math.gcd(2, m)
            concl = (f"b_1·2 ≡ 1 (mod {m}): gcd(2,{m})={g} "
                     f"{'|' if term.solvable else '∤'} 1 ⇒ {_verdict_word(term.solvable)}")
        else:
            add("F1", "b_1 = 1")
            add("F2", "b_1 = 0")
            term = TerminalCongruence("b_1", 1, 0, m, pinned=1)
            concl = (f"b_1 = 1 and b_1 = 0 ⇒ 1 ≡ 0 (mod {m}): "
                     f"{str(term.solvable).lower()} ⇒ {_verdict_word(term.solvable)}")
        return RecurrenceTrace(config, m, tuple(steps), term, concl)

    if config.irreducible:
        add("Ftilde", f"b_1 + b_{n} = 1")
    else:
        add("F1", "b_1 = 1")
        add("F2", f"b_{n} = 0")
    for i in range(1, t):
        add(f"E_{i}", f"b_{i + 1} = {i + 1}·b_1")
    for i in range(n, t, -1):
        if config.irreducible:
            add(f"E_{i}", f"b_{i - 1} = {n - i + 2}·b_{n}")
        else:
            add(f"E_{i}", f"b_{i - 1} = 0")
    prev = f"b_{t - 1}" if t > 1 else "0"
    nxt = f"b_{t + 1}" if t < n else "0"
    add(f"E_{t}", f"a = -({prev} - 2·b_{t} + {nxt})  (a is free to absorb row E_{t})")

    if config.irreducible:
        add("consistency", f"b_{t} = {t}·b_1 = {n - t + 1}·b_{n} ⇒ "
                           f"{t}·(1 - b_{n}) = {n - t + 1}·b_{n}")
        term = TerminalCongruence(f"b_{n}", n + 1, t, m)
        g = math.gcd(n + 1, m)
        concl = (f"b_{n}·{n + 1} ≡ {t} (mod {m}): gcd({n + 1},{m})={g} "
                 f"{'|' if term.solvable else '∤'} {t} ⇒ {_verdict_word(term.solvable)}")
    else:
        term = TerminalCongruence("b_1", t, 0, m, pinned=1)
        concl = (f"b_{t} = {t}·b_1 = {t} and b_{t} = 0 ⇒ {t} ≡ 0 (mod {m}): "
                 f"{str(term.solvable).lower()} ⇒ {_verdict_word(term.solvable)}")
    return RecurrenceTrace(config, m, tuple(steps), term, concl)


def analyse(config: ResolutionConfig, m: int) -> tuple[ObstructionSystem, Verdict]:
    """Build the graph and system for ``config`` and run the solver."""
    system = assemble_system(build_resolution(config))
    return system, decide_membership(system, m)
