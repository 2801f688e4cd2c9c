"""Brute-force span membership and the cross-path agreement harness.

The oracle tries every vector of ``(Z/m)^k`` in lexicographic order. It is
numpy-vectorised in blocks but otherwise makes no use of the structure of
the system, so it shares nothing with the SNF solver it checks.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .degeneration import Fiber, ResolutionConfig, build_resolution
from .obstruction import (
    ObstructionSystem, Path, Verdict, assemble_system, closed_form_verdict,
    decide_membership,
)
from .zlattice import IntegerMatrix

DEFAULT_CAP = 10 ** 6
_BLOCK = 1 << 16


def enumerate_solution(A: IntegerMatrix, c: Sequence[int], m: int,
                       cap: int = DEFAULT_CAP) -> Optional[tuple]:
    """Exhaustively search ``(Z/m)^cols`` for ``A x = c (mod m)``.

    Returns ``None`` if the search space exceeds ``cap`` vectors, otherwise a
    pair ``(found, witness)`` where ``witness`` is the lexicographically
    smallest solution (``None`` when there is none).
    """
    k = A.cols
    if m == 1:
        return True, (0,) * k
    if m ** k > cap:
        return None
    # residues keep every product below m^2 * k, far inside int64 here
    M = np.array([[v % m for v in A.row(i)] for i in range(A.rows)], dtype=np.int64)
    rhs = np.array([v % m for v in c], dtype=np.int64)
    place = m ** np.arange(k - 1, -1, -1, dtype=np.int64)
    total = m ** k
    for lo in range(0, total, _BLOCK):
        idx = np.arange(lo, min(lo + _BLOCK, total), dtype=np.int64)
        X = (idx[:, None] // place) % m          # most significant digit first
        ok = np.all((X @ M.T) % m == rhs, axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return True, tuple(int(v) for v in X[hits[0]])
    return False, None


def brute_force_membership(system: ObstructionSystem, m: int,
                           cap: int = DEFAULT_CAP) -> Optional[Verdict]:
    """Oracle verdict for ``system`` mod ``m``; ``None`` when over ``cap``."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    found = enumerate_solution(system.matrix, system.target, m, cap)
    if found is None:
        return None
    ok, witness = found
    return Verdict(system.config, m, ok, Path.ORACLE, witness=witness)


@dataclass(frozen=True)
class GridSpec:
    n_range: tuple[int, int]
    m_range: tuple[int, int]
    fibers: tuple[Fiber, ...] = (Fiber.IRREDUCIBLE, Fiber.REDUCIBLE)
    oracle_cap: int = DEFAULT_CAP

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(Fiber.parse(f) for f in self.fibers))
        (nlo, nhi), (mlo, mhi) = self.n_range, self.m_range
        if nlo < 1:
            raise ValueError(f"n range must start at >= 1, got {nlo}")
        if mlo < 2:
            raise ValueError(f"m range must start at >= 2, got {mlo}")
        if nhi < nlo or mhi < mlo:
            raise ValueError("empty n or m range")
        if self.oracle_cap < 0:
            raise ValueError("oracle cap must be >= 0")

    def configs(self) -> Iterable[tuple[ResolutionConfig, int]]:
        """All cells in order n, t, m, fiber."""
        for n in range(self.n_range[0], self.n_range[1] + 1):
            for t in range(1, n + 1):
                for m in range(self.m_range[0], self.m_range[1] + 1):
                    for fiber in self.fibers:
                        yield ResolutionConfig(n, t, fiber), m


@dataclass(frozen=True)
class AgreementRecord:
    n: int
    t: int
    m: int
    fiber: Fiber
    solver: Optional[bool]
    closed_form: Optional[bool]
    oracle: Optional[bool] = None
    error: Optional[str] = None

    @property
    def agree(self) -> bool:
        if self.error is not None:
            return False
        present = {v for v in (self.solver, self.closed_form, self.oracle) if v is not None}
        return len(present) == 1

    def to_json(self) -> dict:
        out = {"n": self.n, "t": self.t, "m": self.m, "fiber": self.fiber.value,
               "solver": self.solver, "closed_form": self.closed_form,
               "oracle": self.oracle, "agree": self.agree}
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass(frozen=True)
class AgreementReport:
    records: tuple[AgreementRecord, ...] = field(default_factory=tuple)

    @property
    def all_agree(self) -> bool:
        return all(r.agree for r in self.records)

    def summary(self) -> dict:
        return {
            "configs": len(self.records),
            "agree": sum(r.agree for r in self.records),
            "disagree": sum(not r.agree for r in self.records),
            "oracle_checked": sum(r.oracle is not None for r in self.records),
            "errors": sum(r.error is not None for r in self.records),
        }

    def to_json(self) -> dict:
        return {"records": [r.to_json() for r in self.records], "summary": self.summary()}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "t", "m", "fiber", "solver", "closed_form", "oracle", "agree"])
        fmt = lambda v: "" if v is None else str(v).lower()
        for r in self.records:
            w.writerow([r.n, r.t, r.m, r.fiber.value, fmt(r.solver),
                        fmt(r.closed_form), fmt(r.oracle), fmt(r.agree)])
        return buf.getvalue()


def check_config(config: ResolutionConfig, m: int,
                 oracle_cap: int = DEFAULT_CAP) -> AgreementRecord:
    """Run every path on one cell; failures are recorded, not raised."""
    solver = closed = oracle = None
    try:
        system = assemble_system(build_resolution(config))
        solver = decide_membership(system, m).solvable
        closed = closed_form_verdict(config, m).solvable
        ov = brute_force_membership(system, m, oracle_cap)
        oracle = None if ov is None else ov.solvable
    except Exception as exc:  # noqa: BLE001 - recorded per cell
        return AgreementRecord(config.n, config.t, m, config.fiber, solver, closed,
                               oracle, error=f"{type(exc).__name__}: {exc}")
    return AgreementRecord(config.n, config.t, m, config.fiber, solver, closed, oracle)


def run_agreement(grid: GridSpec) -> AgreementReport:
    return AgreementReport(tuple(check_config(cfg, m, grid.oracle_cap)
                                 for cfg, m in grid.configs()))
