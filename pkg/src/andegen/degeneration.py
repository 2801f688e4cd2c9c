"""Dual graph of the minimal resolution of an A_n-degenerating curve family.

The total space of the family has an A_n point (local model
``xy - z^(n+1) = 0``) on its special fibre. The minimal resolution replaces
it by a chain ``E_1, ..., E_n`` of (-2)-curves. Besides the chain the graph
records the strict transform of the special fibre (one component ``F`` or
two components ``F1``, ``F2``), the strict transform ``D`` of the section
through the singular point, which meets the chain only on ``E_t``, and the
strict transform ``C`` of a second section through the smooth locus, which
meets the fibre once and misses the chain.

Only the pairings needed to test classes against proper curves are
defined. Self-intersections of the fibre components, ``D`` and ``C`` are
never needed and asking for one raises :class:`UndefinedPairingError`.

The reducible case is normalised so that ``C`` passes through ``F1`` and
``F1`` meets ``E_1``. Swapping ``F1`` and ``F2`` and reversing the chain
(``t -> n + 1 - t``) gives the mirror picture; it is not offered as an option.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .zlattice import IntegerMatrix


class Fiber(str, Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"

    @classmethod
    def parse(cls, value) -> "Fiber":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ConfigError(f"unknown fiber type {value!r}") from None


class ConfigError(ValueError):
    """Parameters do not describe a member of the family."""


class UndefinedPairingError(LookupError):
    """The requested intersection number is deliberately left undefined."""


@dataclass(frozen=True)
class ResolutionConfig:
    """``(n, t, fiber)``: A_n singularity, ``D`` meets ``E_t``."""

    n: int
    t: int
    fiber: Fiber

    def __post_init__(self):
        object.__setattr__(self, "fiber", Fiber.parse(self.fiber))
        for name in ("n", "t"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise ConfigError(f"{name} must be an integer, got {v!r}")
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if not 1 <= self.t <= self.n:
            raise ConfigError(f"t must lie in [1, {self.n}], got {self.t}")

    @property
    def irreducible(self) -> bool:
        return self.fiber is Fiber.IRREDUCIBLE

    def to_json(self) -> dict:
        return {"n": self.n, "t": self.t, "fiber": self.fiber.value}


@dataclass(frozen=True, order=True)
class Curve:
    """Label of a curve on the resolved surface.

    ``kind`` is one of ``E``, ``Ftilde``, ``F1``, ``F2``, ``Dtilde``,
    ``Ctilde``; ``index`` is used only for ``E``.
    """

    kind: str
    index: int = 0

    KINDS = ("E", "Ftilde", "F1", "F2", "Dtilde", "Ctilde")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if (self.kind == "E") != (self.index >= 1):
            raise ValueError("only E curves carry a positive index")

    @property
    def is_exceptional(self) -> bool:
        return self.kind == "E"

    @property
    def node_id(self) -> str:
        """Short name used in DOT output: E1..En, F, F1, F2, D, C."""
        if self.kind == "E":
            return f"E{self.index}"
        return {"Ftilde": "F", "F1": "F1", "F2": "F2", "Dtilde": "D", "Ctilde": "C"}[self.kind]

    def __str__(self) -> str:
        return f"E_{self.index}" if self.kind == "E" else self.kind


def E(i: int) -> Curve:
    return Curve("E", i)


FTILDE = Curve("Ftilde")
F1 = Curve("F1")
F2 = Curve("F2")
DTILDE = Curve("Dtilde")
CTILDE = Curve("Ctilde")


@dataclass(frozen=True)
class DualGraph:
    config: ResolutionConfig
    curves: tuple[Curve, ...]
    # unordered pairs with a nonzero value; absent pairs pair to 0
    pairs: dict = field(repr=False)

    @property
    def exceptional(self) -> tuple[Curve, ...]:
        return tuple(c for c in self.curves if c.is_exceptional)

    @property
    def fiber_components(self) -> tuple[Curve, ...]:
        return tuple(c for c in self.curves if c.kind in ("Ftilde", "F1", "F2"))

    def pairing(self, a: Curve, b: Curve) -> int:
        return intersection_number(self, a, b)

    def self_intersection(self, curve: Curve) -> Optional[int]:
        if curve.is_exceptional:
            return -2
        return None

    def edges(self) -> list[tuple[Curve, Curve, int]]:
        """Positive pairings between distinct curves, in curve order."""
        out = []
        for i, a in enumerate(self.curves):
            for b in self.curves[i + 1:]:
                v = self.pairs.get(frozenset((a, b)), 0)
                if v > 0:
                    out.append((a, b, v))
        return out

    def chain_matrix(self) -> IntegerMatrix:
        """Intersection matrix of ``E_1..E_n`` (the negated A_n Cartan matrix)."""
        es = self.exceptional
        return IntegerMatrix.from_rows([[self.pairing(a, b) for b in es] for a in es])


def build_resolution(config: ResolutionConfig) -> DualGraph:
    """Dual graph of the minimal resolution for ``config``.

    Curve order is ``E_1..E_n``, the fibre component(s), ``D``, ``C``.
    """
    n, t = config.n, config.t
    pairs: dict = {}

    def bump(a: Curve, b: Curve, k: int = 1) -> None:
        # n = 1 irreducible: both transverse points of F land on E_1
        key = frozenset((a, b))
        pairs[key] = pairs.get(key, 0) + k

    chain = [E(i) for i in range(1, n + 1)]
    for i in range(1, n):
        bump(E(i), E(i + 1))

    if config.irreducible:
        fibre = [FTILDE]
        bump(FTILDE, E(1))
        bump(FTILDE, E(n))
        bump(CTILDE, FTILDE)
    else:
        fibre = [F1, F2]
        bump(F1, E(1))
        bump(F2, E(n))
        bump(CTILDE, F1)
    bump(DTILDE, E(t))

    curves = tuple(chain + fibre + [DTILDE, CTILDE])
    return DualGraph(config, curves, pairs)


def intersection_number(graph: DualGraph, a: Curve, b: Curve) -> int:
    """Intersection number of two curves in ``graph``; symmetric."""
    for c in (a, b):
        if c not in graph.curves:
            raise KeyError(f"{c} is not a curve of this resolution")
    if a == b:
        if a.is_exceptional:
            return -2
        raise UndefinedPairingError(f"self-intersection of {a} is not defined")
    return graph.pairs.get(frozenset((a, b)), 0)


def to_dot(graph: DualGraph) -> str:
    """Render ``graph`` as an undirected DOT graph.

    Node ids are ``E1..En``, ``F`` (or ``F1``, ``F2``), ``D``, ``C``. Nodes
    with a defined self-intersection show it in their label; edge labels are
    intersection multiplicities.
    """
    cfg = graph.config
    lines = [
        "graph resolution {",
        f'  label="A_{cfg.n} resolution, t={cfg.t}, {cfg.fiber.value} fiber";',
        "  node [shape=circle];",
    ]
    for c in graph.curves:
        self_int = graph.self_intersection(c)
        label = c.node_id if c.is_exceptional else c.kind
        if self_int is not None:
            label = f"{label}\\n({self_int})"
        shape = "" if c.is_exceptional else ", shape=box"
        lines.append(f'  {c.node_id} [label="{label}"{shape}];')
    for a, b, v in graph.edges():
        lines.append(f'  {a.node_id} -- {b.node_id} [label="{v}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
