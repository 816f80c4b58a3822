"""Closed-form network-energy quantities and the adaptive election probability.

The per-round network energy, as a function of the cluster radius d, has one
interior minimum; its argmin gives the optimal radius, from which the maximum
sensible number of cluster-heads per round follows. A golden-section minimizer
is provided as an independent numerical cross-check of the closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .model import FieldConfig, Node, RadioParams


@dataclass(frozen=True)
class AnalysisInputs:
    radio: RadioParams
    field: FieldConfig
    bs_distance: float  # representative head-to-BS distance, m

    def __post_init__(self) -> None:
        if self.bs_distance <= 0:
            raise ValueError(f"bs_distance must be positive, got {self.bs_distance!r}")


def total_energy(inputs: AnalysisInputs, d: float) -> float:
    """Per-round network energy with cluster radius d.

    Electronics and aggregation terms are d-independent; the head-uplink term
    scales with the cluster count M^2/(2*pi*d^2) and the member term with d^2.
    """
    if d <= 0:
        raise ValueError(f"d must be positive, got {d!r}")
    r = inputs.radio
    n = inputs.field.node_count
    m_side = inputs.field.side_m
    l = r.packet_bits
    const = 2 * l * r.elec_energy_per_bit * n + l * r.aggregation_energy_per_bit * n
    uplink = l * r.mp_amp * inputs.bs_distance ** 4 * m_side ** 2 / (2 * math.pi * d ** 2)
    members = n * l * r.fs_amp * d ** 2
    return const + uplink + members


def optimal_distance(inputs: AnalysisInputs) -> float:
    """Cluster radius minimizing total_energy (closed form)."""
    r = inputs.radio
    n = inputs.field.node_count
    m_side = inputs.field.side_m
    return (r.mp_amp * m_side ** 2 / (2 * math.pi * n * r.fs_amp)) ** 0.25 * inputs.bs_distance


@dataclass(frozen=True)
class ClusterBudget:
    """Maximum heads per round: raw real value, plus the integer cap."""

    raw: float
    rounded: int


def max_clusters(inputs: AnalysisInputs) -> ClusterBudget:
    """Maximum number of cluster-heads permitted per round.

    raw = M^2 / (2*pi*d_opt^2); the cap rounds half-up with a floor of 1.
    """
    d_opt = optimal_distance(inputs)
    raw = inputs.field.side_m ** 2 / (2 * math.pi * d_opt ** 2)
    return ClusterBudget(raw=raw, rounded=max(1, int(math.floor(raw + 0.5))))


def adaptive_probability(kappa_max: float, alive_count: int) -> float:
    """Election probability for the next round: kappa_max over alive nodes, capped at 1."""
    if kappa_max <= 0:
        raise ValueError(f"kappa_max must be positive, got {kappa_max!r}")
    if alive_count < 1:
        raise ValueError(f"alive_count must be >= 1, got {alive_count!r}")
    return min(1.0, kappa_max / alive_count)


def representative_bs_distance(nodes: list[Node], bs: tuple[float, float]) -> float:
    """Mean Euclidean distance from alive nodes to the base station."""
    bx, by = bs
    alive = [n for n in nodes if n.alive]
    if not alive:
        raise ValueError("no alive nodes")
    return sum(n.distance_to(bx, by) for n in alive) / len(alive)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_minimize(f, lo: float, hi: float, iterations: int = 200) -> float:
    """Golden-section argmin of a unimodal f on [lo, hi]."""
    a, b = lo, hi
    c = b - (b - a) * _INV_PHI
    d = a + (b - a) * _INV_PHI
    fc, fd = f(c), f(d)
    for _ in range(iterations):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INV_PHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INV_PHI
            fd = f(d)
    return (a + b) / 2.0


def argmin_total_energy(inputs: AnalysisInputs, lo: float = 1e-3,
                        hi: float | None = None, iterations: int = 200) -> float:
    """Numerical argmin of total_energy over d, searched in log space."""
    if hi is None:
        hi = math.sqrt(2.0) * inputs.field.side_m
    t = golden_section_minimize(lambda u: total_energy(inputs, math.exp(u)),
                                math.log(lo), math.log(hi), iterations)
    return math.exp(t)
