"""Cluster membership: each alive non-head joins exactly one head.

Two join rules: nearest head by Euclidean distance, or highest
energy-distance ratio E_res^alpha / d^beta using the head's residual energy
at the start of the round.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import Node

NEAREST = "nearest"
ENERGY_DISTANCE = "energy_distance"

_DISTANCE_FLOOR = 1e-12  # co-located member/head; the ratio limit is +inf


@dataclass(frozen=True)
class JoinPolicy:
    kind: str = NEAREST
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in (NEAREST, ENERGY_DISTANCE):
            raise ValueError(f"unknown join kind {self.kind!r}")
        if self.kind == ENERGY_DISTANCE and (self.alpha <= 0 or self.beta <= 0):
            raise ValueError("energy_distance join needs alpha, beta > 0")


@dataclass(frozen=True)
class ClusterAssignment:
    members: dict[int, int]     # member node id -> head node id
    unassigned: list[int]       # direct-to-BS fallback (no heads this round)


def energy_distance_ratio(e_res: float, distance: float,
                          alpha: float, beta: float) -> float:
    """Attraction of a head with residual energy e_res at the given distance."""
    if e_res < 0:
        raise ValueError(f"e_res must be >= 0, got {e_res!r}")
    distance = max(distance, _DISTANCE_FLOOR)
    return e_res ** alpha / distance ** beta


def assign_members(nodes: list[Node], heads: list[int], policy: JoinPolicy,
                   distance_matrix: np.ndarray | None = None) -> ClusterAssignment:
    """Assign every alive non-head node to a head per the join policy.

    Ties go to the lower head id. `distance_matrix`, when given, is the full
    node-by-node distance table (positions are static, so callers running many
    rounds precompute it once).
    """
    head_ids = sorted(heads)
    member_ids = [n.id for n in nodes if n.alive and n.id not in set(head_ids)]
    if not head_ids:
        return ClusterAssignment(members={}, unassigned=member_ids)
    if not member_ids:
        return ClusterAssignment(members={}, unassigned=[])

    by_id = {n.id: n for n in nodes}
    if distance_matrix is not None:
        dist = distance_matrix[np.ix_(member_ids, head_ids)]
    else:
        hx = np.array([by_id[h].x for h in head_ids])
        hy = np.array([by_id[h].y for h in head_ids])
        mx = np.array([by_id[m].x for m in member_ids])
        my = np.array([by_id[m].y for m in member_ids])
        dist = np.hypot(mx[:, None] - hx[None, :], my[:, None] - hy[None, :])

    if policy.kind == NEAREST:
        choice = np.argmin(dist, axis=1)   # first occurrence -> lowest head id
    else:
        energies = np.array([by_id[h].residual_energy for h in head_ids])
        safe = np.maximum(dist, _DISTANCE_FLOOR)
        ratio = energies[None, :] ** policy.alpha / safe ** policy.beta
        # A member sitting on a head joins it outright (infinite attraction),
        # regardless of that head's energy.
        ratio[dist <= 0] = np.inf
        choice = np.argmax(ratio, axis=1)
    members = {m: head_ids[c] for m, c in zip(member_ids, choice)}
    return ClusterAssignment(members=members, unassigned=[])
