"""Uniform fuzzy partitions of the time axis and their basic functions.

A partition places nodes x_1 < ... < x_n at uniform spacing T over the
closed domain [x_1, x_n]. Node i carries a basic function A_i supported on
(x_i - T, x_i + T), unimodal with A_i(x_i) = 1, and the collection forms a
partition of unity: sum_i A_i(x) = 1 at every x in the domain (Ruspini
condition). At most two basic functions are positive at any point.

Two shapes are available:

    hat:      A_i(x) = 1 - |x - x_i| / T          (triangular)
    zshaped:  A_i(x) = (cos(pi (x - x_i) / T) + 1) / 2   (raised cosine)

The raised cosine is written with a single symmetric expression: cosine is
even, so the rising half over [x_{i-1}, x_i] and the falling half over
[x_i, x_{i+1}] coincide with it, giving A_i(x_{i-1}) = 0, A_i(x_i) = 1 and
symmetry about the node.

Boundary nodes keep the truncated half of their support: everything outside
[x_1, x_n] has membership zero. Consequently the discrete cardinality
sum_j A_i(t_j) equals T only for interior nodes (on an integer sample grid
with integer T); boundary nodes fall short, and the transform layer chooses
how to normalize for that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadArgument, BadSpacing, IndexOutOfRange, OutOfDomain

HAT = "hat"
ZSHAPED = "zshaped"
SHAPES = (HAT, ZSHAPED)


@dataclass(frozen=True)
class FuzzyPartition:
    """Uniform node grid plus basic-function shape."""

    nodes: np.ndarray
    spacing: float
    shape: str

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        if self.shape not in SHAPES:
            raise BadArgument(f"unknown shape {self.shape!r}; expected one of {SHAPES}")
        if len(nodes) < 2:
            raise BadSpacing(f"need at least 2 nodes, got {len(nodes)}")
        if self.spacing <= 0:
            raise BadSpacing(f"spacing must be > 0, got {self.spacing}")
        diffs = np.diff(nodes)
        if np.any(np.abs(diffs - self.spacing) > 1e-12 * max(1.0, abs(self.spacing))):
            raise BadSpacing("nodes are not uniformly spaced")

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def start(self) -> float:
        return float(self.nodes[0])

    @property
    def end(self) -> float:
        return float(self.nodes[-1])

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"node index {i} outside 0..{self.n - 1}")

    def _check_domain(self, x: np.ndarray) -> None:
        if np.any(x < self.start) or np.any(x > self.end):
            raise OutOfDomain(f"point outside domain [{self.start}, {self.end}]")

    def _degrees(self, x: np.ndarray) -> np.ndarray:
        """(n, len(x)) membership degrees; zero outside the domain."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        u = np.abs(x[None, :] - self.nodes[:, None]) / self.spacing
        if self.shape == HAT:
            deg = np.maximum(0.0, 1.0 - u)
        else:
            deg = np.where(u < 1.0, 0.5 * (np.cos(np.pi * np.minimum(u, 1.0)) + 1.0), 0.0)
        deg[:, (x < self.start) | (x > self.end)] = 0.0
        return deg

    def membership(self, i: int, x: float) -> float:
        """Degree A_i(x); exactly 0 outside (x_{i-1}, x_{i+1}) and outside the domain."""
        self._check_index(i)
        return float(self._degrees(np.array([x]))[i, 0])

    def membership_row(self, x: float) -> np.ndarray:
        """All n degrees at one in-domain point; at most 2 nonzero, summing to 1."""
        x = float(x)
        self._check_domain(np.array([x]))
        return self._degrees(np.array([x]))[:, 0]

    def membership_matrix(self, points) -> np.ndarray:
        """(n, len(points)) degrees over in-domain evaluation points."""
        points = np.atleast_1d(np.asarray(points, dtype=float))
        self._check_domain(points)
        return self._degrees(points)

    def cardinality(self, i: int, samples) -> float:
        """Discrete cardinality sum_j A_i(t_j) over the given sample points."""
        self._check_index(i)
        samples = np.asarray(samples, dtype=float)
        if samples.size == 0:
            return 0.0
        return float(self._degrees(samples)[i].sum())

    def membership_energy(self, x: float) -> float:
        """sum_i A_i(x)^2, in (0, 1]; equals 1 exactly at nodes."""
        row = self.membership_row(x)
        return float(np.dot(row, row))


def build_uniform(domain_start: float, domain_end: float, spacing: float, shape: str = HAT) -> FuzzyPartition:
    """Uniform partition of [domain_start, domain_end] with nodes every `spacing`.

    Places n = floor((domain_end - domain_start) / spacing) + 1 nodes starting
    at domain_start; when the width is not a multiple of the spacing the last
    node falls short of domain_end. Boundary basic functions are truncated to
    the node range.
    """
    if spacing <= 0:
        raise BadSpacing(f"spacing must be > 0, got {spacing}")
    width = domain_end - domain_start
    if spacing > width:
        raise BadSpacing(f"spacing {spacing} exceeds domain width {width}")
    n = int(math.floor(width / spacing + 1e-9)) + 1
    nodes = domain_start + spacing * np.arange(n)
    return FuzzyPartition(nodes=nodes, spacing=float(spacing), shape=shape)


def series_node_count(length: int, spacing: int) -> int:
    """Nodes a series of `length` samples supports at horizon `spacing`: length // spacing."""
    if spacing <= 0:
        raise BadSpacing(f"spacing must be > 0, got {spacing}")
    return int(length) // int(spacing)


def partition_for_series(start: float, length: int, spacing: int, shape: str = HAT) -> FuzzyPartition:
    """Partition anchored at a series' first sample index.

    The first node sits on the first sample and the node count is
    length // spacing, so samples trailing past the last node (fewer than one
    full spacing plus the remainder) fall outside the partition domain.
    """
    n = series_node_count(length, spacing)
    if n < 2:
        raise BadSpacing(
            f"series of length {length} supports only {n} node(s) at spacing {spacing}; need 2"
        )
    nodes = start + float(spacing) * np.arange(n)
    return FuzzyPartition(nodes=nodes, spacing=float(spacing), shape=shape)
