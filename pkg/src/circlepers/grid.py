"""Discretisation of circle modules onto an evenly spaced node grid.

The circle (circumference 1) is split into N nodes at j/N.  A grid module
records the fiber dimension at each node, the step matrix from each node to
the next (mod N) over the two-element field, and which interval translate
each basis vector came from.  This is the carrier for the brute-force
interleaving search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2
from .intervals import CircleInterval, CircleModule, translate_basis

BasisLabel = tuple[int, int]  # (source interval index, integer translate)


@dataclass(frozen=True, eq=False)
class GridModule:
    resolution: int
    dims: tuple[int, ...]
    steps: tuple[np.ndarray, ...]
    basis: tuple[tuple[BasisLabel, ...], ...]
    sources: tuple[CircleInterval, ...]

    def __post_init__(self):
        n = self.resolution
        if n < 2:
            raise ValueError("grid resolution must be at least 2")
        if not (len(self.dims) == len(self.steps) == len(self.basis) == n):
            raise ValueError("dims, steps and basis must have one entry per node")
        for j in range(n):
            expected = (self.dims[(j + 1) % n], self.dims[j])
            if self.steps[j].shape != expected:
                raise ValueError(
                    f"step matrix at node {j} has shape {self.steps[j].shape}, expected {expected}"
                )
            if len(self.basis[j]) != self.dims[j]:
                raise ValueError(f"basis labels at node {j} do not match the dimension")

    def max_source_length(self) -> Fraction:
        if not self.sources:
            return Fraction(0)
        return max(ival.length for ival in self.sources)


def to_grid(m: CircleModule, n: int) -> GridModule:
    """Sample *m* at the nodes j/N.

    Every interval endpoint must be an integer multiple of 1/N; off-grid
    endpoints are rejected rather than snapped, so the discretisation is
    exact on its own instances.  A basis vector lives at node j exactly when
    the sample point j/N falls in the corresponding interval translate
    (endpoint kinds respected), and the step matrices are the structure maps
    between consecutive nodes in those bases.
    """
    if n < 2:
        raise ValueError("grid resolution must be at least 2")
    for ival in m.intervals:
        for endpoint in (ival.lo, ival.hi):
            if (endpoint * n).denominator != 1:
                raise ValueError(
                    f"interval endpoint {endpoint} is not a multiple of 1/{n}"
                )

    node_basis = [translate_basis(m, Fraction(j, n)) for j in range(n)]
    steps = []
    for j in range(n):
        target = (j + 1) % n
        # stepping off node N-1 crosses the fundamental-domain seam, which
        # advances the translate index by one
        bump = 1 if j == n - 1 else 0
        source_pos = {label: c for c, label in enumerate(node_basis[j])}
        matrix = np.zeros((len(node_basis[target]), len(node_basis[j])), dtype=np.uint8)
        for r, (idx, k) in enumerate(node_basis[target]):
            c = source_pos.get((idx, k - bump))
            if c is not None:
                matrix[r, c] = 1
        steps.append(matrix)

    return GridModule(
        resolution=n,
        dims=tuple(len(labels) for labels in node_basis),
        steps=tuple(steps),
        basis=tuple(tuple(labels) for labels in node_basis),
        sources=m.intervals,
    )


def direct_sum(a: GridModule, b: GridModule) -> GridModule:
    """Blockwise direct sum; both summands must share the resolution."""
    if a.resolution != b.resolution:
        raise ValueError("direct sum requires equal grid resolutions")
    n = a.resolution
    offset = len(a.sources)
    dims = tuple(a.dims[j] + b.dims[j] for j in range(n))
    steps = []
    basis = []
    for j in range(n):
        block = np.zeros((dims[(j + 1) % n], dims[j]), dtype=np.uint8)
        block[: a.dims[(j + 1) % n], : a.dims[j]] = a.steps[j]
        block[a.dims[(j + 1) % n] :, a.dims[j] :] = b.steps[j]
        steps.append(block)
        basis.append(
            tuple(a.basis[j]) + tuple((idx + offset, k) for idx, k in b.basis[j])
        )
    return GridModule(n, dims, tuple(steps), tuple(basis), a.sources + b.sources)


def step_composite(g: GridModule, start: int, count: int) -> np.ndarray:
    """Composite of *count* consecutive step maps starting at node *start*."""
    n = g.resolution
    acc = gf2.identity(g.dims[start % n])
    for t in range(count):
        acc = gf2.matmul(g.steps[(start + t) % n], acc)
    return acc


def loop_map(g: GridModule) -> np.ndarray:
    """The around-the-circle composite based at node 0."""
    return step_composite(g, 0, g.resolution)


def loop_is_nilpotent(g: GridModule) -> bool:
    """Whether the loop map is nilpotent (it must be, for interval sources)."""
    m = loop_map(g)
    power = gf2.identity(m.shape[0])
    for _ in range(max(m.shape[0], 1)):
        power = gf2.matmul(m, power)
    return not power.any()
