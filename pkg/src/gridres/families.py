"""Graph family descriptors: ring, toroidal grid, hypercube, explicit edge list.

A family is a small immutable value describing a structured graph
symbolically. Nothing here materializes matrices; descriptors are the
shared input type of every computation in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import InvalidFamily


@dataclass(frozen=True)
class Ring:
    """Cycle graph on ``m`` nodes; a single isolated node for m = 1.

    m = 2 is accepted as a descriptor (the closed-form average resistance
    is still defined through the parallel-resistor picture) but cannot be
    turned into a simple-graph Laplacian; see :func:`gridres.laplacian.build_laplacian`.
    """

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidFamily(f"Ring requires m >= 1, got {self.m}")

    def node_count(self) -> int:
        return self.m


@dataclass(frozen=True)
class Torus:
    """Toroidal grid on Z_{M1} x ... x Z_{Md} with nearest-neighbour edges.

    Every side must satisfy M_i >= 3: a side of 2 degenerates into parallel
    double edges (that graph is the hypercube, which has its own descriptor
    and its own spectrum), and a side of 1 is dimensionally vacuous.
    """

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(m) for m in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) == 0:
            raise InvalidFamily("Torus requires at least one dimension")
        for m in dims:
            if m == 2:
                raise InvalidFamily(
                    "Torus side length 2 is a degenerate double edge; "
                    "use Hypercube for the M=2 lattice"
                )
            if m < 3:
                raise InvalidFamily(f"Torus side lengths must be >= 3, got {m}")

    def node_count(self) -> int:
        return math.prod(self.dims)


@dataclass(frozen=True)
class Hypercube:
    """Graph on {0,1}^d with edges between words at Hamming distance 1."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise InvalidFamily(f"Hypercube requires d >= 0, got {self.d}")

    def node_count(self) -> int:
        return 2**self.d


@dataclass(frozen=True)
class Explicit:
    """Arbitrary simple undirected graph given by node count and edge set."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        object.__setattr__(self, "n", int(n))
        if self.n < 1:
            raise InvalidFamily(f"Explicit requires n >= 1, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidFamily(f"self-loop at node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidFamily(f"edge ({u}, {v}) references a node outside [0, {self.n})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidFamily(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
        object.__setattr__(self, "edges", frozenset(seen))

    def node_count(self) -> int:
        return self.n


GraphFamily = Union[Ring, Torus, Hypercube, Explicit]


def family_edges(g: GraphFamily) -> Iterator[tuple[int, int]]:
    """Yield the edge list of a family, each unordered pair exactly once.

    Torus nodes are indexed row-major over the coordinate tuple; hypercube
    nodes are the integers 0 .. 2^d - 1 read as bit words.
    """
    if isinstance(g, Ring):
        if g.m == 1:
            return
        if g.m == 2:
            raise InvalidFamily(
                "Ring(2) as a cycle is a double edge and has no simple-graph "
                "Laplacian; use Hypercube(1) for the single-edge two-node graph"
            )
        for i in range(g.m):
            j = (i + 1) % g.m
            yield (i, j) if i < j else (j, i)
    elif isinstance(g, Torus):
        dims = g.dims
        strides = _row_major_strides(dims)
        n = g.node_count()
        for node in range(n):
            coords = _decode(node, dims, strides)
            for axis, m in enumerate(dims):
                step = coords[axis]
                neighbour = node + strides[axis] * (((step + 1) % m) - step)
                yield (node, neighbour) if node < neighbour else (neighbour, node)
    elif isinstance(g, Hypercube):
        for v in range(2**g.d):
            for j in range(g.d):
                u = v ^ (1 << j)
                if u > v:
                    yield v, u
    elif isinstance(g, Explicit):
        yield from sorted(g.edges)
    else:
        raise InvalidFamily(f"unknown graph family {type(g).__name__}")


def _row_major_strides(dims: tuple[int, ...]) -> tuple[int, ...]:
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    return tuple(strides)


def _decode(node: int, dims: tuple[int, ...], strides: tuple[int, ...]) -> tuple[int, ...]:
    return tuple((node // s) % m for s, m in zip(strides, dims))


def read_edge_list(path: str | Path) -> Explicit:
    """Parse the text edge-list format into an Explicit family.

    First non-comment line holds the node count ``n``; every following
    line holds one edge ``u v`` (0-based). Lines starting with '#' and
    blank lines are ignored.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise InvalidFamily(f"{path}:{lineno}: expected a single node count, got {line!r}")
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise InvalidFamily(f"{path}:{lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise InvalidFamily(f"{path}: empty edge-list file")
    return Explicit(n, edges)
