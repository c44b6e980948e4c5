"""Wavefront OBJ export of sampled graph surfaces."""

from __future__ import annotations

from dataclasses import dataclass

from .domain import GridDomain
from .errors import EmptyDomainError
from .expr import Expr, eval_value


@dataclass(frozen=True, slots=True)
class MeshStats:
    n_vertices: int
    n_triangles: int


def build_mesh(
    surface: Expr, domain: GridDomain
) -> tuple[list[tuple[float, float, float]], list[tuple[int, int, int]]]:
    """Vertices (x, y, z) for surviving grid nodes in row-major order and
    1-based triangle index triples. Grid cells touching an excluded node
    produce no faces, so exclusion gaps stay open."""
    xs = domain.xs()
    ys = domain.ys()
    vertices: list[tuple[float, float, float]] = []
    index: dict[tuple[int, int], int] = {}
    for j, y in enumerate(ys):
        for i, x in enumerate(xs):
            if not domain.included(x, y):
                continue
            index[(i, j)] = len(vertices) + 1
            vertices.append((x, y, eval_value(surface, (x, y))))
    if not vertices:
        raise EmptyDomainError("every grid node was excluded")
    triangles: list[tuple[int, int, int]] = []
    for j in range(domain.ny - 1):
        for i in range(domain.nx - 1):
            a = index.get((i, j))
            b = index.get((i + 1, j))
            c = index.get((i, j + 1))
            d = index.get((i + 1, j + 1))
            if a is None or b is None or c is None or d is None:
                continue
            triangles.append((a, b, c))
            triangles.append((b, d, c))
    return vertices, triangles


def write_obj(surface: Expr, domain: GridDomain, path: str) -> MeshStats:
    """Write the sampled surface as a Wavefront OBJ (no normals, no UVs)."""
    vertices, triangles = build_mesh(surface, domain)
    with open(path, "w", encoding="ascii") as fh:
        for x, y, z in vertices:
            fh.write(f"v {x!r} {y!r} {z!r}\n")
        for a, b, c in triangles:
            fh.write(f"f {a} {b} {c}\n")
    return MeshStats(n_vertices=len(vertices), n_triangles=len(triangles))
