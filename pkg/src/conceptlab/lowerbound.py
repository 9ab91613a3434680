"""Lower-bound pipeline on concrete graphs: any total class disambiguating
the partial class of a biclique partition properly colors the underlying
graph, so its size is at least the chromatic number; a compression scheme's
key space caps the size from above.  Composing the two yields per-instance
certificates: counting ceiling >= extracted disambiguation size >= chromatic
floor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from conceptlab.compression import (
    CompressionScheme,
    counting_bound,
    extract_disambiguation,
    verify_scheme,
)
from conceptlab.constructions import (
    BicliquePartition,
    Graph,
    biclique_class,
    star_partition,
)
from conceptlab.core import STAR, ClassKind, ConceptClass
from conceptlab.errors import BudgetError, ContractViolationError

CHROMATIC_MAX_VERTICES = 10


@dataclass(frozen=True)
class Coloring:
    """A vertex-color assignment; proper iff no edge is monochromatic."""

    graph: Graph
    color_of: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.color_of) != self.graph.vertex_count:
            raise ValueError("one color per vertex required")
        object.__setattr__(self, "color_of", tuple(self.color_of))

    def n_colors(self) -> int:
        return len(set(self.color_of))

    def is_proper(self) -> bool:
        return all(self.color_of[u] != self.color_of[v] for u, v in self.graph.edges)


def extract_coloring(
    partition: BicliquePartition,
    disambiguation: ConceptClass,
    assignment: Mapping[int, int],
) -> Coloring:
    """Color each vertex by the label vector of its assigned disambiguating
    concept (identical vectors share a color id).

    ``assignment`` maps each vertex to a concept index that must agree with
    the vertex's partial concept wherever the latter is defined.  The
    returned coloring is asserted proper: adjacent vertices disagree on the
    part covering their edge, so their disambiguators must differ; a
    violation raises ContractViolationError naming the edge and part.
    """
    if disambiguation.kind is not ClassKind.TOTAL:
        raise ValueError("disambiguation must be a total class")
    if disambiguation.domain_size != partition.n_parts:
        raise ValueError(
            "disambiguation domain must be the partition's part-index domain"
        )
    partial = biclique_class(partition)
    vertex_count = partition.graph.vertex_count
    vectors = []
    for v in range(vertex_count):
        if v not in assignment:
            raise ValueError(f"assignment misses vertex {v}")
        idx = assignment[v]
        if not 0 <= idx < disambiguation.n_concepts:
            raise ValueError(f"assignment of vertex {v} is out of range: {idx}")
        concept = disambiguation.concepts[idx]
        source = partial.concepts[v]
        for i, value in enumerate(source):
            if value != STAR and concept[i] != value:
                raise ValueError(
                    f"concept {idx} does not disambiguate vertex {v}: differs "
                    f"at part {i}"
                )
        vectors.append(concept)
    distinct = sorted(set(vectors))
    ids = {vector: c for c, vector in enumerate(distinct)}
    coloring = Coloring(
        graph=partition.graph, color_of=tuple(ids[v] for v in vectors)
    )
    for u, v in sorted(partition.graph.edges):
        if coloring.color_of[u] == coloring.color_of[v]:
            part = partition.part_of_edge(u, v)
            raise ContractViolationError(
                f"edge ({u}, {v}) is monochromatic although its endpoints "
                f"must disagree on part {part}"
            )
    return coloring


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number via branch and bound (at most 10 vertices).

    Vertices are colored in descending-degree order; a new color is opened
    only as color max+1 (symmetry breaking), and branches using at least the
    best-known color count are pruned.
    """
    n = graph.vertex_count
    if n > CHROMATIC_MAX_VERTICES:
        raise BudgetError(
            f"exact chromatic search capped at {CHROMATIC_MAX_VERTICES} "
            f"vertices, got {n}"
        )
    if n == 0:
        return 0
    adj = graph.adjacency()
    if not graph.edges:
        return 1
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    colors = [-1] * n
    best = n

    def greedy_bound() -> int:
        tmp = [-1] * n
        for v in order:
            used = {tmp[u] for u in adj[v] if tmp[u] >= 0}
            c = 0
            while c in used:
                c += 1
            tmp[v] = c
        return max(tmp) + 1

    best = greedy_bound()

    def descend(pos: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if pos == n:
            best = used
            return
        v = order[pos]
        taken = {colors[u] for u in adj[v] if colors[u] >= 0}
        for c in range(used):
            if c in taken:
                continue
            colors[v] = c
            descend(pos + 1, used)
            colors[v] = -1
        if used + 1 < best:
            colors[v] = used
            descend(pos + 1, used + 1)
            colors[v] = -1

    descend(0, 0)
    return best


@dataclass(frozen=True)
class PipelineReport:
    """Certificate for one (t, k, bit_budget, scheme) pipeline run.

    ``feasible`` is the a-priori counting check (ceiling >= chromatic
    floor); when it fails, no valid scheme with that key space can exist and
    the remaining fields stay None.  ``ok`` means every applicable assertion
    held.
    """

    t: int
    n_parts: int
    k: int
    bit_budget: int
    chromatic_floor: int
    counting_ceiling: int
    feasible: bool
    scheme_valid: Optional[bool]
    disambiguation_size: Optional[int]
    size_ge_floor: Optional[bool]
    size_le_ceiling: Optional[bool]
    ok: bool

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "n_parts": self.n_parts,
            "k": self.k,
            "bit_budget": self.bit_budget,
            "chromatic_floor": self.chromatic_floor,
            "counting_ceiling": self.counting_ceiling,
            "feasible": self.feasible,
            "scheme_valid": self.scheme_valid,
            "disambiguation_size": self.disambiguation_size,
            "size_ge_floor": self.size_ge_floor,
            "size_le_ceiling": self.size_le_ceiling,
            "ok": self.ok,
        }


def pipeline_certificate(
    t: int,
    scheme: CompressionScheme,
    k: int,
    bit_budget: int,
) -> PipelineReport:
    """Run the full chain on K_t with its star partition: verify the scheme
    on the partial class at every sample size up to the support size,
    extract the disambiguation from the key space (subsamples of size <= k,
    bit strings of length <= bit_budget), and check

        chromatic number of K_t  <=  extracted size  <=  counting ceiling.

    Key spaces whose counting ceiling is below the chromatic floor are
    reported infeasible a priori and skip verification and extraction.
    """
    partition = star_partition(t)
    partial = biclique_class(partition)
    n = partition.n_parts
    floor = chromatic_number(partition.graph)
    ceiling = counting_bound(n, 2, k, bit_budget)
    if ceiling < floor:
        return PipelineReport(
            t=t,
            n_parts=n,
            k=k,
            bit_budget=bit_budget,
            chromatic_floor=floor,
            counting_ceiling=ceiling,
            feasible=False,
            scheme_valid=None,
            disambiguation_size=None,
            size_ge_floor=None,
            size_le_ceiling=None,
            ok=True,
        )
    scheme_valid = True
    try:
        for m in range(1, n + 1):
            report = verify_scheme(partial, scheme, m)
            if report.valid is not True:
                scheme_valid = False
                break
    except (ContractViolationError, ValueError):
        scheme_valid = False
    if not scheme_valid:
        return PipelineReport(
            t=t,
            n_parts=n,
            k=k,
            bit_budget=bit_budget,
            chromatic_floor=floor,
            counting_ceiling=ceiling,
            feasible=True,
            scheme_valid=False,
            disambiguation_size=None,
            size_ge_floor=None,
            size_le_ceiling=None,
            ok=False,
        )
    extracted = extract_disambiguation(partial, scheme, k, bit_budget)
    size = extracted.n_concepts
    ge = size >= floor
    le = size <= ceiling
    return PipelineReport(
        t=t,
        n_parts=n,
        k=k,
        bit_budget=bit_budget,
        chromatic_floor=floor,
        counting_ceiling=ceiling,
        feasible=True,
        scheme_valid=True,
        disambiguation_size=size,
        size_ge_floor=ge,
        size_le_ceiling=le,
        ok=ge and le,
    )
