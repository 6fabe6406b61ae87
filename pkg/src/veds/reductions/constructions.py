"""
Set cover to Min-VEDS on star-convex and comb-convex bipartite graphs.

Vertex layout of the reduced graphs (X side, then Y side):

star  X: a_1..a_p, u, u'            Y: b_1..b_q, z_1..z_p, v
comb  X: a_1..a_p, r_1..r_{p+1}, r' Y: b_1..b_q, z_1..z_p, w

Roles are named ``a1``, ``b2``, ``z1``, ``u``, ``v``, ``u'``, ``r3``, ``w``
and ``r'3`` in the role map.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict

from veds.graphs.exceptions import ContractError
from veds.graphs.graph import BipartiteGraph, VertexRef, build_graph

from .certificates import (
    COMB,
    STAR,
    TreeCertificate,
    comb_certificate,
    star_certificate,
)
from .setsystems import SetSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionArtifact:
    kind: str
    set_system: SetSystem
    graph: BipartiteGraph
    certificate: TreeCertificate
    roles: Dict[str, VertexRef] = field(repr=False)
    # some element lies in no set, so neither side has a solution to map
    coverless: bool = False

    @property
    def role_of(self) -> Dict[VertexRef, str]:
        return {vertex: role for role, vertex in self.roles.items()}

    @property
    def hub(self) -> VertexRef:
        if self.kind == STAR:
            return self.roles["u"]
        return self.roles[f"r{self.set_system.p + 1}"]

    @property
    def hub_triple(self):
        p = self.set_system.p
        if self.kind == STAR:
            return {self.roles["u"], self.roles["v"], self.roles["u'"]}
        return {self.roles[f"r{p + 1}"], self.roles["w"], self.roles[f"r'{p + 1}"]}

    def b(self, j: int) -> VertexRef:
        return self.roles[f"b{j}"]

    @property
    def vertex_count(self) -> int:
        return self.graph.n1 + self.graph.n2


def _check_bounds(ss: SetSystem):
    if not ss.within_reduction_bounds:
        raise ContractError(
            f"the reductions need q <= p, got q={ss.q} sets over p={ss.p} elements"
        )
    if ss.coverless:
        logger.warning(
            "Elements %s lie in no set, the reduced instance has no matching cover",
            list(ss.uncovered),
        )


def _shared_roles(ss: SetSystem) -> Dict[str, VertexRef]:
    roles = {f"a{i}": VertexRef.x(i) for i in range(1, ss.p + 1)}
    roles.update({f"b{j}": VertexRef.y(j) for j in range(1, ss.q + 1)})
    roles.update({f"z{i}": VertexRef.y(ss.q + i) for i in range(1, ss.p + 1)})
    return roles


def _shared_edges(ss: SetSystem):
    edges = [(i, j) for j, members in enumerate(ss.sets, start=1) for i in members]
    edges.extend((i, ss.q + i) for i in range(1, ss.p + 1))
    return edges


def reduce_star_convex(ss: SetSystem) -> ReductionArtifact:
    _check_bounds(ss)
    p, q = ss.p, ss.q
    u, u_prime, v = p + 1, p + 2, q + p + 1

    roles = _shared_roles(ss)
    roles.update(u=VertexRef.x(u), v=VertexRef.y(v))
    roles["u'"] = VertexRef.x(u_prime)

    edges = _shared_edges(ss)
    edges.extend([(u, v), (u_prime, v)])
    edges.extend((u, j) for j in range(1, q + 1))

    graph = build_graph(p + 2, q + p + 1, edges)
    logger.debug(
        "Star reduction of p=%d, q=%d has %d vertices", p, q, 2 * p + q + 3
    )
    return ReductionArtifact(
        kind=STAR,
        set_system=ss,
        graph=graph,
        certificate=star_certificate(p + 2, center=u),
        roles=roles,
        coverless=ss.coverless,
    )


def reduce_comb_convex(ss: SetSystem) -> ReductionArtifact:
    _check_bounds(ss)
    p, q = ss.p, ss.q
    backbone = [p + k for k in range(1, p + 2)]
    hub, hub_tooth, w = backbone[-1], 2 * p + 2, q + p + 1

    roles = _shared_roles(ss)
    roles.update({f"r{k}": VertexRef.x(x) for k, x in enumerate(backbone, start=1)})
    roles[f"r'{p + 1}"] = VertexRef.x(hub_tooth)
    roles["w"] = VertexRef.y(w)

    edges = _shared_edges(ss)
    edges.extend((r, j) for j in range(1, q + 1) for r in backbone)
    edges.extend([(hub, w), (hub_tooth, w)])

    graph = build_graph(2 * p + 2, q + p + 1, edges)
    logger.debug("Comb reduction of p=%d, q=%d has %d vertices", p, q, 3 * p + q + 3)
    return ReductionArtifact(
        kind=COMB,
        set_system=ss,
        graph=graph,
        certificate=comb_certificate(backbone, list(range(1, p + 1)) + [hub_tooth]),
        roles=roles,
        coverless=ss.coverless,
    )


REDUCTIONS = {STAR: reduce_star_convex, COMB: reduce_comb_convex}
