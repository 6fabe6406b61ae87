import logging
from typing import Iterable, Tuple

from veds.graphs.exceptions import ContractError, DomainError
from veds.graphs.graph import VertexRef, format_vertex_set, is_ve_dominating_set

from .certificates import COMB
from .constructions import ReductionArtifact

logger = logging.getLogger(__name__)


def cover_to_vedset(
    art: ReductionArtifact, cover: Iterable[int]
) -> Tuple[VertexRef, ...]:
    """
    The chosen b_j together with the hub vertex.
    """
    cover = sorted(set(cover))
    if not art.set_system.is_cover(cover):
        raise ContractError(f"sets {cover} do not cover 1..{art.set_system.p}")

    d = {art.b(j) for j in cover} | {art.hub}
    if not is_ve_dominating_set(art.graph, d):
        raise ContractError(f"{format_vertex_set(d)} does not dominate every edge")
    return tuple(sorted(d))


def vedset_to_cover(art: ReductionArtifact, d: Iterable[VertexRef]) -> Tuple[int, ...]:
    """
    Normalize a VED-set of the reduced graph into a cover of the set system.

    The hub triple collapses onto the hub, backbone vertices are dropped,
    and each a_i or z_i is replaced by the lowest b_j adjacent to a_i unless
    one of them is already chosen. The surviving b_j index the cover.
    """
    d = set(d)
    if not is_ve_dominating_set(art.graph, d):
        raise ContractError(
            f"{format_vertex_set(d)} is not a VED-set of the reduced graph"
        )

    ss = art.set_system
    role_of = art.role_of
    roles = {vertex: role_of[vertex] for vertex in d - art.hub_triple}
    if art.kind == COMB:
        roles = {
            vertex: role for vertex, role in roles.items() if not role.startswith("r")
        }

    chosen = {int(role[1:]) for role in roles.values() if role.startswith("b")}
    replaced = sorted(
        int(role[1:]) for role in roles.values() if role[0] in ("a", "z")
    )
    for i in replaced:
        containing = ss.sets_containing(i)
        if not containing:
            raise DomainError(f"element {i} lies in no set, there is no cover")
        if not chosen.intersection(containing):
            chosen.add(containing[0])

    cover = tuple(sorted(chosen))
    if not ss.is_cover(cover):
        raise ContractError(f"normalized sets {list(cover)} do not cover 1..{ss.p}")
    logger.debug(
        "Normalized a VED-set of size %d into a cover of size %d", len(d), len(cover)
    )
    return cover
