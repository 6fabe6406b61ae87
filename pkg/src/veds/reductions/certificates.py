"""
Tree certificates over the X side of a reduced graph and the tree-convexity
check against them. X vertices are named by their index.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import networkx as nx

from veds.graphs.exceptions import InputError
from veds.graphs.graph import BipartiteGraph

logger = logging.getLogger(__name__)

STAR = "star"
COMB = "comb"


@dataclass(frozen=True)
class TreeCertificate:
    kind: str
    edges: Tuple[Tuple[int, int], ...]
    center: Optional[int] = None
    backbone: Tuple[int, ...] = ()
    # teeth[k] hangs off backbone[k]
    teeth: Tuple[int, ...] = ()

    @property
    def tooth_of(self) -> Dict[int, int]:
        return dict(zip(self.backbone, self.teeth))

    def to_networkx(self, n1: int) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(1, n1 + 1))
        tree.add_edges_from(self.edges)
        return tree


@dataclass(frozen=True)
class TreeConvexityReport:
    valid: bool
    violator: Optional[int] = None


def star_certificate(n1: int, center: int) -> TreeCertificate:
    return TreeCertificate(
        kind=STAR,
        edges=tuple((center, x) for x in range(1, n1 + 1) if x != center),
        center=center,
    )


def comb_certificate(backbone, teeth) -> TreeCertificate:
    backbone, teeth = tuple(backbone), tuple(teeth)
    if len(backbone) != len(teeth):
        raise InputError("a comb needs exactly one tooth per backbone vertex")
    edges = list(zip(backbone, backbone[1:])) + list(zip(backbone, teeth))
    return TreeCertificate(
        kind=COMB, edges=tuple(edges), backbone=backbone, teeth=teeth
    )


def check_certificate(cert: TreeCertificate, n1: int) -> nx.Graph:
    """
    Raise unless ``cert`` is a tree of its kind spanning exactly ``x1..x<n1>``.
    """
    vertices = {x for edge in cert.edges for x in edge}
    vertices |= set(cert.backbone) | set(cert.teeth)
    if cert.center is not None:
        vertices.add(cert.center)
    outside = sorted(x for x in vertices if not 1 <= x <= n1)
    if outside:
        raise InputError(f"certificate names X vertices outside 1..{n1}: {outside}")

    tree = cert.to_networkx(n1)
    if n1 == 0 or not nx.is_tree(tree):
        raise InputError(f"certificate is not a tree on x1..x{n1}")

    if cert.kind == STAR:
        inner = [x for x in tree if tree.degree(x) > 1]
        if cert.center is None or inner not in ([], [cert.center]):
            raise InputError(
                "star certificate must have its centre as the only inner vertex"
            )
    elif cert.kind == COMB:
        path = tree.subgraph(cert.backbone)
        if not cert.backbone or not nx.is_connected(path) or max(
            (degree for _, degree in path.degree()), default=0
        ) > 2:
            raise InputError("comb backbone is not a path")
        if sorted(cert.backbone + cert.teeth) != list(range(1, n1 + 1)):
            raise InputError("comb backbone and teeth must partition the X side")
        if any(tree.degree(tooth) != 1 for tooth in cert.teeth):
            raise InputError("every comb tooth must be a pendant vertex")
        pairs = zip(cert.backbone, cert.teeth)
        if not all(tree.has_edge(node, tooth) for node, tooth in pairs):
            raise InputError("a comb tooth must hang off its own backbone vertex")
    else:
        raise InputError(f"unknown tree kind '{cert.kind}'")
    return tree


def verify_tree_convexity(
    g: BipartiteGraph, cert: TreeCertificate
) -> TreeConvexityReport:
    tree = check_certificate(cert, g.n1)
    for j in range(1, g.n2 + 1):
        neighbours = g.neighbours_of_y(j)
        if neighbours and not nx.is_connected(tree.subgraph(neighbours)):
            logger.debug("N(y%d) is not a subtree of the %s certificate", j, cert.kind)
            return TreeConvexityReport(valid=False, violator=j)
    return TreeConvexityReport(valid=True)
