# visualization/lattice_dot.py

from __future__ import annotations

import logging
from pathlib import Path

import pydot

from groups.perm_group import PermGroup
from lattice.subgroups import SubgroupLattice, all_subgroups
from utils.errors import ReportWriteError

logger = logging.getLogger(__name__)


def node_label(lat: SubgroupLattice, node_id: int) -> str:
    ref = lat.nodes[node_id]
    return f"order={ref.order} normal={int(lat.normal_flags[node_id])}"


def lattice_to_pydot(lat: SubgroupLattice) -> pydot.Dot:
    """
    Diagrama de Hasse del retículo: una arista X -> Y por cada cubrimiento
    X < Y, con el índice |Y:X| como etiqueta. El trivial queda abajo.
    """
    graph = pydot.Dot("lattice", graph_type="digraph", rankdir="BT")
    for node_id in range(len(lat)):
        graph.add_node(pydot.Node(f"n{node_id}", label=node_label(lat, node_id)))
    for x, y in sorted(lat.hasse.edges()):
        index = lat.containment.edges[x, y]["index"]
        graph.add_edge(pydot.Edge(f"n{x}", f"n{y}", label=str(index)))
    return graph


def lattice_to_dot(lat: SubgroupLattice) -> str:
    return lattice_to_pydot(lat).to_string()


def write_lattice_dot(G: PermGroup, path: str | Path) -> Path:
    """Escribe el diagrama de Hasse de G en formato DOT."""
    lat = all_subgroups(G)
    path = Path(path)
    try:
        path.write_text(lattice_to_dot(lat), encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(path, e.strerror or str(e))
    logger.info("Lattice of order-%d group (%d subgroups) written to %s", G.order(), len(lat), path)
    return path
