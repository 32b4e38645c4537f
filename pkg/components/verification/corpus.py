"""
Seeded corpora of small embedded graphs for the theorem suites.

Graphs come from the networkx atlas (up to seven vertices) and a few larger
families. Rotation systems are enumerated exhaustively when there are at most
``ROTATION_ENUMERATION_LIMIT`` of them and sampled otherwise.
"""
import itertools
import logging
import math
import random
from typing import Dict, Iterator, List, Optional, Set, Tuple

import networkx as nx

from components.maps.map_core import EmbeddedMap, canonical_form, genus, is_simple, mirror, with_name
from components.maps.standard_maps import from_neighbour_rotations, from_planar_graph
from components.verification.reports import CorpusSpec
from config.settings import ROTATION_ENUMERATION_LIMIT

logger = logging.getLogger(__name__)

ATLAS_MAX_VERTICES = 7


def rotation_count(g: nx.Graph) -> int:
    return math.prod(math.factorial(max(d - 1, 0)) for _, d in g.degree())


def _rotation_choices(g: nx.Graph):
    choices = []
    for v in sorted(g.nodes):
        first, *rest = sorted(g.neighbors(v))
        choices.append((v, first, rest))
    return choices


def rotation_systems(g: nx.Graph, name: str) -> Iterator[EmbeddedMap]:
    """Every rotation system of ``g``; each neighbour cycle starts at its smallest neighbour."""
    choices = _rotation_choices(g)
    options = [[[first] + list(p) for p in itertools.permutations(rest)] for _, first, rest in choices]
    labels = [v for v, _, _ in choices]
    for k, pick in enumerate(itertools.product(*options)):
        yield from_neighbour_rotations(dict(zip(labels, pick)), name=f"{name}_rot{k}")


def sampled_rotation_systems(g: nx.Graph, name: str, samples: int, seed: int) -> Iterator[EmbeddedMap]:
    rng = random.Random(f"{seed}:{name}")
    choices = _rotation_choices(g)
    for k in range(samples):
        rotations = {}
        for v, first, rest in choices:
            rest = list(rest)
            rng.shuffle(rest)
            rotations[v] = [first] + rest
        yield from_neighbour_rotations(rotations, name=f"{name}_sample{k}")


def candidate_graphs(spec: CorpusSpec) -> List[Tuple[str, nx.Graph]]:
    """Connected simple graphs within the vertex bounds, in a fixed order."""
    out = []
    for i, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if n > min(spec.max_vertices, ATLAS_MAX_VERTICES):
            break
        if n >= max(spec.min_vertices, 1) and g.number_of_edges() and nx.is_connected(g):
            out.append((f"atlas{i}", g))
    families = [
        *((f"prism{n}", nx.circular_ladder_graph(n)) for n in range(4, 7)),
        *((f"wheel{n}", nx.wheel_graph(n)) for n in range(8, 13)),
        ("q3", nx.hypercube_graph(3)),
        ("petersen", nx.petersen_graph()),
        ("icosahedral", nx.icosahedral_graph()),
    ]
    for name, g in families:
        if max(spec.min_vertices, ATLAS_MAX_VERTICES + 1) <= g.number_of_nodes() <= spec.max_vertices:
            out.append((name, nx.convert_node_labels_to_integers(g, ordering='sorted')))
    return out


def embeddings(g: nx.Graph, name: str, spec: CorpusSpec) -> Iterator[EmbeddedMap]:
    """
    Candidate embeddings of ``g`` for the requested genera.

    A 3-connected planar graph has a unique plane embedding up to mirror
    image, so plane-only corpora skip the enumeration for those.
    """
    planar = nx.check_planarity(g)[0]
    if 0 in spec.genera and planar:
        plane = from_planar_graph(g, name=name)
        yield plane
        yield with_name(mirror(plane), f"{name}_mirror")
    if spec.genera == frozenset((0,)) and (spec.require_3conn or not planar):
        return
    if rotation_count(g) <= ROTATION_ENUMERATION_LIMIT:
        yield from rotation_systems(g, name)
        return
    logger.debug(f"{name}: {rotation_count(g)} rotation systems, sampling {spec.samples_per_graph}")
    yield from sampled_rotation_systems(g, name, spec.samples_per_graph, spec.seed)


def _reachable_genera(g: nx.Graph, spec: CorpusSpec) -> Set[int]:
    """Requested genera not excluded by planarity or the Euler bound."""
    top = (g.number_of_edges() - g.number_of_nodes() + 1) // 2
    wanted = {k for k in spec.genera if k <= top}
    if not nx.check_planarity(g)[0]:
        wanted.discard(0)
    return wanted


def corpus_generate(spec: Optional[CorpusSpec] = None) -> List[EmbeddedMap]:
    """
    Embedded graphs satisfying ``spec``, without repeats up to orientation
    preserving isomorphism. The result only depends on ``spec``.
    """
    spec = spec or CorpusSpec()
    if spec.max_vertices < spec.min_vertices or not spec.genera:
        return []
    seen = set()
    corpus = []
    for name, g in candidate_graphs(spec):
        if spec.require_3conn and (g.number_of_nodes() < 4 or nx.node_connectivity(g) < 3):
            continue
        wanted = _reachable_genera(g, spec)
        kept: Dict[int, int] = {}
        for m in embeddings(g, name, spec):
            if all(kept.get(k, 0) >= spec.maps_per_graph for k in wanted):
                break
            k = genus(m)
            if k not in spec.genera or kept.get(k, 0) >= spec.maps_per_graph:
                continue
            if spec.require_simple and not is_simple(m):
                continue
            key = canonical_form(m)
            if key in seen:
                continue
            seen.add(key)
            corpus.append(m)
            kept[k] = kept.get(k, 0) + 1
        if kept:
            logger.debug(f"{name}: kept {sum(kept.values())} embeddings")
    logger.info(f"Corpus: {len(corpus)} maps (max_vertices={spec.max_vertices}, genera={sorted(spec.genera)})")
    return corpus


def corpus_by_genus(corpus: List[EmbeddedMap]):
    out = {}
    for m in corpus:
        out.setdefault(genus(m), []).append(m)
    return out
