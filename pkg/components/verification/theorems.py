"""
Theorem suites. Each check applies catalog operations to corpus hosts and
records one CheckRecord per (host, op) pair; a failed record means the
implementation is wrong, since the statements themselves are proved.
"""
import logging
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence

import networkx as nx

from components.errors import TheoremViolation
from components.maps.barycentric import VERTEX, barycentric_subdivision
from components.maps.map_core import EmbeddedMap, dual, genus, is_k_connected, is_simple, to_networkx
from components.operations.apply import ApplicationResult, apply_lopsp, face_shadow, vertex_shadow
from components.operations.catalog import catalog_operations
from components.operations.classify import OperationTag, classify, find_edge_path, shadow_connecting_walk
from components.operations.lopsp_model import LopspOperation, minimal_cut_paths
from components.operations.patches import double_chamber_patch
from components.verification.breaking import break_reports
from components.verification.counterexamples import counterexample_torus, minimum_cut, octagon_vertices
from components.verification.reports import VerificationReport

logger = logging.getLogger(__name__)

CONTRAPOSITIVE_MAX_VERTICES = 40


class ApplicationCache:
    """Memoizes apply_lopsp per (operation, host) within one run."""

    def __init__(self):
        self._results: Dict[Hashable, ApplicationResult] = {}

    def __call__(self, o: LopspOperation, g: EmbeddedMap) -> ApplicationResult:
        key = (o.name, g.sigma, g.dart_owner)
        if key not in self._results:
            self._results[key] = apply_lopsp(o, g)
        return self._results[key]


def _ops(ops: Optional[Sequence[LopspOperation]]) -> List[LopspOperation]:
    return list(ops) if ops is not None else catalog_operations()


def finish_report(report: VerificationReport, strict: bool) -> VerificationReport:
    failures = report.failures()
    for record in failures:
        logger.error(f"{record.check} failed for {record.op} on {record.host}: {record.witness}")
    logger.info(f"Suite {report.suite}: {report.counts()}")
    if strict and failures:
        first = failures[0]
        raise TheoremViolation(f"{first.check} failed for {first.op} on {first.host}", record=first)
    return report


def _connectivity_witness(m: EmbeddedMap) -> dict:
    return {'counts': list(m.counts()), 'cut': minimum_cut(m)}


def check_theorem_main2(corpus: Iterable[EmbeddedMap], ops: Optional[Sequence[LopspOperation]] = None,
                        report: Optional[VerificationReport] = None, strict: bool = True,
                        apply: Optional[Callable] = None) -> VerificationReport:
    """
    Edge-preserving operations keep every corpus host 3-connected, and every
    edge-breaking operation loses 3-connectivity on the torus counterexample.
    """
    report = report or VerificationReport(suite='main2')
    apply = apply or ApplicationCache()
    ops = _ops(ops)
    corpus = list(corpus)
    torus = counterexample_torus()
    for o in ops:
        cls = classify(o)
        if cls.is_edge_preserving:
            for g in corpus:
                result = apply(o, g).result
                ok = is_k_connected(result, 3)
                report.add('main2-preserve', ok, g.name, o.name,
                           **({} if ok else _connectivity_witness(result)))
        else:
            result = apply(o, torus).result
            ok = not is_k_connected(result, 3)
            report.add('main2-break', ok, torus.name, o.name, cut=minimum_cut(result))
    return finish_report(report, strict)


def check_theorem_main1_simple_dual(corpus: Iterable[EmbeddedMap],
                                    ops: Optional[Sequence[LopspOperation]] = None,
                                    report: Optional[VerificationReport] = None, strict: bool = True,
                                    apply: Optional[Callable] = None) -> VerificationReport:
    """Hosts with a simple dual stay 3-connected under every operation except Dual."""
    report = report or VerificationReport(suite='main1')
    apply = apply or ApplicationCache()
    ops = [o for o in _ops(ops) if classify(o).tag != OperationTag.DUAL]
    for g in corpus:
        if not is_simple(dual(g)):
            report.skip('main1-simple-dual', g.name, None, reason='dual is not simple')
            continue
        for o in ops:
            result = apply(o, g).result
            ok = is_k_connected(result, 3)
            report.add('main1-simple-dual', ok, g.name, o.name,
                       **({} if ok else _connectivity_witness(result)))
    return finish_report(report, strict)


def check_theorem_simple(corpus: Iterable[EmbeddedMap], ops: Optional[Sequence[LopspOperation]] = None,
                         report: Optional[VerificationReport] = None, strict: bool = True,
                         apply: Optional[Callable] = None) -> VerificationReport:
    """
    Type-1 edge-breaking operations other than Dual give 3-connected results
    whenever the result is simple. Operations that are not of type 1 give
    simple results on hosts with a simple barycentric subdivision. Type-2
    operations are shown to fail on the torus counterexample.
    """
    report = report or VerificationReport(suite='simple')
    apply = apply or ApplicationCache()
    ops = _ops(ops)
    corpus = list(corpus)
    torus = counterexample_torus()
    for o in ops:
        cls = classify(o)
        if cls.tag == OperationTag.DUAL:
            continue
        if cls.tag == OperationTag.EDGE_BREAKING_1:
            for g in corpus:
                result = apply(o, g).result
                if not is_simple(result):
                    report.skip('simple-type1', g.name, o.name, reason='result is not simple')
                    continue
                ok = is_k_connected(result, 3)
                report.add('simple-type1', ok, g.name, o.name, **({} if ok else _connectivity_witness(result)))
            continue
        for g in corpus:
            if not is_simple(barycentric_subdivision(g).base):
                report.skip('simple-result', g.name, o.name, reason='barycentric subdivision is not simple')
                continue
            report.add('simple-result', is_simple(apply(o, g).result), g.name, o.name)
        if cls.tag == OperationTag.EDGE_BREAKING_2:
            result = apply(o, torus).result
            ok = is_simple(result) and not is_k_connected(result, 3)
            report.add('simple-type2-witness', ok, torus.name, o.name, cut=minimum_cut(result))
    return finish_report(report, strict)


def check_size_lemma(corpus: Iterable[EmbeddedMap], ops: Optional[Sequence[LopspOperation]] = None,
                     report: Optional[VerificationReport] = None, strict: bool = True,
                     apply: Optional[Callable] = None) -> VerificationReport:
    """|V(O(G))| >= |V(G)| for hosts with at least four vertices that are not trees."""
    report = report or VerificationReport(suite='size')
    apply = apply or ApplicationCache()
    ops = [o for o in _ops(ops) if classify(o).tag != OperationTag.DUAL]
    for g in corpus:
        if g.vertex_count < 4 or g.edge_count < g.vertex_count:
            continue
        for o in ops:
            n = apply(o, g).result.vertex_count
            report.add('size', n >= g.vertex_count, g.name, o.name, result_vertices=n,
                       host_vertices=g.vertex_count)
    return finish_report(report, strict)


def check_edge_path_equivalence(ops: Optional[Sequence[LopspOperation]] = None,
                                report: Optional[VerificationReport] = None,
                                strict: bool = True) -> VerificationReport:
    """
    An operation is edge-preserving iff its diamond has an edge-path avoiding
    both 2-points. Apart from Dual, whose walk is the lone 1-point v1, both
    shadow-connecting walks must also reach the two vertex-shadows.
    """
    report = report or VerificationReport(suite='edge-path')
    for o in _ops(ops):
        cls = classify(o)
        preserving = cls.is_edge_preserving
        for p in minimal_cut_paths(o):
            if cls.tag != OperationTag.DUAL:
                patch = double_chamber_patch(o, p)
                walks = [shadow_connecting_walk(patch, side) for side in ('left', 'right')]
                report.add('shadow-walk', all(w.reaches_both_shadows for w in walks), None, o.name,
                           cut_path=list(p.vertices), walks=[list(w.vertices) for w in walks])
            path = find_edge_path(o, p, avoid_2points=True)
            report.add('edge-path', preserving == (path is not None), None, o.name,
                       cut_path=list(p.vertices), edge_preserving=preserving,
                       edge_path=list(path.vertices) if path else None)
    return finish_report(report, strict)


def _shadow_ok(r: ApplicationResult, shadow, special_type: int, faces) -> bool:
    if special_type == VERTEX:
        return len(shadow) == 1
    return shadow in faces


def check_shadow_lemma(corpus: Iterable[EmbeddedMap], ops: Optional[Sequence[LopspOperation]] = None,
                       report: Optional[VerificationReport] = None, strict: bool = True,
                       apply: Optional[Callable] = None) -> VerificationReport:
    """
    Vertex shadows are singletons when v0 has type 0 and face vertex sets
    otherwise; face shadows behave the same way with v2.
    """
    report = report or VerificationReport(suite='shadow')
    apply = apply or ApplicationCache()
    for o in _ops(ops):
        for g in corpus:
            r = apply(o, g)
            faces = {frozenset(r.result.face_vertices(f.index)) for f in r.result.faces()}
            bad_vertices = [v for v in range(g.vertex_count)
                            if not _shadow_ok(r, vertex_shadow(r, v), o.t(o.v0), faces)]
            bad_faces = [f for f in range(g.face_count)
                         if not _shadow_ok(r, face_shadow(r, f), o.t(o.v2), faces)]
            report.add('shadow', not bad_vertices and not bad_faces, g.name, o.name,
                       vertices=bad_vertices, faces=bad_faces)
    return finish_report(report, strict)


def check_break_contrapositive(r: ApplicationResult, report: Optional[VerificationReport] = None,
                               strict: bool = True) -> VerificationReport:
    """Removing two vertices that break no host vertex and no host edge leaves O(G) connected."""
    report = report or VerificationReport(suite='break')
    bad = [sorted(rep.cut) for rep in break_reports(r, 2) if rep.breaks_nothing() and rep.separates]
    report.add('break-contrapositive', not bad, r.host.name, r.op.name, cuts=bad[:5])
    return finish_report(report, strict)


def check_genus_conservation(corpus: Iterable[EmbeddedMap], ops: Optional[Sequence[LopspOperation]] = None,
                             report: Optional[VerificationReport] = None, strict: bool = True,
                             apply: Optional[Callable] = None) -> VerificationReport:
    report = report or VerificationReport(suite='genus')
    apply = apply or ApplicationCache()
    for g in corpus:
        host_genus = genus(g)
        b_genus = genus(barycentric_subdivision(g).base)
        report.add('genus-bary', b_genus == host_genus, g.name, None, host=host_genus, result=b_genus)
        for o in _ops(ops):
            g_result = genus(apply(o, g).result)
            report.add('genus', g_result == host_genus, g.name, o.name, host=host_genus, result=g_result)
    return finish_report(report, strict)


def check_counterexample(report: Optional[VerificationReport] = None, strict: bool = True,
                         apply: Optional[Callable] = None) -> VerificationReport:
    """The torus host is simple, 3-connected and of genus 1; Join's 2-cut is its pair of octagon points."""
    report = report or VerificationReport(suite='counterexample')
    apply = apply or ApplicationCache()
    torus = counterexample_torus()
    report.add('counterexample-host', is_simple(torus) and is_k_connected(torus, 3) and genus(torus) == 1,
               torus.name, None)
    for o in catalog_operations():
        if classify(o).tag != OperationTag.EDGE_BREAKING_2 or o.t(o.v0) != VERTEX:
            continue
        r = apply(o, torus)
        octagons = [f.index for f in torus.faces() if len(f) == 8]
        cut = frozenset(v for f in octagons for v in face_shadow(r, f))
        report.add('counterexample-cut', len(cut) == 2 and len(octagon_vertices(torus)) == 2
                   and _separates(r.result, cut), torus.name, o.name, cut=sorted(cut))
    return finish_report(report, strict)


def _separates(m: EmbeddedMap, cut) -> bool:
    g = to_networkx(m)
    g.remove_nodes_from(cut)
    return not nx.is_connected(g)


def run_lemma_suite(corpus: Sequence[EmbeddedMap], ops: Optional[Sequence[LopspOperation]] = None,
                    report: Optional[VerificationReport] = None, strict: bool = True,
                    apply: Optional[Callable] = None) -> VerificationReport:
    report = report or VerificationReport(suite='lemmas')
    apply = apply or ApplicationCache()
    check_size_lemma(corpus, ops, report, False, apply)
    check_edge_path_equivalence(ops, report, False)
    check_shadow_lemma(corpus, ops, report, False, apply)
    check_genus_conservation(corpus, ops, report, False, apply)
    check_counterexample(report, False, apply)
    for o in _ops(ops):
        for g in corpus:
            r = apply(o, g)
            if r.result.vertex_count <= CONTRAPOSITIVE_MAX_VERTICES and is_k_connected(g, 3):
                check_break_contrapositive(r, report, False)
    return finish_report(report, strict)

