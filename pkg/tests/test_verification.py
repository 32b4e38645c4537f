import networkx as nx
import pytest

from components.errors import CellMismatch, TheoremViolation
from components.maps.map_core import dual, genus, is_k_connected, is_polyhedral, is_simple
from components.operations.apply import apply_lopsp, face_shadow
from components.operations.catalog import get_operation
from components.verification.breaking import break_report, breaks_edge, breaks_vertex, broken_by_any
from components.verification.corpus import corpus_by_genus, corpus_generate, rotation_count, rotation_systems
from components.verification.counterexamples import (
    describe_counterexample,
    dual_counterexample,
    kis_multigraph_demo,
    octagon_vertices,
    search_torus_counterexample,
    torus_q3,
)
from components.verification.reports import FAIL, PASS, SKIP, CheckRecord, CorpusSpec, VerificationReport
from components.verification.suites import run_suite
from components.verification.table1 import COLUMNS, EXPECTED, ROWS, column_of, table1_records, table1_report
from components.verification.theorems import (
    ApplicationCache,
    check_break_contrapositive,
    check_counterexample,
    check_edge_path_equivalence,
    check_genus_conservation,
    check_shadow_lemma,
    check_size_lemma,
    check_theorem_main1_simple_dual,
    check_theorem_main2,
    check_theorem_simple,
    finish_report,
)


class TestCounterexamples:
    def test_torus_host(self, torus):
        assert genus(torus) == 1
        assert is_simple(torus)
        assert is_k_connected(torus, 3)
        assert not is_polyhedral(torus)
        assert not is_simple(dual(torus))
        assert len(octagon_vertices(torus)) == 2

    @pytest.mark.parametrize("name", ['join', 'needle', 'dual'])
    def test_edge_breaking_operations_lose_3_connectivity(self, torus, name):
        facts = describe_counterexample(get_operation(name), torus)
        assert facts['host_3_connected']
        assert not facts['result_3_connected']
        assert len(facts['minimum_cut']) <= 2

    def test_join_cut_is_the_octagon_points(self, torus):
        r = apply_lopsp(get_operation('join'), torus)
        octagons = [f.index for f in torus.faces() if len(f) == 8]
        cut = frozenset(v for f in octagons for v in face_shadow(r, f))
        assert len(cut) == 2
        rep = break_report(r, cut)
        assert rep.separates
        assert not rep.breaks_nothing()

    def test_dual_counterexample(self):
        m = dual_counterexample()
        assert genus(m) == 1
        assert is_simple(m) and is_k_connected(m, 3)
        assert is_simple(dual(m))
        assert not is_k_connected(dual(m), 3)

    def test_kis_on_a_multigraph(self):
        demo = kis_multigraph_demo()
        assert not is_simple(demo.host)
        assert demo.host_is_3_connected
        assert not demo.result_is_3_connected
        assert len(demo.cut) == 2

    @pytest.mark.slow
    def test_search_finds_a_torus_counterexample(self):
        found = search_torus_counterexample()
        assert found is not None
        assert genus(found) == 1
        assert sorted(len(f) for f in found.faces()) == [4, 4, 8, 8]


class TestBreaking:
    def test_empty_set_breaks_nothing(self, cube_map):
        r = apply_lopsp(get_operation('kis'), cube_map)
        assert not breaks_vertex(r, [], 0)
        assert not breaks_edge(r, [], 0)

    def test_covering_a_shadow_breaks_the_vertex(self, cube_map):
        r = apply_lopsp(get_operation('kis'), cube_map)
        (x,) = r.vertex_shadows[0]
        assert breaks_vertex(r, [x], 0)
        assert breaks_edge(r, [x], cube_map.rotation(0)[0] >> 1)

    def test_too_many_vertices(self, cube_map):
        r = apply_lopsp(get_operation('kis'), cube_map)
        with pytest.raises(ValueError):
            breaks_vertex(r, [0, 1, 2], 0)

    def test_polyhedral_results_have_no_separating_pair(self, cube_map):
        r = apply_lopsp(get_operation('truncation'), cube_map)
        assert all(not rep.separates for rep in broken_by_any(r))

    def test_contrapositive_on_kis(self, cube_map):
        report = check_break_contrapositive(apply_lopsp(get_operation('kis'), cube_map))
        assert report.passed


class TestCorpus:
    def test_rotation_count_of_k4(self):
        assert rotation_count(nx.complete_graph(4)) == 16

    def test_k4_has_two_plane_rotation_systems(self):
        maps = list(rotation_systems(nx.complete_graph(4), "k4"))
        assert len(maps) == 16
        plane = [m for m in maps if genus(m) == 0]
        assert len(plane) == 2

    def test_plane_corpus(self):
        spec = CorpusSpec(max_vertices=6, genera=[0])
        corpus = corpus_generate(spec)
        assert corpus
        assert all(genus(m) == 0 and is_simple(m) and is_k_connected(m, 3) for m in corpus)
        again = corpus_generate(spec)
        assert [m.name for m in again] == [m.name for m in corpus]

    def test_toroidal_corpus(self):
        spec = CorpusSpec(max_vertices=6, genera=[1], maps_per_graph=2)
        by_genus = corpus_by_genus(corpus_generate(spec))
        assert set(by_genus) <= {1}

    def test_empty_bounds(self):
        assert corpus_generate(CorpusSpec(max_vertices=3)) == []

    def test_negative_genus_is_rejected(self):
        with pytest.raises(ValueError):
            CorpusSpec(genera=[-1])


class TestTheorems:
    def test_main2(self, small_corpus):
        report = check_theorem_main2(small_corpus)
        assert report.passed
        checks = {r.check for r in report.records}
        assert checks == {'main2-preserve', 'main2-break'}

    def test_main1_simple_dual(self, small_corpus):
        report = check_theorem_main1_simple_dual(small_corpus + [torus_q3()])
        assert report.passed
        assert report.counts()[SKIP] == 1
        assert all(r.op != 'dual' for r in report.records)

    def test_simple(self, small_corpus):
        assert check_theorem_simple(small_corpus).passed

    def test_lemmas(self, small_corpus):
        cache = ApplicationCache()
        assert check_size_lemma(small_corpus, apply=cache).passed
        assert check_shadow_lemma(small_corpus, apply=cache).passed
        assert check_genus_conservation(small_corpus + [torus_q3()], apply=cache).passed
        assert check_edge_path_equivalence().passed
        assert check_counterexample(apply=cache).passed

    def test_edge_path_check_records_the_walks(self):
        report = check_edge_path_equivalence([get_operation('ambo'), get_operation('dual')])
        assert report.passed
        walks = [r for r in report.records if r.check == 'shadow-walk']
        assert walks
        assert all(r.op == 'ambo' for r in walks)

    def test_strict_failure_raises(self):
        report = VerificationReport(suite='probe')
        report.add('always', False, 'cube', 'kis', reason='forced')
        with pytest.raises(TheoremViolation) as info:
            finish_report(report, strict=True)
        assert info.value.record.host == 'cube'
        assert finish_report(report, strict=False) is report

    def test_cache_reuses_results(self, cube_map):
        cache = ApplicationCache()
        o = get_operation('ambo')
        assert cache(o, cube_map) is cache(o, cube_map)


class TestReports:
    def test_counts_and_merge(self):
        a = VerificationReport(suite='a')
        a.add('x', True, 'h2', 'o')
        a.skip('x', 'h1', 'o')
        b = VerificationReport(suite='b')
        b.add('w', False, 'h', 'o')
        merged = a.merge(b)
        assert merged.counts() == {PASS: 1, FAIL: 1, SKIP: 1}
        assert [r.check for r in merged.records] == ['w', 'x', 'x']
        assert merged.suite == 'a'
        assert not merged.passed

    def test_unknown_verdict(self):
        with pytest.raises(ValueError):
            CheckRecord(check='x', verdict='maybe')

    def test_json_round_trip(self):
        report = VerificationReport(suite='s', seed=3)
        report.add('x', True, 'h', 'o', cut=[1, 2])
        again = VerificationReport.parse_raw(report.json())
        assert again == report


class TestTable1:
    def test_expected_grid(self):
        assert [EXPECTED[r][c] for r in ROWS for c in COLUMNS].count(True) == 14

    def test_columns(self):
        assert column_of(get_operation('identity')) == 'Edge-preserving'
        assert column_of(get_operation('needle')) == 'Type 1\''
        assert column_of(get_operation('dual')) == 'Dual'

    def test_strict_mismatch(self, small_corpus):
        # with no Dual operation the Dual column cannot show its expected failures
        with pytest.raises(CellMismatch):
            table1_report(small_corpus[:1], [get_operation('kis')], strict=True)

    @pytest.mark.slow
    def test_table_is_reproduced(self, small_corpus):
        table = table1_report(small_corpus, strict=False)
        assert table.passed, table.grid()
        records = table1_records(table, VerificationReport(suite='table1'))
        assert len(records.records) == len(ROWS) * len(COLUMNS)


@pytest.mark.slow
def test_all_suites_on_a_small_corpus():
    report = run_suite('all', CorpusSpec(max_vertices=6, genera=[0, 1], maps_per_graph=1))
    assert report.passed, [r.key() for r in report.failures()]


@pytest.mark.slow
def test_main2_on_hosts_up_to_12_vertices():
    report = run_suite('main2', CorpusSpec(max_vertices=12, genera=[0, 1]))
    assert report.passed, [r.key() for r in report.failures()]
    assert report.max_vertices == 12
    assert {'icosahedral', 'wheel12'} <= {r.host for r in report.records}


@pytest.mark.slow
def test_genus_is_kept_up_to_12_vertices_and_genus_2():
    corpus = corpus_generate(CorpusSpec(max_vertices=12, genera=[0, 1, 2], maps_per_graph=1))
    assert {genus(m) for m in corpus} == {0, 1, 2}
    assert max(m.vertex_count for m in corpus) == 12
    report = check_genus_conservation(corpus)
    assert report.passed
    assert {r.check for r in report.records} == {'genus', 'genus-bary'}


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite('everything')
