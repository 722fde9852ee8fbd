import networkx as nx
import pytest

from src.ribbon.models.link_diagram import Handedness
from src.ribbon.models.tait import Color, TaitEdge, TaitGraph
from src.ribbon.services.checkerboard import corner_faces, is_alternating, shading_graph
from src.ribbon.services.diagram_core import add_reidemeister1, mirror_diagram
from src.ribbon.services.graph_analysis import (
    bipartite_shadings,
    bipartition,
    connected_sum,
    nugatory_edges,
    reduce_nugatory,
    reduce_nugatory_with_trace,
    select_bipartite_shading,
    verify_closed_walk,
)
from src.ribbon.services.invariants import kauffman_bracket, normalized_invariant
from src.ribbon.utils.errors import NonAlternatingError, SignIncompatibleError, UnknownEdgeError

from helpers import TREFOIL, disjoint_union, flip_crossing


def graph_of(k, pairs):
    return TaitGraph(
        which_shading=0,
        faces=tuple(range(k)),
        edges=tuple(TaitEdge(crossing=i, u=u, v=v, sign=1) for i, (u, v) in enumerate(pairs)),
    )


def test_hopf_bipartition(hopf):
    split = bipartition(shading_graph(hopf, 0))
    assert split.valid
    assert split.red() == [0] and split.blue() == [1]


def test_trefoil_triangle_certificate(trefoil):
    graph = shading_graph(trefoil, 0)
    split = bipartition(graph)
    assert not split.valid
    assert split.certificate.length == 3
    assert verify_closed_walk(graph, split.certificate)


def test_loop_certificate():
    graph = graph_of(1, [(0, 0)])
    split = bipartition(graph)
    assert not split.valid
    assert split.certificate.length == 1
    assert verify_closed_walk(graph, split.certificate)


def test_odd_cycle_certificate_in_larger_graph():
    # square with a pendant pentagon sharing vertex 3
    pairs = [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]
    graph = graph_of(8, pairs)
    split = bipartition(graph)
    assert not split.valid
    assert split.certificate.length % 2 == 1
    assert verify_closed_walk(graph, split.certificate)


def test_bipartition_matches_networkx(hopf, trefoil, pretzel, figure8):
    for diagram in (hopf, trefoil, pretzel, figure8):
        for which in (0, 1):
            graph = shading_graph(diagram, which)
            assert bipartition(graph).valid == nx.is_bipartite(graph.to_networkx())


def test_red_degree_sum_equals_crossings(pretzel):
    selection = select_bipartite_shading(pretzel)
    graph, split = selection.graph, selection.bipartition
    assert split.valid
    assert sum(graph.degree(v) for v in split.red()) == pretzel.n
    for edge in graph.edges:
        assert split.colors[edge.u] != split.colors[edge.v]
    assert split.colors[0] is Color.RED


def test_parallel_edges_are_not_bridges(hopf):
    assert nugatory_edges(shading_graph(hopf, 0)) == frozenset()


def test_bridges_and_loops():
    # triangle 0-1-2, bridge 2-3, doubled edge 3-4, loop at 4
    graph = graph_of(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 4), (4, 4)])
    assert nugatory_edges(graph) == frozenset({3, 6})


def test_kink_loop_shading(kink):
    graphs = [shading_graph(kink, which) for which in (0, 1)]
    for graph in graphs:
        assert nugatory_edges(graph) == frozenset({0})


def test_hopf_plus_kink_reduces_to_hopf(hopf):
    kinked = add_reidemeister1(hopf, 1, Handedness.POSITIVE)
    trace = reduce_nugatory_with_trace(kinked)
    assert trace.steps == 1
    assert trace.diagram.n == 2
    assert trace.diagram.component_count == 2
    assert normalized_invariant(trace.diagram) == normalized_invariant(hopf)


def test_hopf_plus_two_kinks_takes_two_steps(hopf):
    kinked = add_reidemeister1(hopf, 2, Handedness.NEGATIVE)
    kinked = add_reidemeister1(kinked, 4, Handedness.POSITIVE)
    trace = reduce_nugatory_with_trace(kinked)
    assert trace.steps == 2
    assert trace.diagram.n == 2


def test_reduced_trefoil_is_fixed_point(trefoil):
    trace = reduce_nugatory_with_trace(trefoil)
    assert trace.steps == 0
    assert trace.diagram.to_pd() == trefoil.to_pd()


def test_lone_kink_becomes_free_loop(kink):
    reduced = reduce_nugatory(kink)
    assert reduced.n == 0
    assert reduced.free_loops == 1
    assert reduced.component_count == 1


def test_nugatory_crossing_with_two_nonempty_sides(hopf):
    # a kink whose loop is then summed with a second Hopf link
    kinked = add_reidemeister1(hopf, 1, Handedness.POSITIVE)
    joined = connected_sum(kinked, 5, hopf, 1)
    assert joined.n == 5
    assert len(nugatory_edges(shading_graph(joined, 0))) == 1
    trace = reduce_nugatory_with_trace(joined)
    assert trace.steps == 1
    assert trace.diagram.n == 4
    assert trace.diagram.component_count == 3
    assert is_alternating(trace.diagram)
    assert normalized_invariant(trace.diagram) == normalized_invariant(joined)
    assert normalized_invariant(trace.diagram) == normalized_invariant(hopf) * normalized_invariant(hopf)


def test_reduce_refuses_non_alternating():
    with pytest.raises(NonAlternatingError):
        reduce_nugatory(flip_crossing(TREFOIL, 0))


def test_select_shading_trefoil(trefoil):
    selection = select_bipartite_shading(trefoil)
    assert selection.found
    assert selection.graph.vertex_count == 2
    assert len(selection.graph.edges) == 3
    assert selection.which_shading == 1


def test_select_shading_hopf_prefers_zero(hopf):
    selection = select_bipartite_shading(hopf)
    assert selection.found and selection.which_shading == 0


def test_select_shading_pretzel(pretzel):
    selection = select_bipartite_shading(pretzel)
    assert selection.found
    other = shading_graph(pretzel, 1 - selection.which_shading)
    assert not bipartition(other).valid


def test_select_shading_figure8_rejects_both(figure8):
    selection = select_bipartite_shading(figure8)
    assert not selection.found
    assert len(selection.rejections) == 2
    for which, certificate in enumerate(selection.rejections):
        assert verify_closed_walk(shading_graph(figure8, which), certificate)


def test_split_pieces_choose_their_own_shading(trefoil):
    split = disjoint_union(trefoil, mirror_diagram(trefoil))
    assert bipartite_shadings(split) == (False, False)
    selection = select_bipartite_shading(split)
    assert selection.found
    assert selection.which_shading == (1, 0)
    assert selection.to_dict()["which_shading"] == [1, 0]
    colors = selection.bipartition.colors
    for edge in selection.graph.edges:
        assert colors[edge.u] != colors[edge.v]
    assert nx.is_bipartite(selection.graph.to_networkx())


def test_split_rejection_names_the_failing_piece(hopf, figure8):
    split = disjoint_union(hopf, figure8)
    selection = select_bipartite_shading(split)
    assert not selection.found
    assert len(selection.rejections) == 2
    for which, certificate in enumerate(selection.rejections):
        assert min(certificate.crossings) >= hopf.n
        assert verify_closed_walk(shading_graph(split, which), certificate)


def test_select_shading_refuses_non_alternating():
    with pytest.raises(NonAlternatingError):
        select_bipartite_shading(flip_crossing(TREFOIL, 1))


def test_granny(trefoil):
    granny = connected_sum(trefoil, 1, trefoil, 1)
    assert granny.n == 6
    assert granny.component_count == 1
    assert is_alternating(granny)
    assert select_bipartite_shading(granny).found


def test_hopf_plus_kink_by_connected_sum(hopf, kink):
    total = connected_sum(hopf, 1, kink, 2)
    assert total.n == 3
    assert len(nugatory_edges(shading_graph(total, 0))) == 1
    reduced = reduce_nugatory(total)
    assert reduced.n == 2
    assert normalized_invariant(reduced) == normalized_invariant(hopf)


def test_connected_sum_counts_and_bracket(hopf, trefoil, pretzel):
    for d1, d2 in ((hopf, hopf), (trefoil, trefoil), (hopf, pretzel)):
        total = connected_sum(d1, 1, d2, 2)
        assert total.n == d1.n + d2.n
        assert total.component_count == d1.component_count + d2.component_count - 1
        assert kauffman_bracket(total) == kauffman_bracket(d1) * kauffman_bracket(d2)
        assert any(bipartite_shadings(total))


def test_connected_sum_sign_incompatible(trefoil):
    with pytest.raises(SignIncompatibleError):
        connected_sum(trefoil, 1, mirror_diagram(trefoil), 1)


def test_connected_sum_unknown_edge(hopf):
    with pytest.raises(UnknownEdgeError):
        connected_sum(hopf, 7, hopf, 1)


def shaded_vertex_at(diagram, graph, label):
    ci, slot = diagram.occurrences(label)[0]
    face_of = corner_faces(diagram)
    for k in (slot, (slot - 1) % 4):
        if face_of[(ci, k)] in graph.faces:
            return graph.faces.index(face_of[(ci, k)])
    raise AssertionError(f"edge {label} has no shaded side")


@pytest.mark.parametrize("which", [0, 1])
def test_connected_sum_identifies_tait_vertices(hopf, trefoil, pretzel, which):
    for d1, e1, d2, e2 in ((hopf, 1, hopf, 2), (trefoil, 1, trefoil, 2), (hopf, 1, pretzel, 2)):
        g1, g2 = shading_graph(d1, which), shading_graph(d2, which)
        total = shading_graph(connected_sum(d1, e1, d2, e2), which)
        assert total.vertex_count == g1.vertex_count + g2.vertex_count - 1
        assert len(total.edges) == len(g1.edges) + len(g2.edges)
        assert sorted(e.sign for e in total.edges) == sorted(e.sign for e in g1.edges + g2.edges)

        a, b = shaded_vertex_at(d1, g1, e1), shaded_vertex_at(d2, g2, e2)
        moved = {x: a if x == b else g1.vertex_count + x for x in range(g2.vertex_count)}
        expected = nx.MultiGraph()
        expected.add_nodes_from(range(g1.vertex_count))
        expected.add_nodes_from(moved.values())
        expected.add_edges_from((e.u, e.v) for e in g1.edges)
        expected.add_edges_from((moved[e.u], moved[e.v]) for e in g2.edges)
        assert nx.is_isomorphic(total.to_networkx(), expected)
