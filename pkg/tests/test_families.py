import pytest

from walkgauge import (
    FamilySpec,
    Graph,
    classify,
    diagonal_sequence,
    disjoint_union,
    emit_graph6,
    expected_class,
    generate,
    is_regular,
    is_walk_regular_exact,
    parse_graph6,
    search_regular_not_walk_regular,
)

# labeled generator output must never change
CLASS_SPECS = [
    FamilySpec("complete", n=1),
    FamilySpec("complete", n=4),
    FamilySpec("complete", n=6),
    FamilySpec("cycle", n=3),
    FamilySpec("cycle", n=7),
    FamilySpec("path", n=1),
    FamilySpec("path", n=2),
    FamilySpec("path", n=4),
    FamilySpec("path", n=6),
    FamilySpec("star", n=2),
    FamilySpec("star", n=3),
    FamilySpec("star", n=5),
    FamilySpec("complete_bipartite", n=2, k=2),
    FamilySpec("complete_bipartite", n=2, k=3),
    FamilySpec("complete_bipartite", n=3, k=3),
    FamilySpec("circulant", n=7, connections=(1,)),
    FamilySpec("circulant", n=8, connections=(1, 2)),
    FamilySpec("circulant", n=9, connections=(1, 3)),
    FamilySpec("hypercube", dim=1),
    FamilySpec("hypercube", dim=3),
    FamilySpec("hypercube", dim=4),
    FamilySpec("petersen"),
    FamilySpec("twin_k4e"),
    FamilySpec("edgeless", n=1),
    FamilySpec("edgeless", n=4),
]


class TestGenerate:
    def test_complete_4(self):
        g = generate(FamilySpec("complete", n=4))
        assert g.n == 4 and g.edge_count == 6
        assert g.degrees == (3, 3, 3, 3)

    def test_circulant_saturates_to_complete(self):
        circ = generate(FamilySpec("circulant", n=5, connections=(1, 2)))
        assert circ == generate(FamilySpec("complete", n=5))

    def test_twin_k4e_structure(self):
        g = generate(FamilySpec("twin_k4e"))
        assert g.n == 8 and g.degrees == (3,) * 8
        row3 = diagonal_sequence(g, 3).rows[3]
        assert sorted(set(row3)) == [2, 4]

    def test_petersen_structure(self):
        g = generate(FamilySpec("petersen"))
        assert g.n == 10 and g.edge_count == 15
        assert g.degrees == (3,) * 10
        # Kneser adjacency: {0,1} is disjoint from {2,3},{2,4},{3,4}
        assert g.neighbors[0] == (7, 8, 9)

    def test_hypercube(self):
        g = generate(FamilySpec("hypercube", dim=4))
        assert g.n == 16 and g.degrees == (4,) * 16

    def test_deterministic(self):
        for spec in CLASS_SPECS:
            assert generate(spec).edges == generate(spec).edges

    @pytest.mark.parametrize(
        "spec",
        [
            FamilySpec("cycle", n=2),
            FamilySpec("complete", n=0),
            FamilySpec("hypercube", dim=8),
            FamilySpec("hypercube", dim=0),
            FamilySpec("circulant", n=6, connections=(0,)),
            FamilySpec("circulant", n=6, connections=(4,)),
            FamilySpec("circulant", n=6, connections=()),
            FamilySpec("circulant", n=6),
            FamilySpec("complete_bipartite", n=2),
            FamilySpec("star", n=1),
            FamilySpec("edgeless", n=0),
            FamilySpec("nonesuch", n=3),
        ],
    )
    def test_invalid_parameters_rejected(self, spec):
        with pytest.raises(ValueError):
            generate(spec)


class TestExpectedClass:
    @pytest.mark.parametrize("spec", CLASS_SPECS, ids=lambda s: f"{s.name}-{s.n}-{s.k}-{s.dim}")
    def test_classify_matches_expected(self, spec):
        # the central corpus check: exact classifier agrees with the
        # ground-truth family table
        assert classify(generate(spec)).label is expected_class(spec)

    def test_table_entries(self):
        assert expected_class(FamilySpec("cycle", n=7)).value == "WalkRegular"
        assert expected_class(FamilySpec("star", n=5)).value == "NonRegular"
        assert (
            expected_class(FamilySpec("twin_k4e")).value == "RegularNotWalkRegular"
        )
        assert expected_class(FamilySpec("complete_bipartite", n=3, k=3)).value == (
            "WalkRegular"
        )


class TestSearch:
    def test_stream_returns_twin_k4e(self):
        twin = generate(FamilySpec("twin_k4e"))
        out = search_regular_not_walk_regular(stream=[emit_graph6(twin)])
        assert out == [emit_graph6(twin)]

    def test_stream_cubic_6_vertex_graphs_empty(self):
        # the two cubic graphs on six vertices (K33 and the prism) are
        # both walk-regular
        k33 = "EFz_"
        prism = "E{Sw"
        assert search_regular_not_walk_regular(stream=[k33, prism]) == []

    def test_stream_filters_nonregular(self):
        p3 = emit_graph6(generate(FamilySpec("path", n=3)))
        assert search_regular_not_walk_regular(stream=[p3]) == []

    def test_stream_respects_max_n_and_degree(self):
        twin = emit_graph6(generate(FamilySpec("twin_k4e")))
        assert search_regular_not_walk_regular(max_n=7, stream=[twin]) == []
        assert search_regular_not_walk_regular(degree=2, stream=[twin]) == []
        assert search_regular_not_walk_regular(degree=3, stream=[twin]) == [twin]

    def test_enumeration_max_n_4_empty(self):
        assert search_regular_not_walk_regular(max_n=4) == []

    def test_enumeration_max_n_5_and_6_empty(self):
        assert search_regular_not_walk_regular(max_n=6) == []

    def test_enumeration_finds_c3_c4(self, c3c4):
        out = search_regular_not_walk_regular(max_n=7)
        assert emit_graph6(c3c4) in out
        assert out == sorted(out)
        # 2-regular witnesses are exactly the labeled triangle+square
        # unions; their complements are the 4-regular ones
        assert len(out) == 210

    def test_degree_2_only(self, c3c4):
        out = search_regular_not_walk_regular(max_n=7, degree=2)
        assert emit_graph6(c3c4) in out
        assert len(out) == 105
        for s in out:
            g = parse_graph6(s)
            assert g.degrees == (2,) * g.n

    def test_degree_2_census_on_8_vertices(self):
        # degree-2 witnesses are disjoint unequal cycle unions; on eight
        # vertices exactly the triangle+pentagon splits: C(8,3) labeled
        # vertex choices times 12 labeled pentagons = 672, plus the 105
        # seven-vertex triangle+square unions
        out = search_regular_not_walk_regular(max_n=8, degree=2)
        by_n = {7: 0, 8: 0}
        for s in out:
            by_n[parse_graph6(s).n] += 1
        assert by_n == {7: 105, 8: 672}

    def test_results_closed_under_verification(self):
        for s in search_regular_not_walk_regular(max_n=7, degree=4)[:10]:
            g = parse_graph6(s)
            assert is_regular(g)
            assert not is_walk_regular_exact(g).walk_regular

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            search_regular_not_walk_regular()
        with pytest.raises(ValueError):
            search_regular_not_walk_regular(max_n=9)
        with pytest.raises(ValueError):
            search_regular_not_walk_regular(max_n=0)
