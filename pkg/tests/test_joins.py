from graphcodes import (
    CodeType,
    classify_type,
    complete,
    cycle,
    is_self_dual,
    join,
    join_distance_analysis,
    join_self_dual_check,
    join_type_rule,
    m_copies_complete,
    min_distance_formula,
    path,
)


def test_join_self_dual_k4_k4():
    assert join_self_dual_check(complete(4), complete(4))  # join is K8


def test_join_self_dual_k2_k2():
    assert join_self_dual_check(complete(2), complete(2))  # join is K4


def test_join_self_dual_2k4_k6():
    g1, g2 = m_copies_complete(2, 4), complete(6)
    assert is_self_dual(g1) and is_self_dual(g2)
    assert join_self_dual_check(g1, g2)


def test_join_not_self_dual_inputs():
    # criterion still evaluated; P3 v P3 has even-degree vertices
    assert not join_self_dual_check(path(3), path(3))


# --- type rules ---


def test_type_rule_a_k4_k4():
    pred = join_type_rule(complete(4), complete(4))
    assert pred.applicable and pred.rule == "a"
    assert pred.predicted is CodeType.TYPE_II
    assert classify_type(join(complete(4), complete(4))) is CodeType.TYPE_II


def test_type_rule_c_k4_k6():
    pred = join_type_rule(complete(4), complete(6))
    assert pred.applicable and pred.rule == "c"
    assert pred.predicted is CodeType.TYPE_I
    assert classify_type(join(complete(4), complete(6))) is CodeType.TYPE_I


def test_type_rule_b_k6_k6():
    # all degrees are 5 = 1 (mod 4), so the join is Type II
    pred = join_type_rule(complete(6), complete(6))
    assert pred.applicable and pred.rule == "b"
    assert pred.predicted is CodeType.TYPE_II
    assert classify_type(join(complete(6), complete(6))) is CodeType.TYPE_II


def test_type_rule_not_applicable():
    pred = join_type_rule(path(3), complete(4))
    assert not pred.applicable
    assert pred.predicted is None and pred.rule is None


def test_type_rule_b_necessity_direction(join_pairs):
    # whenever a (2 mod 4, 2 mod 4) join lands on Type II, both parts are Type I
    for (_, g1), (_, g2) in join_pairs:
        if g1.n % 4 == 2 and g2.n % 4 == 2:
            if classify_type(join(g1, g2)) is CodeType.TYPE_II:
                assert classify_type(g1) is CodeType.TYPE_I
                assert classify_type(g2) is CodeType.TYPE_I


# --- distance analysis ---


def test_distance_analysis_w5():
    got = join_distance_analysis(complete(1), cycle(4))
    assert (got.n1, got.n2) == (1, 4)
    assert (got.d1, got.d2, got.d) == (1, 2, 2)
    # C4's minimizers {1,3} and {2,4} are even, so d <= d2 applies
    assert got.applicable_rule == "distance-a-even"
    names = {b.name: b.satisfied for b in got.bounds_checked}
    assert names["d<=d2"] is True
    assert all(names.values())


def test_distance_analysis_w6():
    got = join_distance_analysis(complete(1), cycle(5))
    assert got.d == 4
    assert all(b.satisfied for b in got.bounds_checked)


def test_distance_analysis_complete_bipartite():
    got = join_distance_analysis(m_copies_complete(3, 1), m_copies_complete(4, 1))
    assert got.d == 2  # K_{3,4} has duplicate vertices
    assert all(b.satisfied for b in got.bounds_checked)


def test_distance_analysis_odd_rule():
    # K1 v K1 = K2: both components only have the odd minimizer {1}
    got = join_distance_analysis(complete(1), complete(1))
    assert got.applicable_rule == "distance-a-odd"
    names = [b.name for b in got.bounds_checked]
    assert "d<=min(n2+d1,n1+d2)" in names
    assert all(b.satisfied for b in got.bounds_checked)


def test_distance_analysis_types_recorded():
    got = join_distance_analysis(complete(4), complete(6))
    assert got.types == (CodeType.TYPE_II, CodeType.TYPE_I, CodeType.TYPE_I)


def test_distance_analysis_split_minimizer_bound_fires():
    # K2 v K2 = K4: triple minimizers like {1,2,3} split with an even part,
    # so the d1+d2 <= d check applies (and holds with equality: 2+2 <= 4)
    got = join_distance_analysis(complete(2), complete(2))
    names = {b.name: b.satisfied for b in got.bounds_checked}
    assert names["d1+d2<=d"] is True
    assert (got.d1, got.d2, got.d) == (2, 2, 4)


def test_distance_bounds_hold_exhaustively_on_tiny_pairs():
    from graphcodes import Graph

    def all_graphs(n):
        nbits = n * (n - 1) // 2
        for mask in range(1 << nbits):
            edges, t = [], 0
            for j in range(1, n):
                for i in range(j):
                    if (mask >> t) & 1:
                        edges.append((i, j))
                    t += 1
            yield Graph.from_edges(n, edges)

    for n1, n2 in ((2, 2), (2, 3), (3, 3)):
        for g1 in all_graphs(n1):
            for g2 in all_graphs(n2):
                got = join_distance_analysis(g1, g2)
                assert all(b.satisfied for b in got.bounds_checked)


def test_distance_bounds_hold_on_random_pairs(join_pairs):
    for (_, g1), (_, g2) in join_pairs[:20]:
        got = join_distance_analysis(g1, g2)
        assert all(b.satisfied for b in got.bounds_checked)
        # sanity: distances agree with direct recomputation
        assert got.d == min_distance_formula(join(g1, g2)).d


def test_to_dict_shapes():
    analysis = join_distance_analysis(complete(1), cycle(4))
    d = analysis.to_dict()
    assert set(d) == {
        "n1",
        "n2",
        "d1",
        "d2",
        "d",
        "types",
        "applicable_rule",
        "bounds_checked",
    }
    pred = join_type_rule(complete(4), complete(6)).to_dict()
    assert pred == {"applicable": True, "predicted": "type-I", "rule": "c"}
