import pytest

from graphcodes import (
    ArgumentError,
    CodeType,
    SrgParams,
    analyze,
    classify_type,
    code_from_graph,
    complete,
    cycle,
    extremal_bound,
    is_self_dual,
    is_self_orthogonal,
    m_copies_complete,
    min_distance_formula,
    path,
    petersen,
    self_dual_conditions,
    srg_self_dual,
    star,
    weight_enumerator,
)


# --- self-duality ---


def test_self_dual_complete_graphs():
    assert is_self_dual(complete(4))
    assert not is_self_dual(complete(5))


def test_self_dual_2k4():
    assert is_self_dual(m_copies_complete(2, 4))


def test_self_dual_petersen_fails():
    assert not is_self_dual(petersen())


def test_conditions_k6():
    assert self_dual_conditions(complete(6)) == (True, True)


def test_conditions_c5():
    # degrees are even; distance-2 pairs share exactly one neighbor
    assert self_dual_conditions(cycle(5)) == (False, False)


def test_conditions_star():
    # leaves pairwise share only the hub
    assert self_dual_conditions(star(3)) == (True, False)


def test_criteria_agree_on_corpus(full_corpus):
    for _, g in full_corpus:
        odd_deg, even_common = self_dual_conditions(g)
        assert is_self_dual(g) == (odd_deg and even_common)


def test_self_dual_needs_even_order(full_corpus):
    for _, g in full_corpus:
        if is_self_dual(g):
            assert g.n % 2 == 0


# --- self-orthogonality ---


def test_self_orthogonal_k4():
    assert is_self_orthogonal(code_from_graph(complete(4)))


def test_self_orthogonal_p2():
    # both rows of [I|A] have even weight and are orthogonal
    assert is_self_orthogonal(code_from_graph(path(2)))


def test_self_orthogonal_p3():
    # middle row has odd weight
    assert not is_self_orthogonal(code_from_graph(path(3)))


def test_self_orthogonal_equals_self_dual_for_graph_codes(full_corpus):
    # [2n, n] makes the two coincide
    for _, g in full_corpus[:120]:
        assert is_self_orthogonal(code_from_graph(g)) == is_self_dual(g)


# --- type ---


def test_type_complete_graphs():
    assert classify_type(complete(4)) is CodeType.TYPE_II
    assert classify_type(complete(8)) is CodeType.TYPE_II
    assert classify_type(complete(6)) is CodeType.TYPE_I
    assert classify_type(path(3)) is CodeType.NONE


def test_type_verified_against_enumerator():
    for g in (complete(4), complete(6), complete(8), m_copies_complete(2, 4)):
        assert classify_type(g, verify=True) is classify_type(g)


def test_type_weight_divisibility(self_dual_graphs):
    for _, g in self_dual_graphs:
        if g.n > 10:
            continue
        counts = weight_enumerator(code_from_graph(g))
        t = classify_type(g)
        if t is CodeType.TYPE_II:
            assert all(counts[w] == 0 for w in range(len(counts)) if w % 4)
        else:
            assert t is CodeType.TYPE_I
            assert all(counts[w] == 0 for w in range(len(counts)) if w % 2)
            assert any(counts[w] for w in range(len(counts)) if w % 4 == 2)


def test_parity_corollary(self_dual_graphs):
    # order 2 (mod 4) forces a vertex of degree 1 (mod 4)
    for _, g in self_dual_graphs:
        if g.n % 4 == 2:
            assert any(g.degree(v) % 4 == 1 for v in range(g.n))


# --- extremal bounds ---


def test_extremal_bound_values():
    assert extremal_bound(16, CodeType.TYPE_II) == 4
    assert extremal_bound(24, CodeType.TYPE_II) == 8
    assert extremal_bound(22, CodeType.TYPE_I) == 6
    assert extremal_bound(12, CodeType.TYPE_I) == 4
    assert extremal_bound(46, CodeType.TYPE_I) == 10  # 46 = 22 (mod 24)
    assert extremal_bound(48, CodeType.TYPE_II) == 12


def test_extremal_bound_rejects_bad_lengths():
    with pytest.raises(ArgumentError):
        extremal_bound(12, CodeType.TYPE_II)  # not a multiple of 8
    with pytest.raises(ArgumentError):
        extremal_bound(7, CodeType.TYPE_I)  # odd
    with pytest.raises(ArgumentError):
        extremal_bound(8, CodeType.NONE)


def test_self_dual_distances_within_bound(self_dual_graphs):
    for _, g in self_dual_graphs:
        d = min_distance_formula(g).d
        assert d <= extremal_bound(2 * g.n, classify_type(g))


# --- srg parity test ---


def test_srg_self_dual_parity():
    assert srg_self_dual(SrgParams(8, 3, 2, 0))
    assert not srg_self_dual(SrgParams(10, 3, 0, 1))  # mu odd
    assert not srg_self_dual(SrgParams(5, 2, 0, 1))  # k even


# --- analyze ---


def test_analyze_2k4():
    r = analyze(m_copies_complete(2, 4))
    assert (r.length, r.dim, r.d) == (16, 8, 4)
    assert r.code_type is CodeType.TYPE_II and r.extremal


def test_analyze_k6():
    r = analyze(complete(6))
    assert (r.length, r.dim, r.d) == (12, 6, 4)
    assert r.code_type is CodeType.TYPE_I and r.extremal


def test_analyze_k8():
    r = analyze(complete(8))
    assert (r.length, r.dim, r.d) == (16, 8, 4)
    assert r.code_type is CodeType.TYPE_II and r.extremal


def test_analyze_k1():
    r = analyze(complete(1))
    assert (r.length, r.dim, r.d) == (2, 1, 1)
    assert not r.self_dual and r.code_type is CodeType.NONE and not r.extremal


def test_analyze_report_consistency(full_corpus):
    for _, g in full_corpus[:80]:
        r = analyze(g)
        assert r.length == 2 * r.n_vertices and r.dim == r.n_vertices
        if r.code_type is not CodeType.NONE:
            assert r.self_dual
        if r.extremal:
            assert r.self_dual
            assert r.d == extremal_bound(r.length, r.code_type)
        assert r.degree_profile == tuple(sorted(g.degrees()))


def test_complete_graph_distance_law():
    for n in range(4, 11, 2):
        r = analyze(complete(n))
        assert r.self_dual and r.d == 4


def test_report_to_dict_fields():
    r = analyze(complete(4))
    d = r.to_dict()
    assert set(d) == {
        "n_vertices",
        "length",
        "dim",
        "d",
        "self_dual",
        "self_orthogonal",
        "code_type",
        "extremal",
        "witness",
        "degree_profile",
    }
    assert d["code_type"] == "type-II"
    assert d["witness"] == [1]
