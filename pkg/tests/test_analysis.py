import random

import pytest

from dpchroma.analysis import (
    CASE_TO_TERM,
    classify_generalized,
    cover_loss_terms,
    cover_subset_audit,
    edge_deletion_gap,
    fvs1_dp_polynomial,
    list_color_threshold,
    loss_term_differences,
    partition_weight,
    theta_dp_formula,
)
from dpchroma.chromatic import chromatic_polynomial, theta_chromatic
from dpchroma.covers import (
    FullCover,
    PartitionSpec,
    count_colorings,
    identity_cover,
    min_over_covers,
    random_cover,
    standard_tree,
)
from dpchroma.errors import OutOfRange, OutOfScope
from dpchroma.graphs import (
    Graph,
    ThetaSpec,
    build_generalized_theta,
    component_count,
    star_forest_decomposition,
)
from dpchroma.poly import M


def theta(*lengths):
    return build_generalized_theta(ThetaSpec(lengths))


def test_dp_formula_cases_and_values():
    f = theta_dp_formula(2, 2, 2)
    assert f.case == 4 and f.valid_from == 3
    assert f.value_at(3) == 18
    assert f.value_at(2) == 0 and f.value_at(1) == 0
    f = theta_dp_formula(2, 2, 3)
    assert f.case == 2 and f.valid_from == 2
    assert f.value_at(3) == 39 and f.value_at(2) == 0
    f = theta_dp_formula(2, 3, 4)
    assert f.case == 3
    assert f.value_at(3) == 159
    f = theta_dp_formula(2, 3, 3)
    assert f.case == 1 and f.valid_from == 1
    assert f.polynomial == theta_chromatic(ThetaSpec((2, 3, 3)))


def test_dp_formula_guards():
    with pytest.raises(OutOfScope):
        theta_dp_formula(1, 2, 2)
    with pytest.raises(ValueError):
        theta_dp_formula(3, 2, 4)
    with pytest.raises(OutOfRange):
        theta_dp_formula(2, 2, 2).value_at(0)


def test_dp_formula_vanishes_below_validity():
    # cases (ii)-(iv) claim nothing below their threshold, where the true
    # value is 0 because the graph contains a cycle
    for l1, l2, l3 in ((2, 2, 3), (2, 3, 4), (2, 2, 2), (3, 3, 3)):
        f = theta_dp_formula(l1, l2, l3)
        if f.case in (2, 3):
            assert f.value_at(2) == f.polynomial(2) == 0
        g = build_generalized_theta(ThetaSpec((l1, l2, l3)))
        for m in (1, 2):
            assert min_over_covers(g, m).value == 0 == f.value_at(m)


def test_cover_loss_terms_pinned():
    lt = cover_loss_terms(2, 2, 2, 3)
    assert lt.terms == (18, 27, 27, 27, 30)
    assert lt.bound == 18
    assert lt.best_indices == (4,)
    lt = cover_loss_terms(2, 2, 3, 3)
    assert lt.bound == 39 and 1 in lt.best_indices
    lt = cover_loss_terms(2, 3, 3, 3)
    assert lt.bound == 78 and 0 in lt.best_indices
    with pytest.raises(OutOfRange):
        cover_loss_terms(2, 2, 2, 2)


def test_loss_term_differences_pinned():
    rep = loss_term_differences(2, 2, 2, 3)
    assert rep.ok
    d54 = next(d for d in rep.differences if d.pair == (5, 4))
    assert d54.direct == 3 == d54.closed_form
    rep = loss_term_differences(2, 2, 3, 3)
    d23 = next(d for d in rep.differences if d.pair == (2, 3))
    assert d23.direct == 0 == d23.closed_form


def test_loss_term_grid_and_even_sum_monotonicity():
    for l1 in range(2, 5):
        for l2 in range(l1, 5):
            for l3 in range(l2, 5):
                for m in range(3, 7):
                    rep = loss_term_differences(l1, l2, l3, m)
                    assert rep.ok, (l1, l2, l3, m)
                    if (l1 + l2) % 2 == 0:
                        t = rep.terms.terms
                        assert t[1] >= t[0]  # first appendix chain


def test_formula_matches_search_beyond_the_small_grid():
    for l1 in range(2, 6):
        for l2 in range(l1, 6):
            for l3 in range(l2, 6):
                g = theta(l1, l2, l3)
                f = theta_dp_formula(l1, l2, l3)
                assert min_over_covers(g, 3).value == f.value_at(3), (l1, l2, l3)
    for lengths in ((2, 2, 2), (2, 2, 3), (2, 3, 4), (2, 3, 3)):
        g = theta(*lengths)
        f = theta_dp_formula(*lengths)
        assert min_over_covers(g, 5).value == f.value_at(5)


def test_bound_matches_formula_and_argmax_mapping():
    for l1 in range(2, 5):
        for l2 in range(l1, 5):
            for l3 in range(l2, 5):
                f = theta_dp_formula(l1, l2, l3)
                for m in (3, 4):
                    lt = cover_loss_terms(l1, l2, l3, m)
                    assert lt.bound == f.value_at(m)
                    assert CASE_TO_TERM[f.case] in lt.best_indices


def test_edge_deletion_gap_examples():
    g = theta(2, 2, 3)
    holds, margin = edge_deletion_gap(g, "u", "v_2_1", 3)
    assert holds and margin == 6
    g = theta(2, 3, 3)
    holds, margin = edge_deletion_gap(g, "u", "v_2_1", 3)
    assert not holds
    tree = Graph(("a", "b", "c"), ((0, 1), (1, 2)))
    holds, margin = edge_deletion_gap(tree, "a", "b", 2)
    assert not holds and margin == 0
    with pytest.raises(OutOfRange):
        edge_deletion_gap(tree, "a", "b", 1)


def test_classify_examples():
    res = classify_generalized(ThetaSpec((2, 3, 3)))
    assert res.kind == "eventually-equal"
    res = classify_generalized(ThetaSpec((2, 2, 3)))
    assert res.kind == "eventually-less"
    assert res.witness_path == 2
    assert res.empirical_bound == 3
    res = classify_generalized(ThetaSpec((1, 2, 2)))
    assert res.kind == "eventually-equal"
    with pytest.raises(OutOfScope):
        classify_generalized(ThetaSpec((2, 3, 2)))
    with pytest.raises(OutOfScope):
        classify_generalized(ThetaSpec((3, 2, 4)))


def test_classify_equal_instances_match_search():
    g = theta(2, 3, 3)
    poly = theta_chromatic(ThetaSpec((2, 3, 3)))
    for m in (3, 4):
        assert min_over_covers(g, m).value == poly(m)
    spec4 = ThetaSpec((2, 3, 3, 3))
    g4 = build_generalized_theta(spec4)
    assert classify_generalized(spec4).kind == "eventually-equal"
    found = min_over_covers(g4, 3).value
    assert found <= theta_chromatic(spec4)(3)


def test_partition_weight_examples():
    g = theta(2, 2, 2)
    d = star_forest_decomposition(g, "u")
    three = PartitionSpec(
        (frozenset({"u", "v_1_1"}), frozenset({"v_2_1"}), frozenset({"v_3_1"}))
    )
    assert partition_weight(d, three)(3) == 18
    single = PartitionSpec((frozenset({"u", "v_1_1", "v_2_1", "v_3_1"}),))
    assert partition_weight(d, single)(3) == 14
    # The weight is a polynomial that counts only from m >= |V| on; at
    # m = 1 the underlying count is 0 (a forest with an edge has no proper
    # 1-coloring) and the polynomial itself vanishes there whenever every
    # assigned color coincides.
    assert partition_weight(d, single)(1) == 0
    # count interpretation at m = 1: the lone assignment collides on the
    # forest's edges, so no coloring satisfies the condition
    only = [0] * d.forest.n
    assert any(only[a] == only[b] for a, b in d.forest.edges)


def test_partition_weight_against_enumeration():
    from itertools import product

    g = theta(2, 2, 2)
    d = star_forest_decomposition(g, "u")
    g0 = d.forest
    idx = {v: g0.index[v] for v in g0.vertices}
    three = PartitionSpec(
        (frozenset({"u", "v_1_1"}), frozenset({"v_2_1"}), frozenset({"v_3_1"}))
    )
    target = {v: three.shift[v] for v in three.shift}
    m = 3
    direct = 0
    for cols in product(range(m), repeat=g0.n):
        if any(cols[a] == cols[b] for a, b in g0.edges):
            continue
        if cols[idx["u"]] != target["u"]:
            continue
        if any(
            cols[idx[v]] == target[v] for v in ("v_1_1", "v_2_1", "v_3_1")
        ):
            direct += 1
    assert partition_weight(d, three)(3) == direct


def test_fvs1_theta_and_triangle():
    g = theta(2, 2, 2)
    result = fvs1_dp_polynomial(g)
    assert result.dp_polynomial(3) == 18
    assert [sorted(p) for p in result.partition.parts] == [
        ["u", "v_1_1"],
        ["v_2_1"],
        ["v_3_1"],
    ]
    tri = Graph(("a", "b", "c"), ((0, 1), (0, 2), (1, 2)))
    rt = fvs1_dp_polynomial(tri)
    assert rt.dp_polynomial == M * (M - 1) * (M - 2)
    assert rt.partition.parts == (frozenset({"a", "b", "c"}),)


def test_fvs1_trees_get_their_chromatic_polynomial():
    for tree in (
        Graph(("a",), ()),
        Graph(("a", "b"), ((0, 1),)),
        Graph(("a", "b", "c", "d"), ((0, 1), (1, 2), (1, 3))),
    ):
        result = fvs1_dp_polynomial(tree)
        assert result.dp_polynomial == chromatic_polynomial(tree)
        assert len(result.partition.parts) == 1
    edgeless = Graph(("a", "b"), ())
    assert fvs1_dp_polynomial(edgeless).dp_polynomial == M**2


def test_fvs1_leading_terms_match_chromatic():
    for g in (
        theta(2, 2, 2),
        theta(2, 3, 3),
        Graph(("a", "b", "c", "d", "e"), ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4))),
    ):
        result = fvs1_dp_polynomial(g)
        chrom = chromatic_polynomial(g)
        assert result.dp_polynomial.coeffs[-3:] == chrom.coeffs[-3:]


def test_fvs1_rejects_larger_feedback_sets():
    g = Graph(
        ("a", "b", "c", "d", "e", "f"),
        ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)),
    )
    with pytest.raises(OutOfScope):
        fvs1_dp_polynomial(g)


def test_fvs1_tie_partitions_share_their_polynomial():
    g = theta(2, 2, 2)
    d = star_forest_decomposition(g, "u")
    result = fvs1_dp_polynomial(g)
    assert len(result.maximizers) >= 1
    for p in result.maximizers:
        assert partition_weight(d, p) == result.weight


def test_theta_routes_give_identical_polynomials():
    # the parity-case closed form and the partition-maximum machinery are
    # independent routes to the same eventual polynomial, so they must
    # agree coefficient for coefficient
    for l1 in range(2, 5):
        for l2 in range(l1, 5):
            for l3 in range(l2, 5):
                g = theta(l1, l2, l3)
                formula = theta_dp_formula(l1, l2, l3)
                result = fvs1_dp_polynomial(g)
                assert formula.polynomial == result.dp_polynomial, (l1, l2, l3)


def test_shift_cover_count_identity_for_every_partition():
    # for any partition P with at most m parts, the shift cover destroys
    # exactly m * weight(P)(m) of the forest's colorings
    from dpchroma.covers import partitions_of, shift_cover
    from dpchroma.graphs import find_feedback_vertex

    instances = [
        theta(2, 2, 2),
        theta(2, 3, 3),
        Graph(("a", "b", "c", "d", "e"), ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4))),
        Graph(("r", "x", "y", "z"), ((0, 1), (0, 2), (0, 3))),
    ]
    for g in instances:
        fv = find_feedback_vertex(g)
        center = fv if isinstance(fv, str) else "r"
        d = star_forest_decomposition(g, center)
        forest_poly = chromatic_polynomial(d.forest, limit=max(16, g.n))
        for p in partitions_of(d.alphas):
            w = partition_weight(d, p)
            for m in range(len(p.parts), len(p.parts) + 3):
                got = count_colorings(g, shift_cover(g, d, p, m))
                assert got == forest_poly(m) - m * w(m)


def test_subset_audit_identity_and_twisted():
    spec = ThetaSpec((2, 3, 3))
    g = build_generalized_theta(spec)
    rep = cover_subset_audit(spec, identity_cover(g, 3), 3)
    assert rep.ok and rep.first_twisted == 0
    tree = standard_tree(g)
    cover = FullCover(g, 3, tree, {1: (1, 2, 0), 2: (0, 1, 2)})
    rep = cover_subset_audit(spec, cover, 3)
    assert rep.ok and rep.first_twisted == 2
    assert rep.category_counts["exact-cycle"] == 2
    # the five-cycle through paths 1 and 2 loses every agreement:
    five = g.mask_of(
        [("u", "v_1_1"), ("v_1_1", "w"), ("u", "v_2_1"), ("v_2_1", "v_2_2"), ("v_2_2", "w")]
    )
    from dpchroma.covers import subset_agreement_count

    diff = subset_agreement_count(g, cover, five) - 3 ** component_count(g, five)
    assert diff == -3 * 3 ** (7 - 5)


def test_subset_audit_random_covers():
    spec = ThetaSpec((2, 3, 3))
    g = build_generalized_theta(spec)
    rng = random.Random(20)
    for m in (3, 4):
        for _ in range(3):
            rep = cover_subset_audit(spec, random_cover(g, m, rng), m)
            assert rep.ok


def test_subset_audit_other_families():
    rng = random.Random(5)
    for lengths, folds in (((1, 2, 2), (3, 4)), ((2, 3, 3, 3), (3,))):
        spec = ThetaSpec(lengths)
        g = build_generalized_theta(spec)
        for m in folds:
            assert cover_subset_audit(spec, identity_cover(g, m), m).ok
            for _ in range(5):
                assert cover_subset_audit(spec, random_cover(g, m, rng), m).ok


def test_subset_audit_gap_bound_at_large_fold():
    spec = ThetaSpec((2, 3, 3))
    g = build_generalized_theta(spec)
    m = 2 ** (spec.edge_count + 1)
    rng = random.Random(21)
    for _ in range(5):
        cover = random_cover(g, m, rng)
        rep = cover_subset_audit(spec, cover, m, subsets=False)
        assert rep.gap_checked
        assert rep.ok


def test_list_color_threshold():
    threshold, least = list_color_threshold(1)
    assert threshold == 0 and least == 1
    threshold, least = list_color_threshold(8)
    assert abs(threshold - 7.9421486) < 1e-6 and least == 8
    threshold, least = list_color_threshold(0)
    assert threshold < 0 and least == 1
    with pytest.raises(OutOfRange):
        list_color_threshold(-1)
