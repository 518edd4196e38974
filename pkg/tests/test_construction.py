import pytest

from scminor import (
    ConsistencyError,
    Graph,
    InvalidShiftError,
    MinorModel,
    MinorQuery,
    Permutation,
    build_plan,
    choose_generator,
    complete_graph,
    cycle_decomposition,
    cycle_graph,
    cycle_matching,
    find_antimorphism,
    guaranteed_minor,
    has_minor,
    odd_shift_matching,
    pair_orbits,
    path_graph,
    permutation_with_cycle_type,
    realize_minor,
    sc_from_assignment,
    sharp_4n,
    side_partition,
    verify_minor_model,
)
from scminor.generators import OrbitAssignment
from conftest import random_sc_batch, sc_classes


def _rho_and_cycles(g):
    rho = find_antimorphism(g)
    return rho, cycle_decomposition(rho).cycles


def test_choose_generator_fixed_cases():
    g = path_graph(4)
    rho, cycles = _rho_and_cycles(g)
    assert choose_generator(g, rho, cycles[0]) == 0
    c5 = cycle_graph(5)
    rho5, cycles5 = _rho_and_cycles(c5)
    assert choose_generator(c5, rho5, cycles5[0]) == 1


def test_choose_generator_property():
    for n in (4, 5, 8, 9):
        for g in sc_classes(n):
            rho, cycles = _rho_and_cycles(g)
            for cyc in cycles:
                a = choose_generator(g, rho, cyc)
                assert a in cyc
                assert g.has_edge(a, rho(a))
                for smaller in cyc:
                    if smaller < a:
                        assert not g.has_edge(smaller, rho(smaller))


def test_choose_generator_rejects_open_cycle():
    g = path_graph(4)
    rho, _ = _rho_and_cycles(g)
    with pytest.raises(ValueError):
        choose_generator(g, rho, (0, 1, 2, 3))


def test_cycle_matching_fixed_cases():
    g = path_graph(4)
    rho, cycles = _rho_and_cycles(g)
    assert cycle_matching(g, rho, cycles[0]) == ((0, 1), (3, 2))

    c5 = cycle_graph(5)
    rho5, cycles5 = _rho_and_cycles(c5)
    assert cycle_matching(c5, rho5, cycles5[0]) == ((1, 2), (4, 3))


def test_cycle_matching_properties():
    for n in (4, 5, 8, 9):
        for g in sc_classes(n):
            rho, cycles = _rho_and_cycles(g)
            for cyc in cycles:
                matching = cycle_matching(g, rho, cyc)
                assert len(matching) == len(cyc) // 2
                covered = [v for pair in matching for v in pair]
                assert sorted(covered) == sorted(cyc)
                for u, v in matching:
                    assert g.has_edge(u, v)


def test_cycle_matching_edges_cross_the_degree_split():
    for n in (4, 8):
        for g in sc_classes(n):
            rho, cycles = _rho_and_cycles(g)
            part = side_partition(g, rho)
            for cyc in cycles:
                for u, v in cycle_matching(g, rho, cyc):
                    assert (u in part.high) != (v in part.high)


def test_cycle_matching_detects_broken_antimorphism():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    fake = Permutation([1, 2, 3, 0])
    with pytest.raises(ConsistencyError):
        cycle_matching(star, fake, (0, 1, 2, 3))


def test_odd_shift_matching_shift_one_matches_cycle_matching():
    g = path_graph(4)
    rho, cycles = _rho_and_cycles(g)
    assert odd_shift_matching(g, rho, 1) == cycle_matching(g, rho, cycles[0])


def test_odd_shift_matching_validation():
    g = path_graph(4)
    rho, _ = _rho_and_cycles(g)
    with pytest.raises(ValueError):
        odd_shift_matching(g, rho, 2)
    with pytest.raises(InvalidShiftError) as err:
        odd_shift_matching(g, rho, 3)
    assert err.value.valid_shifts == (1,)

    c5 = cycle_graph(5)
    with pytest.raises(ValueError):
        odd_shift_matching(c5, find_antimorphism(c5), 1)  # has a fixed point


def test_odd_shift_count_on_single_cycle_eight_vertex_graphs():
    # on a single-8-cycle antimorphism exactly 2 of the 4 odd shifts work,
    # and each valid shift contracts to a verified complete minor of order 4
    sigma = permutation_with_cycle_type(8, (8,))
    orbits = pair_orbits(sigma)
    k4 = complete_graph(4)
    seen = 0
    for bits in range(1 << len(orbits)):
        choices = tuple(bool((bits >> i) & 1) for i in range(len(orbits)))
        g = sc_from_assignment(OrbitAssignment(sigma, orbits, choices))
        valid = []
        for t in (1, 3, 5, 7):
            try:
                matching = odd_shift_matching(g, sigma, t)
            except InvalidShiftError:
                continue
            valid.append(t)
            model = MinorModel(tuple(frozenset(p) for p in matching))
            assert verify_minor_model(g, model, k4).ok
        assert len(valid) == 2
        seen += 1
    assert seen == 16


def test_build_plan_fixed_cases():
    g = path_graph(4)
    plan = build_plan(g, find_antimorphism(g))
    assert plan.fixed_vertex is None
    assert len(plan.per_cycle) == 1
    assert plan.per_cycle[0].shift == 1
    assert plan.per_cycle[0].matching == ((0, 1), (3, 2))

    c5 = cycle_graph(5)
    plan5 = build_plan(c5, find_antimorphism(c5))
    assert plan5.fixed_vertex == 0
    assert plan5.per_cycle[0].matching == ((1, 2), (4, 3))

    k1 = Graph(1)
    plan1 = build_plan(k1, find_antimorphism(k1))
    assert plan1.per_cycle == () and plan1.fixed_vertex == 0


def test_build_plan_covers_non_fixed_vertices():
    for n in (4, 5, 8, 9):
        for g in sc_classes(n):
            rho = find_antimorphism(g)
            plan = build_plan(g, rho)
            covered = [v for e in plan.matching_edges() for v in e]
            expected = set(range(n))
            if plan.fixed_vertex is not None:
                expected.discard(plan.fixed_vertex)
            assert sorted(covered) == sorted(expected)
            assert len(covered) == len(set(covered))


def test_build_plan_rejects_non_antimorphism():
    with pytest.raises(ValueError):
        build_plan(path_graph(4), Permutation([0, 1, 2, 3]))


def test_realize_minor_fixed_cases():
    g = path_graph(4)
    model = realize_minor(g, build_plan(g, find_antimorphism(g)))
    assert model.branch_sets == (frozenset({0, 1}), frozenset({2, 3}))

    c5 = cycle_graph(5)
    model5 = realize_minor(c5, build_plan(c5, find_antimorphism(c5)))
    assert model5.branch_sets == (
        frozenset({1, 2}),
        frozenset({3, 4}),
        frozenset({0}),
    )


def test_realize_minor_agrees_with_oracle_on_sharp_family():
    g = sharp_4n(2)
    model = realize_minor(g, build_plan(g, find_antimorphism(g)))
    assert model.k == 4
    assert verify_minor_model(g, model, complete_graph(4)).ok
    assert has_minor(MinorQuery(g, complete_graph(4))).answer == "yes"


def test_verify_minor_model_negative_cases():
    g = path_graph(4)
    k2 = complete_graph(2)
    bad = verify_minor_model(g, MinorModel((frozenset({0}), frozenset({2}))), k2)
    assert not bad.ok and bad.pair == (0, 1)

    overlap = verify_minor_model(
        g, MinorModel((frozenset({0, 1}), frozenset({1, 2}))), k2
    )
    assert not overlap.ok and "overlaps" in overlap.reason

    disconnected = verify_minor_model(
        g, MinorModel((frozenset({0, 3}), frozenset({1}))), k2
    )
    assert not disconnected.ok and "not connected" in disconnected.reason

    wrong_count = verify_minor_model(g, MinorModel((frozenset({0}),)), k2)
    assert not wrong_count.ok

    empty = verify_minor_model(g, MinorModel((frozenset(), frozenset({1}))), k2)
    assert not empty.ok and "empty" in empty.reason

    out_of_range = verify_minor_model(
        g, MinorModel((frozenset({0}), frozenset({9}))), k2
    )
    assert not out_of_range.ok and "range" in out_of_range.reason


def test_verify_minor_model_positive_cases():
    g = path_graph(4)
    assert verify_minor_model(
        g, MinorModel((frozenset({0, 1}), frozenset({2, 3}))), complete_graph(2)
    ).ok
    c5 = cycle_graph(5)
    assert verify_minor_model(
        c5,
        MinorModel((frozenset({1, 2}), frozenset({3, 4}), frozenset({0}))),
        complete_graph(3),
    ).ok


def test_guaranteed_minor_small_and_absent():
    assert guaranteed_minor(path_graph(4)).k == 2
    assert guaranteed_minor(cycle_graph(5)).k == 3
    assert guaranteed_minor(complete_graph(4)) is None
    assert guaranteed_minor(Graph(1)).k == 1


def test_guaranteed_minor_branch_set_shape():
    for n in (4, 5, 8, 9):
        for g in sc_classes(n):
            model = guaranteed_minor(g)
            assert model is not None and model.k == (n + 1) // 2
            sizes = sorted(len(s) for s in model.branch_sets)
            if n % 4 == 1:
                assert sizes == [1] + [2] * (model.k - 1)
            else:
                assert sizes == [2] * model.k
            assert verify_minor_model(g, model, complete_graph(model.k)).ok


def test_fixed_vertex_adjacent_to_exactly_one_endpoint():
    for n, count in ((5, 0), (9, 0), (13, 20)):
        graphs = sc_classes(n) if count == 0 else random_sc_batch(n, count)
        for g in graphs:
            rho = find_antimorphism(g)
            plan = build_plan(g, rho)
            fixed = plan.fixed_vertex
            assert fixed is not None
            for u, v in plan.matching_edges():
                assert int(g.has_edge(fixed, u)) + int(g.has_edge(fixed, v)) == 1


def test_model_json_shape():
    model = guaranteed_minor(cycle_graph(5))
    import json

    data = json.loads(model.to_json())
    assert data == {"k": 3, "branch_sets": [[1, 2], [3, 4], [0]]}
