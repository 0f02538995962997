import pytest

from jllab.cuspidal import (
    CUSPS,
    analysis,
    cuspidal_group,
    delta_orders,
    model_graph_at,
    relation_matrix,
)
from jllab.dualgraph import discrete_log

QS = (2, 3, 4, 5)


def test_delta_orders_structure():
    rows, roots = delta_orders(3)
    assert CUSPS == ("inf", "0", "x", "y")
    assert rows["delta"] == (1, 27, 9, 3)
    assert rows["delta_xy"] == (27, 1, 3, 9)
    assert rows["delta_x"] == (3, 9, 27, 1)
    assert rows["delta_y"] == (9, 3, 1, 27)
    assert roots == {
        "delta/delta_xy": 2,
        "delta/delta_x": 2,
        "delta/delta_y": 8,
    }


def test_delta_total_degree_constant():
    # all four forms have the same total vanishing degree
    for q in QS:
        rows, _ = delta_orders(q)
        totals = {sum(v) for v in rows.values()}
        assert len(totals) == 1


def test_relation_matrix_q2():
    assert relation_matrix(2) == [
        [7, 2, -2],
        [4, -4, 1],
        [2, 1, -2],
        [1, -1, -1],
    ]


def test_relation_rows_are_integral_all_q():
    for q in QS:
        rows = relation_matrix(q)
        assert len(rows) == 4
        assert rows[-1] == [1, -1, -1]


@pytest.mark.parametrize(
    "q,factors",
    [(2, (15,)), (3, (2, 20)), (4, (85,)), (5, (2, 78))],
)
def test_group_structure(q, factors):
    C = cuspidal_group(q)
    assert C.invariant_factors == factors
    assert C.order == (q + 1) * (q * q + 1)


@pytest.mark.parametrize("q", QS)
def test_structure_is_q_plus_1_by_q2_plus_1(q):
    # Z/(q+1) + Z/(q^2+1) in invariant-factor form
    from jllab.abgroup import FinAbGroup

    C = cuspidal_group(q)
    model = FinAbGroup.from_relations(2, [[q + 1, 0], [0, q * q + 1]])
    assert C.same_structure(model)


@pytest.mark.parametrize("q", QS)
def test_certification(q):
    rep = analysis(q).certify_orders()
    assert all(rep["checks"].values()), rep["checks"]
    assert rep["order_cx"] == q + 1
    assert rep["order_cy"] == q * q + 1
    expected_c0 = (q + 1) * (q * q + 1) // (2 if q % 2 else 1)
    assert rep["order_c0"] == expected_c0


@pytest.mark.parametrize("q", QS)
def test_model_graphs(q):
    gx = model_graph_at(q, "x")
    assert sorted(l for _, _, l in gx.edges) == sorted([1] * (q - 1) + [q + 1, q + 1])
    gy = model_graph_at(q, "y")
    assert [l for _, _, l in gy.edges] == [1] * (q + 1)


@pytest.mark.parametrize("q", QS)
def test_component_groups_at_places(q):
    a = analysis(q)
    assert a.specialization("x").component_group.order == (q * q + 1) * (q + 1)
    assert a.specialization("y").component_group.invariant_factors == (q + 1,)
    assert a.specialization("inf").component_group.order == (q * q + 1) * (q + 1)


@pytest.mark.parametrize("q", QS)
def test_exact_sequences(q):
    seq = analysis(q).exact_sequences()
    assert seq["x"]["kernel"].invariant_factors == (q + 1,)
    assert seq["x"]["cokernel"].invariant_factors == (q + 1,)
    assert seq["y"]["kernel"].invariant_factors == (q * q + 1,)
    assert seq["y"]["cokernel"].is_trivial
    if q % 2 == 0:
        assert seq["inf"]["kernel"].is_trivial
        assert seq["inf"]["cokernel"].is_trivial
    else:
        assert seq["inf"]["kernel"].invariant_factors == (2,)
        assert seq["inf"]["cokernel"].invariant_factors == (2,)


@pytest.mark.parametrize("q", QS)
def test_cy_subgroup(q):
    out = analysis(q).cy_subgroup()
    assert out["order"] == q * q + 1
    assert out["places"]["x"]["injective"]
    assert out["places"]["inf"]["injective"]
    assert out["places"]["y"]["image_order"] == 1
    assert out["places"]["y"]["kernel_order"] == q * q + 1


@pytest.mark.parametrize("q", (2, 3))
def test_infinity_specialization_images(q):
    # phi_inf(cx) = (q^2+1) * [Eq - Zp] and phi_inf(cy) = (q^3+1) * e_q
    # where e_q = [Eq - Zp] in the dual graph at infinity
    a = analysis(q)
    sp = a.specialization("inf")
    names = a.infinity_names
    crit = sp.critical
    group = sp.component_group
    C = a.C
    eq_class = crit.class_of({names["Eq"]: 1, names["Zp"]: -1})
    img_cx = sp.hom.apply(C.element_from_user([0, 1, 0]))
    img_cy = sp.hom.apply(C.element_from_user([0, 0, 1]))
    kx = discrete_log(group, eq_class, img_cx)
    ky = discrete_log(group, eq_class, img_cy)
    n = group.element_order(eq_class)
    assert kx % n == (q * q + 1) % n
    assert ky % n == (q ** 3 + 1) % n


@pytest.mark.parametrize("q", QS)
def test_cusp_component_placement(q):
    a = analysis(q)
    for place in ("x", "y"):
        comp = a.specialization(place).cusp_components
        assert comp["inf"] == "Zp"
        partner = place  # the AL partner of inf at place v is the cusp [v]
        assert comp[partner] == "Zp"
        others = [c for c in CUSPS if c not in ("inf", partner)]
        assert all(comp[c] == "Z" for c in others)


def test_report_shape():
    rep = analysis(2).report()
    assert rep["q"] == 2
    assert rep["structure"]
    assert set(rep["specializations"]) == {"x", "y", "inf"}
    for place in ("x", "y", "inf"):
        assert "component_group" in rep["specializations"][place]
