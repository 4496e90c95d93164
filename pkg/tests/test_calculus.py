import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trisect.calculus import (
    BoundaryCircles,
    ClosedPage,
    PastingInput,
    PlanBlock,
    RibbonGraph,
    SurgeryPlan,
    curve_complement,
    destabilize,
    fiber_sum,
    log_transform_plan,
    luttinger_plan,
    parse_plan,
    paste,
    poke,
    serialize_plan,
    shadow_boundary_curves,
    shear_block,
    surgery_plan_general,
)
from trisect.diagram import CurveSystem, StarDiagram, parse_params
from trisect.errors import (
    CannotDestabilize,
    CellDecompositionMismatch,
    DiagramError,
    NotSL2,
    NotSL3,
)
from trisect.zmatrix import Gen, gen_matrix, identity, mat_mul


class TestPaste:
    def test_closed_page_at_zero(self):
        out = paste(PastingInput(parse_params("0;0,0,0"), parse_params("0;0,0,0"),
                                 ClosedPage(0)))
        assert parse_params("2;0,0,0") == out

    def test_closed_page_shifts_k(self):
        left = parse_params("1;1,0,1")
        right = parse_params("2;0,2,1")
        out = paste(PastingInput(left, right, ClosedPage(1)))
        assert out.genus == 5 and out.k == (3, 4, 4)

    def test_two_disks_make_sphere(self):
        left = TrisectionParams_like("0;0,0,0;1")
        out = paste(PastingInput(left, left, BoundaryCircles(1)))
        assert out.genus == 0 and out.boundary == 0

    def test_torus_times_sphere_genus(self):
        # two genus-1 pieces with three boundary circles each
        side = TrisectionParams_like("1;0,0,0;3")
        out = paste(PastingInput(side, side, BoundaryCircles(3)))
        assert out.genus == 4
        assert out.boundary == 0

    def test_boundary_circles_common_counts(self):
        side = TrisectionParams_like("2;1,1,1;2")
        out = paste(PastingInput(side, side, BoundaryCircles(2), common=(1, 0, 2)))
        assert out.genus == 5
        assert out.k == (1 + 1 + 1, 1 + 1 + 0, 1 + 1 + 2)

    def test_boundary_circles_without_common_leaves_k_unknown(self):
        side = TrisectionParams_like("1;1,1,1;2")
        out = paste(PastingInput(side, side, BoundaryCircles(2)))
        assert out.k is None

    def test_mode_mismatch(self):
        closed = parse_params("1;0,0,0")
        bounded = TrisectionParams_like("1;0,0,0;2")
        with pytest.raises(CellDecompositionMismatch):
            paste(PastingInput(closed, bounded, ClosedPage(0)))
        with pytest.raises(CellDecompositionMismatch):
            paste(PastingInput(bounded, bounded, BoundaryCircles(3)))

    def test_zero_circles_rejected(self):
        with pytest.raises(CellDecompositionMismatch):
            BoundaryCircles(0)


def TrisectionParams_like(lit):
    return parse_params(lit)


class TestFiberSum:
    def test_cacime_surface(self):
        side = parse_params("21;6,6,11").with_bridge(5, (1, 1, 1))
        out = fiber_sum(side, side)
        assert out == parse_params("51;13,13,23")

    def test_self_sum_formula(self):
        p = parse_params("3;2,1,0").with_bridge(1, (1, 1, 1))
        out = fiber_sum(p, p)
        assert out.genus == 2 * 3 + 1
        assert out.k == (5, 3, 1)

    def test_commutative(self):
        a = parse_params("2;1,1,1").with_bridge(2, (1, 2, 1))
        b = parse_params("4;2,0,3").with_bridge(2, (1, 2, 1))
        assert fiber_sum(a, b) == fiber_sum(b, a)

    def test_bridge_mismatch(self):
        a = parse_params("2;1,1,1").with_bridge(2, (1, 2, 1))
        b = parse_params("2;1,1,1").with_bridge(2, (1, 1, 1))
        with pytest.raises(CellDecompositionMismatch):
            fiber_sum(a, b)

    def test_missing_bridge(self):
        a = parse_params("2;1,1,1")
        with pytest.raises(CellDecompositionMismatch):
            fiber_sum(a, a)


class TestDestabilize:
    def test_cacime_chain(self):
        out = destabilize(parse_params("51;13,13,23"), sector=3, times=10)
        assert out == parse_params("41;13,13,13")

    def test_zero_times_identity(self):
        p = parse_params("5;2,3,4")
        assert destabilize(p, 1, 0) == p

    def test_deficit_rejected(self):
        with pytest.raises(CannotDestabilize):
            destabilize(parse_params("1;0,0,0"), 1, 1)

    def test_only_named_sector_drops(self):
        out = destabilize(parse_params("5;2,3,3"), 2, 2)
        assert out == parse_params("3;2,1,3")


class TestPoke:
    def base(self):
        return StarDiagram(
            1, 0,
            CurveSystem("alpha", ((1, 0),)),
            CurveSystem("beta", ((0, 1),)),
            CurveSystem("gamma", ((1, 1),)),
        )

    def test_three_pokes(self):
        out = poke(self.base(), (1, 1, 1))
        assert out.boundary == 3
        assert len(out.alpha.classes) == 2
        assert out.alpha.classes[-1] == (0, 0)
        assert len(out.beta.classes) == len(out.gamma.classes) == 2

    def test_zero_identity(self):
        d = self.base()
        assert poke(d, (0, 0, 0)) == d

    def test_uneven_counts(self):
        out = poke(self.base(), (2, 0, 1))
        assert out.boundary == 3
        assert len(out.alpha.classes) == 3
        assert len(out.beta.classes) == 1
        assert out.genus == 1


class TestCurveComplement:
    def test_single_arc_per_sector(self):
        out = curve_complement(parse_params("1;1,1,1"), (1, 1, 1))
        assert out.params.genus == 1
        assert out.params.boundary == 3
        assert out.punctures == 3
        assert out.curves_added == (1, 1, 1)   # one redundant curve dropped
        assert out.closure_genus == 1 + 2

    def test_zero_arcs_identity(self):
        p = parse_params("2;1,1,1")
        out = curve_complement(p, (0, 0, 0))
        assert out.params == p
        assert out.closure_genus is None

    def test_surgery_closure_genus(self):
        out = curve_complement(parse_params("4;2,2,2"), (1, 1, 1))
        assert out.closure_genus == 4 + 2

    def test_unequal_rejected(self):
        with pytest.raises(CellDecompositionMismatch):
            curve_complement(parse_params("1;1,1,1"), (1, 2, 1))


class TestRibbonGraph:
    def test_single_arc(self):
        rg = RibbonGraph(rotations=((0,), (1,)), edges=((0, 1),))
        assert shadow_boundary_curves(rg) == (1, 0)

    def test_loop_two_faces(self):
        rg = RibbonGraph(rotations=((0, 1),), edges=((0, 1),))
        assert len(rg.faces()) == 2

    def test_theta_parallel_edges(self):
        rg = RibbonGraph(rotations=((0, 2), (1, 3)), edges=((0, 1), (2, 3)))
        assert len(rg.faces()) == 2

    def test_dangling_dart_rejected(self):
        with pytest.raises(DiagramError):
            RibbonGraph(rotations=((0, 1),), edges=((0, 2),))
        with pytest.raises(DiagramError):
            RibbonGraph(rotations=((0,),), edges=())

    def test_isolated_vertex_is_boundary_parallel(self):
        rg = RibbonGraph(rotations=((0, 1), ()), edges=((0, 1),))
        bp, ess = shadow_boundary_curves(rg)
        assert bp >= 1

    @pytest.mark.parametrize("rotations,edges", [
        (((0,), (1,)), ((0, 1),)),
        (((0, 1),), ((0, 1),)),
        (((0, 2), (1, 3)), ((0, 1), (2, 3))),
        (((0, 2, 4), (1, 3, 5)), ((0, 1), (2, 3), (4, 5))),
        (((0, 1, 2, 3),), ((0, 1), (2, 3))),
        (((0, 2), (1, 4), (3, 5)), ((0, 1), (2, 3), (4, 5))),
    ])
    def test_euler_consistency(self, rotations, edges):
        rg = RibbonGraph(rotations, edges)
        if len(rg.components()) != 1:
            return
        v, e, f = rg.vertex_count, rg.edge_count, len(rg.faces())
        genus = rg.genus_of_closure()
        assert v - e + f == 2 - 2 * genus


SL2_GENS = [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, -1), (1, 0))]


def random_sl2(rng, length=8):
    m = ((1, 0), (0, 1))
    for _ in range(length):
        g = rng.choice(SL2_GENS)
        m = tuple(
            tuple(sum(m[i][k] * g[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )
    return m


class TestPlans:
    @pytest.mark.parametrize("m,n,expect", [
        (0, 0, identity(3)),
        (1, 0, [[1, 0, 1], [0, 1, 0], [0, 0, 1]]),
        (2, -3, [[1, 0, 2], [0, 1, -3], [0, 0, 1]]),
    ])
    def test_luttinger_composite(self, m, n, expect):
        plan = luttinger_plan(m, n)
        assert plan.composite == expect
        kinds = [b.kind for b in plan.blocks]
        assert kinds == ["complement", "tau0", "tau23", "shear", "tau31",
                         "shear", "tau31", "tau23", "tauempty"]

    def test_luttinger_random(self):
        rng = random.Random(7)
        for _ in range(50):
            m, n = rng.randint(-30, 30), rng.randint(-30, 30)
            assert luttinger_plan(m, n).composite == \
                [[1, 0, m], [0, 1, n], [0, 0, 1]]

    def test_log_transform_ap(self):
        plan = log_transform_plan(((0, 1), (-1, 5)))
        assert plan.composite == [[1, 0, 0], [0, 0, 1], [0, -1, 5]]

    def test_log_transform_identity(self):
        plan = log_transform_plan(((1, 0), (0, 1)))
        assert plan.composite == identity(3)

    def test_log_transform_p0(self):
        plan = log_transform_plan(((0, 1), (-1, 0)))
        assert plan.composite == [[1, 0, 0], [0, 0, 1], [0, -1, 0]]

    def test_log_transform_random(self):
        rng = random.Random(11)
        for _ in range(100):
            a = random_sl2(rng)
            plan = log_transform_plan(a)
            assert plan.composite == [
                [1, 0, 0],
                [0, a[0][0], a[0][1]],
                [0, a[1][0], a[1][1]],
            ]

    def test_log_transform_rejects_non_sl2(self):
        with pytest.raises(NotSL2):
            log_transform_plan(((1, 1), (1, 1)))
        with pytest.raises(NotSL2):
            log_transform_plan(((1, 0, 0), (0, 1, 0)))

    def test_general_identity(self):
        plan = surgery_plan_general(identity(3))
        assert [b.kind for b in plan.blocks] == ["complement", "tau0", "tauempty"]
        assert plan.composite == identity(3)

    def test_general_round_trip(self):
        rng = random.Random(3)
        kinds = ["s12", "s23", "s31", "s12i", "s23i", "s31i", "e"]
        for _ in range(100):
            m = identity(3)
            for _ in range(rng.randint(0, 12)):
                kind = rng.choice(kinds)
                g = Gen(kind, rng.randint(-4, 4)) if kind == "e" else Gen(kind)
                m = mat_mul(m, gen_matrix(g))
            assert surgery_plan_general(m).composite == m

    def test_general_rejects_non_sl3(self):
        with pytest.raises(NotSL3):
            surgery_plan_general([[2, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_composite_is_block_product(self):
        # constructor re-checks the composite; corrupting it must fail
        plan = luttinger_plan(1, 2)
        with pytest.raises(DiagramError):
            SurgeryPlan(plan.blocks, identity(3))

    def test_shear_block_rejects(self):
        with pytest.raises(NotSL2):
            shear_block(((2, 0), (0, 1)))


class TestPlanSerialization:
    def test_round_trip(self):
        for plan in [
            luttinger_plan(2, -3),
            log_transform_plan(((0, 1), (-1, 7))),
            surgery_plan_general(identity(3)),
        ]:
            text = serialize_plan(plan)
            back = parse_plan(text)
            assert back.composite == plan.composite
            assert [b.kind for b in back.blocks] == [b.kind for b in plan.blocks]
            assert serialize_plan(back) == text

    def test_text_shape(self):
        text = serialize_plan(luttinger_plan(0, 0))
        lines = text.splitlines()
        assert lines[0] == "COMPLEMENT"
        assert lines[-1] == "COMPOSITE 1 0 0 0 1 0 0 0 1"
        assert text.endswith("\n")

    @pytest.mark.parametrize("bad", [
        "",                                   # no composite
        "TAU0\n",                             # still no composite
        "BOGUS\nCOMPOSITE 1 0 0 0 1 0 0 0 1\n",
        "COMPOSITE 1 0 0 0 1 0 0 0 1\nTAU0\n",   # trailing block
        "SHEAR 1 0 0\nCOMPOSITE 1 0 0 0 1 0 0 0 1\n",
        "COMPOSITE 1 0 0 0 1 0 0 0 2\n",      # stated product wrong
        "TAU23\nCOMPOSITE 1 0 0 0 1 0 0 0 1\n",  # mismatch with product
    ])
    def test_parse_rejects(self, bad):
        with pytest.raises(DiagramError):
            parse_plan(bad)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(-20, 20), st.integers(-20, 20))
    def test_luttinger_serialization_round_trip(self, m, n):
        plan = luttinger_plan(m, n)
        assert parse_plan(serialize_plan(plan)).composite == plan.composite
