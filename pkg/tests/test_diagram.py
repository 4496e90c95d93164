import json

import pytest

from trisect.diagram import (
    BridgeData,
    CurveSystem,
    Fraction,
    StarDiagram,
    SymplecticLattice,
    TrisectionParams,
    diagram_ok,
    format_params,
    genus1_pair_kind,
    parse_diagram,
    parse_fraction,
    parse_params,
    serialize_diagram,
    validate_cut_system,
    validate_diagram,
    validate_standard_pair,
)
from trisect.errors import DiagramError, VectorLength


def cp2_text():
    return json.dumps({
        "basis": "e1 f1",
        "genus": 1,
        "boundary": 0,
        "alpha": [[1, 0]],
        "beta": [[0, 1]],
        "gamma": [[1, 1]],
    })


class TestFraction:
    @pytest.mark.parametrize("text,num,den", [
        ("1/2", 1, 2),
        ("-3/7", -3, 7),
        ("1/0", 1, 0),
        ("2/4", 1, 2),      # reduced on input
        ("3/-6", -1, 2),    # sign moves to the numerator
        ("-1/0", 1, 0),     # single representative at infinity
        ("0/5", 0, 1),
    ])
    def test_parse(self, text, num, den):
        f = parse_fraction(text)
        assert (f.num, f.den) == (num, den)

    @pytest.mark.parametrize("bad", ["", "1", "x/y", "1/2/3", "0/0"])
    def test_parse_rejects(self, bad):
        with pytest.raises(DiagramError):
            parse_fraction(bad)

    def test_canonical_constructor(self):
        with pytest.raises(DiagramError):
            Fraction(2, 4)
        assert Fraction.of(2, 4) == Fraction(1, 2)


class TestCutSystem:
    def test_pairing_violation_on_extended_genus1(self):
        lat = SymplecticLattice(1)
        sys_ = CurveSystem("alpha", ((1, 0), (0, 1)))
        vs = validate_cut_system(sys_, lat)
        assert any(not v.advisory for v in vs)

    def test_disjoint_handles_clean(self):
        lat = SymplecticLattice(2)
        sys_ = CurveSystem("alpha", ((1, 0, 0, 0), (0, 0, 1, 0)))
        assert validate_cut_system(sys_, lat) == []

    def test_zero_vector_is_advisory(self):
        lat = SymplecticLattice(1)
        sys_ = CurveSystem("alpha", ((0, 0),))
        vs = validate_cut_system(sys_, lat)
        assert vs and all(v.advisory for v in vs)

    def test_wrong_length_raises(self):
        with pytest.raises(VectorLength):
            validate_cut_system(CurveSystem("alpha", ((1, 0, 0),)), SymplecticLattice(2))

    @pytest.mark.parametrize("alpha,beta,gamma", [
        # classical closed corpus: CP2, S1xS3, genus-1 stabilized S4
        (((1, 0),), ((0, 1),), ((1, 1),)),
        (((0, 1),), ((0, 1),), ((0, 1),)),
        (((1, 0),), ((1, 0),), ((0, 1),)),
    ])
    def test_corpus_accepted_and_flip_rejected(self, alpha, beta, gamma):
        lat = SymplecticLattice(1)
        for classes in (alpha, beta, gamma):
            assert validate_cut_system(CurveSystem("alpha", classes), lat) == []
        # two copies of a dual pair always break the pairing
        bad = CurveSystem("alpha", ((1, 0), (0, 1)))
        assert validate_cut_system(bad, lat) != []


class TestStandardPair:
    def test_single_stab_pair(self):
        a = CurveSystem("alpha", ((1, 0),))
        b = CurveSystem("beta", ((0, 1),))
        ok, report = validate_standard_pair(a, b, {("alpha", 0, "beta", 0): 1})
        assert ok, report

    def test_pure_common(self):
        a = CurveSystem("alpha", ((0, 1),))
        b = CurveSystem("beta", ((0, 1),))
        ok, _ = validate_standard_pair(a, b, {("alpha", 0, "beta", 0): 0}, common=(0,))
        assert ok

    def test_double_point_fails(self):
        a = CurveSystem("alpha", ((1, 0),))
        b = CurveSystem("beta", ((1, 1),))
        ok, report = validate_standard_pair(a, b, {("alpha", 0, "beta", 0): 2})
        assert not ok
        assert report

    def test_missing_geo_raises(self):
        a = CurveSystem("alpha", ((1, 0),))
        b = CurveSystem("beta", ((0, 1),))
        with pytest.raises(DiagramError, match="missing geo"):
            validate_standard_pair(a, b, {})


class TestGenus1PairKind:
    @pytest.mark.parametrize("x,y,kind", [
        ("1/1", "1/2", "S3"),
        ("3/5", "3/5", "S1xS2"),
        ("0/1", "2/1", "Invalid"),
    ])
    def test_examples(self, x, y, kind):
        assert genus1_pair_kind(parse_fraction(x), parse_fraction(y)) == kind

    def test_symmetric(self):
        pairs = [("1/1", "1/2"), ("0/1", "1/0"), ("1/3", "2/5"), ("0/1", "2/1")]
        for x, y in pairs:
            fx, fy = parse_fraction(x), parse_fraction(y)
            assert genus1_pair_kind(fx, fy) == genus1_pair_kind(fy, fx)


class TestParseSerialize:
    def test_cp2_file(self):
        d = parse_diagram(cp2_text())
        assert d.genus == 1 and d.boundary == 0
        assert len(d.alpha.classes) == len(d.beta.classes) == len(d.gamma.classes) == 1
        assert diagram_ok(validate_diagram(d))

    def test_empty_gamma_torus(self):
        text = json.dumps({
            "basis": "e1 f1", "genus": 1, "boundary": 0,
            "alpha": [[0, 1]], "beta": [[0, 1]], "gamma": [],
        })
        d = parse_diagram(text)
        assert d.gamma.classes == ()
        assert diagram_ok(validate_diagram(d))

    def test_vector_length_error(self):
        text = json.dumps({
            "basis": "e1 f1 e2 f2", "genus": 2, "boundary": 0,
            "alpha": [[1, 0, 0]], "beta": [], "gamma": [],
        })
        with pytest.raises(VectorLength):
            parse_diagram(text)

    def test_unknown_field_rejected(self):
        obj = json.loads(cp2_text())
        obj["color"] = "blue"
        with pytest.raises(DiagramError, match="color"):
            parse_diagram(json.dumps(obj))

    def test_bad_basis_header(self):
        obj = json.loads(cp2_text())
        obj["basis"] = "x1 y1"
        with pytest.raises(DiagramError):
            parse_diagram(json.dumps(obj))

    def test_common_mismatch_rejected(self):
        obj = json.loads(cp2_text())
        obj["common"] = {"alpha_beta": [0]}   # (1,0) != (0,1)
        with pytest.raises(DiagramError, match="common"):
            parse_diagram(json.dumps(obj))

    def test_geo_duplicate_after_normalization(self):
        obj = json.loads(cp2_text())
        obj["geo"] = {"alpha.0:beta.0": 1, "beta.0:alpha.0": 1}
        with pytest.raises(DiagramError):
            parse_diagram(json.dumps(obj))

    def test_syntax_error_has_location(self):
        with pytest.raises(DiagramError, match="line"):
            parse_diagram("{ not json")

    def test_round_trip_is_identity(self):
        text = serialize_diagram(parse_diagram(cp2_text()))
        assert serialize_diagram(parse_diagram(text)) == text

    def test_round_trip_with_common_and_geo(self):
        obj = {
            "basis": "e1 f1 e2 f2", "genus": 2, "boundary": 1,
            "alpha": [[1, 0, 0, 0], [0, 0, 0, 0]],
            "beta": [[0, 1, 0, 0], [0, 0, 0, 0]],
            "gamma": [[1, 1, 0, 0]],
            "common": {"alpha_beta": [1]},
            "geo": {"alpha.0:beta.0": 1},
        }
        text = serialize_diagram(parse_diagram(json.dumps(obj)))
        d2 = parse_diagram(text)
        assert serialize_diagram(d2) == text
        assert d2.common["alpha_beta"] == (1,)


class TestParams:
    def test_parse_format_round_trip(self):
        for lit in ["41;13,13,13", "3;1,1,1;2", "0;0,0,0", "51;13,13,23"]:
            assert format_params(parse_params(lit)) == lit

    def test_spaces_tolerated(self):
        assert parse_params("(41; 13, 13, 13)") == parse_params("41;13,13,13")

    @pytest.mark.parametrize("bad", ["", "1;2", "1;2,3", "1;2,3,4,5", "g;1,1,1"])
    def test_parse_rejects(self, bad):
        with pytest.raises(DiagramError):
            parse_params(bad)

    def test_k_bound_enforced_closed(self):
        with pytest.raises(DiagramError):
            TrisectionParams(2, (3, 0, 0))
        with pytest.raises(DiagramError):
            TrisectionParams(2, (-1, 0, 0))

    def test_bridge_validation(self):
        p = parse_params("21;6,6,11").with_bridge(5, (1, 1, 1))
        assert p.bridge == BridgeData(5, (1, 1, 1))
        with pytest.raises(DiagramError):
            BridgeData(1, (2, 1, 1))     # b >= max(c) fails
        with pytest.raises(DiagramError):
            BridgeData(1, (0, 0, 0))     # max(c) >= 1 fails


def test_construct_diagram_directly():
    d = StarDiagram(
        1, 0,
        CurveSystem("alpha", ((1, 0),)),
        CurveSystem("beta", ((0, 1),)),
        CurveSystem("gamma", ((1, 1),)),
    )
    assert diagram_ok(validate_diagram(d))
