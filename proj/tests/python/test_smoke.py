import pytest

import spherecheck as sc

ONE_TET = "tri 1\ntet T\nglue T 0 T 3 3012\nglue T 1 T 2 0213\n"
LENS_5_2 = "tri 1\ntet A\nglue A 0 A 1 1230\nglue A 2 A 3 2031\n"


def test_parse_round_trip():
    t = sc.Triangulation.parse(ONE_TET)
    assert len(t) == 1
    assert t.is_closed()
    assert sc.Triangulation.parse(t.serialize()) == t


def test_parse_error_has_line():
    with pytest.raises(sc.ParseError) as err:
        sc.Triangulation.parse("tri 1\ntet T\nglue T 0 T 3 0123\n")
    assert err.value.line == 3


def test_homology():
    h = sc.homology(sc.Triangulation.parse(LENS_5_2))
    assert h["torsion"][1] == [5]
    assert not sc.is_homology_sphere(sc.Triangulation.parse(LENS_5_2))


def test_recognize_and_verify():
    t = sc.Triangulation.parse(ONE_TET)
    r = sc.recognize(t)
    assert r["answer"] == "sphere"
    cert = r["certificate"]
    assert cert.steps == 1
    assert sc.verify(t, cert) == (True, "")
    again = sc.Certificate.parse(cert.serialize())
    assert again == cert
    assert sc.certify(t) == cert


def test_not_sphere():
    r = sc.recognize(sc.Triangulation.parse(LENS_5_2))
    assert r["answer"] == "not_sphere"
    assert "Z/5" in r["reason"]
    assert sc.recognize(sc.Triangulation())["answer"] == "not_applicable"


def test_almost_normal_sphere_normalizes():
    t = sc.Triangulation.parse(ONE_TET)
    assert sc.normal_vertex_surfaces(t)
    cands = sc.almost_sphere_candidates(t)
    octagon = next(s for s in cands if s.almost == "octagon T 3")
    assert octagon.coords == [1, 0, 0, 1, 0, 0, 0]
    for fast in (True, False):
        assert sc.normalize(t, octagon, "minus", fast=fast).is_zero()
        assert sc.normalize(t, octagon, "plus", fast=fast).coords == [1, 1, 1, 1, 0, 0, 0]
    with pytest.raises(ValueError):
        sc.normalize(t, octagon, "sideways")


def test_ball():
    b = sc.recognize_ball(sc.Triangulation.parse("tri 1\ntet A\n"))
    assert b["answer"] == "ball"
    assert b["boundary_euler"] == 2
    d = sc.double_along_boundary(sc.Triangulation.parse("tri 1\ntet A\n"))
    assert sc.verify(d, b["certificate"])[0]
