import json
import os

import pytest

import smoothloc

DATA = os.environ.get("SMOOTHLOC_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def data(name):
    return os.path.join(DATA, name)


def test_frame_operations():
    L = smoothloc.Frame.load("C4")
    assert len(L) == 4
    assert L.labels == ["0", "a", "b", "1"]
    assert L.meet("a", "b") == "a"
    assert L.join(1, 2) == "b"
    assert L.arrow("b", "a") == "a"
    assert L.leq("a", "1")
    assert all(L.heyting_laws().values())
    assert len(L.heyting_laws()) == 12


def test_parse_and_errors():
    text = open(data("c3.lat")).read()
    assert len(smoothloc.Frame.parse(text)) == 3
    with pytest.raises(smoothloc.NotDistributive):
        smoothloc.Frame.load(data("n5.lat"))
    with pytest.raises(smoothloc.NotALattice):
        smoothloc.Frame.load(data("vee.lat"))
    with pytest.raises(smoothloc.IOFailure):
        smoothloc.Frame.load("no-such-frame")
    assert issubclass(smoothloc.ParseError, smoothloc.Error)
    assert len(smoothloc.Frame.load("C2xC4")) == 8


def test_sublocale_counts():
    C4 = smoothloc.Frame.load("C4")
    assert len(C4.sublocales()) == 8
    assert len(C4.sublocales("smooth")) == 8
    assert len(smoothloc.Frame.load("C3").sublocales("closed-joins")) == 3
    assert len(C4.lc_pairs()) == 7
    with pytest.raises(ValueError):
        C4.sublocales("bogus")


def test_iso_and_subfit():
    C4 = smoothloc.Frame.load("C4")
    iso = C4.iso()
    assert iso["collection"] == iso["au"] == len(iso["rows"]) == 8
    assert smoothloc.Frame.load("C3").iso("closed")["au"] == 3
    assert not smoothloc.Frame.load("C3").is_subfit()
    assert smoothloc.Frame.load("B2").is_subfit()


def test_admissible_upper_sets():
    sets = smoothloc.admissible_upper_sets(data("diamond_sl.lat"))
    # {a, b, t} is excluded since a and b meet in m.
    assert sorted(map(sorted, sets)) == [["a", "b", "m", "t"], ["a", "t"], ["b", "t"], ["t"]]


def test_lift():
    r = smoothloc.lift(data("id_c3.mor"))
    assert r["exists"] and r["verified"] and r["wdb"] and r["locally_exact"]
    assert len(r["table"]) == 4
    for target in ("sc", "so"):
        assert smoothloc.lift(data("c4_to_c3.mor"), target)["verified"]


def test_small_suite():
    r = smoothloc.run_suite(max_size=4)
    assert r["failures"] == 0
    assert r["frames"] > 0
    lines = r["jsonl"].splitlines()
    assert all({"id", "check", "status"} <= json.loads(l).keys() for l in lines)
    assert r["jsonl"] == smoothloc.run_suite(max_size=4)["jsonl"]
    assert "order-core" in smoothloc.modules()
