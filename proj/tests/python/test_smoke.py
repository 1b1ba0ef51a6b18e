import json
import os
from pathlib import Path

import pytest

import rguard

FIXTURES = Path(os.environ.get("RGUARD_FIXTURE_DIR", Path(__file__).parent.parent / "fixtures"))

HSTAR = [(0, 0), (10, 0), (10, 4), (8, 4), (8, 2), (6, 2), (6, 5), (4, 5), (4, 2), (2, 2), (2, 6), (0, 6)]


def test_validate_reorients_clockwise():
    p = rguard.validate([(0, 0), (0, 3), (4, 3), (4, 0)])
    assert len(p) == 4
    ccw = [(0, 0), (4, 0), (4, 3), (0, 3)]
    v = p.vertices
    k = v.index((0, 0))
    assert v[k:] + v[:k] == ccw
    assert p.is_histogram() and p.is_orthoconvex()


def test_validate_error_code():
    with pytest.raises(rguard.RGuardError) as info:
        rguard.validate([(0, 0), (4, 0), (4, 3)])
    assert info.value.code == "OddVertexCount"
    assert isinstance(info.value, ValueError)


def test_lshape_visibility():
    l = rguard.validate([(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)])
    assert not rguard.r_visible(l, (3, 1), (1, 3))
    assert rguard.r_visible(l, (0.5, 0.5), (3.5, 1.5))


def test_hstar_pipeline():
    h = rguard.validate(HSTAR)
    assert [s["x_lo"] for s in rguard.slabs(h)] == [0, 2, 4, 6, 8]
    plain = rguard.guard(h)
    assert plain["m"] == 3
    assert plain["points"] == [(1, 1), (5, 1), (9, 1)]
    hidden = rguard.hidden_guard(h)
    assert hidden["m"] == 3 and hidden["clamps"] == 0
    assert rguard.verify_cover(h, hidden["points"])
    assert rguard.verify_hidden(h, hidden["points"])
    assert rguard.min_guards(h, hidden=True)[0] == 3
    assert len(rguard.pyramids(h)) == 3


def test_half_coordinates():
    r = rguard.validate([(0, 0), (4, 0), (4, 3), (0, 3)])
    doc = rguard.guard(r)
    assert doc["points"] == [(2, 1.5)]
    with pytest.raises(ValueError):
        rguard.verify_cover(r, [(1.25, 1)])


def test_generate_is_seeded():
    a = rguard.generate("histogram", 10, 5)
    assert a == rguard.generate("histogram", 10, 5)
    h = rguard.validate(a)
    assert h.is_histogram()
    assert len(h) == 22


def test_cli_matches_golden():
    code, out, err = rguard.run_cli(["hidden", "--input", str(FIXTURES / "hstar.json")])
    assert code == 0 and err == ""
    assert out == (FIXTURES / "hstar.hidden.json").read_text()
    assert json.loads(out)["algorithm"] == "hidden-histogram"


def test_class_gate():
    z = rguard.validate([(0, 0), (2, 0), (2, 2), (4, 2), (4, 5), (6, 5), (6, 9), (4, 9), (4, 6), (2, 6), (2, 4), (0, 4)])
    with pytest.raises(rguard.RGuardError) as info:
        rguard.hidden_guard(z)
    assert info.value.code == "NotHistogram"
    assert len(rguard.balanced_pieces(z, "basic")) == 2
