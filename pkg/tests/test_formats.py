import json

import pytest

from tropbasis import families as F
from tropbasis.errors import EliminationViolation, TropError
from tropbasis.io import dump_matroid, load_family, load_matroid, matroid_from_json
from tropbasis.matroid import subset


def test_matroid_json_roundtrip(tmp_path):
    M = F.fano()
    p = tmp_path / "m.json"
    p.write_text(dump_matroid(M))
    assert load_matroid(str(p)) == M
    assert json.loads(dump_matroid(M))["circuits"][0] == [1, 2, 4]


def test_matroid_json_validation():
    with pytest.raises(TropError):
        matroid_from_json({"circuits": []})
    with pytest.raises(EliminationViolation):
        matroid_from_json({"n": 4, "circuits": [[1, 2, 3], [1, 3, 4]]})
    M = matroid_from_json({"n": 4, "circuits": [[1, 2, 3], [1, 3, 4]]}, check_elimination=False)
    assert M.circuits == (subset("123"), subset("134"))


def test_family_json(tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"circuits": [[1, 2, 4], "137"]}))
    assert load_family(str(p)) == [subset("124"), subset("137")]
    p.write_text(json.dumps(7))
    with pytest.raises(TropError):
        load_family(str(p))
