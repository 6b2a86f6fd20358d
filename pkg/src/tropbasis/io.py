"""JSON loaders and dumpers for matroids and circuit families (1-indexed on disk)."""

import hashlib
import json

from .errors import TropError
from .matroid import labels, subset, validate_circuits


def _masks(family):
    out = []
    for c in family:
        if isinstance(c, str):
            out.append(subset(c))
        else:
            out.append(subset(list(c)))
    return out


def matroid_from_json(obj, check_elimination=True):
    if not isinstance(obj, dict) or "n" not in obj or "circuits" not in obj:
        raise TropError('matroid JSON needs keys "n" and "circuits"')
    return validate_circuits(int(obj["n"]), _masks(obj["circuits"]), check_elimination=check_elimination)


def load_matroid(path, check_elimination=True):
    with open(path) as fh:
        return matroid_from_json(json.load(fh), check_elimination)


def load_family(path):
    """A list of circuits, or an object with a ``"circuits"`` key."""
    with open(path) as fh:
        obj = json.load(fh)
    if isinstance(obj, dict):
        obj = obj.get("circuits", obj.get("family"))
    if not isinstance(obj, list):
        raise TropError("family JSON must be a list of circuits")
    return _masks(obj)


def dump_matroid(M):
    return json.dumps(M.to_json())


def family_to_json(family):
    return [labels(c) for c in family]


def digest(*texts):
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode() if isinstance(t, str) else t)
    return h.hexdigest()[:16]
