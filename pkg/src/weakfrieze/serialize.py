"""JSON documents for polygons, dissections, value maps and glue input.

Shapes::

    {"n": 9, "dissection": [[1, 6], [2, 5]]}
    {"n": 9, "semifield": "rational", "dissection": [...],
     "values": {"0-1": "1", "2-5": "1", ...}}
    {"n": 9, "semifield": "rational", "dissection": [...],
     "pieces": [{"2-3": "1", ...}, ...]}

Keys are ``"i-j"``; either order is accepted on input, output uses i < j.
Rationals are written as strings (``"3/2"``), tropical values as integers.
"""

from __future__ import annotations

import json

from .frieze import DiagonalMap
from .polygon import InvalidInput, Polygon, diag, validate_dissection
from .semifield import RATIONAL, semifield_by_name

__all__ = [
    "load_json",
    "parse_polygon",
    "parse_dissection",
    "parse_semifield",
    "parse_values",
    "parse_map",
    "parse_pieces",
    "key",
    "map_to_json",
    "values_to_json",
]


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: not valid JSON ({exc})") from None
    except OSError as exc:
        raise InvalidInput(f"{path}: {exc.strerror}") from None


def parse_polygon(doc):
    if not isinstance(doc, dict) or "n" not in doc:
        raise InvalidInput('expected an object with an "n" field')
    return Polygon(doc["n"])


def parse_dissection(doc, p, field="dissection"):
    raw = doc.get(field, [])
    if not isinstance(raw, list):
        raise InvalidInput(f'"{field}" must be a list of vertex pairs')
    pairs = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise InvalidInput(f"malformed diagonal {item!r}")
        pairs.append(tuple(item))
    return validate_dissection(p, pairs)


def parse_semifield(doc):
    return semifield_by_name(doc.get("semifield", RATIONAL.name))


def _parse_key(k):
    parts = str(k).split("-")
    if len(parts) != 2 or not all(x.strip().isdigit() for x in parts):
        raise InvalidInput(f"malformed diagonal key {k!r}; expected \"i-j\"")
    return diag(int(parts[0]), int(parts[1]))


def parse_values(obj, semifield, p=None):
    if not isinstance(obj, dict):
        raise InvalidInput("values must be an object keyed by \"i-j\"")
    out = {}
    for k, v in obj.items():
        d = _parse_key(k)
        if p is not None:
            p.check_diagonal(d)
        if d in out:
            raise InvalidInput(f"diagonal {list(d)} given twice")
        try:
            out[d] = semifield.coerce(v)
        except (TypeError, ValueError) as exc:
            raise InvalidInput(f"value for {k!r}: {exc}") from None
    return out


def parse_map(doc):
    p = parse_polygon(doc)
    K = parse_semifield(doc)
    if "values" not in doc:
        raise InvalidInput('expected a "values" object')
    return DiagonalMap(p, parse_values(doc["values"], K, p), K)


def parse_pieces(doc, p, semifield):
    raw = doc.get("pieces")
    if not isinstance(raw, list) or not raw:
        raise InvalidInput('expected a non-empty "pieces" list')
    return [parse_values(piece, semifield, p) for piece in raw]


def key(d):
    a, b = diag(*d)
    return f"{a}-{b}"


def values_to_json(values, semifield):
    return {key(d): semifield.to_json(x) for d, x in sorted(values.items())}


def map_to_json(f, dissection=None):
    doc = {"n": f.polygon.n, "semifield": f.semifield.name}
    if dissection is not None:
        doc["dissection"] = [list(e) for e in dissection.sorted()]
    doc["values"] = values_to_json(dict(f.values), f.semifield)
    return doc
