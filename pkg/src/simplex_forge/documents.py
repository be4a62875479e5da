"""Reading and writing complexes.

Two input formats, told apart by the first non-blank character:

* facet text -- one facet per line, whitespace-separated positive integers,
  ``#`` starts a comment, blank lines are ignored;
* JSON -- ``{"format": "simplex-forge/1", "facets": [[...], ...], "meta": {...}}``.
  A document may give ``"elements"`` instead of ``"facets"``; that list is
  taken verbatim and must already be subset-closed.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .complex_core import ComplexError, SimplicialComplex, closure

FORMAT_TAG = "simplex-forge/1"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _parse_label(token: str, line: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", line) from None
    if v <= 0:
        raise ParseError(f"vertex labels must be positive, got {v}", line)
    return v


def parse_facet_text(text: str) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        facets.append([_parse_label(tok, lineno) for tok in body.split()])
    return closure(facets)


def _int_list(item: Any, where: str) -> list[int]:
    if not isinstance(item, list) or not item:
        raise ParseError(f"{where}: expected a nonempty list of integers")
    out = []
    for v in item:
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise ParseError(f"{where}: bad vertex label {v!r}")
        out.append(v)
    if out != sorted(set(out)):
        raise ParseError(f"{where}: labels must be strictly increasing")
    return out


def parse_json_document(text: str) -> tuple[SimplicialComplex, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("JSON document must be an object")
    fmt = doc.get("format")
    if fmt != FORMAT_TAG:
        raise ParseError(f"unsupported format tag {fmt!r}")
    meta = doc.get("meta") or {}
    if "elements" in doc:
        elems = [_int_list(x, f"elements[{k}]") for k, x in enumerate(doc["elements"])]
        try:
            return SimplicialComplex(elems), meta
        except ComplexError as exc:
            raise ParseError(str(exc)) from None
    if "facets" not in doc or not isinstance(doc["facets"], list):
        raise ParseError("document needs a 'facets' list")
    facets = [_int_list(x, f"facets[{k}]") for k, x in enumerate(doc["facets"])]
    return closure(facets), meta


def parse_complex(text: str) -> SimplicialComplex:
    """Parse either input format (auto-detected)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json_document(text)[0]
    return parse_facet_text(text)


def to_facet_text(G: SimplicialComplex) -> str:
    return "".join(" ".join(map(str, x)) + "\n" for x in G.facets)


def to_json_document(G: SimplicialComplex, meta: dict | None = None) -> str:
    doc: dict[str, Any] = {"format": FORMAT_TAG, "facets": [list(x) for x in G.facets]}
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, indent=None, separators=(", ", ": ")) + "\n"


def rational(q) -> str:
    """Exact rational as "p/q" (or "p" for integers)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {s!r}") from None
