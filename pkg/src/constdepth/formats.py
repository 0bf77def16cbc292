"""Ideal documents: a symbolic text form and a JSON form.

Symbolic form::

    # comments start with '#'
    vars: 6
    field: rational
    label: example
    x1*x4^3
    x2*x5^3
    x3*x4*x5*x6

Structured form: ``{"nvars": 6, "gens": [[1,0,0,3,0,0], ...], "field": "rational"}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ParseError
from .monomial import Field, MonomialIdeal, PolyContext, QQ, minimalize, monomial_str

_FACTOR = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class IdealDocument:
    nvars: int
    gens: Tuple[Tuple[int, ...], ...]
    field: Field = QQ
    label: Optional[str] = None

    def ideal(self) -> MonomialIdeal:
        return minimalize(self.gens, PolyContext(self.nvars, self.field))

    @classmethod
    def from_ideal(cls, I: MonomialIdeal, label=None) -> "IdealDocument":
        return cls(I.nvars, tuple(I.gens), I.field, label)


def _parse_monomial(text: str, nvars: int, lineno: int, col0: int):
    exps = [0] * nvars
    if text.strip() == "1":
        return tuple(exps)
    pos = 0
    for part in text.split("*"):
        col = col0 + pos + (len(part) - len(part.lstrip()))
        tok = part.strip()
        pos += len(part) + 1
        if not tok:
            raise ParseError("empty factor", lineno, col)
        m = _FACTOR.match(tok)
        if not m:
            raise ParseError(f"cannot parse factor {tok!r}; expected x<i> or x<i>^<e>", lineno, col)
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e < 0:
            raise ParseError(f"negative exponent in {tok!r}", lineno, col)
        if not 1 <= i <= nvars:
            raise ParseError(f"variable x{i} out of range 1..{nvars}", lineno, col)
        exps[i - 1] += e
    return tuple(exps)


def _parse_symbolic(text: str) -> IdealDocument:
    nvars = None
    field = QQ
    label = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        stripped = line.strip()
        if ":" in stripped:
            key, _, value = stripped.partition(":")
            key = key.strip().lower()
            value = value.strip()
            if gens:
                raise ParseError(f"header {key!r} after generators", lineno, col0)
            if key == "vars":
                try:
                    nvars = int(value)
                except ValueError:
                    raise ParseError(f"bad variable count {value!r}", lineno, col0) from None
                if nvars < 1:
                    raise ParseError("variable count must be >= 1", lineno, col0)
            elif key == "field":
                try:
                    field = Field.parse(value)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, col0) from None
            elif key == "label":
                label = value
            else:
                raise ParseError(f"unknown header {key!r}", lineno, col0)
            continue
        if nvars is None:
            raise ParseError("missing 'vars: <n>' header before generators", lineno, col0)
        gens.append(_parse_monomial(line.rstrip(), nvars, lineno, 1))
    if nvars is None:
        raise ParseError("missing 'vars: <n>' header")
    return IdealDocument(nvars, tuple(gens), field, label)


def _parse_structured(text: str) -> IdealDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or "nvars" not in obj or "gens" not in obj:
        raise ParseError("structured ideal must be an object with 'nvars' and 'gens'")
    nvars = obj["nvars"]
    if not isinstance(nvars, int) or nvars < 1:
        raise ParseError("'nvars' must be a positive integer")
    gens = []
    for i, g in enumerate(obj["gens"]):
        if not isinstance(g, list) or not all(isinstance(x, int) for x in g):
            raise ParseError(f"generator {i} is not an integer array")
        if len(g) != nvars:
            raise ParseError(f"generator {i} has length {len(g)}, expected {nvars}")
        if any(x < 0 for x in g):
            raise ParseError(f"negative exponent in generator {i}")
        gens.append(tuple(g))
    try:
        field = Field.parse(obj.get("field", "rational"))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return IdealDocument(nvars, tuple(gens), field, obj.get("label"))


def parse_ideal(text: str) -> IdealDocument:
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_symbolic(text)


def serialize(doc: IdealDocument, form: str = "symbolic") -> str:
    if form == "json":
        obj = {"nvars": doc.nvars, "gens": [list(g) for g in doc.gens], "field": str(doc.field)}
        if doc.label is not None:
            obj["label"] = doc.label
        return json.dumps(obj)
    lines = [f"vars: {doc.nvars}", f"field: {doc.field}"]
    if doc.label is not None:
        lines.append(f"label: {doc.label}")
    lines.extend(monomial_str(g) for g in doc.gens)
    return "\n".join(lines) + "\n"
