"""Surface model files and the divisor mini-language.

A model file is JSON with a fixed schema (version 1):

    {
      "schema": 1,
      "name": "hirzebruch_f2",
      "gram": [[0, 1], [1, -2]],
      "canonical": [-4, -2],
      "curves": [{"name": "f", "coords": [1, 0]},
                 {"name": "s", "coords": [0, 1]}],
      "ample_reference": [3, 1],
      "notes": "optional free text"
    }

All numeric entries are integers. Unknown keys are rejected so that typos
fail loudly instead of silently dropping data. Divisors on the command line
are either coordinate lists ("3/2,-1") or expressions in curve names and K
("2*s + f - K").
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence, Union

from .errors import ParseError, UnknownCurveName
from .surface import DivisorClass, SurfaceModel

SCHEMA_VERSION = 1

_TOP_REQUIRED = ("schema", "name", "gram", "canonical", "curves")
_TOP_OPTIONAL = ("ample_reference", "notes")
_CURVE_REQUIRED = ("name", "coords")
_CURVE_OPTIONAL = ("effective",)


def _fail(origin: str, path: str, message: str) -> ParseError:
    where = f"{origin}: {path}: " if path else f"{origin}: "
    return ParseError(where + message)


def _as_int(value, origin: str, path: str) -> int:
    # bool is an int subclass; a bare true/false in a matrix is a mistake.
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(origin, path, f"expected an integer, got {value!r}")
    return value


def _int_vector(value, origin: str, path: str) -> list[int]:
    if not isinstance(value, list):
        raise _fail(origin, path, "expected a list of integers")
    return [_as_int(v, origin, f"{path}[{i}]") for i, v in enumerate(value)]


def surface_from_data(data, origin: str = "<data>") -> SurfaceModel:
    """Validate a decoded JSON object and build the model."""
    if not isinstance(data, dict):
        raise _fail(origin, "", "top level must be a JSON object")
    unknown = sorted(set(data) - set(_TOP_REQUIRED) - set(_TOP_OPTIONAL))
    if unknown:
        raise _fail(origin, unknown[0], "unknown field")
    for key in _TOP_REQUIRED:
        if key not in data:
            raise _fail(origin, key, "missing required field")
    if data["schema"] != SCHEMA_VERSION:
        raise _fail(
            origin, "schema",
            f"unsupported schema {data['schema']!r}; this reader handles {SCHEMA_VERSION}",
        )
    if not isinstance(data["name"], str) or not data["name"]:
        raise _fail(origin, "name", "expected a nonempty string")
    gram_raw = data["gram"]
    if not isinstance(gram_raw, list) or not gram_raw:
        raise _fail(origin, "gram", "expected a nonempty list of rows")
    gram = [_int_vector(row, origin, f"gram[{i}]") for i, row in enumerate(gram_raw)]
    rank = len(gram)
    for i, row in enumerate(gram):
        if len(row) != rank:
            raise _fail(origin, f"gram[{i}]", f"expected {rank} entries, got {len(row)}")
    canonical = _int_vector(data["canonical"], origin, "canonical")
    if len(canonical) != rank:
        raise _fail(origin, "canonical", f"expected {rank} entries, got {len(canonical)}")
    if not isinstance(data["curves"], list):
        raise _fail(origin, "curves", "expected a list of curve objects")
    curves = []
    for i, entry in enumerate(data["curves"]):
        path = f"curves[{i}]"
        if not isinstance(entry, dict):
            raise _fail(origin, path, "expected an object")
        bad = sorted(set(entry) - set(_CURVE_REQUIRED) - set(_CURVE_OPTIONAL))
        if bad:
            raise _fail(origin, f"{path}.{bad[0]}", "unknown field")
        for key in _CURVE_REQUIRED:
            if key not in entry:
                raise _fail(origin, f"{path}.{key}", "missing required field")
        if not isinstance(entry["name"], str):
            raise _fail(origin, f"{path}.name", "expected a string")
        coords = _int_vector(entry["coords"], origin, f"{path}.coords")
        if len(coords) != rank:
            raise _fail(
                origin, f"{path}.coords", f"expected {rank} entries, got {len(coords)}"
            )
        effective = entry.get("effective", True)
        if not isinstance(effective, bool):
            raise _fail(origin, f"{path}.effective", "expected true or false")
        curves.append((entry["name"], coords, effective))
    ample = None
    if "ample_reference" in data:
        ample = _int_vector(data["ample_reference"], origin, "ample_reference")
        if len(ample) != rank:
            raise _fail(
                origin, "ample_reference", f"expected {rank} entries, got {len(ample)}"
            )
    if "notes" in data and not isinstance(data["notes"], str):
        raise _fail(origin, "notes", "expected a string")
    return SurfaceModel.create(
        name=data["name"],
        gram=gram,
        canonical=canonical,
        curves=curves,
        ample_reference=ample,
    )


def surface_to_data(model: SurfaceModel) -> dict:
    """Inverse of surface_from_data, for round trips and generated files."""
    data = {
        "schema": SCHEMA_VERSION,
        "name": model.name,
        "gram": [[int(x) for x in row] for row in model.gram],
        "canonical": [int(x) for x in model.canonical],
        "curves": [
            {"name": c.name, "coords": list(c.coords)}
            | ({} if c.effective else {"effective": False})
            for c in model.curves
        ],
    }
    if model.ample_reference is not None:
        data["ample_reference"] = [int(x) for x in model.ample_reference]
    return data


def load_surface_file(path: Union[str, os.PathLike]) -> SurfaceModel:
    origin = os.fspath(path)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ParseError(f"{origin}: cannot read file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{origin}: invalid JSON: {exc}") from exc
    return surface_from_data(data, origin=origin)


def fixture_names() -> tuple[str, ...]:
    root = resources.files(__package__) / "fixtures"
    names = [
        entry.name[: -len(".json")]
        for entry in root.iterdir()
        if entry.name.endswith(".json")
    ]
    return tuple(sorted(names))


def load_fixture(name: str) -> SurfaceModel:
    root = resources.files(__package__) / "fixtures"
    entry = root / f"{name}.json"
    try:
        text = entry.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as exc:
        known = ", ".join(fixture_names())
        raise ParseError(
            f"no bundled surface named {name!r}; available: {known}"
        ) from exc
    return surface_from_data(json.loads(text), origin=f"fixture:{name}")


def load_surface(spec: str) -> SurfaceModel:
    """Resolve a --surface argument: an existing file path wins, otherwise
    the name of a bundled fixture."""
    if os.path.exists(spec):
        return load_surface_file(spec)
    if re.fullmatch(r"[A-Za-z0-9_\-]+", spec):
        return load_fixture(spec)
    raise ParseError(f"{spec}: no such file")


# -- divisor expressions -----------------------------------------------------

_COORD_RE = re.compile(r"[+\-]?\s*\d+(?:/\d+)?(?:\s*,\s*[+\-]?\s*\d+(?:/\d+)?)*")
_TERM_RE = re.compile(
    r"\s*(?P<sign>[+\-])?\s*"
    r"(?:(?P<coeff>\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
)


def _parse_coords(model: SurfaceModel, text: str) -> DivisorClass:
    parts = [p.strip().replace(" ", "") for p in text.split(",")]
    if len(parts) != model.rank:
        raise ParseError(
            f"divisor {text!r}: expected {model.rank} coordinates, got {len(parts)}"
        )
    try:
        return model.divisor([Fraction(p) for p in parts])
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"divisor {text!r}: {exc}") from exc


def parse_divisor(model: SurfaceModel, text: str) -> DivisorClass:
    """Parse "0", "K", a coordinate list, or a curve-name expression."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("divisor expression is empty")
    if stripped == "0":
        return model.zero_divisor()
    if _COORD_RE.fullmatch(stripped):
        return _parse_coords(model, stripped)
    total = model.zero_divisor()
    pos = 0
    first = True
    while pos < len(stripped):
        match = _TERM_RE.match(stripped, pos)
        if not match:
            raise ParseError(
                f"divisor {text!r}: cannot read a term at position {pos}"
            )
        if not first and match.group("sign") is None:
            raise ParseError(
                f"divisor {text!r}: missing + or - before position {match.start('name')}"
            )
        coeff = Fraction(match.group("coeff") or 1)
        if match.group("sign") == "-":
            coeff = -coeff
        name = match.group("name")
        if name == "K":
            base = model.canonical_class
        else:
            try:
                base = model.curve_divisor(model.curve_index(name))
            except UnknownCurveName:
                known = ", ".join(c.name for c in model.curves)
                raise UnknownCurveName(
                    f"divisor {text!r}: unknown name {name!r}; "
                    f"curve names are {known}, plus K"
                ) from None
        total = total + coeff * base
        pos = match.end()
        first = False
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    return total


def parse_curve_list(model: SurfaceModel, text: str) -> tuple[int, ...]:
    """Comma-separated curve names to sorted curve indices."""
    names = [p.strip() for p in text.split(",") if p.strip()]
    if not names:
        raise ParseError("curve list is empty")
    return tuple(sorted(model.curve_index(n) for n in names))
