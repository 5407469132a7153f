"""TOML problem files: curves, morphisms, divisors and points by name.

::

    field = "QQ"                      # or "GF(p)"

    [curve.X]
    vars = ["x", "y"]
    ideal = ["y^2 - x^4"]

    [morphism.pi]
    source = "X"
    target = "Y"
    map = { s = "x^2", t = "y" }

    [divisor.D]
    curve = "X"
    ideal = ["x^2", "y"]
    minus = ["x"]                     # optional, must be Cartier

    [point.P0]
    curve = "X"
    coords = ["0", "0"]
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .curvemodel import Curve, RationalPoint, ValidationError, validate_curve, validate_point
from .divisors import GeneralizedDivisor, make_effective, make_generalized, zero_divisor
from .finitemap import FiniteMorphism, build_morphism
from .polyring import Field, PolySyntaxError

_NAME = re.compile(r"[A-Za-z0-9_-]+")


class ProblemFormatError(ValueError):
    """Malformed document: bad TOML, missing keys, syntax errors, dangling names."""


@dataclass
class Problem:
    field: Field
    curves: dict[str, Curve] = field(default_factory=dict)
    morphisms: dict[str, FiniteMorphism] = field(default_factory=dict)
    divisors: dict[str, GeneralizedDivisor] = field(default_factory=dict)
    points: dict[str, RationalPoint] = field(default_factory=dict)

    def curve(self, name: str) -> Curve:
        return _lookup(self.curves, name, "curve")

    def morphism(self, name: str) -> FiniteMorphism:
        return _lookup(self.morphisms, name, "morphism")

    def divisor(self, name: str) -> GeneralizedDivisor:
        return _lookup(self.divisors, name, "divisor")

    def point(self, name: str) -> RationalPoint:
        return _lookup(self.points, name, "point")


def _lookup(table: dict, name: str, kind: str):
    try:
        return table[name]
    except KeyError:
        known = ", ".join(sorted(table)) or "none"
        raise ProblemFormatError(f"unknown {kind} {name!r} (known: {known})") from None


def _table(doc: dict, key: str) -> dict:
    t = doc.get(key, {})
    if not isinstance(t, dict):
        raise ProblemFormatError(f"[{key}] must be a table")
    for name in t:
        if not _NAME.fullmatch(name):
            raise ProblemFormatError(f"invalid {key} name {name!r}")
    return t


def _require(entry: dict, key: str, where: str, kind=None):
    if key not in entry:
        raise ProblemFormatError(f"{where}: missing key {key!r}")
    value = entry[key]
    if kind is not None and not isinstance(value, kind):
        raise ProblemFormatError(f"{where}: {key!r} has the wrong type")
    return value


def _string_list(value, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ProblemFormatError(f"{where}: expected an array of strings")
    return value


def parse_problem(text: str) -> Problem:
    """Build and validate every object in a problem document.

    Syntax and reference errors raise :class:`ProblemFormatError`; mathematical
    validation failures raise :class:`~gendiv.curvemodel.ValidationError`.
    """
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ProblemFormatError(f"invalid TOML: {exc}") from exc
    try:
        return _build(doc)
    except PolySyntaxError as exc:
        raise ProblemFormatError(str(exc)) from exc


def _build(doc: dict) -> Problem:
    field_name = _require(doc, "field", "document", str)
    try:
        K = Field.parse(field_name)
    except ValueError as exc:
        raise ProblemFormatError(str(exc)) from exc
    prob = Problem(K)

    for name, entry in _table(doc, "curve").items():
        where = f"curve.{name}"
        vars_ = _string_list(_require(entry, "vars", where), where)
        gens = _string_list(entry.get("ideal", []), where)
        try:
            prob.curves[name] = validate_curve(vars_, gens, K, name=name)
        except (ValidationError, PolySyntaxError):
            raise
        except ValueError as exc:  # bad variable declarations
            raise ProblemFormatError(f"{where}: {exc}") from exc

    for name, entry in _table(doc, "morphism").items():
        where = f"morphism.{name}"
        src = prob.curve(_require(entry, "source", where, str))
        tgt = prob.curve(_require(entry, "target", where, str))
        mapping = _require(entry, "map", where, dict)
        if not all(isinstance(v, str) for v in mapping.values()):
            raise ProblemFormatError(f"{where}: map values must be strings")
        prob.morphisms[name] = build_morphism(src, tgt, mapping, name=name)

    for name, entry in _table(doc, "divisor").items():
        where = f"divisor.{name}"
        C = prob.curve(_require(entry, "curve", where, str))
        plus = make_effective(C, _string_list(_require(entry, "ideal", where), where))
        if "minus" in entry:
            minus = make_effective(C, _string_list(entry["minus"], where))
        else:
            minus = zero_divisor(C)
        prob.divisors[name] = make_generalized(plus, minus)

    for name, entry in _table(doc, "point").items():
        where = f"point.{name}"
        C = prob.curve(_require(entry, "curve", where, str))
        coords = _require(entry, "coords", where, list)
        try:
            vals = [Fraction(c) if isinstance(c, (str, int)) else None for c in coords]
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemFormatError(f"{where}: bad coordinate ({exc})") from exc
        if None in vals:
            raise ProblemFormatError(f"{where}: coordinates must be integers or strings")
        prob.points[name] = validate_point(C, vals)
    return prob


def _bundled(name: str) -> Path | None:
    ref = resources.files("gendiv") / "fixtures" / name
    return Path(str(ref)) if ref.is_file() else None


def resolve_path(path: str | Path) -> Path:
    """``path`` itself, or a bundled fixture of that file name."""
    p = Path(path)
    if p.is_file():
        return p
    bundled = _bundled(p.name) or _bundled(p.name + ".toml")
    if bundled is None:
        raise FileNotFoundError(f"no such problem file: {path}")
    return bundled


def load_problem(path: str | Path) -> Problem:
    return parse_problem(resolve_path(path).read_text())


def bundled_fixtures() -> dict[str, Path]:
    root = resources.files("gendiv") / "fixtures"
    return {
        Path(str(p)).stem: Path(str(p))
        for p in sorted(root.iterdir(), key=lambda p: p.name)
        if p.name.endswith(".toml")
    }


# ---------------------------------------------------------------------------
# canonical dump


def _q(s: str) -> str:
    return json.dumps(s)


def _arr(items) -> str:
    return "[" + ", ".join(_q(s) for s in items) + "]"


def _ideal_strings(ideal) -> list[str]:
    return [str(g) for g in ideal.basis]


def _scalar(K: Field, c) -> str:
    v = K.signed(c)
    return str(Fraction(v))


def dump_problem(prob: Problem) -> str:
    out = [f"field = {_q(str(prob.field))}", ""]
    for name in sorted(prob.curves):
        C = prob.curves[name]
        out += [f"[curve.{name}]", f"vars = {_arr(C.variables)}", f"ideal = {_arr(_ideal_strings(C.ideal))}", ""]
    for name in sorted(prob.morphisms):
        m = prob.morphisms[name]
        body = ", ".join(f"{v} = {_q(str(p))}" for v, p in m.images.items())
        out += [
            f"[morphism.{name}]",
            f"source = {_q(m.source.name)}",
            f"target = {_q(m.target.name)}",
            f"map = {{ {body} }}",
            "",
        ]
    for name in sorted(prob.divisors):
        D = prob.divisors[name]
        out += [f"[divisor.{name}]", f"curve = {_q(D.curve.name)}", f"ideal = {_arr(_ideal_strings(D.plus.ideal))}"]
        if not D.minus.ideal.is_unit():
            out.append(f"minus = {_arr(_ideal_strings(D.minus.ideal))}")
        out.append("")
    for name in sorted(prob.points):
        P = prob.points[name]
        coords = [_scalar(P.curve.field, c) for c in P.coords]
        out += [f"[point.{name}]", f"curve = {_q(P.curve.name)}", f"coords = {_arr(coords)}", ""]
    return "\n".join(out).rstrip() + "\n"
