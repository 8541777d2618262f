"""Command-line interface and document formats.

Knot documents are JSON (UTF-8, nested maps/arrays, rationals as strings
"p/q").  A document is either a bare Seifert matrix:

    {"schema": "rhoslice.knot/1", "seifert": [[0, 1], [2, 0]]}

or a pattern with infection data, optionally a whole family:

    {
      "schema": "rhoslice.knot/1",
      "pattern": {"name": "9_46", "seifert": [[0, 1], [2, 0]],
                  "curves": [{"name": "alpha", "class": ["1", "0"]},
                             {"name": "beta",  "class": ["0", "1"]}]},
      "companions": {"alpha": {"symbol": "rA"}, "beta": {"symbol": "rB"}},
      "knots": {"K1": {"companions": {...}}},
      "family": [{"knot": "K1", "multiplicity": 1}]
    }

Companion values are {"symbol": name}, {"rho0": "p/q"},
{"rho0_interval": ["lo", "hi"]} or {"seifert": [[...]]} (signature integral
computed from the matrix).  Curve classes are rational strings or
serialized polynomials ({"coefficients": {"0": "1"}}).

Subcommands: info, obstruct, signature.  Exit codes for obstruct: 0 when
OBSTRUCTED, 2 when INCONCLUSIVE, 1 on errors.  The environment variable
RHOSLICE_PRECISION bounds the width of certified intervals (default
1/1000000).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .almodule import alexander_module
from .blanchfield import blanchfield_form
from .obstruction import (
    Companion,
    FamilyMember,
    FamilySpec,
    InfectedKnot,
    ObstructionError,
    verify_obstructed,
)
from .polyalg import LaurentPoly, PolyalgError
from .seifert import PatternKnot, SeifertError, SeifertMatrix, alexander_polynomial, metabolizer_search
from .signatures import SignatureError, precision_budget, rho0_from_signature, signature_function

SCHEMA = "rhoslice.knot/1"


class DocumentError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KnotDocument:
    """Parsed and validated knot description."""

    seifert: SeifertMatrix | None = None
    pattern: PatternKnot | None = None
    companions: tuple[tuple[str, dict], ...] = ()
    knots: tuple[tuple[str, "KnotEntry"], ...] = ()
    family: tuple[tuple[str, int], ...] = ()
    assembly: str = "difference-with-reverse"

    def to_json(self) -> dict:
        out: dict = {"schema": SCHEMA}
        if self.seifert is not None:
            out["seifert"] = self.seifert.to_json()
        if self.pattern is not None:
            out["pattern"] = _pattern_to_json(self.pattern)
        if self.companions:
            out["companions"] = {k: dict(v) for k, v in self.companions}
        if self.knots:
            out["knots"] = {name: entry.to_json() for name, entry in self.knots}
        if self.family:
            out["family"] = [{"knot": n, "multiplicity": m} for n, m in self.family]
        if self.assembly != "difference-with-reverse":
            out["assembly"] = self.assembly
        return out


@dataclass(frozen=True)
class KnotEntry:
    pattern: PatternKnot | None
    companions: tuple[tuple[str, dict], ...]

    def to_json(self) -> dict:
        out: dict = {"companions": {k: dict(v) for k, v in self.companions}}
        if self.pattern is not None:
            out["pattern"] = _pattern_to_json(self.pattern)
        return out


def _pattern_to_json(p: PatternKnot) -> dict:
    return {
        "name": p.name,
        "seifert": p.seifert.to_json(),
        "curves": [{"name": n, "class": [c.to_json() for c in vec]}
                   for n, vec in p.curves],
    }


def _require(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise DocumentError(f"{where}: {msg}")


def _parse_matrix(data, where: str) -> SeifertMatrix:
    _require(isinstance(data, list) and all(isinstance(r, list) for r in data),
             where, "expected a list of integer rows")
    for r in data:
        for x in r:
            _require(isinstance(x, int) and not isinstance(x, bool),
                     where, f"non-integer entry {x!r}")
    try:
        return SeifertMatrix(data)
    except SeifertError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def _parse_poly(data, where: str) -> LaurentPoly:
    try:
        return LaurentPoly.from_json(data, variable="s").rename("s")
    except (PolyalgError, ValueError) as exc:
        raise DocumentError(f"{where}: bad polynomial {data!r}: {exc}") from exc


def _parse_pattern(data, where: str) -> PatternKnot:
    _require(isinstance(data, dict), where, "expected an object")
    _require("seifert" in data, where, "missing 'seifert'")
    seifert = _parse_matrix(data["seifert"], f"{where}.seifert")
    curves_raw = data.get("curves", [])
    _require(isinstance(curves_raw, list), f"{where}.curves", "expected a list")
    curves = []
    for i, cv in enumerate(curves_raw):
        w = f"{where}.curves[{i}]"
        _require(isinstance(cv, dict) and "name" in cv and "class" in cv,
                 w, "expected {name, class}")
        vec = cv["class"]
        _require(isinstance(vec, list) and len(vec) == seifert.dim,
                 w, f"class must be a vector of length {seifert.dim}")
        curves.append((cv["name"], tuple(_parse_poly(x, w) for x in vec)))
    try:
        return PatternKnot(seifert, tuple(curves),
                           name=data.get("name", "pattern"))
    except SeifertError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


_COMPANION_KEYS = {"symbol", "rho0", "rho0_interval", "seifert"}


def _check_companion_spec(data, where: str) -> dict:
    _require(isinstance(data, dict), where, "expected an object")
    keys = set(data)
    _require(len(keys) == 1 and keys <= _COMPANION_KEYS, where,
             f"expected exactly one of {sorted(_COMPANION_KEYS)}")
    if "rho0" in data:
        try:
            Fraction(data["rho0"])
        except (ValueError, TypeError) as exc:
            raise DocumentError(f"{where}: bad rational {data['rho0']!r}") from exc
    if "rho0_interval" in data:
        iv = data["rho0_interval"]
        _require(isinstance(iv, list) and len(iv) == 2, where,
                 "interval must be [lo, hi]")
        lo, hi = Fraction(iv[0]), Fraction(iv[1])
        _require(lo <= hi, where, "interval lower end exceeds upper end")
    if "seifert" in data:
        _parse_matrix(data["seifert"], where)
    return data


def parse_document(data: dict) -> KnotDocument:
    _require(isinstance(data, dict), "document", "expected a JSON object")
    schema = data.get("schema", SCHEMA)
    _require(schema == SCHEMA, "schema", f"unsupported schema {schema!r}")
    known = {"schema", "seifert", "pattern", "companions", "knots", "family",
             "assembly"}
    for key in data:
        _require(key in known, key, "unknown field")
    seifert = pattern = None
    if "seifert" in data:
        seifert = _parse_matrix(data["seifert"], "seifert")
    if "pattern" in data:
        pattern = _parse_pattern(data["pattern"], "pattern")
    _require(seifert is not None or pattern is not None,
             "document", "needs 'seifert' or 'pattern'")
    _require(not (seifert is not None and pattern is not None),
             "document", "'seifert' and 'pattern' are mutually exclusive")

    curve_names = set(pattern.curve_names()) if pattern else set()

    def parse_companions(raw, where, names) -> tuple[tuple[str, dict], ...]:
        _require(isinstance(raw, dict), where, "expected an object")
        out = []
        for cname in sorted(raw):
            _require(cname in names, f"{where}.{cname}",
                     f"no such curve; pattern has {sorted(names)}")
            out.append((cname, _check_companion_spec(raw[cname],
                                                     f"{where}.{cname}")))
        return tuple(out)

    companions = parse_companions(data.get("companions", {}), "companions",
                                  curve_names) if pattern else ()

    knots = []
    for name in sorted(data.get("knots", {})):
        entry_raw = data["knots"][name]
        w = f"knots.{name}"
        _require(isinstance(entry_raw, dict), w, "expected an object")
        entry_pattern = (_parse_pattern(entry_raw["pattern"], f"{w}.pattern")
                         if "pattern" in entry_raw else None)
        local_names = (set(entry_pattern.curve_names()) if entry_pattern
                       else curve_names)
        entry_comp = parse_companions(entry_raw.get("companions", {}),
                                      f"{w}.companions", local_names)
        knots.append((name, KnotEntry(entry_pattern, entry_comp)))

    family = []
    raw_family = data.get("family", [])
    _require(isinstance(raw_family, list), "family", "expected a list")
    knot_names = {name for name, _ in knots}
    for i, m in enumerate(raw_family):
        w = f"family[{i}]"
        _require(isinstance(m, dict) and "knot" in m and "multiplicity" in m,
                 w, "expected {knot, multiplicity}")
        _require(m["knot"] in knot_names, w,
                 f"unresolved knot name {m['knot']!r}")
        mult = m["multiplicity"]
        _require(isinstance(mult, int) and mult != 0, w,
                 "multiplicity must be a nonzero integer")
        family.append((m["knot"], mult))
    _require(not family or pattern is not None, "family",
             "family documents need a default pattern")

    assembly = data.get("assembly", "difference-with-reverse")
    _require(assembly in ("difference-with-reverse", "bare"), "assembly",
             "must be 'difference-with-reverse' or 'bare'")

    return KnotDocument(seifert=seifert, pattern=pattern,
                        companions=companions, knots=tuple(knots),
                        family=tuple(family), assembly=assembly)


def load_document(path: str) -> KnotDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc
    return parse_document(data)


def render_document(doc: KnotDocument) -> str:
    return json.dumps(doc.to_json(), sort_keys=True, indent=2) + "\n"


def _build_companion(name: str, spec: dict) -> Companion:
    if "symbol" in spec:
        return Companion.symbol(spec["symbol"])
    if "rho0" in spec:
        return Companion.exact(name, Fraction(spec["rho0"]))
    if "rho0_interval" in spec:
        lo, hi = spec["rho0_interval"]
        return Companion.interval(name, Fraction(lo), Fraction(hi))
    return Companion.from_seifert(name, SeifertMatrix(spec["seifert"]))


def family_spec(doc: KnotDocument) -> FamilySpec:
    if doc.pattern is None:
        raise DocumentError("obstruction needs a pattern document")
    with_reverse = doc.assembly != "bare"

    def infected(pattern: PatternKnot, companions) -> InfectedKnot:
        comp_map = {cname: _build_companion(cname, spec)
                    for cname, spec in companions}
        return InfectedKnot.build(pattern, comp_map)

    if doc.family:
        entries = dict(doc.knots)
        members = []
        names = []
        for knot_name, mult in doc.family:
            entry = entries[knot_name]
            pattern = entry.pattern or doc.pattern
            members.append(FamilyMember(infected(pattern, entry.companions),
                                        mult, with_reverse=with_reverse))
            names.append(knot_name)
        return FamilySpec(tuple(members), tuple(names))
    member = FamilyMember(infected(doc.pattern, doc.companions), 1,
                          with_reverse=with_reverse)
    return FamilySpec((member,), ("K",))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _doc_matrix(doc: KnotDocument) -> SeifertMatrix:
    return doc.seifert if doc.seifert is not None else doc.pattern.seifert


def cmd_info(args) -> int:
    doc = load_document(args.file)
    target = doc.pattern if doc.pattern is not None else _doc_matrix(doc)
    V = _doc_matrix(doc)
    delta = alexander_polynomial(V)
    module = alexander_module(target)
    form, _dec = blanchfield_form(target)
    metab = metabolizer_search(V) if V.dim == 2 else None

    if args.output == "structured":
        out = {
            "schema": "rhoslice.info/1",
            "alexander_polynomial": delta.to_json(),
            "module": module.to_json(),
            "gram": [[z.to_json() for z in row] for row in form.gram],
            "metabolizer": list(metab) if metab else None,
        }
        print(json.dumps(out, sort_keys=True, indent=2))
        return 0
    print(f"Alexander polynomial: {delta}")
    print(f"Module: {module}")
    if module.summands:
        print("Generators: " + ", ".join(s.label for s in module.summands))
    print("Linking form Gram matrix:")
    for row in form.gram:
        print("  [" + ", ".join(str(z) for z in row) + "]")
    if V.dim == 2:
        print(f"Genus-one metabolizer: {metab if metab else 'none'}")
    return 0


def cmd_obstruct(args) -> int:
    doc = load_document(args.file)
    spec = family_spec(doc)
    report = verify_obstructed(spec, args.cmax, mode=args.mode)
    if args.output == "structured":
        print(json.dumps(report.to_json(), sort_keys=True, indent=2))
    else:
        print(f"verdict: {report.verdict} (c <= {report.c_max}, {report.mode})")
        if report.uniform_in_c:
            print("uniform-in-c certificate: expressions independent of the "
                  "complexity across the sweep")
        print(f"{len(report.cells)} (complexity, pattern) cells:")
        for cell in report.cells:
            status = "nonzero" if cell.nonvanishing else "VANISHING"
            support = ", ".join(cell.support)
            print(f"  c={cell.complexity} class=({cell.prime}) "
                  f"support={{{support}}} rho = {cell.rho} [{status}]")
        if report.witnesses:
            w = report.witnesses[0]
            print(f"witness: c={w.complexity} support={list(w.support)} "
                  f"rho = {w.rho}")
        print("audit trail:")
        for line in report.audit:
            print(f"  {line}")
        for line in report.notes:
            print(f"note: {line}")
    return 0 if report.obstructed else 2


def cmd_signature(args) -> int:
    doc = load_document(args.file)
    V = _doc_matrix(doc)
    sf = signature_function(V)
    rho = rho0_from_signature(sf, precision_budget())
    if args.emit == "jumps":
        out = {
            "schema": "rhoslice.signature/1",
            **sf.to_json(),
            "rho0": rho.to_json(),
        }
        print(json.dumps(out, sort_keys=True, indent=2))
        return 0
    print("arc values on (0, 1/2] by increasing angle:")
    labels = []
    prev = "0"
    for r in sf.roots:
        here = str(r.angle) if r.angle is not None else \
            f"angle(x in [{r.x_interval[0]}, {r.x_interval[1]}])"
        labels.append((prev, here))
        prev = here
    labels.append((prev, "1/2"))
    for (lo, hi), v in zip(labels, sf.arc_values):
        print(f"  ({lo}, {hi}): {v}")
    print(f"signature integral: {rho}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rhoslice",
        description="Exact sliceness obstructions for satellite knots")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="module, linking form, metabolizer")
    p_info.add_argument("file")
    p_info.add_argument("--output", choices=("text", "structured"),
                        default="text")
    p_info.set_defaults(func=cmd_info)

    p_ob = sub.add_parser("obstruct", help="run the obstruction sweep")
    p_ob.add_argument("file")
    p_ob.add_argument("--cmax", type=int, default=5,
                      help="complexity sweep bound (default 5)")
    p_ob.add_argument("--mode", choices=("symbolic", "numeric"),
                      default="symbolic")
    p_ob.add_argument("--output", choices=("text", "structured"),
                      default="text")
    p_ob.set_defaults(func=cmd_obstruct)

    p_sig = sub.add_parser("signature", help="signature jumps and integral")
    p_sig.add_argument("file")
    p_sig.add_argument("--emit", choices=("jumps", "table"), default="jumps")
    p_sig.set_defaults(func=cmd_signature)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, ObstructionError, SeifertError, SignatureError,
            PolyalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
