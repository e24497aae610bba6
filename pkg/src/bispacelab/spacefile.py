"""User-supplied bispace documents: a small JSON-shaped format.

A document describes either a finite bispace (carrier size plus two open-set
lists given as sorted point arrays) or a symbolic one (atom list with
cardinality tags plus two region/mandatory family descriptions), optionally
with named sets and claims. Claims reuse the catalog claim vocabulary; a
document without claims gets the default battery (every set predicate on
every named set, values recorded).

Grammar sketch (JSON subset):

    document  = finite | symbolic
    finite    = { "kind": "finite", "carrier": int,
                  "opens1": [[int*]*], "opens2": [[int*]*],
                  sets?, claims? }
    symbolic  = { "kind": "symbolic", "atoms": [atom+],
                  "family1": family, "family2": family,
                  sets?, claims? }
    atom      = { "id": string, "cardinality": "singleton" | "countable"
                  | "uncountable", "label"?: string }
    family    = { "region": [string*], "mandatory": [string*] }
    sets      = "sets": { name: [int* | string*] }
    claims    = "claims": [ { "predicate": string, "set"?: name | [..],
                  "set2"?, "witness"?, "pair"?: [int, int], "space"?: int,
                  "expected"?: bool | [..], "note"?: string } ]
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .catalog import CatalogEntry, Claim, verify_entry
from .finite import FiniteSpace, PointSet, SpaceAxiomError
from .props import Bispace
from .reports import Report
from .symbolic import Atom, AtomUniverse, Cardinality, SchematicFamily

_CARDINALITIES = {
    "singleton": Cardinality.SINGLETON,
    "countable": Cardinality.COUNTABLE,
    "uncountable": Cardinality.UNCOUNTABLE,
}

# Claims a user file may make (map predicates need a map, which files
# cannot describe). pcl/spcl and semipreopen witnesses are algebra-relative
# on symbolic documents and flagged as such in the report.
FILE_PREDICATES = (
    "is_open",
    "closure",
    "interior",
    "limit_points",
    "open_between",
    "is_countable",
    "is_preopen",
    "is_weakly_preopen",
    "is_ij_preopen",
    "is_ij_weakly_preopen",
    "is_pairwise_preopen",
    "is_ij_semiopen",
    "is_ij_semipreopen",
    "is_ij_preclosed",
    "is_ij_semipreclosed",
    "pcl",
    "spcl",
    "closed_supersets_interior",
    "semipreopen_witness_valid",
)

_BATTERY = (
    ("is_open", {"space": 1}),
    ("is_open", {"space": 2}),
    ("closure", {"space": 1}),
    ("closure", {"space": 2}),
    ("interior", {"space": 1}),
    ("interior", {"space": 2}),
    ("is_preopen", {"space": 1}),
    ("is_preopen", {"space": 2}),
    ("is_weakly_preopen", {"space": 1}),
    ("is_weakly_preopen", {"space": 2}),
    ("is_ij_preopen", {"pair": (1, 2)}),
    ("is_ij_preopen", {"pair": (2, 1)}),
    ("is_ij_weakly_preopen", {"pair": (1, 2)}),
    ("is_ij_weakly_preopen", {"pair": (2, 1)}),
    ("is_pairwise_preopen", {}),
    ("is_ij_semiopen", {"pair": (1, 2)}),
    ("is_ij_semiopen", {"pair": (2, 1)}),
    ("is_ij_semipreopen", {"pair": (1, 2)}),
    ("is_ij_semipreopen", {"pair": (2, 1)}),
    ("is_ij_preclosed", {"pair": (1, 2)}),
    ("is_ij_preclosed", {"pair": (2, 1)}),
    ("pcl", {"pair": (1, 2)}),
    ("pcl", {"pair": (2, 1)}),
    ("spcl", {"pair": (1, 2)}),
    ("spcl", {"pair": (2, 1)}),
)


class SpaceFileError(ValueError):
    """Unparseable or invalid space document, with a positioned message."""


def _fail(where: str, message: str):
    raise SpaceFileError(f"{where}: {message}")


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        _fail(where, f"missing required field {key!r}")
    return doc[key]


def _parse_finite(doc: dict, where: str) -> Bispace:
    carrier = _require(doc, "carrier", where)
    if not isinstance(carrier, int) or carrier < 1:
        _fail(f"{where}.carrier", "must be a positive integer")
    spaces = []
    for field in ("opens1", "opens2"):
        raw = _require(doc, field, where)
        if not isinstance(raw, list):
            _fail(f"{where}.{field}", "must be a list of point arrays")
        opens = []
        for idx, points in enumerate(raw):
            if not isinstance(points, list) or any(
                not isinstance(p, int) for p in points
            ):
                _fail(f"{where}.{field}[{idx}]", "must be an array of integers")
            try:
                opens.append(PointSet.of(carrier, points))
            except ValueError as e:
                _fail(f"{where}.{field}[{idx}]", str(e))
        try:
            spaces.append(FiniteSpace(carrier, opens))
        except SpaceAxiomError as e:
            _fail(f"{where}.{field}", f"axiom {e.axiom}: {e}")
    return Bispace(spaces[0], spaces[1])


def _parse_symbolic(doc: dict, where: str) -> Bispace:
    raw_atoms = _require(doc, "atoms", where)
    if not isinstance(raw_atoms, list) or not raw_atoms:
        _fail(f"{where}.atoms", "must be a nonempty list")
    atoms = []
    for idx, a in enumerate(raw_atoms):
        if not isinstance(a, dict):
            _fail(f"{where}.atoms[{idx}]", "must be an object")
        aid = a.get("id")
        if not isinstance(aid, str) or not aid:
            _fail(f"{where}.atoms[{idx}].id", "must be a nonempty string")
        card = a.get("cardinality")
        if card not in _CARDINALITIES:
            _fail(
                f"{where}.atoms[{idx}].cardinality",
                f"must be one of {sorted(_CARDINALITIES)}, got {card!r}",
            )
        atoms.append(Atom(aid, _CARDINALITIES[card], a.get("label", "")))
    try:
        universe = AtomUniverse(atoms)
    except ValueError as e:
        _fail(f"{where}.atoms", str(e))
    families = []
    for field in ("family1", "family2"):
        raw = _require(doc, field, where)
        if not isinstance(raw, dict):
            _fail(f"{where}.{field}", "must be an object with region/mandatory")
        try:
            region = universe.subset(*raw.get("region", []))
            mandatory = universe.subset(*raw.get("mandatory", []))
        except KeyError as e:
            _fail(f"{where}.{field}", str(e.args[0]))
        try:
            families.append(SchematicFamily(universe, region, mandatory))
        except ValueError as e:
            _fail(f"{where}.{field}", str(e))
    return Bispace(families[0], families[1])


def _parse_sets(doc: dict, bispace: Bispace, where: str) -> dict:
    named = {}
    raw = doc.get("sets", {})
    if not isinstance(raw, dict):
        _fail(f"{where}.sets", "must be an object of name -> member list")
    backend = bispace.first
    for name, members in raw.items():
        if not isinstance(members, list):
            _fail(f"{where}.sets.{name}", "must be an array")
        try:
            if isinstance(backend, SchematicFamily):
                named[name] = backend.universe.subset(*members)
            else:
                named[name] = PointSet.of(backend.size, members)
        except (KeyError, ValueError) as e:
            _fail(f"{where}.sets.{name}", str(e.args[0] if e.args else e))
    return named


def _parse_claims(raw_claims, named: dict, symbolic: bool, where: str) -> list[Claim]:
    claims = []
    if not isinstance(raw_claims, list):
        _fail(where, "claims must be a list")
    for idx, c in enumerate(raw_claims):
        loc = f"{where}[{idx}]"
        if not isinstance(c, dict):
            _fail(loc, "must be an object")
        predicate = c.get("predicate")
        if predicate not in FILE_PREDICATES:
            _fail(
                f"{loc}.predicate",
                f"unknown or unsupported predicate {predicate!r}",
            )
        if predicate == "is_countable" and not symbolic:
            _fail(f"{loc}.predicate", "is_countable applies to symbolic documents")
        if predicate == "limit_points" and symbolic:
            _fail(f"{loc}.predicate", "limit_points applies to finite documents")
        args = {}
        for key in ("set", "set2", "witness"):
            if key in c:
                v = c[key]
                if isinstance(v, str) and v not in named:
                    _fail(f"{loc}.{key}", f"unknown named set {v!r}")
                args[key] = v
        if "pair" in c:
            pair = tuple(c["pair"])
            if pair not in ((1, 2), (2, 1)):
                _fail(f"{loc}.pair", "must be [1,2] or [2,1]")
            args["pair"] = pair
        if "space" in c:
            if c["space"] not in (1, 2):
                _fail(f"{loc}.space", "must be 1 or 2")
            args["space"] = c["space"]
        expected = c.get("expected")
        if isinstance(expected, list):
            expected = list(expected)
        claims.append(Claim(predicate, args, expected, c.get("note", "")))
    return claims


def parse_spacefile(text: str, name: str = "spacefile") -> CatalogEntry:
    """Parse a document into a verifiable entry; raise SpaceFileError if bad."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpaceFileError(
            f"{name}: line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    if not isinstance(doc, dict):
        _fail(name, "top level must be an object")
    kind = _require(doc, "kind", name)
    if kind == "finite":
        bispace = _parse_finite(doc, name)
    elif kind == "symbolic":
        bispace = _parse_symbolic(doc, name)
    else:
        _fail(f"{name}.kind", f"must be 'finite' or 'symbolic', got {kind!r}")
    named = _parse_sets(doc, bispace, name)
    raw_claims = doc.get("claims", [])
    claims = _parse_claims(raw_claims, named, kind == "symbolic", f"{name}.claims")
    if not claims:
        claims = [
            Claim(pred, {**base, "set": set_name})
            for set_name in named
            for pred, base in _BATTERY
        ]
    return CatalogEntry(
        f"file:{name}",
        f"user document ({kind})",
        "",
        bispace,
        named,
        tuple(claims),
    )


def check_user_file(path, claims_path: Optional[str] = None) -> Report:
    """Parse, validate, and verify a space document from disk.

    Claims from `claims_path` (an object with a "claims" list, or a bare
    list) are appended to the document's own claims; with neither, the
    default battery runs over all named sets.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpaceFileError(f"{path}: {e}") from None
    entry = parse_spacefile(text, path.name)
    if claims_path is not None:
        claims_file = Path(claims_path)
        try:
            raw = json.loads(claims_file.read_text(encoding="utf-8"))
        except OSError as e:
            raise SpaceFileError(f"{claims_file}: {e}") from None
        except json.JSONDecodeError as e:
            raise SpaceFileError(
                f"{claims_file.name}: line {e.lineno}, column {e.colno}: {e.msg}"
            ) from None
        raw_claims = raw.get("claims", raw) if isinstance(raw, dict) else raw
        extra = _parse_claims(
            raw_claims,
            entry.named_sets,
            entry.bispace.is_symbolic,
            f"{claims_file.name}.claims",
        )
        entry = CatalogEntry(
            entry.entry_id,
            entry.title,
            entry.note,
            entry.bispace,
            entry.named_sets,
            entry.claims + tuple(extra),
        )
    return verify_entry(entry)
