"""
Loading and saving T-category documents.

This module handles:
- JSON parsing with line and field-path diagnostics (DocumentError)
- Monad specifications and the per-monad JSON encoding of T-values
- Building TCatData from a presentation or an Eilenberg-Moore algebra
- Mutations (element deletions) applied to the built nerve
- Canonical serialization, so that serialize(parse(doc)) = canonical(doc)

T-values are encoded as follows:
- identity: the value itself
- maybe: null or the value
- writer: [monoid element, value]
- reader: the list of values in the sorted order of the index set
- list: the list of values
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from ..base_category.elements import NOTHING, ListOf, Tag, canonical_key, sort_canonical
from ..base_category.sets import FiniteSet, Morph, table
from ..monads.monad_engine import Monoid, builtin, reader_monad
from ..tcategories.nerve import nerve
from ..tcategories.simplicial import TSimplicialObject
from ..tcategories.tcat_core import TCatData, TGraph, algebra_tcat
from ..utils.errors import DocumentError, DomainError

logger = logging.getLogger(__name__)

MONAD_KINDS = ("identity", "maybe", "writer", "reader", "list")
TOP_LEVEL_KEYS = {"name", "monad", "tcategory", "algebra", "depth", "mutations"}
DEFAULT_NAME = "X"


@dataclass(frozen=True, eq=False)
class Workspace:
    """A parsed document: the monad, the presentation and what to do with its nerve."""

    name: str
    kind: str
    monad_kind: str
    monad: object
    data: TCatData
    depth: int | None = None
    mutations: tuple = ()
    algebra: tuple | None = field(default=None, repr=False)

    def build(self, depth):
        """The nerve truncated at depth, with the document's mutations applied."""
        X = nerve(self.data, depth)
        return apply_mutations(X, self.mutations)


def _fail(path, message):
    raise DocumentError(f"{path}: {message}")


def _expect(value, kind, path):
    if not isinstance(value, kind) or isinstance(value, bool):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        _fail(path, f"expected {names}, got {json.dumps(value)}")
    return value


def _atom(value, path):
    return _expect(value, (str, int), path)


def _keys(obj, required, optional, path):
    _expect(obj, dict, path)
    missing = [k for k in required if k not in obj]
    if missing:
        _fail(path, f"missing field {missing[0]!r}")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        _fail(path, f"unknown field {unknown[0]!r}")


def _unique_atoms(values, path):
    _expect(values, list, path)
    atoms = [_atom(v, f"{path}[{k}]") for k, v in enumerate(values)]
    if len(set(atoms)) != len(atoms):
        _fail(path, "duplicate entries")
    return atoms


# Monads

def parse_monad(spec, path="monad"):
    """
    Builds a Monad from {"kind": ..., "monoid": {...}?, "set": [...]?}.

    Returns:
        Tuple (kind, Monad)
    """
    _keys(spec, ["kind"], ["monoid", "set"], path)
    kind = spec["kind"]
    if kind not in MONAD_KINDS:
        _fail(f"{path}.kind", f"unknown monad {kind!r}, expected one of {', '.join(MONAD_KINDS)}")
    if kind == "writer":
        if "monoid" not in spec:
            _fail(path, "writer monad needs a monoid")
        return kind, builtin("writer", monoid=parse_monoid(spec["monoid"], f"{path}.monoid"))
    if kind == "reader":
        if "set" not in spec:
            _fail(path, "reader monad needs a set")
        index = _unique_atoms(spec["set"], f"{path}.set")
        if not index:
            _fail(f"{path}.set", "reader monad needs a non-empty set")
        return kind, reader_monad(sort_canonical(index))
    extra = sorted(set(spec) - {"kind"})
    if extra:
        _fail(path, f"field {extra[0]!r} is not used by the {kind} monad")
    return kind, builtin(kind)


def parse_monoid(spec, path):
    """Table rows are [a, b, a·b]; the monoid laws are checked (MonoidError)."""
    _keys(spec, ["elements", "unit", "table"], [], path)
    elements = _unique_atoms(spec["elements"], f"{path}.elements")
    unit = _atom(spec["unit"], f"{path}.unit")
    rows = _expect(spec["table"], list, f"{path}.table")
    products = {}
    for k, row in enumerate(rows):
        row_path = f"{path}.table[{k}]"
        if not isinstance(row, list) or len(row) != 3:
            _fail(row_path, "expected [a, b, product]")
        a, b, c = (_atom(v, row_path) for v in row)
        if (a, b) in products:
            _fail(row_path, f"second product for ({a}, {b})")
        products[(a, b)] = c
    return Monoid(sort_canonical(elements), unit, products).validate()


def decode_value(kind, monad, value, contains, path):
    """A JSON T-value as an element of T(X); contains tests membership in X."""
    def base(v, p):
        v = _atom(v, p)
        if not contains(v):
            _fail(p, f"{json.dumps(v)} is not declared")
        return v

    if kind == "identity":
        return base(value, path)
    if kind == "maybe":
        return NOTHING if value is None else Tag("just", base(value, path))
    if kind == "writer":
        if not isinstance(value, list) or len(value) != 2:
            _fail(path, "expected [monoid element, value]")
        if value[0] not in monad.monoid.elements:
            _fail(path, f"{json.dumps(value[0])} is not a monoid element")
        return (value[0], base(value[1], path))
    if kind == "reader":
        size = len(monad.index_set)
        if not isinstance(value, list) or len(value) != size:
            _fail(path, f"expected a list of {size} values")
        return tuple(base(v, f"{path}[{k}]") for k, v in enumerate(value))
    _expect(value, list, path)
    return ListOf(tuple(base(v, f"{path}[{k}]") for k, v in enumerate(value)))


def encode_value(kind, value):
    """Inverse of decode_value."""
    if kind == "identity":
        return value
    if kind == "maybe":
        return None if value == NOTHING else value.value
    if kind == "writer":
        return [value[0], value[1]]
    if kind == "reader":
        return list(value)
    return list(value.items)


# Presentations

def _parse_tcategory(spec, kind, T, name, path="tcategory"):
    _keys(spec, ["objects", "arrows"], ["comp", "unit"], path)
    objects = _unique_atoms(spec["objects"], f"{path}.objects")
    X0 = FiniteSet(sort_canonical(objects), f"{name}_0")

    # Step 1: arrows with target d0 and T-valued source d1
    arrows = _expect(spec["arrows"], list, f"{path}.arrows")
    targets, sources = {}, {}
    for k, arrow in enumerate(arrows):
        arrow_path = f"{path}.arrows[{k}]"
        _keys(arrow, ["name", "dom", "cod"], [], arrow_path)
        arrow_name = _atom(arrow["name"], f"{arrow_path}.name")
        if arrow_name in targets:
            _fail(f"{arrow_path}.name", f"duplicate arrow {arrow_name!r}")
        sources[arrow_name] = decode_value(kind, T, arrow["dom"], X0.contains, f"{arrow_path}.dom")
        cod = _atom(arrow["cod"], f"{arrow_path}.cod")
        if cod not in X0:
            _fail(f"{arrow_path}.cod", f"{json.dumps(cod)} is not an object")
        targets[arrow_name] = cod
    X1 = FiniteSet(sort_canonical(targets), f"{name}_1")
    d0 = table(X1, X0, targets, "d0")
    d1 = table(X1, T.obj(X0), sources, "d1")
    data = TCatData(TGraph(T, X0, X1, d0, d1, name))

    # Step 2: composition, one row per element of X2
    comp = None
    if "comp" in spec:
        X2 = data.X2().carrier
        rows = _expect(spec["comp"], list, f"{path}.comp")
        composites = {}
        for k, row in enumerate(rows):
            row_path = f"{path}.comp[{k}]"
            _keys(row, ["outer", "inner", "result"], [], row_path)
            outer = _atom(row["outer"], f"{row_path}.outer")
            inner = decode_value(kind, T, row["inner"], X1.contains, f"{row_path}.inner")
            result = _atom(row["result"], f"{row_path}.result")
            if (outer, inner) not in X2:
                _fail(row_path, "outer and inner arrows are not composable")
            if result not in X1:
                _fail(f"{row_path}.result", f"{json.dumps(result)} is not an arrow")
            if (outer, inner) in composites:
                _fail(row_path, "second composite for the same pair")
            composites[(outer, inner)] = result
        missing = [e for e in X2.elements if e not in composites]
        if missing:
            outer, inner = missing[0]
            _fail(f"{path}.comp", f"no composite for outer {outer!r} and inner {json.dumps(encode_value(kind, inner))}")
        comp = table(X2, X1, composites, "comp")

    # Step 3: units
    unit = None
    if "unit" in spec:
        units = _expect(spec["unit"], dict, f"{path}.unit")
        mapping = {}
        for obj in X0.elements:
            key = str(obj)
            if key not in units:
                _fail(f"{path}.unit", f"no unit for object {key!r}")
            arrow_name = _atom(units[key], f"{path}.unit.{key}")
            if arrow_name not in X1:
                _fail(f"{path}.unit.{key}", f"{json.dumps(arrow_name)} is not an arrow")
            mapping[obj] = arrow_name
        extra = sorted(set(units) - {str(obj) for obj in X0.elements})
        if extra:
            _fail(f"{path}.unit", f"{extra[0]!r} is not an object")
        unit = table(X0, X1, mapping, "unit")
    return TCatData(data.graph, comp, unit, data._derived)


def _parse_algebra(spec, kind, T, name, path="algebra"):
    _keys(spec, ["carrier", "action"], [], path)
    carrier = FiniteSet(sort_canonical(_unique_atoms(spec["carrier"], f"{path}.carrier")), f"{name}_A")
    rows = _expect(spec["action"], list, f"{path}.action")
    action = {}
    for k, row in enumerate(rows):
        row_path = f"{path}.action[{k}]"
        _keys(row, ["input", "output"], [], row_path)
        t = decode_value(kind, T, row["input"], carrier.contains, f"{row_path}.input")
        output = _atom(row["output"], f"{row_path}.output")
        if output not in carrier:
            _fail(f"{row_path}.output", f"{json.dumps(output)} is not in the carrier")
        if t in action:
            _fail(row_path, "second output for the same input")
        action[t] = output
    TA = T.obj(carrier)
    if not TA.is_finite:
        _fail(path, f"algebras need a finiteness-preserving monad, {T.name} is not")
    missing = [t for t in TA.elements if t not in action]
    if missing:
        _fail(f"{path}.action", f"no output for input {json.dumps(encode_value(kind, missing[0]))}")
    a = table(TA, carrier, action, "a")
    return algebra_tcat(carrier, a, T, name), (carrier, a)


def _parse_mutations(values, path="mutations"):
    _expect(values, list, path)
    mutations = []
    for k, mutation in enumerate(values):
        _keys(mutation, ["level", "index"], [], f"{path}[{k}]")
        level = _expect(mutation["level"], int, f"{path}[{k}].level")
        index = _expect(mutation["index"], int, f"{path}[{k}].index")
        if level < 0 or index < 0:
            _fail(f"{path}[{k}]", "level and index must be non-negative")
        mutations.append((level, index))
    return tuple(mutations)


def parse_document(text, source="<document>"):
    """
    Parses a document into a Workspace.

    Args:
        text: JSON text
        source: Name used in diagnostics

    Raises:
        DocumentError: on syntax or schema violations, with the line number
            or field path
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    _expect(doc, dict, source)
    unknown = sorted(set(doc) - TOP_LEVEL_KEYS)
    if unknown:
        _fail(source, f"unknown field {unknown[0]!r}")
    if "monad" not in doc:
        _fail(source, "missing field 'monad'")
    if ("tcategory" in doc) == ("algebra" in doc):
        _fail(source, "exactly one of 'tcategory' and 'algebra' is required")

    name = _expect(doc.get("name", DEFAULT_NAME), str, "name")
    kind, T = parse_monad(doc["monad"])
    depth = doc.get("depth")
    if depth is not None and _expect(depth, int, "depth") < 1:
        _fail("depth", "must be at least 1")
    mutations = _parse_mutations(doc.get("mutations", []))

    if "tcategory" in doc:
        data, algebra, shape = _parse_tcategory(doc["tcategory"], kind, T, name), None, "tcategory"
    else:
        (data, algebra), shape = _parse_algebra(doc["algebra"], kind, T, name), "algebra"
    logger.info("%s: parsed %s over %s (%d objects, %d arrows)", source, shape, T.name,
                len(data.graph.X0), len(data.graph.X1))
    return Workspace(name, shape, kind, T, data, depth, mutations, algebra)


def load_document(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
    return parse_document(text, str(path))


# Mutations

def apply_mutations(X, mutations):
    """
    Deletes the index-th element (canonical order) of the given levels.

    Maps into or out of a changed level are re-typed; values are unchanged.
    """
    if not mutations:
        return X
    levels = list(X.levels)
    for level, index in mutations:
        if level > X.depth:
            raise DomainError(f"mutation at level {level} is beyond depth {X.depth}")
        elements = levels[level].elements
        if index >= len(elements):
            raise DomainError(f"level {level} has no element {index}")
        levels[level] = FiniteSet(elements[:index] + elements[index + 1:], levels[level].name)
    replaced = {id(old): new for old, new in zip(X.levels, levels) if old is not new}

    def retype(f):
        dom, cod = replaced.get(id(f.dom), f.dom), replaced.get(id(f.cod), f.cod)
        return Morph(dom, cod, f.fn, f.label, f.kind)

    faces = {key: retype(f) for key, f in X.faces.items()}
    degeneracies = {key: retype(s) for key, s in X.degeneracies.items()}
    logger.info("%s: applied %d mutations", X.name, len(mutations))
    return TSimplicialObject(X.monad, tuple(levels), faces, degeneracies, X.name)


# Canonical form

def _dump_key(value):
    return json.dumps(value, sort_keys=True)


def _atom_key(value):
    return canonical_key(value)


def canonical_document(doc):
    """
    The canonical form of a raw document: default name filled in, lists in
    canonical order, empty optional sections dropped.
    """
    result = {"name": doc.get("name", DEFAULT_NAME), "monad": dict(doc["monad"])}
    monad = result["monad"]
    if "monoid" in monad:
        monoid = monad["monoid"]
        monad["monoid"] = {
            "elements": sorted(monoid["elements"], key=_atom_key),
            "unit": monoid["unit"],
            "table": sorted(monoid["table"], key=_dump_key),
        }
    if "set" in monad:
        monad["set"] = sorted(monad["set"], key=_atom_key)
    if "tcategory" in doc:
        spec = doc["tcategory"]
        tcat = {
            "objects": sorted(spec["objects"], key=_atom_key),
            "arrows": sorted(
                ({"name": a["name"], "dom": a["dom"], "cod": a["cod"]} for a in spec["arrows"]),
                key=lambda a: _atom_key(a["name"]),
            ),
        }
        if "comp" in spec:
            tcat["comp"] = sorted(spec["comp"], key=_dump_key)
        if "unit" in spec:
            tcat["unit"] = dict(sorted(spec["unit"].items()))
        result["tcategory"] = tcat
    else:
        spec = doc["algebra"]
        result["algebra"] = {
            "carrier": sorted(spec["carrier"], key=_atom_key),
            "action": sorted(spec["action"], key=_dump_key),
        }
    if doc.get("depth") is not None:
        result["depth"] = doc["depth"]
    if doc.get("mutations"):
        result["mutations"] = [{"level": m["level"], "index": m["index"]} for m in doc["mutations"]]
    return result


def serialize(workspace):
    """The canonical document of a parsed workspace."""
    kind, T = workspace.monad_kind, workspace.monad
    monad = {"kind": kind}
    if kind == "writer":
        M = T.monoid
        monad["monoid"] = {
            "elements": list(M.elements),
            "unit": M.unit,
            "table": sorted(([a, b, c] for (a, b), c in M.table.items()), key=_dump_key),
        }
    if kind == "reader":
        monad["set"] = list(T.index_set)
    doc = {"name": workspace.name, "monad": monad}

    g = workspace.data.graph
    if workspace.kind == "tcategory":
        tcat = {
            "objects": list(g.X0.elements),
            "arrows": [{"name": x, "dom": encode_value(kind, g.d1(x)), "cod": g.d0(x)} for x in g.X1.elements],
        }
        if workspace.data.comp is not None:
            comp = workspace.data.comp
            tcat["comp"] = sorted(
                ({"outer": e[0], "inner": encode_value(kind, e[1]), "result": comp(e)}
                 for e in workspace.data.X2().carrier.elements),
                key=_dump_key,
            )
        if workspace.data.unit is not None:
            unit = workspace.data.unit
            tcat["unit"] = dict(sorted((str(obj), unit(obj)) for obj in g.X0.elements))
        doc["tcategory"] = tcat
    else:
        carrier, a = workspace.algebra
        doc["algebra"] = {
            "carrier": list(carrier.elements),
            "action": sorted(
                ({"input": encode_value(kind, t), "output": a(t)} for t in a.dom.elements), key=_dump_key
            ),
        }
    if workspace.depth is not None:
        doc["depth"] = workspace.depth
    if workspace.mutations:
        doc["mutations"] = [{"level": level, "index": index} for level, index in workspace.mutations]
    return doc


def dumps(doc):
    """Byte-stable text of a document."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
