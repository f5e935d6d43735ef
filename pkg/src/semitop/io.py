"""JSON structure files.

Format::

    {"semiring": {"elements": [...], "add": [[...]], "mul": [[...]], "zero": "0", "one": "1"},
     "module":   {"elements": [...], "add": [[...]], "action": [[...]], "zero": "0"}}

Table entries and the distinguished elements are labels. ``module`` may be
omitted, in which case the semiring acting on itself is used.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Semimodule, Semiring, checked
from .errors import StructureError


def _resolver(labels):
    pos = {str(e): i for i, e in enumerate(labels)}

    def resolve(v, what):
        try:
            return pos[str(v)]
        except KeyError:
            raise StructureError(f"{what}: unknown label {v!r}") from None

    return resolve


def _grid(rows, resolve, what):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise StructureError(f"{what} must be a list of lists")
    return tuple(tuple(resolve(v, what) for v in row) for row in rows)


def semiring_from_dict(d: dict) -> Semiring:
    try:
        elements = [str(e) for e in d["elements"]]
        res = _resolver(elements)
        return Semiring(
            tuple(elements),
            _grid(d["add"], res, "semiring.add"),
            _grid(d["mul"], res, "semiring.mul"),
            res(d["zero"], "semiring.zero"),
            res(d["one"], "semiring.one"),
        )
    except KeyError as exc:
        raise StructureError(f"semiring is missing field {exc.args[0]!r}") from None


def module_from_dict(ring: Semiring, d: dict) -> Semimodule:
    try:
        elements = [str(e) for e in d["elements"]]
        res = _resolver(elements)
        return Semimodule(
            ring,
            tuple(elements),
            _grid(d["add"], res, "module.add"),
            res(d["zero"], "module.zero"),
            _grid(d["action"], res, "module.action"),
        )
    except KeyError as exc:
        raise StructureError(f"module is missing field {exc.args[0]!r}") from None


def structure_from_dict(d: dict) -> Semimodule:
    """Build and verify; raises ``StructureError`` or ``AxiomError``."""
    if "semiring" not in d:
        raise StructureError("structure file needs a 'semiring' object")
    ring = checked(semiring_from_dict(d["semiring"]))
    if "module" in d:
        return checked(module_from_dict(ring, d["module"]))
    return checked(Semimodule(ring, ring.elements, ring.add, ring.zero, ring.mul))


def semiring_to_dict(R: Semiring) -> dict:
    lab = R.elements
    return {
        "elements": list(lab),
        "add": [[lab[v] for v in row] for row in R.add],
        "mul": [[lab[v] for v in row] for row in R.mul],
        "zero": lab[R.zero],
        "one": lab[R.one],
    }


def structure_to_dict(M: Semimodule) -> dict:
    lab = M.elements
    return {
        "semiring": semiring_to_dict(M.ring),
        "module": {
            "elements": list(lab),
            "add": [[lab[v] for v in row] for row in M.add],
            "action": [[lab[v] for v in row] for row in M.action],
            "zero": lab[M.zero],
        },
    }


def load_structure(path) -> Semimodule:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path}: not valid JSON ({exc})") from None
    return structure_from_dict(data)


def dump_structure(M: Semimodule, path) -> None:
    Path(path).write_text(json.dumps(structure_to_dict(M), indent=1) + "\n")


def load_map(path, source: Semimodule, target: Semimodule) -> tuple[int, ...]:
    """A map file is a JSON list of ``[source_label, target_label]`` pairs."""
    pairs = json.loads(Path(path).read_text())
    src = _resolver(source.elements)
    tgt = _resolver(target.elements)
    table: dict[int, int] = {}
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise StructureError(f"map entry {pair!r} is not a [source, target] pair")
        x = src(pair[0], "map source")
        if x in table:
            raise StructureError(f"map lists source {pair[0]!r} twice")
        table[x] = tgt(pair[1], "map target")
    missing = [source.elements[x] for x in range(len(source)) if x not in table]
    if missing:
        raise StructureError(f"map is undefined on {missing}")
    return tuple(table[x] for x in range(len(source)))
