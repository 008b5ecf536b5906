"""Frame files (JSON) and Hasse-diagram export (DOT)."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .morphism import PosetMap
from .poset import Poset, PosetError


class FrameFormatError(ValueError):
    pass


def poset_to_dict(poset: Poset) -> dict[str, Any]:
    return {"elements": list(poset.elements),
            "covers": [list(c) for c in sorted(poset.covers)]}


def poset_from_dict(data: Mapping[str, Any]) -> Poset:
    try:
        elements = data["elements"]
        covers = data.get("covers", [])
    except (KeyError, AttributeError, TypeError) as exc:
        raise FrameFormatError(f"frame JSON needs 'elements' and 'covers': {exc}") from None
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise FrameFormatError("'elements' must be a list of strings")
    pairs = []
    for c in covers:
        if not (isinstance(c, (list, tuple)) and len(c) == 2):
            raise FrameFormatError(f"bad cover entry {c!r}")
        pairs.append((str(c[0]), str(c[1])))
    try:
        return Poset(elements, pairs)
    except PosetError as exc:
        raise FrameFormatError(str(exc)) from None


def load_json(path: str | Path) -> dict[str, Any]:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FrameFormatError(f"{path}: invalid JSON ({exc})") from None


def load_frame(path: str | Path) -> Poset:
    return poset_from_dict(load_json(path))


def dump_frame(poset: Poset, path: str | Path) -> None:
    Path(path).write_text(json.dumps(poset_to_dict(poset), indent=2) + "\n")


def map_to_dict(f: PosetMap) -> dict[str, Any]:
    return {"source": poset_to_dict(f.source), "target": poset_to_dict(f.target),
            "assignment": dict(sorted(f.assignment.items()))}


def map_from_dict(data: Mapping[str, Any]) -> PosetMap:
    return PosetMap(poset_from_dict(data["source"]), poset_from_dict(data["target"]),
                    dict(data["assignment"]))


def _q(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(poset: Poset, name: str = "frame", positions: Mapping[str, tuple[float, float]] | None = None) -> str:
    """Hasse diagram, drawn bottom-up with one rank per height."""
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in poset.by_height():
        attrs = f' [pos="{positions[x][0]},{positions[x][1]}!"]' if positions else ""
        lines.append(f"  {_q(x)}{attrs};")
    if len(poset):
        for h in range(poset.height() + 1):
            row = [x for x in poset.by_height() if poset.height_of(x) == h]
            lines.append("  { rank=same; " + " ".join(_q(x) for x in row) + " }")
    for a, b in sorted(poset.covers):
        lines.append(f"  {_q(a)} -> {_q(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
