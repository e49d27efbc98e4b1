from algebras.structures import OPERATIONS, TmsAlgebra
from duality.spaces import RELATIONS, TmsSpace

NONE = "N/A"


def _kind(structure: TmsAlgebra | TmsSpace) -> str:
    return "algebra" if isinstance(structure, TmsAlgebra) else "space"


def _poset(structure: TmsAlgebra | TmsSpace):
    return structure.lattice.poset if isinstance(structure, TmsAlgebra) else structure.poset


def _maps(structure: TmsAlgebra | TmsSpace) -> dict[str, tuple[int, ...]]:
    if isinstance(structure, TmsAlgebra):
        return {name: structure.operation(name) for name in OPERATIONS}
    return {"g": structure.g}


def _relations(structure: TmsAlgebra | TmsSpace) -> dict[str, list[tuple[int, int]]]:
    if isinstance(structure, TmsAlgebra):
        return {}
    return {name: sorted(structure.relation(name)) for name in RELATIONS}


def export_model(structure: TmsAlgebra | TmsSpace) -> dict:
    """Flat key/value tree with the same keys as the text format; leq holds the covers."""
    labels = structure.labels
    kind = _kind(structure)
    document = {
        "kind": kind,
        "m": structure.m,
        "elements" if kind == "algebra" else "points": list(labels),
        "leq": [[labels[a], labels[b]] for a, b in _poset(structure).covers],
    }
    for name, table in _maps(structure).items():
        document[name] = {labels[x]: labels[y] for x, y in enumerate(table)}
    for name, pairs in _relations(structure).items():
        document[name] = [[labels[x], labels[y]] for x, y in pairs]
    return document


def render_model(structure: TmsAlgebra | TmsSpace) -> str:
    """Text form read back by parse_model to an equal structure."""
    document = export_model(structure)
    lines = [f"{document['kind']} {{", f"  m: {document['m']}"]
    for key, value in list(document.items())[2:]:
        if isinstance(value, dict):
            items = [f"{x}->{y}" for x, y in value.items()]
        elif key in ("elements", "points"):
            items = value
        else:
            items = [f"({x},{y})" for x, y in value]
        lines.append(f"  {key}: {' '.join(items) or NONE}")
    lines.append("}")
    return "\n".join(lines) + "\n"


_MAP_STYLE = {
    "N": 'style=dashed, label="N"',
    "G": 'style=dotted, color=red, label="G"',
    "H": 'style=dotted, color=blue, label="H"',
    "g": 'style=dashed, label="g"',
}
_RELATION_STYLE = {
    ("RG",): 'color=red, label="RG"',
    ("RH",): 'color=blue, label="RH"',
    ("RG", "RH"): 'color=purple, label="RG,RH"',
}


def render_dot(structure: TmsAlgebra | TmsSpace) -> str:
    """
    Graphviz digraph, bottom to top. Covers are plain edges, N and g dashed
    arrows, G and H dotted arrows where they move an element, and relation
    pairs one colored arrow each, labeled by every relation holding them.
    """
    kind = _kind(structure)
    lines = [f"digraph {kind} {{", "  rankdir=BT;", "  node [shape=circle];"]
    lines.extend(f'  n{x} [label="{label}"];' for x, label in enumerate(structure.labels))
    lines.extend(f"  n{a} -> n{b} [arrowhead=none];" for a, b in _poset(structure).covers)
    for name, table in _maps(structure).items():
        for x, y in enumerate(table):
            if name in ("G", "H") and x == y:
                continue
            lines.append(f"  n{x} -> n{y} [{_MAP_STYLE[name]}];")
    relations = _relations(structure)
    holding: dict[tuple[int, int], tuple[str, ...]] = {}
    for name, pairs in relations.items():
        for pair in pairs:
            holding[pair] = holding.get(pair, ()) + (name,)
    for (x, y), names in sorted(holding.items()):
        lines.append(f"  n{x} -> n{y} [{_RELATION_STYLE[names]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
