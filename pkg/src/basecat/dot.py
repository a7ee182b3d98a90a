"""Deterministic DOT rendering of category presentations.

One node per object, one labelled edge per morphism; identity loops are
hidden unless asked for. A constructed category can be clustered by the
projection image, which draws each fibre as its own subgraph.
"""

from __future__ import annotations

from .constructions import ConstructedCategory
from .core import FinCat


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def export_dot(
    cat: FinCat | ConstructedCategory,
    show_identities: bool = False,
    cluster_by_fibre: bool = False,
) -> str:
    """Render to the standard graph description language, byte-stable."""
    built = cat if isinstance(cat, ConstructedCategory) else None
    fincat = built.cat if built is not None else cat

    lines = [f"digraph {_quote(fincat.name)} {{"]
    lines.append("  rankdir=LR;")

    if cluster_by_fibre and built is not None:
        groups: dict[str, list[str]] = {}
        for o in fincat.objects:
            groups.setdefault(built.projection.obj(o), []).append(o)
        for idx, over in enumerate(sorted(groups)):
            lines.append(f"  subgraph cluster_{idx} {{")
            lines.append(f"    label={_quote(over)};")
            for o in groups[over]:
                lines.append(f"    {_quote(o)};")
            lines.append("  }")
    else:
        for o in fincat.objects:
            lines.append(f"  {_quote(o)};")

    for a in fincat.arrows:
        if not show_identities and fincat.is_identity(a.name):
            continue
        lines.append(
            f"  {_quote(a.dom)} -> {_quote(a.cod)} [label={_quote(a.name)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
