"""Analysis reports and Graphviz export.

Every list in a report has a fixed order (filters in canonical order,
elements in linear-extension order), so output for a given input file is
byte-for-byte reproducible.
"""

import json
from typing import Dict, List

from .algebra import Lattice, boolean_center
from .filters import FilterLattice, filter_lattice
from .spectrum import SpectrumSpace, isolated_points, specialization_order
from .structure import (
    decompose_direct_sum,
    is_hyperarchimedean,
    is_local,
    is_semilocal,
    is_semisimple_lattice,
    lattice_conditions,
    socle_index,
)


def filter_label(fl: FilterLattice, i: int) -> str:
    """"{1}", "L", or "[x)" for the first generator x."""
    if i == fl.trivial:
        return "{1}"
    if i == fl.whole:
        return "L"
    return f"[{fl.lattice.names[fl.generators[i][0]]})"


def _members(fl, i):
    return "{" + ",".join(fl.filters[i].names) + "}"


def analyze(L: Lattice, name: str = "lattice") -> Dict[str, object]:
    """Everything the analyzer knows about L as a plain, ordered dict."""
    fl = filter_lattice(L)
    B = boolean_center(L)
    label = lambda i: filter_label(fl, i)  # noqa: E731
    filters = []
    for i in range(len(fl)):
        entry = {
            "label": label(i),
            "members": fl.filters[i].names,
            "generators": [L.names[x] for x in fl.generators[i]],
        }
        entry.update(fl.classification(i))
        filters.append(entry)
    conditions = lattice_conditions(L)
    semisimple = is_semisimple_lattice(L)
    return {
        "lattice": name,
        "order": L.n,
        "elements": list(L.names),
        "boolean_center": [L.names[x] for x in B],
        "filters": filters,
        "spec": [label(i) for i in fl.primes],
        "max": [label(i) for i in fl.maximals],
        "minp": [label(i) for i in fl.minimal_primes],
        "simple": [label(i) for i in fl.simples],
        "radical": fl.filters[fl.radical].names,
        "socle": fl.filters[socle_index(fl, fl.whole)].names,
        "essential": [label(i) for i in fl.essential],
        "isolated_maximal": [label(i) for i in sorted(isolated_points(SpectrumSpace(L, "Max")))],
        "decompositions": [
            [label(w.parts[0]), label(w.parts[1])] for w in decompose_direct_sum(L, fl.filters[fl.whole])
        ],
        "verdicts": {
            "local": is_local(L),
            "semilocal": is_semilocal(L),
            "hyperarchimedean": is_hyperarchimedean(L),
            "semisimple": semisimple,
        },
        "semisimple_conditions": conditions,
    }


def to_structured(report: Dict[str, object]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _yes(flag):
    return "yes" if flag else "no"


def _set(items: List[str]) -> str:
    return "{" + ", ".join(items) + "}"


def to_text(report: Dict[str, object]) -> str:
    r = report
    lines = [
        f"lattice: {r['lattice']} ({r['order']} elements: {' '.join(r['elements'])})",
        f"boolean center: {_set(r['boolean_center'])}",
        f"filters ({len(r['filters'])}):",
    ]
    width = max(len(f["label"]) for f in r["filters"])
    mwidth = max(len(",".join(f["members"])) + 2 for f in r["filters"])
    for f in r["filters"]:
        tags = [
            tag
            for key, tag in (
                ("prime", "prime"),
                ("maximal", "maximal"),
                ("minimal_prime", "minimal-prime"),
                ("simple", "simple"),
                ("essential_in_L", "essential"),
            )
            if f[key]
        ]
        members = "{" + ",".join(f["members"]) + "}"
        lines.append(f"  {f['label'].ljust(width)}  {members.ljust(mwidth)}  {' '.join(tags)}".rstrip())
    lines += [
        f"Spec: {_set(r['spec'])}",
        f"Max: {_set(r['max'])}",
        f"MinP: {_set(r['minp'])}",
        f"SimpF: {_set(r['simple'])}",
        f"Rad: {_set(r['radical'])}",
        f"Soc(L): {_set(r['socle'])}",
        f"E_L: {_set(r['essential'])}",
        f"isolated maximal filters: {_set(r['isolated_maximal'])}",
        "direct sum decompositions of L: "
        + (", ".join(f"{a} + {b}" for a, b in r["decompositions"]) or "none"),
    ]
    v = r["verdicts"]
    lines += [
        f"local: {_yes(v['local'])}",
        f"semi-local: {_yes(v['semilocal'])}",
        f"hyperarchimedean: {_yes(v['hyperarchimedean'])}",
        f"semi-simple: {_yes(v['semisimple'])}",
    ]
    for key, value in r["semisimple_conditions"].items():
        lines.append(f"  {key}: {_yes(value)}")
    return "\n".join(lines) + "\n"


# -- DOT ----------------------------------------------------------------------


def _dot(title, nodes, edges, fl):
    out = [f"digraph {title} {{", "  rankdir=BT;"]
    for i in nodes:
        out.append(f'  F{i} [label="{filter_label(fl, i)} = {_members(fl, i)}"];')
    for i, j in edges:
        out.append(f"  F{i} -> F{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def filters_dot(L: Lattice) -> str:
    """Hasse diagram of Filt(L), edges pointing from smaller to larger."""
    fl = filter_lattice(L)
    edges = [(i, j) for i in range(len(fl)) for j in sorted(fl.covers[i])]
    return _dot("filters", range(len(fl)), edges, fl)


def spec_dot(L: Lattice) -> str:
    """Specialization order of Spec(L): covering inclusions between primes."""
    fl = filter_lattice(L)
    order = set(specialization_order(L))
    covers = [
        (p, q)
        for p, q in sorted(order)
        if not any((p, r) in order and (r, q) in order for r in fl.primes)
    ]
    return _dot("spec", fl.primes, covers, fl)
