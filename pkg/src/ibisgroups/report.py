"""Analysis reports: one record per group, rendered as JSON or plain text."""

from __future__ import annotations

import json
import time

from .baseanalysis import SearchCaps, irredundant_spectrum, minimal_base_size
from .baseanalysis.matroid import FLAT_ENUMERATION_CAP, matroid_from_ibis
from .baseanalysis.search import IbisVerdict
from .ctcheck import centralizer_abelian_scan, decide_ct
from .errors import CapacityError
from .permcore import format_cycles, is_primitive, is_transitive

REPORT_FIELDS = (
    "group", "degree", "order", "primitive", "base_size", "spectrum", "ibis",
    "witnesses", "capped", "elapsed_ms", "node_count", "counterexample", "matroid",
)


def analyze_group(group, name, config=None):
    """Full report record for one group (a dict in stable field order)."""
    caps = SearchCaps.of(config)
    start = time.monotonic()
    transitive = is_transitive(group)
    primitive = transitive and is_primitive(group)
    b = group.bsgs
    capped = False
    try:
        base_size, _ = minimal_base_size(b, caps)
    except CapacityError:
        base_size, capped = None, True
    spec = irredundant_spectrum(b, caps)
    capped = capped or not spec.complete
    sizes = list(spec.sizes)
    if len(sizes) >= 2:
        ibis = False
    elif capped or not sizes:
        ibis = None
    else:
        ibis = True
    counter = None
    if ibis is False:
        counter = [spec.witness[sizes[0]].one_based(), spec.witness[sizes[-1]].one_based()]
    matroid = None
    if ibis:
        m = matroid_from_ibis(b, IbisVerdict(True, base_size))
        matroid = {"ground_size": m.ground_size, "rank": m.rank}
        if m.flats_by_rank is not None:
            matroid["flats_by_rank"] = [len(m.flats_by_rank[r]) for r in sorted(m.flats_by_rank)]
        else:
            matroid["flats_by_rank"] = None
            matroid["note"] = f"flats not enumerated above {FLAT_ENUMERATION_CAP} points"
    return {
        "group": name,
        "degree": group.degree,
        "order": str(b.order),
        "primitive": primitive,
        "base_size": base_size,
        "spectrum": sizes,
        "ibis": ibis,
        "witnesses": {str(s): spec.witness[s].one_based() for s in sizes},
        "capped": capped,
        "elapsed_ms": int(round((time.monotonic() - start) * 1000)),
        "node_count": spec.node_count,
        "counterexample": counter,
        "matroid": matroid,
    }


def ct_report(group, name, config=None):
    start = time.monotonic()
    cap = config.enumeration_cap if config is not None else None
    kw = {"cap": min(cap, 10**4)} if cap else {}
    v = decide_ct(group.bsgs, **kw)
    abelian = centralizer_abelian_scan(group.bsgs, **kw)
    return {
        "group": name,
        "degree": group.degree,
        "order": str(group.bsgs.order),
        "ct": v.is_ct,
        "method_agreement": v.method_agreement,
        "abelian_centralizers": abelian,
        "violation": [format_cycles(x) for x in v.violation] if v.violation else None,
        "elapsed_ms": int(round((time.monotonic() - start) * 1000)),
    }


def to_json(record):
    return json.dumps(record, indent=2)


def _text_value(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(_text_value(x) for x in v) if v else "(none)"
    return str(v)


def to_text(record):
    """Human-readable rendering; every value of the record appears exactly once."""
    lines = []
    for key, value in record.items():
        if key == "witnesses":
            for size, pts in value.items():
                lines.append(f"witness[{size}]: {_text_value(pts)}")
        elif key == "counterexample":
            if value is None:
                lines.append("counterexample: -")
            else:
                lines.append(f"counterexample: {_text_value(value[0])} | {_text_value(value[1])}")
        elif key == "matroid":
            if value is None:
                lines.append("matroid: -")
            else:
                for k, v in value.items():
                    lines.append(f"matroid.{k}: {_text_value(v)}")
        else:
            lines.append(f"{key}: {_text_value(value)}")
    return "\n".join(lines)


def parse_text(text):
    """Inverse of to_text, used to compare text and JSON output."""
    out = {}
    wit = {}
    mat = {}

    def val(s, kind=None):
        if s == "-":
            return None
        if s == "(none)":
            return []
        if s in ("true", "false"):
            return s == "true"
        if kind == "list":
            return [int(x) for x in s.split()]
        if kind == "int":
            return int(s)
        return s

    for line in text.splitlines():
        key, _, rest = line.partition(": ")
        if key.startswith("witness["):
            wit[key[len("witness["):-1]] = val(rest, "list")
        elif key.startswith("matroid."):
            k = key[len("matroid."):]
            if k in ("ground_size", "rank"):
                mat[k] = int(rest)
            elif k == "flats_by_rank":
                mat[k] = val(rest, "list")
            else:
                mat[k] = rest
        elif key == "matroid":
            out["matroid"] = None
        elif key == "counterexample":
            if rest == "-":
                out[key] = None
            else:
                a, _, b = rest.partition(" | ")
                out[key] = [val(a, "list"), val(b, "list")]
        elif key == "spectrum":
            out[key] = val(rest, "list")
        elif key in ("degree", "base_size", "elapsed_ms", "node_count"):
            out[key] = val(rest, "int")
        else:
            out[key] = val(rest)
        if key.startswith("witness[") and "witnesses" not in out:
            out["witnesses"] = wit
        if key.startswith("matroid.") and "matroid" not in out:
            out["matroid"] = mat
    out.setdefault("witnesses", wit)
    return out
