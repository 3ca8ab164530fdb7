"""Regeneration and rendering of the count tables.

Each table is a list of flat row dicts; :func:`render` turns rows into
text, CSV or JSON.  Text layouts follow the printed orientation (``n2``
across and ``n3`` down for the content tables, ``n`` across for totals).
"""

from __future__ import annotations

import csv
import io
import json

from .bijection import necklace_to_rop
from .counting import count_L, count_R, total_L, total_R
from .enumeration import binary_necklaces, check_ceiling, class_totals, iter_s_rop_classes

TABLE_IDS = ("iso", "rop", "lyndon", "totals", "srop3", "srop4")

TITLES = {
    "iso": "Correspondence for n2 = 3",
    "rop": "Number of rop-words (n2, n3)",
    "lyndon": "Number of Lyndon rop-words (n2, n3)",
    "totals": "Numbers of Lyndon rop-words and rop-words of length n",
    "srop3": "Number of 3-rop words",
    "srop4": "Number of 4-rop words",
}

# default upper bound on the varying size of each table
DEFAULT_MAX = {"iso": 6, "rop": 12, "lyndon": 12, "totals": 27, "srop3": 17, "srop4": 17}

COLUMNS = {
    "iso": ("necklace", "n", "ropword", "nprime"),
    "rop": ("n2", "n3", "count"),
    "lyndon": ("n2", "n3", "count"),
    "totals": ("n", "R", "L"),
    "srop3": ("s", "n", "R", "L"),
    "srop4": ("s", "n", "R", "L"),
}

CONTENT_N2 = tuple(range(1, 18, 2))


def iso_rows(max_n: int = 6, n2: int = 3) -> list[dict]:
    """Aperiodic necklaces with ``n2`` zeros and their Lyndon rop-words."""
    rows = []
    for n in range(n2, max_n + 1):
        for b in binary_necklaces(n2, n - n2):
            if not b.lyndon:
                continue
            c = necklace_to_rop(b)
            rows.append({"necklace": str(b), "n": n, "ropword": str(c), "nprime": c.length})
    return rows


def content_rows(lyndon: bool, max_n3: int = 12) -> list[dict]:
    count = count_L if lyndon else count_R
    return [
        {"n2": n2, "n3": n3, "count": count(n2, n3)}
        for n3 in range(2, max_n3 + 1, 2)
        for n2 in CONTENT_N2
    ]


def totals_rows(max_n: int = 27) -> list[dict]:
    return [{"n": n, "R": total_R(n), "L": total_L(n)} for n in range(3, max_n + 1, 2)]


def s_rop_rows(s: int, max_n: int = 17, ceiling: int | None = None) -> list[dict]:
    first = {3: 4, 4: 5}.get(s, s + 1)
    check_ceiling(max_n, 2, ceiling)
    rows = []
    for n in range(first, max_n + 1):
        r, l = class_totals(iter_s_rop_classes(n, s))
        rows.append({"s": s, "n": n, "R": r, "L": l})
    return rows


def table_rows(table_id: str, max_n: int | None = None, ceiling: int | None = None) -> list[dict]:
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table {table_id!r}")
    m = DEFAULT_MAX[table_id] if max_n is None else max_n
    if table_id == "iso":
        return iso_rows(m)
    if table_id == "rop":
        return content_rows(False, m)
    if table_id == "lyndon":
        return content_rows(True, m)
    if table_id == "totals":
        return totals_rows(m)
    return s_rop_rows(3 if table_id == "srop3" else 4, m, ceiling)


def _grid(header: list[str], body: list[list[str]]) -> str:
    cells = [header] + body
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = []
    for k, row in enumerate(cells):
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines)


def render_text(table_id: str, rows: list[dict]) -> str:
    title = TITLES[table_id]
    if table_id == "iso":
        body = [[r["necklace"], str(r["n"]), r["ropword"], str(r["nprime"])] for r in rows]
        return title + "\n" + _grid(["necklace", "n", "rop-word", "n'"], body)
    if table_id in ("rop", "lyndon"):
        n2s = sorted({r["n2"] for r in rows})
        n3s = sorted({r["n3"] for r in rows})
        cell = {(r["n2"], r["n3"]): r["count"] for r in rows}
        body = [[str(n3)] + [str(cell[n2, n3]) for n2 in n2s] for n3 in n3s]
        return title + "\n" + _grid(["n3\\n2"] + [str(n) for n in n2s], body)
    # totals and s-rop tables run horizontally in n
    suffix = "" if table_id == "totals" else f"^({rows[0]['s']})" if rows else ""
    body = [
        ["R" + suffix] + [str(r["R"]) for r in rows],
        ["L" + suffix] + [str(r["L"]) for r in rows],
    ]
    return title + "\n" + _grid(["n"] + [str(r["n"]) for r in rows], body)


def render_csv(table_id: str, rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS[table_id], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def render_json(table_id: str, rows: list[dict]) -> str:
    return json.dumps({"table": table_id, "rows": rows}, indent=2)


def render(table_id: str, rows: list[dict], fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(table_id, rows)
    if fmt == "csv":
        return render_csv(table_id, rows)
    if fmt == "json":
        return render_json(table_id, rows)
    raise ValueError(f"unknown format {fmt!r}")
