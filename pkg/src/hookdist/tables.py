"""Proportion tables Psi_t(a,b;n) and delta(a,b;n) with exact cells."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .hilbert import buryak_feigin_series, delta, delta_quasi, goettsche_series
from .distributions import psi_ratio

__all__ = [
    "DEFAULT_ORDER",
    "TableReport",
    "OrderError",
    "render_decimal",
    "hooks_table",
    "hilbert_table",
    "PRESETS",
    "preset_table",
]

DEFAULT_ORDER = 5200
SCHEMA = 1


class OrderError(ValueError):
    pass


def render_decimal(x: Fraction, places: int = 4, mode: str = ROUND_HALF_EVEN) -> str:
    """x to ``places`` decimals; exact ties are resolved by ``mode``."""
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=mode))


def truncate_decimal(x: Fraction, places: int = 4) -> str:
    return render_decimal(x, places, ROUND_DOWN)


@dataclass
class TableReport:
    title: str
    family: str
    rows: list[int]
    cols: list[int]
    cells: list[list[Fraction]]
    meta: dict = field(default_factory=dict)

    def decimal(self, i: int, j: int) -> str:
        return render_decimal(self.cells[i][j])

    def row_sums_ok(self) -> bool:
        return all(sum(row) == 1 for row in self.cells)

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "title": self.title,
            "family": self.family,
            "meta": self.meta,
            "rows": self.rows,
            "cols": self.cols,
            "cells": [
                [
                    {"numerator": c.numerator, "denominator": c.denominator, "decimal": render_decimal(c)}
                    for c in row
                ]
                for row in self.cells
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "a", "numerator", "denominator", "decimal"])
        for n, row in zip(self.rows, self.cells):
            for a, c in zip(self.cols, row):
                w.writerow([n, a, c.numerator, c.denominator, render_decimal(c)])
        return buf.getvalue()

    def to_text(self) -> str:
        head = ["n"] + [f"a={a}" for a in self.cols]
        body = [[str(n)] + [render_decimal(c) for c in row] for n, row in zip(self.rows, self.cells)]
        widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]
        lines = [self.title]
        for r in [head] + body:
            lines.append("  ".join(s.rjust(w) for s, w in zip(r, widths)))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")

    @classmethod
    def from_csv(cls, text: str, title: str = "", family: str = "") -> "TableReport":
        rows: dict[int, dict[int, Fraction]] = {}
        for rec in csv.DictReader(io.StringIO(text)):
            rows.setdefault(int(rec["n"]), {})[int(rec["a"])] = Fraction(int(rec["numerator"]), int(rec["denominator"]))
        ns = list(rows)
        cols = sorted(rows[ns[0]]) if ns else []
        return cls(title, family, ns, cols, [[rows[n][a] for a in cols] for n in ns])


def _check_order(ns, order: int):
    need = max(ns)
    if need > order:
        raise OrderError(f"n={need} exceeds series order {order}; rerun with --order {need} or larger")


def hooks_table(t: int, b: int, ns, order: int = DEFAULT_ORDER) -> TableReport:
    """Psi_t(a, b; n) for every residue a and every n in ``ns``."""
    ns = list(ns)
    _check_order(ns, order)
    work = max(ns)
    cells = [[psi_ratio(t, a, b, n, order=work) for a in range(b)] for n in ns]
    return TableReport(
        f"Psi_{t}(a,{b};n)", "hooks", ns, list(range(b)), cells, {"t": t, "b": b, "order": order}
    )


def hilbert_table(b: int, ns, family: str = "homogeneous", alpha: int | None = None, beta: int | None = None,
                  order: int = DEFAULT_ORDER) -> TableReport:
    """delta(a, b; n) or delta_{alpha,beta}(a, b; n)."""
    ns = list(ns)
    _check_order(ns, order)
    work = max(ns)
    if family == "homogeneous":
        series = goettsche_series(work)
        cells = [[delta(a, b, n, series) for a in range(b)] for n in ns]
        title, meta = f"delta(a,{b};n)", {"b": b}
    elif family == "quasi":
        if alpha is None or beta is None:
            raise ValueError("quasi family needs alpha and beta")
        series = buryak_feigin_series(alpha, beta, work)
        cells = [[delta_quasi(alpha, beta, a, b, n, series) for a in range(b)] for n in ns]
        title, meta = f"delta_{alpha},{beta}(a,{b};n)", {"b": b, "alpha": alpha, "beta": beta}
    else:
        raise ValueError("family must be 'homogeneous' or 'quasi'")
    meta["order"] = order
    return TableReport(title, family, ns, list(range(b)), cells, meta)


PRESETS = {
    "psi3": ("hooks", {"t": 3, "b": 3, "ns": [100, 500, 600, 2100, 2300, 2500]}),
    "psi2": ("hooks", {"t": 2, "b": 3, "ns": list(range(300, 5101, 300))}),
    "psi4": ("hooks", {"t": 4, "b": 3, "ns": [12 * m for m in (10, 50, 60, 180, 190, 200)]}),
    "delta": ("hilbert", {"b": 3, "ns": [1, 2, 18, 19, 20], "family": "homogeneous"}),
    "delta23": ("hilbert", {"b": 3, "ns": [1, 2, 100, 200, 300, 400, 500], "family": "quasi", "alpha": 2, "beta": 3}),
}


def preset_table(name: str, order: int = DEFAULT_ORDER) -> TableReport:
    kind, kw = PRESETS[name]
    if kind == "hooks":
        return hooks_table(kw["t"], kw["b"], kw["ns"], order)
    return hilbert_table(order=order, **kw)
