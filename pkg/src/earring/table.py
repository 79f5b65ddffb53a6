"""The counterexample table: for each witness f_n, how far it is from the
identity in the loop group (oscillation) versus in the inverse limit
(distance)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from .oscillation import min_oscillation_in_class
from .projections import distance, phi_truncated, trivial
from .word_core import build_counterexample_word

__all__ = ["CounterexampleRow", "counterexample_row", "table_rows", "run_table", "FIELDS"]

FIELDS = ("n", "word_length", "oscillation", "diverge_depth", "log2_distance")


@dataclass(frozen=True)
class CounterexampleRow:
    n: int
    word_length: int
    oscillation: int
    diverge_depth: int
    log2_distance: int


def counterexample_row(n: int, depth: int) -> CounterexampleRow:
    if not 2 <= n <= depth:
        raise ValueError(f"need 2 <= n <= depth, got n={n}, depth={depth}")
    f = build_counterexample_word(n)
    image = phi_truncated(f, depth)
    diverge = next(k for k in range(1, depth + 1) if image[k])
    d = distance(image, trivial(depth))
    return CounterexampleRow(
        n=n,
        word_length=len(f),
        oscillation=min_oscillation_in_class(f),
        diverge_depth=diverge,
        log2_distance=d.log2_distance,
    )


def table_rows(n_max: int, depth: int) -> list[CounterexampleRow]:
    if n_max < 2:
        raise ValueError(f"max-n must be >= 2, got {n_max}")
    if n_max > depth:
        raise ValueError(
            f"max-n ({n_max}) exceeds depth ({depth}); distances past the truncation are undefined"
        )
    return [counterexample_row(n, depth) for n in range(2, n_max + 1)]


def _render_text(rows: list[CounterexampleRow]) -> str:
    cells = [FIELDS] + [tuple(str(v) for v in asdict(r).values()) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(FIELDS))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _render_csv(rows: list[CounterexampleRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in rows:
        writer.writerow(asdict(r).values())
    return buf.getvalue()


def _render_json(rows: list[CounterexampleRow]) -> str:
    return json.dumps({"rows": [asdict(r) for r in rows]}, indent=2) + "\n"


_RENDERERS = {"text": _render_text, "csv": _render_csv, "json": _render_json}


def run_table(n_max: int = 64, depth: int = 64, format: str = "text") -> str:
    try:
        render = _RENDERERS[format]
    except KeyError:
        raise ValueError(f"unknown format {format!r}; choose from {sorted(_RENDERERS)}") from None
    return render(table_rows(n_max, depth))
