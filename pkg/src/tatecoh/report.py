"""Structured result reports shared by the CLI and the test suite.

A Report is a plain JSON-serializable payload under a versioned schema.
Serialization is canonical (sorted keys, fixed separators, no
timestamps, trailing newline) so identical inputs give byte-identical
files; the human-facing rendering is a plain aligned text table.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ": "),
                      indent=1) + "\n"


@dataclass(frozen=True)
class Report:
    """kind + metadata + result sections, serialized under one schema."""

    kind: str
    meta: dict
    sections: dict = field(default_factory=dict)

    def payload(self) -> dict:
        return {"schema": SCHEMA_VERSION, "kind": self.kind,
                "meta": self.meta, "results": self.sections}

    def to_json(self) -> str:
        return canonical_json(self.payload())

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())


def aligned_table(headers, rows) -> str:
    """Right-aligned plain-text table; every cell is str()'d."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip()
             for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# ---------------------------------------------------------------- tables


@dataclass(frozen=True)
class TableRow:
    """One degree of the ideal table: dim E^n and the chain I <= J~ <= J."""

    degree: int
    ext_dim: int
    finite_dim: int
    bounded_dim: int
    tail_dim: int | None
    flags: tuple[str, ...]


@dataclass(frozen=True)
class ReportTable:
    module_key: str
    p: int
    rank: int
    degrees: tuple[int, ...]
    rows: tuple[TableRow, ...]

    def validate(self) -> None:
        """Column arithmetic: finite <= tail <= bounded <= ext, per row."""
        for row in self.rows:
            chain = [row.finite_dim]
            if row.tail_dim is not None:
                chain.append(row.tail_dim)
            chain += [row.bounded_dim, row.ext_dim]
            if any(a > b for a, b in zip(chain, chain[1:])):
                raise AssertionError(
                    f"ideal dimensions out of order at degree {row.degree}: "
                    f"{chain}")

    def headers(self):
        return ("n", "dim E^n", "dim I^n", "dim Jt^n", "dim J^n", "flags")

    def text_rows(self):
        out = []
        for r in self.rows:
            tail = "-" if r.tail_dim is None else r.tail_dim
            out.append((r.degree, r.ext_dim, r.finite_dim, tail,
                        r.bounded_dim, ",".join(r.flags) or "-"))
        return out

    def render(self) -> str:
        return aligned_table(self.headers(), self.text_rows())

    def to_section(self) -> dict:
        return {
            "module": self.module_key, "p": self.p, "rank": self.rank,
            "degrees": list(self.degrees),
            "rows": [{"degree": r.degree, "ext": r.ext_dim,
                      "finite": r.finite_dim, "bounded": r.bounded_dim,
                      "tail": r.tail_dim, "flags": list(r.flags)}
                     for r in self.rows],
        }


def ideal_table(module, scan, tails=None) -> ReportTable:
    """Assemble the per-degree table from ideal_scan / tail_ideal_window.

    ``scan`` maps degree -> DegreeIdeals; ``tails`` (optional) maps
    degree -> TailIdealDegree.  Rows come out sorted by degree and the
    dimension chain is validated before returning.
    """
    rows = []
    for n in sorted(scan):
        ideals = scan[n]
        flags = list(ideals.flags)
        if not ideals.finite_exact():
            flags.append("finite-chain-open")
        if not ideals.bounded_exact():
            flags.append("bounded-sampled")
        tail_dim = None
        if tails is not None and n in tails:
            tail = tails[n]
            tail_dim = len(tail.basis)
            if tail.stabilized_at is None:
                flags.append("tail-unstabilized")
        rows.append(TableRow(n, ideals.ext_dim, len(ideals.finite_basis),
                             len(ideals.bounded_basis), tail_dim,
                             tuple(flags)))
    table = ReportTable(module.content_key()[:16], module.spec.p,
                        module.spec.rank, tuple(sorted(scan)), tuple(rows))
    table.validate()
    return table


def ext_dim_table(module, dims: dict[int, int]) -> str:
    rows = [(n, dims[n]) for n in sorted(dims)]
    return aligned_table(("n", "dim E^n"), rows)
