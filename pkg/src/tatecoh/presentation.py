"""Text format for module presentations.

A presentation file has three sections::

    # the dim-7 example over GF(2)[X,Y,Z]
    algebra p=2 vars=X,Y,Z
    generators u, v
    relations
    X*u
    Z*Y*u
    Y*u + X*v

Relations are sums of terms ``[coeff*] [var[^e]*]... gen`` in the
algebra's variables; '#' starts a comment anywhere.  ``parse_presentation``
inverts ``format_presentation`` exactly, and every parse error carries
the 1-based line and column it was found at.
"""
from __future__ import annotations

import numpy as np

from .algebra import AlgebraElement, AlgebraSpec, Presentation


class PresentationError(ValueError):
    """Parse failure with its position in the source text."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


class _Scanner:
    """Single-line tokenizer that remembers columns."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line_no = line_no
        self.pos = 0

    def error(self, message: str, column: int | None = None):
        col = (self.pos if column is None else column) + 1
        raise PresentationError(self.line_no, col, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.error("expected a name")
        if self.text[start].isdigit():
            self.error("names must not start with a digit", column=start)
        return self.text[start:self.pos], start

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        return int(self.text[start:self.pos]), start

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            self.error(f"expected '{ch}'" + (f", found '{got}'" if got
                                             else " before end of line"))
        self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_term(sc: _Scanner, spec: AlgebraSpec, gens: tuple[str, ...],
                sign: int) -> tuple[int, AlgebraElement]:
    """One ``coeff*vars*gen`` term: returns (generator slot, element)."""
    coeff = sign % spec.p
    expt = [0] * spec.rank
    while True:
        sc.skip_ws()
        col = sc.pos
        if sc.peek().isdigit():
            num, col = sc.integer()
            coeff = coeff * num % spec.p
        else:
            nm, col = sc.name()
            if nm in gens:
                return gens.index(nm), AlgebraElement(
                    spec, coeff * spec.monomial(tuple(expt)).coeffs % spec.p)
            if nm not in spec.names:
                sc.error(f"unknown name '{nm}' (not a variable or generator)",
                         column=col)
            i = spec.names.index(nm)
            e = 1
            if sc.peek() == "^":
                sc.take()
                e, ecol = sc.integer()
                if e < 1:
                    sc.error("exponent must be at least 1", column=ecol)
            expt[i] += e
            if expt[i] >= spec.p:
                sc.error(f"exponent {expt[i]} on {nm} is not less than "
                         f"p = {spec.p} (that power is zero)", column=col)
        if sc.peek() != "*":
            sc.error("a term must end with a generator name")
        sc.take()


def _parse_relation(sc: _Scanner, spec: AlgebraSpec, gens: tuple[str, ...],
                    ) -> tuple[AlgebraElement, ...]:
    row = [spec.zero() for _ in gens]
    if sc.peek() == "0":
        sc.take()
        if not sc.at_end():
            sc.error("a zero relation is written as a bare '0'")
        return tuple(row)
    sign = 1
    if sc.peek() == "-":
        sc.take()
        sign = -1
    while True:
        slot, elem = _parse_term(sc, spec, gens, sign)
        row[slot] = row[slot] + elem
        if sc.at_end():
            return tuple(row)
        op = sc.take()
        if op == "+":
            sign = 1
        elif op == "-":
            sign = -1
        else:
            sc.error("expected '+' or '-' between terms", column=sc.pos - 1)


def parse_presentation(text: str) -> Presentation:
    """Parse the three-section format; errors carry line and column."""
    spec = None
    gens = None
    relations = []
    stage = "algebra"
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        sc = _Scanner(line, line_no)
        if stage == "algebra":
            word, col = sc.name()
            if word != "algebra":
                sc.error("expected the 'algebra p=... vars=...' header",
                         column=col)
            sc.expect("p")
            sc.expect("=")
            p, pcol = sc.integer()
            if not _is_prime(p):
                sc.error(f"p must be prime, got {p}", column=pcol)
            word, col = sc.name()
            if word != "vars":
                sc.error("expected 'vars=...'", column=col)
            sc.expect("=")
            names = []
            while True:
                nm, col = sc.name()
                if nm in names:
                    sc.error(f"variable '{nm}' listed twice", column=col)
                names.append(nm)
                if sc.peek() != ",":
                    break
                sc.take()
            if not sc.at_end():
                sc.error("unexpected text after the variable list")
            spec = AlgebraSpec(p, len(names), tuple(names))
            stage = "generators"
        elif stage == "generators":
            word, col = sc.name()
            if word != "generators":
                sc.error("expected the 'generators' line", column=col)
            names = []
            while not sc.at_end():
                nm, col = sc.name()
                if nm in names:
                    sc.error(f"generator '{nm}' listed twice", column=col)
                if nm in spec.names:
                    sc.error(f"generator '{nm}' collides with a variable",
                             column=col)
                names.append(nm)
                if sc.peek() == ",":
                    sc.take()
            if not names:
                sc.error("at least one generator is required")
            gens = tuple(names)
            stage = "relations-header"
        elif stage == "relations-header":
            word, col = sc.name()
            if word != "relations":
                sc.error("expected the 'relations' line", column=col)
            if not sc.at_end():
                sc.error("relations start on the following lines")
            stage = "relations"
        else:
            relations.append(_parse_relation(sc, spec, gens))
    if stage != "relations":
        raise PresentationError(
            max(1, text.count("\n") + 1), 1,
            f"file ended before the '{stage.split('-')[0]}' section")
    return Presentation(spec, gens, tuple(relations))


def _format_element_terms(x: AlgebraElement, gen: str) -> list[str]:
    spec = x.spec
    out = []
    for e in spec.monomials():
        c = int(x.coeffs[spec.monomial_index(e)])
        if not c:
            continue
        parts = [] if c == 1 else [str(c)]
        for i in range(spec.rank - 1, -1, -1):
            if e[i] == 1:
                parts.append(spec.names[i])
            elif e[i] > 1:
                parts.append(f"{spec.names[i]}^{e[i]}")
        parts.append(gen)
        out.append("*".join(parts))
    return out


def format_presentation(pres: Presentation) -> str:
    """Canonical text for a presentation; parses back to equal data."""
    spec = pres.spec
    lines = [f"algebra p={spec.p} vars={','.join(spec.names)}",
             f"generators {', '.join(pres.gens)}",
             "relations"]
    for rel in pres.relations:
        terms = []
        for x, gen in zip(rel, pres.gens):
            terms.extend(_format_element_terms(x, gen))
        lines.append(" + ".join(terms) if terms else "0")
    return "\n".join(lines) + "\n"


def presentations_equal(a: Presentation, b: Presentation) -> bool:
    return (a.spec == b.spec and a.gens == b.gens
            and len(a.relations) == len(b.relations)
            and all(np.array_equal(x.coeffs, y.coeffs)
                    for ra, rb in zip(a.relations, b.relations)
                    for x, y in zip(ra, rb)))
