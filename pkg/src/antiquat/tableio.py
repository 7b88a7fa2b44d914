"""Line-oriented text format for multiplication tables.

    dim 4
    e2 * e2 = -e1
    e2 * e3 = e4
    ...

After the ``dim <n>`` header, each line gives one basis product as a sum of
signed terms: ``e<k>``, ``-e<k>`` or ``<rational>*e<k>``, joined by ``+``.
A lone ``0`` denotes the empty combination.  Products with an identity factor
(i = 1 or j = 1) may be omitted and are filled in automatically; when present
they must agree with the identity.  Anything else is a parse error carrying
its line number.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import BasisProduct, InvalidTable, MultiplicationTable

__all__ = ["TableParseError", "parse_table_text", "format_table_text"]

_DIM_RE = re.compile(r"^dim\s+(\d+)$")
_PRODUCT_RE = re.compile(r"^e(\d+)\s*\*\s*e(\d+)\s*=\s*(.+)$")
_UNIT_TERM_RE = re.compile(r"^(-?)e(\d+)$")
_COEFF_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)\s*\*\s*e(\d+)$")


class TableParseError(ValueError):
    """Malformed table text; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _parse_combination(text: str, lineno: int) -> BasisProduct:
    text = text.strip()
    if text == "0":
        return BasisProduct.zero()
    terms = []
    for raw in text.split("+"):
        term = raw.strip()
        m = _UNIT_TERM_RE.match(term)
        if m:
            terms.append((Fraction(-1 if m.group(1) else 1), int(m.group(2))))
            continue
        m = _COEFF_TERM_RE.match(term)
        if m:
            terms.append((Fraction(m.group(1)), int(m.group(2))))
            continue
        raise TableParseError(lineno, f"unrecognized term {term!r}")
    return BasisProduct(terms)


def parse_table_text(text: str) -> MultiplicationTable:
    """Parse the table format above into a validated table."""
    lines = text.splitlines()
    dim = None
    header_line = 0
    products: dict[tuple[int, int], BasisProduct] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if dim is None:
            m = _DIM_RE.match(line)
            if not m:
                raise TableParseError(lineno, f"expected 'dim <n>' header, got {line!r}")
            dim = int(m.group(1))
            if dim < 1:
                raise TableParseError(lineno, "dimension must be positive")
            header_line = lineno
            continue
        m = _PRODUCT_RE.match(line)
        if not m:
            raise TableParseError(lineno, f"expected 'e<i> * e<j> = ...', got {line!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise TableParseError(lineno, f"basis index in e{i} * e{j} outside dim {dim}")
        value = _parse_combination(m.group(3), lineno)
        if value.max_index() > dim:
            raise TableParseError(lineno, f"term references e{value.max_index()} outside dim {dim}")
        if 1 in (i, j):
            expected = BasisProduct.basis(max(i, j))
            if value != expected:
                raise TableParseError(
                    lineno, f"identity product e{i} * e{j} must equal e{max(i, j)}"
                )
            continue
        if (i, j) in products:
            raise TableParseError(lineno, f"duplicate product e{i} * e{j}")
        products[(i, j)] = value
    if dim is None:
        raise TableParseError(1, "missing 'dim <n>' header")
    missing = [(i, j) for i in range(2, dim + 1) for j in range(2, dim + 1)
               if (i, j) not in products]
    if missing:
        i, j = missing[0]
        raise TableParseError(len(lines) or header_line, f"missing product e{i} * e{j}")
    try:
        return MultiplicationTable.from_products(dim, products)
    except InvalidTable as exc:
        raise TableParseError(header_line, str(exc)) from exc


def _format_combination(value: BasisProduct) -> str:
    if not value.terms:
        return "0"
    parts = []
    for c, k in value.terms:
        if c == 1:
            parts.append(f"e{k}")
        elif c == -1:
            parts.append(f"-e{k}")
        else:
            parts.append(f"{c}*e{k}")
    return " + ".join(parts)


def format_table_text(table: MultiplicationTable) -> str:
    """Render every product (identity rows included) in row-major order."""
    lines = [f"dim {table.dim}"]
    for i in range(1, table.dim + 1):
        for j in range(1, table.dim + 1):
            lines.append(f"e{i} * e{j} = {_format_combination(table.entry(i, j))}")
    return "\n".join(lines) + "\n"
