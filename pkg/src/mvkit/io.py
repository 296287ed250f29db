"""Text formats for algebras (``mvalg v1``) and unary maps (``mvmap v1``).

Both formats use single spaces and LF newlines and end with a newline.
Lines starting with ``#`` are comments and are skipped by the parsers; the
serializers never write them, so ``serialize(parse(text)) == text`` for any
comment-free file.
"""
from pathlib import Path

from .algebra import MvAlgebra, build_algebra
from .derivations import UnaryMap
from .errors import DimensionError, ParseError, RangeError

ALGEBRA_TAG = "mvalg v1"
MAP_TAG = "mvmap v1"


def _content_lines(text):
    """(line number, text) for every non-comment line."""
    return [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if not ln.startswith("#")]


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _keyed(lines, k, key, lineno_default):
    if k >= len(lines):
        raise ParseError(f"missing '{key}' line", lineno_default)
    lineno, text = lines[k]
    tokens = text.split(" ")
    if tokens[0] != key:
        raise ParseError(f"expected '{key}', got {text!r}", lineno)
    return lineno, tokens[1:]


def _order(lines, k):
    lineno, rest = _keyed(lines, k, "order", lines[-1][0] if lines else 1)
    if len(rest) != 1:
        raise ParseError("order line takes one value", lineno)
    n = _ints(rest, lineno)[0]
    if n < 1:
        raise ParseError("order must be positive", lineno)
    return n


def _check_range(values, n, lineno, what):
    for v in values:
        if not 0 <= v < n:
            raise RangeError(f"line {lineno}: {what} entry {v} out of range 0..{n - 1}")


def parse_algebra(text):
    lines = _content_lines(text)
    if not lines or lines[0][1] != ALGEBRA_TAG:
        raise ParseError(f"unknown format tag, expected {ALGEBRA_TAG!r}", lines[0][0] if lines else 1)
    n = _order(lines, 1)
    lineno, rest = _keyed(lines, 2, "neg", lines[-1][0])
    neg = _ints(rest, lineno)
    if len(neg) != n:
        raise ParseError(f"neg has {len(neg)} entries, order is {n}", lineno)
    _check_range(neg, n, lineno, "neg")
    if len(lines) < 4 or lines[3][1] != "oplus":
        raise ParseError("expected 'oplus'", lines[3][0] if len(lines) > 3 else lines[-1][0])
    rows = []
    for k in range(n):
        if 4 + k >= len(lines):
            raise ParseError(f"oplus has {k} rows, order is {n}", lines[-1][0])
        lineno, row_text = lines[4 + k]
        row = _ints(row_text.split(" "), lineno)
        if len(row) != n:
            raise ParseError(f"oplus row has {len(row)} entries, order is {n}", lineno)
        _check_range(row, n, lineno, "oplus")
        rows.append(row)
    if len(lines) > 4 + n:
        raise ParseError("trailing content after oplus table", lines[4 + n][0])
    return build_algebra(n, rows, neg)


def serialize_algebra(A: MvAlgebra):
    out = [ALGEBRA_TAG, f"order {A.order}", "neg " + " ".join(map(str, A.neg.tolist())), "oplus"]
    out += [" ".join(map(str, row)) for row in A.oplus.tolist()]
    return "\n".join(out) + "\n"


def parse_map(text, expected_order=None):
    lines = _content_lines(text)
    if not lines or lines[0][1] != MAP_TAG:
        raise ParseError(f"unknown format tag, expected {MAP_TAG!r}", lines[0][0] if lines else 1)
    n = _order(lines, 1)
    if expected_order is not None and n != expected_order:
        raise DimensionError(f"map has order {n}, algebra has order {expected_order}")
    lineno, rest = _keyed(lines, 2, "map", lines[-1][0])
    image = _ints(rest, lineno)
    if len(image) != n:
        raise ParseError(f"map has {len(image)} entries, order is {n}", lineno)
    _check_range(image, n, lineno, "map")
    if len(lines) > 3:
        raise ParseError("trailing content after map line", lines[3][0])
    return UnaryMap(tuple(image))


def serialize_map(f: UnaryMap):
    return f"{MAP_TAG}\norder {f.order}\nmap " + " ".join(map(str, f.image)) + "\n"


def read_algebra(path):
    return parse_algebra(Path(path).read_text())


def write_algebra(path, A):
    Path(path).write_text(serialize_algebra(A))


def read_map(path, expected_order=None):
    return parse_map(Path(path).read_text(), expected_order)


def write_map(path, f):
    Path(path).write_text(serialize_map(f))


def fixture_path(name):
    """Path of a shipped fixture file, e.g. ``fixture_path("example_3_3.mvalg")``."""
    return Path(__file__).with_name("data") / name
