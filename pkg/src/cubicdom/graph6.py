"""graph6 encoding (header-less, one graph per line) for graphs with n <= 64."""
from __future__ import annotations

from .graph import Graph, MAX_ORDER


class Graph6Error(ValueError):
    pass


class BadLengthError(Graph6Error):
    """The size prefix is missing, unsupported or disagrees with the body length."""


class TrailingBitsError(Graph6Error):
    """Padding bits after the last upper-triangle bit are not zero."""


class BadCharacterError(Graph6Error):
    """A character outside the printable range 63..126."""


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def write_graph6(g: Graph) -> str:
    n = g.order
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    # Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    value = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        row_j = adj[j]
        for i in range(j):
            value = value << 1 | (row_j >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + value))
                value = nbits = 0
    if nbits:
        out.append(chr(63 + (value << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise BadLengthError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise BadCharacterError(f"character {ch!r} at position {pos} outside 63..126")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) < 4 or s[1] == "~":
            raise BadLengthError("long-form sizes beyond 258047 are not supported")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        if n < 63:
            raise BadLengthError(f"non-minimal size encoding for n={n}")
        body = s[4:]
    if n > MAX_ORDER:
        raise BadLengthError(f"order {n} exceeds {MAX_ORDER}")
    if len(body) != _body_length(n):
        raise BadLengthError(f"expected {_body_length(n)} body bytes for n={n}, got {len(body)}")

    total = n * (n - 1) // 2
    pad = len(body) * 6 - total
    if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise TrailingBitsError("nonzero padding bits")

    rows = [0] * n
    k = 0
    i, j = 0, 1
    for ch in body:
        chunk = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k == total:
                break
            if chunk >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))
