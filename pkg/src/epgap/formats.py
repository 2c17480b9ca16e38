"""Graph serialization: graph6, plain edge lists, and DOT export.

graph6 is the compact ASCII format: one header byte chr(n+63) for n <= 62,
then the upper triangle of the adjacency matrix in column-major order
(bit (u,v) for v = 1..n-1, u = 0..v-1) packed into 6-bit groups, each
group + 63. Unused padding bits must be zero.

The edge list format is a header line "n m" followed by m lines "u v".
Blank lines and lines starting with '#' are ignored.
"""

from __future__ import annotations

from .errors import FormatError
from .graphs import Graph


_G6_MAX_N = 62


def write_graph6(g: Graph) -> str:
    if g.n > _G6_MAX_N:
        raise FormatError(f"graph6 writer limited to n <= {_G6_MAX_N} (got {g.n})")
    out = [chr(g.n + 63)]
    group = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            group = group << 1 | (1 if g.has_edge(u, v) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} outside graph6 range", offset=i)
    n = ord(s[0]) - 63
    if n == 63:
        raise FormatError("multi-byte graph6 sizes (n > 62) not supported", offset=0)
    npairs = n * (n - 1) // 2
    ngroups = (npairs + 5) // 6
    if len(s) != 1 + ngroups:
        raise FormatError(
            f"graph6 for n={n} needs {1 + ngroups} bytes, got {len(s)}",
            offset=min(len(s), 1 + ngroups),
        )
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(s[1 + idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                edges.append((u, v))
            idx += 1
    if npairs % 6:
        tail = ord(s[-1]) - 63
        pad = 6 - npairs % 6
        if tail & ((1 << pad) - 1):
            raise FormatError("nonzero padding bits", offset=len(s) - 1)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise FormatError("empty edge list input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"line {lineno}: header must be 'n m'", offset=lineno)
    n, m = int(parts[0]), int(parts[1])
    if len(rows) - 1 != m:
        raise FormatError(
            f"header promises {m} edges, found {len(rows) - 1}", offset=lineno
        )
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(_is_int(p) for p in parts):
            raise FormatError(f"line {lineno}: edge must be 'u v'", offset=lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise FormatError(
                f"line {lineno}: edge ({u},{v}) invalid for n={n}", offset=lineno
            )
        edges.append((u, v))
    return Graph(n, edges)


def write_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    lines.extend(f"  {v};" for v in isolated)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _is_int(s: str) -> bool:
    return s.isdigit() or (s.startswith("-") and s[1:].isdigit())
