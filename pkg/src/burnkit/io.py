"""File formats: edge-list text, graph6, and certificate/report JSON.

Edge-list format: first line "n m", then m lines "u v" with 0-indexed
endpoints.  graph6 parsing follows the standard >=63-offset byte encoding
(read and write, the optional header is tolerated on input).  All JSON is
serialized with sorted keys so golden files are stable.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .burning import BurnCertificate
from .errors import ParseError
from .graphs import Graph, build_graph


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    rows = [
        (i + 1, line.strip())
        for i, line in enumerate(lines)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ParseError("line 1: empty input, expected 'n m' header")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: expected 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header {header!r}") from None
    if len(rows) - 1 != m:
        raise ParseError(
            f"line {lineno}: header promises {m} edges, found {len(rows) - 1}"
        )
    edges = []
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer edge {row!r}") from None
    return build_graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(data: Union[str, bytes]) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER) :]
    if not data:
        raise ParseError("byte 1: empty graph6 input")
    vals = [ord(ch) - 63 for ch in data]
    for i, v in enumerate(vals):
        if not 0 <= v <= 63:
            raise ParseError(f"byte {i + 1}: {data[i]!r} outside graph6 range")
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    else:
        raise ParseError("byte 2: truncated graph6 size field")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(
            f"byte {len(data)}: expected {(nbits + 5) // 6} payload bytes, got {len(body)}"
        )
    bits = []
    for v in body:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return build_graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [chr(n + 63)]
    elif n <= 258047:
        head = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    else:
        raise ParseError("graph too large for supported graph6 sizes")
    present = set(g.edges())
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    out = head
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def load_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix in (".g6", ".graph6"):
        return parse_graph6(text)
    return parse_edge_list(text)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_certificate(cert: BurnCertificate, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_json(cert.to_json_dict()))


def read_certificate(path: Union[str, Path]) -> BurnCertificate:
    data = json.loads(Path(path).read_text())
    return BurnCertificate.from_json_dict(data)
