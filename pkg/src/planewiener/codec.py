"""planar_code serialization (plantri interop) and CSV/JSON report writers.

Narrow format only: one byte per vertex count and per neighbor, so n <= 255.
Neighbor order is the stream's embedding order verbatim; nothing is
re-canonicalized on decode.
"""

from __future__ import annotations

import json
from typing import Iterable, List, Sequence, TYPE_CHECKING

from .errors import BadHeader, InvalidNeighborByte, OrderTooLarge, TruncatedStream
from .plane_graph import PlaneGraph, build_from_rotation

if TYPE_CHECKING:  # pragma: no cover
    from .enumeration import ExtremalRecord

HEADER = b">>planar_code<<"


def encode_planar_code(graphs: Iterable[PlaneGraph], with_header: bool = True) -> bytes:
    out = bytearray()
    if with_header:
        out += HEADER
    for g in graphs:
        if g.n > 255:
            raise OrderTooLarge(f"n={g.n} exceeds the narrow planar_code format")
        out.append(g.n)
        for v in range(1, g.n + 1):
            out.extend(g.rotation[v - 1])
            out.append(0)
    return bytes(out)


def decode_planar_code(data: bytes) -> List[PlaneGraph]:
    pos = 0
    if data[: len(HEADER)] == HEADER:
        pos = len(HEADER)
    elif data[:2] == b">>":
        raise BadHeader(f"unrecognized header {data[:16]!r}")
    graphs: List[PlaneGraph] = []
    size = len(data)
    while pos < size:
        n = data[pos]
        pos += 1
        if n == 0:
            raise InvalidNeighborByte("graph with zero vertices")
        rotation: List[List[int]] = []
        for v in range(1, n + 1):
            nbrs: List[int] = []
            while True:
                if pos >= size:
                    raise TruncatedStream(
                        f"stream ended inside the neighbor list of vertex {v}"
                    )
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise InvalidNeighborByte(f"neighbor {b} exceeds n={n}")
                nbrs.append(b)
            rotation.append(nbrs)
        graphs.append(build_from_rotation(rotation))
    return graphs


_CSV_COLUMNS = (
    "order",
    "class",
    "kappa",
    "max_wiener",
    "wiener_count",
    "max_transmission",
    "transmission_count",
    "total_classes",
)


def _record_row(r: "ExtremalRecord") -> List[object]:
    return [
        r.order,
        r.graph_class,
        r.kappa_min,
        r.max_wiener if r.total_classes else "",
        r.wiener_count if r.total_classes else "",
        r.max_transmission if r.total_classes else "",
        r.transmission_count if r.total_classes else "",
        r.total_classes,
    ]


def write_records(records: Sequence["ExtremalRecord"], format: str = "csv") -> str:
    """Render extremal records, sorted by (class, kappa, order)."""
    ordered = sorted(records, key=lambda r: (r.graph_class, r.kappa_min, r.order))
    if format == "csv":
        lines = [",".join(_CSV_COLUMNS)]
        for r in ordered:
            lines.append(",".join(str(x) for x in _record_row(r)))
        return "\n".join(lines) + "\n"
    if format == "json":
        payload = [
            {
                "order": r.order,
                "class": r.graph_class,
                "kappa": r.kappa_min,
                "max_wiener": r.max_wiener if r.total_classes else None,
                "wiener_count": r.wiener_count if r.total_classes else None,
                "max_transmission": r.max_transmission if r.total_classes else None,
                "transmission_count": r.transmission_count if r.total_classes else None,
                "total_classes": r.total_classes,
            }
            for r in ordered
        ]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unsupported format {format!r}")
