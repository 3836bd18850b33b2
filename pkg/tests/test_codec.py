import pytest
from hypothesis import given, settings, strategies as st

from planewiener.codec import HEADER, decode_planar_code, encode_planar_code, write_records
from planewiener.enumeration import ExtremalRecord, generate_all
from planewiener.errors import InvalidNeighborByte, TruncatedStream


def test_k4_byte_layout(k4):
    payload = encode_planar_code([k4], with_header=False)
    # one order byte plus four 0-terminated lists of three neighbors
    assert len(payload) == 1 + 4 * (3 + 1)
    assert payload[0] == 4


def test_empty_stream_with_header():
    assert encode_planar_code([], with_header=True) == HEADER
    assert len(HEADER) == 15


def test_cube_payload_size(cube):
    payload = encode_planar_code([cube], with_header=False)
    assert len(payload) == 1 + 8 * (3 + 1) == 33


def test_round_trip(k4, cube, octahedron):
    data = encode_planar_code([k4, cube, octahedron])
    back = decode_planar_code(data)
    assert [g.rotation for g in back] == [k4.rotation, cube.rotation, octahedron.rotation]
    assert encode_planar_code(back) == data


def test_header_optional(k4):
    data = encode_planar_code([k4], with_header=False)
    assert decode_planar_code(data)[0].rotation == k4.rotation


def test_truncated_stream(k4):
    data = encode_planar_code([k4], with_header=False)
    with pytest.raises(TruncatedStream):
        decode_planar_code(data[:-3])


def test_invalid_neighbor_byte():
    with pytest.raises(InvalidNeighborByte):
        decode_planar_code(bytes([2, 9, 0, 1, 0]))


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=49))
def test_round_trip_over_corpus(index):
    graphs = list(generate_all("triangulation", 9))
    g = graphs[index % len(graphs)]
    data = encode_planar_code([g])
    assert encode_planar_code(decode_planar_code(data)) == data


def _record(order, wmax, wc, smax, sc, total):
    return ExtremalRecord(
        order=order, graph_class="triangulation", kappa_min=3,
        max_wiener=wmax, wiener_count=wc,
        max_transmission=smax, transmission_count=sc, total_classes=total,
    )


def test_write_records_csv():
    text = write_records([_record(10, 72, 1, 18, 17, 233)], "csv")
    lines = text.strip().split("\n")
    assert lines[0] == (
        "order,class,kappa,max_wiener,wiener_count,"
        "max_transmission,transmission_count,total_classes"
    )
    assert lines[1] == "10,triangulation,3,72,1,18,17,233"


def test_write_records_empty_and_sorted():
    assert write_records([], "csv").strip().split("\n") == [
        "order,class,kappa,max_wiener,wiener_count,"
        "max_transmission,transmission_count,total_classes"
    ]
    two = [_record(12, 120, 1, 26, 25, 7595), _record(10, 72, 1, 18, 17, 233)]
    rows = write_records(two, "csv").strip().split("\n")[1:]
    assert rows[0].startswith("10,") and rows[1].startswith("12,")


def test_write_records_json():
    import json

    payload = json.loads(write_records([_record(4, 6, 1, 3, 1, 1)], "json"))
    assert payload[0]["max_wiener"] == 6 and payload[0]["order"] == 4
