import io as stdio
import json

import numpy as np
import pytest

from walkforge.sdk import Graph, PrimeField, build_index, frobenius_decompose, query_all_lengths
from walkforge.sdk import io
from walkforge.sdk.exceptions import EdgeListParseError, IndexFormatError


def index_of(g):
    return build_index(frobenius_decompose(g.adjacency_matrix(PrimeField())), g)


def test_parse_edge_list_with_comments():
    g = io.parse_edge_list(["# three-cycle", "3 3", "", "0 1", "1 2", "  2 0  "])
    assert g == Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])


@pytest.mark.parametrize("lines,line_number,fragment", [
    (["3 1", "0 1 2"], 2, "two integers"),
    (["3 1", "0 x"], 2, "not an integer"),
    (["0 0"], 1, "invalid header"),
    (["2 1", "0 1", "1 0"], 3, "more arcs"),
    (["2 1", "0 2"], 2, "outside"),
    (["2 2", "0 1", "0 1"], 3, "duplicate"),
    (["# nothing"], 1, "missing"),
    (["3 2", "0 1"], 2, "declared 2"),
])
def test_parse_errors_carry_line_numbers(lines, line_number, fragment):
    with pytest.raises(EdgeListParseError) as excinfo:
        io.parse_edge_list(lines)
    assert excinfo.value.line_number == line_number
    assert fragment in str(excinfo.value)
    assert excinfo.value.exit_code == 1


def test_edge_list_file_round_trip(tmp_path, four_cycle_antiparallel):
    path = tmp_path / "g.txt"
    io.write_edge_list(four_cycle_antiparallel, path)
    assert path.read_text().splitlines()[0] == "4 8"
    assert io.read_edge_list(path) == four_cycle_antiparallel


def test_index_round_trip_is_bit_identical(tmp_path, random_graphs):
    for i, g in enumerate(random_graphs(20, max_n=18, seed=41)):
        idx = index_of(g)
        path = tmp_path / f"g{i}.wfx"
        io.write_index(idx, path)
        assert io.looks_like_index(path)
        again = io.read_index(path)

        assert again.meta() == idx.meta()
        assert again.graph == g
        for a, b in zip(again.strips + again.prefix_strips, idx.strips + idx.prefix_strips):
            assert np.array_equal(a, b)
        for u in range(g.n):
            for v in range(g.n):
                assert query_all_lengths(again, u, v) == query_all_lengths(idx, u, v)
        assert io.index_to_bytes(again) == path.read_bytes()


def test_index_layout(three_cycle):
    data = io.index_to_bytes(index_of(three_cycle))
    assert data[:4] == b"WFIX"
    assert int.from_bytes(data[4:6], "little") == 1
    # header, one degree, strip and prefix strip (3 x 6), u_inv (3 x 3), adjacency, checksum
    assert len(data) == 22 + 4 + 2 * 18 * 8 + 9 * 8 + 2 + 8


def test_corrupt_indexes(three_cycle):
    data = io.index_to_bytes(index_of(three_cycle))
    with pytest.raises(IndexFormatError, match="too short"):
        io.index_from_bytes(data[:10])
    with pytest.raises(IndexFormatError, match="magic"):
        io.index_from_bytes(b"NOPE" + data[4:])
    flipped = bytearray(data)
    flipped[40] ^= 1
    with pytest.raises(IndexFormatError, match="checksum"):
        io.index_from_bytes(bytes(flipped))


def test_index_version_mismatch(three_cycle):
    from walkforge.sdk.utils import fnv1a64

    body = bytearray(io.index_to_bytes(index_of(three_cycle))[:-8])
    body[4:6] = (2).to_bytes(2, "little")
    data = bytes(body) + fnv1a64(bytes(body)).to_bytes(8, "little")
    with pytest.raises(IndexFormatError, match="version"):
        io.index_from_bytes(data)


def test_read_missing_index(tmp_path):
    with pytest.raises(IndexFormatError):
        io.read_index(tmp_path / "missing.wfx")
    assert not io.looks_like_index(tmp_path / "missing.wfx")


def test_apaw_writers(tmp_path, three_cycle):
    out = stdio.StringIO()
    records = [(0, 1, (1, 0, 0)), (1, 1, (0, 0, 1))]
    assert io.write_apaw_jsonl(records, out, 998244353) == 2
    lines = [json.loads(line) for line in out.getvalue().splitlines()]
    assert lines[1] == {"u": 1, "v": 1, "counts": [0, 0, 1], "p": 998244353, "exactness": "mod_p"}

    table = np.zeros((3, 3, 2), dtype=np.int64)
    table[:, :, 0] = three_cycle.adjacency
    paths = io.write_apaw_per_k(table, tmp_path / "apaw")
    assert [p.name for p in paths] == ["k_1.txt", "k_2.txt"]
    assert np.loadtxt(paths[0], dtype=np.int64).tolist() == three_cycle.adjacency.tolist()
