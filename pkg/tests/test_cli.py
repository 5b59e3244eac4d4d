"""End-to-end tests for the ``rdec`` command-line interface."""

from __future__ import annotations

import io
import sys

import pytest

from radialdec.cli import main
from radialdec.decomposition import parse_decomposition, verify
from radialdec.generators import cycle_graph, grid_graph, path_graph, tree_of_wheels
from radialdec.graph import format_graph, parse_graph
from radialdec.metric import parse_quasi_isometry
from radialdec.obstructions import parse_witness, verify_witness


def write_graph(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(format_graph(g), encoding="ascii")
    return str(path)


# ---------------------------------------------------------------------------
# generate


class TestGenerate:
    def test_writes_the_canonical_format(self, tmp_path) -> None:
        out = tmp_path / "g.txt"
        assert main(["generate", "path", "4", "-o", str(out)]) == 0
        assert out.read_text(encoding="ascii") == format_graph(path_graph(4))

    def test_defaults_to_stdout(self, capsys) -> None:
        assert main(["generate", "cycle", "5"]) == 0
        assert capsys.readouterr().out == format_graph(cycle_graph(5))

    def test_tree_of_wheels(self, capsys) -> None:
        assert main(["generate", "tree-of-wheels", "6", "1"]) == 0
        expected, _ = tree_of_wheels(6, 1)
        assert capsys.readouterr().out == format_graph(expected)

    def test_wrong_parameter_count_exits_two(self, capsys) -> None:
        assert main(["generate", "grid", "3"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_unknown_family_is_an_argparse_error(self) -> None:
        with pytest.raises(SystemExit) as info:
            main(["generate", "torus", "3"])
        assert info.value.code == 2


# ---------------------------------------------------------------------------
# decompose and verify


class TestDecompose:
    def test_decomposes_a_grid(self, tmp_path, capsys) -> None:
        g = grid_graph(5, 5)
        graph_file = write_graph(tmp_path, "g.txt", g)
        cert = tmp_path / "dec.txt"
        code = main(
            ["decompose", "--class", "path", "-k", "1", graph_file, "-o", str(cert)]
        )
        assert code == 0
        assert "decomposed: radial width" in capsys.readouterr().err
        dec = parse_decomposition(cert.read_text(encoding="ascii"))
        assert verify(g, dec).ok

    def test_obstruction_exits_ten_with_a_witness(self, tmp_path, capsys) -> None:
        g = cycle_graph(9)
        graph_file = write_graph(tmp_path, "g.txt", g)
        cert = tmp_path / "wit.txt"
        code = main(
            ["decompose", "--class", "path", "-k", "0", graph_file, "-o", str(cert)]
        )
        assert code == 10
        assert "obstructed: K3" in capsys.readouterr().err
        w = parse_witness(cert.read_text(encoding="ascii"))
        assert verify_witness(g, w).ok

    def test_reads_the_graph_from_stdin(self, capsys, monkeypatch) -> None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(format_graph(path_graph(6))))
        assert main(["decompose", "--class", "path", "-k", "0", "-"]) == 0
        out = capsys.readouterr().out
        assert parse_decomposition(out).graph.n == 7

    def test_missing_file_exits_two(self, capsys, tmp_path) -> None:
        assert (
            main(["decompose", "--class", "path", "-k", "0", str(tmp_path / "no.txt")])
            == 2
        )
        assert "error:" in capsys.readouterr().err


class TestVerify:
    def test_accepts_a_fresh_certificate(self, tmp_path, capsys) -> None:
        g = path_graph(10)
        graph_file = write_graph(tmp_path, "g.txt", g)
        cert = tmp_path / "dec.txt"
        main(["decompose", "--class", "path", "-k", "0", graph_file, "-o", str(cert)])
        capsys.readouterr()
        assert main(["verify", graph_file, str(cert)]) == 0
        out = capsys.readouterr().out
        assert "radial width: 1" in out
        assert "outer radial width:" in out
        assert "radial spread:" in out
        assert "honest: yes" in out

    def test_rejects_a_corrupted_certificate(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", cycle_graph(3))
        cert = tmp_path / "dec.txt"
        cert.write_text("decomposition\n1 0\nbag 0: 0 1\n", encoding="ascii")
        assert main(["verify", graph_file, str(cert)]) == 1
        assert "invalid: vertex 2 is in no bag" in capsys.readouterr().err

    def test_accepts_a_witness_certificate(self, tmp_path, capsys) -> None:
        g = cycle_graph(9)
        graph_file = write_graph(tmp_path, "g.txt", g)
        cert = tmp_path / "wit.txt"
        main(["decompose", "--class", "path", "-k", "0", graph_file, "-o", str(cert)])
        capsys.readouterr()
        assert main(["verify", graph_file, str(cert)]) == 0
        assert "witness valid: K3" in capsys.readouterr().out

    def test_rejects_a_witness_for_the_wrong_graph(self, tmp_path, capsys) -> None:
        c9 = write_graph(tmp_path, "c9.txt", cycle_graph(9))
        c12 = write_graph(tmp_path, "c12.txt", cycle_graph(12))
        cert = tmp_path / "wit.txt"
        main(["decompose", "--class", "path", "-k", "0", c9, "-o", str(cert)])
        capsys.readouterr()
        assert main(["verify", c12, str(cert)]) == 1
        assert "invalid:" in capsys.readouterr().err

    def test_unknown_header_exits_two(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", path_graph(2))
        cert = tmp_path / "bad.txt"
        cert.write_text("qi 1 0 1 0 0\n", encoding="ascii")
        assert main(["verify", graph_file, str(cert)]) == 2
        assert "unrecognised certificate header" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# obstruct


class TestObstruct:
    def test_finds_a_triangle_in_a_cycle(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", cycle_graph(9))
        code = main(["obstruct", "--pattern", "K3", "-k", "2", "-c", "1", graph_file])
        assert code == 0
        w = parse_witness(capsys.readouterr().out)
        assert w.pattern.name == "K3"
        assert verify_witness(cycle_graph(9), w).ok

    def test_exhausted_search_exits_ten(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", path_graph(8))
        code = main(["obstruct", "--pattern", "K3", "-k", "0", "-c", "1", graph_file])
        assert code == 10
        assert capsys.readouterr().out == "none(exhausted)\n"

    def test_capped_search_exits_three(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", grid_graph(6, 6))
        code = main(
            ["obstruct", "--pattern", "K13", "-k", "1", "-c", "3", "--cap", "5", graph_file]
        )
        assert code == 3
        assert capsys.readouterr().out == "none(cap)\n"


# ---------------------------------------------------------------------------
# quasi-isometry conversion


class TestQi:
    def test_round_trip_through_both_directions(self, tmp_path, capsys) -> None:
        g = path_graph(10)
        graph_file = write_graph(tmp_path, "g.txt", g)
        dec_file = tmp_path / "dec.txt"
        main(["decompose", "--class", "path", "-k", "0", graph_file, "-o", str(dec_file)])
        dec = parse_decomposition(dec_file.read_text(encoding="ascii"))
        host_file = write_graph(tmp_path, "host.txt", dec.graph)

        qi_file = tmp_path / "qi.txt"
        assert main(["qi", "from-dec", graph_file, str(dec_file), "-o", str(qi_file)]) == 0
        qi = parse_quasi_isometry(qi_file.read_text(encoding="ascii"))
        assert len(qi.phi) == dec.graph.n

        out_file = tmp_path / "dec2.txt"
        code = main(
            ["qi", "to-dec", graph_file, host_file, str(qi_file), "-o", str(out_file)]
        )
        assert code == 0
        dec2 = parse_decomposition(out_file.read_text(encoding="ascii"))
        assert verify(g, dec2).ok

    def test_invalid_quasi_isometry_exits_two(self, tmp_path, capsys) -> None:
        g = path_graph(3)
        graph_file = write_graph(tmp_path, "g.txt", g)
        host_file = write_graph(tmp_path, "host.txt", path_graph(1))
        qi_file = tmp_path / "qi.txt"
        qi_file.write_text(
            "qi 1 0 1 0 0\n0 -> 0\n1 -> 0\n2 -> 0\n3 -> 9\n", encoding="ascii"
        )
        assert main(["qi", "to-dec", graph_file, str(host_file), str(qi_file)]) == 2
        assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# exact


class TestExact:
    def test_reports_the_exact_width(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", cycle_graph(6))
        assert main(["exact", "--class", "path", graph_file]) == 0
        assert capsys.readouterr().out == "exact width: 2\n"

    def test_at_most_no_exits_ten(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", cycle_graph(6))
        assert main(["exact", "--class", "tree", "--at-most", "1", graph_file]) == 10
        assert capsys.readouterr().out == "at most 1: no\n"

    def test_at_most_yes_writes_the_decomposition(self, tmp_path, capsys) -> None:
        g = cycle_graph(6)
        graph_file = write_graph(tmp_path, "g.txt", g)
        dec_file = tmp_path / "dec.txt"
        code = main(
            ["exact", "--class", "tree", "--at-most", "2", graph_file, "-o", str(dec_file)]
        )
        assert code == 0
        assert capsys.readouterr().out == "at most 2: yes\n"
        dec = parse_decomposition(dec_file.read_text(encoding="ascii"))
        assert verify(g, dec).ok

    def test_max_size_raises_the_vertex_cap(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", cycle_graph(12))
        assert main(["exact", "--class", "cycle", graph_file]) == 2
        capsys.readouterr()
        code = main(["exact", "--class", "cycle", "--max-size", "12", graph_file])
        assert code == 0
        assert capsys.readouterr().out == "exact width: 1\n"


# ---------------------------------------------------------------------------
# determinism


class TestDeterminism:
    def test_repeated_decompose_runs_are_byte_identical(self, tmp_path, capsys) -> None:
        graph_file = write_graph(tmp_path, "g.txt", grid_graph(4, 5))
        first = tmp_path / "a.txt"
        second = tmp_path / "b.txt"
        for out in (first, second):
            code = main(
                ["decompose", "--class", "star", "-k", "0", graph_file, "-o", str(out)]
            )
            assert code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_repeated_pipelines_are_byte_identical(self, tmp_path, capsys) -> None:
        outputs = []
        for name in ("a", "b"):
            graph_file = str(tmp_path / f"{name}-graph.txt")
            cert = str(tmp_path / f"{name}-cert.txt")
            assert main(["generate", "tree-of-wheels", "4", "1", "-o", graph_file]) == 0
            assert (
                main(["decompose", "--class", "star", "-k", "1", graph_file, "-o", cert])
                in (0, 10)
            )
            outputs.append(
                (tmp_path / f"{name}-graph.txt").read_bytes()
                + (tmp_path / f"{name}-cert.txt").read_bytes()
            )
        assert outputs[0] == outputs[1]
