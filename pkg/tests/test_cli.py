import json
import math
import re

import pytest

from cheegerlab import jsonio
from cheegerlab.cheeger import hexagon_constant
from cheegerlab.cli import run
from cheegerlab.cluster import cluster_to_dict
from conftest import make_domino_cluster

PI = math.pi


def write(path, obj):
    path.write_text(jsonio.dumps(obj))
    return str(path)


def read(path):
    return json.loads(path.read_text())


@pytest.fixture()
def square_file(tmp_path):
    return write(tmp_path / "square.json", {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]})


class TestCheegerCommand:
    def test_unit_square(self, tmp_path, square_file):
        out = tmp_path / "out.json"
        assert run(["cheeger", "--input", square_file, "--output", str(out)]) == 0
        data = read(out)
        assert data["schema"] == 1
        assert data["h"] == pytest.approx(2 + math.sqrt(PI), abs=1e-10)
        assert data["h"] == pytest.approx(3.7724539, abs=1e-6)

    def test_malformed_json_exit_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"vertices": [[0,0],')
        out = tmp_path / "out.json"
        assert run(["cheeger", "--input", str(bad), "--output", str(out)]) == 1
        err = capsys.readouterr().err
        assert re.search(r"line \d+, column \d+", err)

    def test_unknown_keys_rejected(self, tmp_path):
        path = write(tmp_path / "poly.json", {"vertices": [[0, 0], [1, 0], [0, 1]], "frobnicate": 1})
        assert run(["cheeger", "--input", path, "--output", str(tmp_path / "o.json")]) == 1

    def test_unknown_schema_rejected(self, tmp_path):
        path = tmp_path / "poly.json"
        path.write_text('{"schema": 9, "vertices": [[0,0],[1,0],[0,1]]}\n')
        assert run(["cheeger", "--input", str(path), "--output", str(tmp_path / "o.json")]) == 1


class TestPipelines:
    def test_honeycomb_then_certificate(self, tmp_path):
        hc = tmp_path / "hc.json"
        cert = tmp_path / "cert.json"
        assert run(["honeycomb", "--l", "2", "--output", str(hc)]) == 0
        assert run(["certificate", "--input", str(hc), "--output", str(cert)]) == 0
        data = read(cert)
        assert data["scaled_objective"] / hexagon_constant() == pytest.approx(1.0, abs=1e-9)
        assert data["holds"] is True

    def test_structure_and_hales_on_emitted_result(self, tmp_path, square_file):
        res = tmp_path / "res.json"
        run(["cheeger", "--input", square_file, "--output", str(res)])
        data = read(res)
        domain = {"boundary": data["boundary"], "roles": data["roles"], "h": data["h"]}
        dom_file = write(tmp_path / "dom.json", domain)
        rep_file = tmp_path / "rep.json"
        assert run(["structure", "--input", dom_file, "--output", str(rep_file)]) == 0
        rep = read(rep_file)
        assert rep["is_class_A"] is True
        assert max(rep["representation_residuals"]) < 1e-10
        hal_file = tmp_path / "hales.json"
        assert run(["hales", "--input", dom_file, "--output", str(hal_file)]) == 0
        hal = read(hal_file)
        assert hal["satisfied"] is True
        assert hal["N"] == 4

    def test_chain_report_and_sweep(self, tmp_path):
        chain = {
            "flavor": "closed",
            "centers": [[0, 0], [2, 0], [1, math.sqrt(3)]],
            "radii": [1, 1, 1],
            "lines": [],
        }
        cfile = write(tmp_path / "chain.json", chain)
        out = tmp_path / "rep.json"
        assert run(["chain", "--input", cfile, "--output", str(out)]) == 0
        rep = read(out)
        assert rep["holds"] is True
        assert rep["area"] == pytest.approx(0.5 * (2 * math.sqrt(3) - PI), abs=1e-10)

        sweep = write(tmp_path / "sweep.json", {
            "sweep": {"flavors": ["closed", "sector"], "count": 12, "seed": 4},
        })
        swout = tmp_path / "sweep_out.jsonl"
        assert run(["chain", "--input", str(sweep), "--output", str(swout)]) == 0
        lines = swout.read_text().strip().split("\n")
        assert len(lines) == 24
        assert all(json.loads(line)["holds"] for line in lines)

    def test_optimize_config(self, tmp_path):
        cfg = write(tmp_path / "run.json", {
            "k": 1,
            "container": {"vertices": [[0, 0], [1, 0], [0.5, math.sqrt(3) / 2]]},
            "budget": 40,
            "seed": 0,
            "restarts": 1,
        })
        out = tmp_path / "trace.jsonl"
        assert run(["optimize", "--config", cfg, "--output", str(out)]) == 0
        trace = json.loads(out.read_text().strip())
        area = math.sqrt(3) / 4
        expected = math.sqrt(PI / area) + 1.0 / (1.0 / (2.0 * math.sqrt(3)))
        assert trace["best_objective"] == pytest.approx(expected, rel=1e-6)

    def test_optimize_unknown_key_rejected(self, tmp_path):
        cfg = write(tmp_path / "run.json", {
            "k": 1,
            "container": {"vertices": [[0, 0], [1, 0], [0.5, 0.9]]},
            "budget": 10,
            "seed": 0,
            "bogus": True,
        })
        assert run(["optimize", "--config", cfg, "--output", str(tmp_path / "t.jsonl")]) == 1


class TestRender:
    def test_unit_circle_single_path_two_arc_commands(self, tmp_path):
        circle = {
            "closed": True,
            "edges": [{"kind": "arc", "cx": 0, "cy": 0, "r": 1, "a0": 0, "a1": 2 * PI, "turn": 1}],
        }
        cfile = write(tmp_path / "circle.json", circle)
        out = tmp_path / "circle.svg"
        assert run(["render", "--input", cfile, "--output", str(out)]) == 0
        svg = out.read_text()
        assert svg.count("<path") == 1
        assert len(re.findall(r"A ", svg)) == 2

    def test_honeycomb_outline_counts(self, tmp_path):
        hc = tmp_path / "hc.json"
        run(["honeycomb", "--l", "3", "--output", str(hc)])
        out = tmp_path / "hc.svg"
        assert run(["render", "--input", str(hc), "--output", str(out)]) == 0
        svg = out.read_text()
        # 6 cell outlines plus the container outline
        assert svg.count("<path") == 7

    def test_drawing_command_count_equals_edge_count(self, tmp_path, square_file):
        res = tmp_path / "res.json"
        run(["cheeger", "--input", square_file, "--output", str(res)])
        data = read(res)
        curve_file = write(tmp_path / "curve.json", data["boundary"])
        out = tmp_path / "curve.svg"
        assert run(["render", "--input", str(curve_file), "--output", str(out)]) == 0
        svg = out.read_text()
        commands = len(re.findall(r"[LA] ", svg))
        assert commands == len(data["boundary"]["edges"])  # no full-circle edges here

    def test_chain_render_counts(self, tmp_path):
        chain = {
            "flavor": "closed",
            "centers": [[0, 0], [2, 0], [1, math.sqrt(3)]],
            "radii": [1, 1, 1],
            "lines": [],
        }
        cfile = write(tmp_path / "chain.json", chain)
        out = tmp_path / "chain.svg"
        assert run(["render", "--input", cfile, "--output", str(out)]) == 0
        svg = out.read_text()
        assert svg.count("<circle") == 3
        assert svg.count("<path") == 1  # shaded pocket overlay

    def test_unknown_kind_exit_1(self, tmp_path):
        bad = write(tmp_path / "x.json", {"species": "octahedron"})
        assert run(["render", "--input", bad, "--output", str(tmp_path / "x.svg")]) == 1


class TestDeterminism:
    def test_byte_identical_artifacts(self, tmp_path, square_file):
        outs = []
        for name in ("a", "b"):
            res = tmp_path / f"res_{name}.json"
            hc = tmp_path / f"hc_{name}.json"
            svg = tmp_path / f"hc_{name}.svg"
            assert run(["cheeger", "--input", square_file, "--output", str(res)]) == 0
            assert run(["honeycomb", "--l", "2", "--output", str(hc)]) == 0
            assert run(["render", "--input", str(hc), "--output", str(svg)]) == 0
            outs.append((res.read_bytes(), hc.read_bytes(), svg.read_bytes()))
        assert outs[0] == outs[1]

    def test_round_trip_cluster_json(self, tmp_path):
        cl = make_domino_cluster()
        cfile = write(tmp_path / "cluster.json", cluster_to_dict(cl))
        cert = tmp_path / "cert.json"
        assert run(["certificate", "--input", cfile, "--output", str(cert)]) == 0
        assert read(cert)["applicable"] is True
        svg = tmp_path / "cluster.svg"
        assert run(["render", "--input", cfile, "--output", str(svg)]) == 0
