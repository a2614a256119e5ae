import json
from fractions import Fraction as F
from importlib import resources

import jsonschema

from symplectic_ice import cli
from symplectic_ice import diagram as dg
from symplectic_ice import weights
from symplectic_ice.weights import Family


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def load_schema(name):
    path = resources.files("symplectic_ice") / "schemas" / name
    return json.loads(path.read_text())


def test_partition_example(capsys):
    code, out, _ = run(capsys, "partition", "--model", "reflecting", "--n", "1",
                       "--L", "1", "--lambda", "0", "--z", "1/2", "--q", "2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "1/2"


def test_partition_json_schema(capsys):
    code, out, _ = run(capsys, "partition", "--model", "signed", "--n", "2",
                       "--L", "4", "--lambda", "1,0", "--sigma=-1,-2",
                       "--tau", "1,2", "--z", "1/2,1/3", "--q", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    config = payload.pop("config")
    assert config["subcommand"] == "partition"
    jsonschema.validate(payload, load_schema("partition_result.schema.json"))
    assert payload["num_states"] == 1


def test_partition_transfer_method_agrees(capsys):
    args = ["partition", "--model", "absorbing", "--n", "2", "--L", "4",
            "--lambda", "2,0", "--z", "2/7,3/11", "--q", "5/3"]
    _, out_enum, _ = run(capsys, *args)
    _, out_tr, _ = run(capsys, *args, "--method", "transfer")
    assert out_enum.strip().splitlines()[-1] == out_tr.strip().splitlines()[-1]


def test_verify_pass_and_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--relation", "ybe-gg", "--points", "3",
                       "--seed", "5")
    assert code == 0
    assert "PASS" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--relation", "fish-reflecting",
                       "--points", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    payload.pop("config")
    jsonschema.validate(payload, load_schema("relation_report.schema.json"))
    assert payload["passed"] is True


def test_verify_corrupted_preset_exits_one(capsys, monkeypatch):
    true_weight = weights.vertex_weight

    def corrupted(model, family, edges, params, q):
        w = true_weight(model, family, edges, params, q)
        if family is Family.R_GAMMA_GAMMA and edges == (0, -1, 0, -1):
            return w + F(1, 7)
        return w

    monkeypatch.setattr(dg, "vertex_weight", corrupted)
    code, out, _ = run(capsys, "verify", "--relation", "ybe-gg", "--points", "2")
    assert code == 1
    assert "FAIL" in out and "counterexample" in out


def test_verify_parallel_jobs_match_serial(capsys):
    code1, out1, _ = run(capsys, "verify", "--relation", "ybe-dg", "--points", "4",
                         "--seed", "3", "--json")
    code2, out2, _ = run(capsys, "verify", "--relation", "ybe-dg", "--points", "4",
                         "--seed", "3", "--jobs", "2", "--json")
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    a.pop("config"); b.pop("config")
    assert a == b


def test_sample_json_schema(capsys):
    code, out, _ = run(capsys, "sample", "--model", "reflecting", "--n", "1",
                       "--L", "2", "--z", "3/4", "--q", "1/2",
                       "--samples", "3000", "--seed", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    payload.pop("config")
    jsonschema.validate(payload, load_schema("sample_summary.schema.json"))
    assert payload["statistics"]["passed"] is True
    assert sum(payload["histogram"].values()) == 3000


def test_sample_deterministic(capsys):
    args = ("sample", "--model", "positive", "--n", "1", "--L", "2", "--z", "3/4",
            "--q", "1/2", "--sigma", "1", "--samples", "500", "--seed", "9", "--json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_sample_trajectories_jsonl(tmp_path, capsys):
    path = tmp_path / "traj.jsonl"
    code, _, _ = run(capsys, "sample", "--model", "signed", "--n", "1", "--L", "2",
                     "--z", "3/4", "--q", "1/2", "--sigma", "1",
                     "--samples", "40", "--seed", "4", "--trajectories", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 40
    for i, line in enumerate(lines):
        record = json.loads(line)
        assert record["index"] == i
        assert len(record["trajectory"]) == 3    # times t = 0, 1, 2
        assert record["trajectory"][0] == []


def test_render_ascii_and_svg(capsys):
    base = ("render", "--model", "signed", "--n", "2", "--L", "4",
            "--lambda", "1,0", "--sigma=-1,-2", "--tau", "1,2",
            "--z", "1/2,1/3", "--q", "5")
    code, out, _ = run(capsys, *base)
    assert code == 0
    assert "strands: 2" in out
    code, out, _ = run(capsys, *base, "--format", "svg")
    assert code == 0
    assert out.count('class="strand"') == 2


def test_render_bad_index(capsys):
    code, _, err = run(capsys, "render", "--model", "reflecting", "--n", "1",
                       "--L", "1", "--lambda", "0", "--z", "1/2", "--q", "2",
                       "--state-index", "5")
    assert code == 2
    assert "out of range" in err


def test_bad_spec_exits_two(capsys):
    code, _, err = run(capsys, "partition", "--model", "reflecting", "--n", "2",
                       "--L", "2", "--lambda", "2,1", "--z", "1/2,1/3", "--q", "5")
    assert code == 2
    assert "error" in err


def test_config_file_flags_win(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("points = 2\nseed = 11\n# comment\n")
    code, out, _ = run(capsys, "verify", "--config", str(cfg),
                       "--relation", "ybe-dd")
    assert code == 0
    assert '"points": 2' in out and '"seed": 11' in out
    # explicit flag overrides the config value
    code, out, _ = run(capsys, "verify", "--config", str(cfg),
                       "--relation", "ybe-dd", "--points", "1")
    assert '"points": 1' in out


def test_suite_quick(capsys):
    code, out, _ = run(capsys, "suite", "--quick")
    assert code == 0
    assert out.count("PASS") >= 12
