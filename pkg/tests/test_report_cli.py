import io
import json
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from threequbit import (
    canonical_form,
    classify,
    erasing_states,
    haar_random,
    invariants,
    report,
)
from threequbit.cli import main
from threequbit.decompositions import product_plus_biseparable, set2_form, two_product

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"
NAMED = ("ghz", "w", "product")
GOLDEN_COMMANDS = ("canon", "classify", "invariants")


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def fixture(name):
    return str(FIXTURES / f"{name}.json")


class TestSerialization:
    def roundtrip(self, to_dict, from_dict, obj):
        first = report.dumps(to_dict(obj))
        again = report.dumps(to_dict(from_dict(json.loads(first))))
        assert first == again

    @pytest.mark.parametrize("seed", range(5))
    def test_round_trips(self, seed):
        s = haar_random(seed)
        cf = canonical_form(s)
        self.roundtrip(report.state_to_dict, report.state_from_dict, s)
        self.roundtrip(report.canonical_to_dict, report.canonical_from_dict, cf)
        self.roundtrip(report.invariants_to_dict, report.invariants_from_dict, invariants(s, cf))
        self.roundtrip(report.classification_to_dict, report.classification_from_dict, classify(cf))
        for d in erasing_states(s, "B"):
            self.roundtrip(report.erasing_to_dict, report.erasing_from_dict, d)
        self.roundtrip(report.two_product_to_dict, report.two_product_from_dict, two_product(s))
        self.roundtrip(report.biseparable_to_dict, report.biseparable_from_dict,
                       product_plus_biseparable(cf))
        self.roundtrip(report.set2_to_dict, report.set2_from_dict, set2_form(cf))

    def test_floats_lossless(self):
        s = haar_random(3)
        back = report.state_from_dict(json.loads(report.dumps(report.state_to_dict(s))))
        assert np.array_equal(back.amplitudes, s.amplitudes)

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            report.state_from_dict({"amplitudes": [[1, 0]] * 7})
        with pytest.raises(ValueError):
            report.state_from_dict({"amplitudes": [[1, 0, 0]] + [[0, 0]] * 7})


class TestCli:
    def test_canon_ghz(self):
        code, out = run("canon", fixture("ghz"))
        assert code == 0
        d = json.loads(out)
        assert np.allclose(d["lambda"], [0.70710678, 0, 0, 0, 0.70710678])
        assert d["reconstruction_residual"] < 1e-12

    def test_canon_w_and_party(self):
        code, out = run("canon", fixture("w"), "--party", "C")
        assert code == 0
        assert np.allclose(json.loads(out)["lambda"], [0.57735, 0, 0.57735, 0.57735, 0], atol=1e-5)

    def test_classify_ghz(self):
        code, out = run("classify", fixture("ghz"))
        assert code == 0 and json.loads(out)["type"] == "2b"

    def test_erase_ghz(self):
        code, out = run("erase", fixture("ghz"), "--party", "A")
        assert code == 0
        assert json.loads(out)["probabilities"] == pytest.approx([0.5, 0.5])

    def test_two_product_w_exit_4(self):
        code, out = run("two-product", fixture("w"))
        assert code == 4
        body = json.loads(out)
        assert body["error"] == "NotDecomposable"
        assert body["type"] == "3a"
        assert body["reason"] == "I5=0 genuinely tripartite"

    def test_other_subcommands(self):
        for cmd in ("two-product", "biseparable-split", "set2", "invariants"):
            code, out = run(cmd, fixture("ghz"))
            assert code == 0
            json.loads(out)

    def test_parse_errors(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run("canon", str(bad))[0] == 2
        bad.write_text('{"amplitudes": [[1, 0]]}')
        assert run("canon", str(bad))[0] == 2
        assert run("canon", str(tmp_path / "missing.json"))[0] == 2
        assert run("nonsense")[0] == 2

    def test_invalid_state(self, tmp_path):
        assert run("verify", fixture("half_norm"))[0] == 3
        z = tmp_path / "zero.json"
        z.write_text(json.dumps({"amplitudes": [[0, 0]] * 8}))
        assert run("canon", str(z))[0] == 3

    def test_normalize_flag(self):
        assert run("canon", fixture("half_norm"), "--normalize")[0] == 0

    def test_random(self):
        a = run("random", "--seed", "7")[1]
        b = run("random", "--seed", "7")[1]
        assert a == b
        lines = run("random", "--seed", "7", "--count", "3")[1].splitlines()
        assert len(lines) == 3
        for line in lines:
            s = report.state_from_dict(json.loads(line))
            assert abs(np.linalg.norm(s.amplitudes) - 1) < 1e-12

    def test_verify(self, tmp_path):
        code, out = run("verify", fixture("ghz"))
        assert code == 0 and json.loads(out)["pass"]
        for seed in range(5):
            p = tmp_path / f"r{seed}.json"
            p.write_text(run("random", "--seed", str(seed))[1])
            assert run("verify", str(p))[0] == 0

    def test_stdin(self):
        text = Path(fixture("ghz")).read_text()
        proc = subprocess.run([sys.executable, "-m", "threequbit.cli", "classify", "-"],
                              input=text, capture_output=True, text=True, check=False)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["type"] == "2b"


@pytest.mark.parametrize("name", NAMED)
@pytest.mark.parametrize("cmd", GOLDEN_COMMANDS)
def test_golden(cmd, name):
    path = GOLDEN / f"{cmd}_{name}.json"
    code, out = run(cmd, fixture(name))
    assert code == 0
    if os.environ.get("THREEQUBIT_REGEN_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()
    # a second run is byte-identical
    assert run(cmd, fixture(name))[1] == out
