import importlib.util
import io
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod  # dataclasses look their module up here
    spec.loader.exec_module(mod)
    return mod


def test_reproduce_counterexamples():
    mod = load("reproduce_counterexamples")
    rows = mod.run(mod.Config(a_values=[2, 5]))
    assert [(r["hdeg_I"], r["hdeg_gin"], r["hdeg_lex"], r["I_vs_lex"]) for r in rows] == [
        (5, 4, 9, "<"),
        (23, 7, 18, ">"),
    ]


@pytest.mark.parametrize(
    "name,argv",
    [
        ("random_bounds_sweep", ["--count", "25", "--max-vars", "4", "--seed", "2"]),
        ("gin_sweep", ["--count", "10", "--max-vars", "3", "--max-degree", "3"]),
    ],
)
def test_sweeps_exit_cleanly(name, argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert load(name).main(argv) == 0
    assert "config:" in buf.getvalue()
