import io
import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from extdeg.cli import main, run
from extdeg.errors import InhomogeneousError, ParseError, UnknownVariableError
from extdeg.poly import FreeModuleShape, ModuleElement, monomials_of_degree
from extdeg.problem import ProblemFile, format_problem, monomial_problem, parse, parse_element

from helpers import elems, ideal, ring
from oracles import FAMILY

ROOT = Path(__file__).resolve().parent.parent
PROBLEMS = ROOT / "problems"
GOLDEN = Path(__file__).resolve().parent / "golden"

FAMILY_TEXT = "ring: x,y,z,t\nchar: 0\ntwists: [0]\ngens:\nx^2\nx*y\ny^3\ny^2*z + x*t^2\n"


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def test_parse_example():
    p = parse(FAMILY_TEXT)
    R = ring(4)
    assert p.ring == R
    assert list(p.gens) == elems(R, "x^2", "x*y", "y^3", "y^2*z + x*t^2")


def test_parse_empty_gens():
    p = parse("ring: x,y\ngens:\n")
    assert p.gens == ()


def test_parse_options_and_comments():
    p = parse("# header\nring: a, b\nchar: 7\ntwists: [0, 1]\nseed: 11\ntrials: 4\ngens:\na*e1 + 3*e2  # mixed\n")
    assert p.ring.characteristic == 7
    assert p.shape.twists == (0, 1)
    assert p.options == {"seed": 11, "trials": 4}
    assert p.gens[0].degree() == 1


@pytest.mark.parametrize(
    "text,exc,line,column",
    [
        ("ring: x,y\ngens:\nx^2 + y\n", InhomogeneousError, 3, 1),
        ("ring: x,y\ngens:\nx^2 + w^2\n", UnknownVariableError, 3, 7),
        ("ring: x,y\ngens:\nx^ + y\n", ParseError, 3, 4),
        ("ring: x,y\ngens:\nx $ y\n", ParseError, 3, 3),
        ("ring: x,y\ntwists: [0,0]\ngens:\nx\n", ParseError, 4, 1),
        ("gens:\nx\n", ParseError, 1, 1),
        ("ring: x,y\ncolour: red\ngens:\nx\n", ParseError, 2, 1),
    ],
)
def test_parse_errors(text, exc, line, column):
    with pytest.raises(exc) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_rejects_bad_component_marker():
    with pytest.raises(ParseError):
        parse_element("x*e3", ring(2), FreeModuleShape((0, 0)))


@st.composite
def problems(draw):
    n = draw(st.integers(1, 3))
    R = ring(n)
    m = draw(st.integers(1, 2))
    shape = FreeModuleShape(tuple(draw(st.integers(0, 2)) for _ in range(m)))
    gens = []
    for _ in range(draw(st.integers(0, 3))):
        j = draw(st.integers(0, m - 1))
        d = draw(st.integers(shape.twists[j], shape.twists[j] + 3))
        mons = list(monomials_of_degree(n, d - shape.twists[j]))
        chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3, unique=True))
        coeffs = {(u, j): draw(st.fractions(-9, 9, max_denominator=5).filter(bool)) for u in chosen}
        gens.append(ModuleElement.from_dict(R, shape, coeffs))
    return ProblemFile(R, shape, tuple(g for g in gens if g), {})


@settings(max_examples=80, deadline=None)
@given(problems())
def test_format_parse_round_trip(p):
    assert parse(format_problem(p)) == p


def test_monomial_problem_round_trip():
    U = ideal(ring(4), *FAMILY[2]["gin"])
    assert parse(format_problem(monomial_problem(U))).gens == monomial_problem(U).gens


@pytest.mark.parametrize("name", ["family_a2", "family_a5"])
def test_golden_degrees(name):
    code, out = cli("degrees", str(PROBLEMS / f"{name}.ring"), "--seed", "7", "--format", "json")
    assert code == 0
    assert out == (GOLDEN / f"degrees_{name}.json").read_text()
    a = 2 if name == "family_a2" else 5
    payload = json.loads(out)
    assert payload["sdeg"] == FAMILY[a]["gin_sdeg"]
    assert tuple(payload["ext_degrees"]) == FAMILY[a]["gin_ext"]


@pytest.mark.parametrize("name", ["family_a2", "family_a5"])
def test_golden_chain(name):
    code, out = cli("chain", str(PROBLEMS / f"{name}.ring"), "--seed", "7", "--format", "json")
    assert code == 0
    assert out == (GOLDEN / f"chain_{name}.json").read_text()


def test_same_seed_same_bytes():
    args = ("degrees", str(PROBLEMS / "family_a2.ring"), "--seed", "123", "--trials", "2", "--format", "json")
    assert cli(*args) == cli(*args)


def test_lex_then_degrees(tmp_path):
    code, out = cli("lex", str(PROBLEMS / "family_a2_gin.ring"))
    assert code == 0
    f = tmp_path / "lex.ring"
    f.write_text(out)
    code, out = cli("degrees", str(f), "--format", "json")
    assert code == 0
    assert json.loads(out)["hdeg"] == FAMILY[2]["lex_hdeg"]


def test_gin_command_prints_a_problem_file():
    code, out = cli("gin", str(PROBLEMS / "family_a2.ring"))
    assert code == 0
    assert [g.format() for g in parse(out).gens] == FAMILY[2]["gin"]


def test_hilbert_command():
    code, out = cli("hilbert", str(PROBLEMS / "family_a2.ring"), "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert (payload["dim"], payload["deg"]) == (FAMILY[2]["dim"], FAMILY[2]["deg"])


def test_bounds_command():
    code, out = cli("bounds", str(PROBLEMS / "random_borel.ring"), "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["holds"]
    assert all(row["holds"] for row in payload["checks"])


def test_prime_field_flag(capsys):
    code, out = cli("gin", str(PROBLEMS / "family_a2.ring"), "--field", "p")
    assert code == 0
    assert "char: 32003" in out
    assert "GF(32003)" in capsys.readouterr().err


def test_input_error_exit_code(tmp_path):
    f = tmp_path / "bad.ring"
    f.write_text("ring: x,y\ngens:\nx^2 + y\n")
    code, out = cli("degrees", str(f), "--format", "json")
    assert code == 1
    err = json.loads(out)["error"]
    assert err["code"] == "inhomogeneous" and err["line"] == 3
    assert cli("degrees", str(tmp_path / "missing.ring"))[0] == 1
    assert cli("degrees", str(f), "--field", "12")[0] == 1


def test_math_error_exit_code():
    code, out = cli("lex", str(PROBLEMS / "family_a2_gin.ring"), "--degree-cap", "2", "--format", "json")
    assert code == 2
    assert json.loads(out)["error"]["code"]


def test_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("ring: x,y\ngens:\ny^2\n"))
    code, out = cli("chain", "-", "--format", "json")
    assert code == 0
    assert json.loads(out)["ext_degrees"] == [0, 2, 0]


def test_run_uses_file_options():
    p = parse(FAMILY_TEXT.replace("gens:", "seed: 5\ntrials: 2\ngens:"))
    code, payload, _ = run("degrees", p)
    assert code == 0 and payload["sdeg"] == 4
