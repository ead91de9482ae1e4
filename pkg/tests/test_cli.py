import json
import os
import subprocess
import sys

import pytest

jsonschema = pytest.importorskip("jsonschema")

from freedouble.cli import run, schema_for  # noqa: E402
from freedouble.presentation import load_presentation  # noqa: E402

PRES = os.path.join(os.path.dirname(__file__), os.pardir, "presentations")


def pres(name):
    return os.path.join(PRES, name)


def call(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out.strip(), err


def call_json(capsys, *argv):
    status, out, _ = call(capsys, *argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, schema_for(argv[0]))
    return status, data


def test_reduce(capsys):
    assert call(capsys, "reduce", "abBA")[:2] == (0, "1")
    assert call(capsys, "reduce", "a b B a")[:2] == (0, "aa")
    status, _, err = call(capsys, "reduce", "a*b")
    assert status == 2 and "error" in err


def test_member_index_basis(capsys):
    two = pres("two-cover.toml")
    assert call(capsys, "member", "ab", "-p", two)[:2] == (0, "false")
    assert call(capsys, "member", "aab", "-p", two)[:2] == (0, "true")
    assert call(capsys, "index", "-p", two)[:2] == (0, "2")
    assert call(capsys, "index", "-p", pres("cyclic-a.toml"))[:2] == (0, "infinite")
    assert call(capsys, "index", "-p", pres("a5.toml"))[:2] == (0, "60")
    status, out, _ = call(capsys, "basis", "-p", two)
    assert status == 0 and len(out.splitlines()) == 3


def test_derived_and_fox(capsys):
    assert call(capsys, "in-derived", "ABab", "--lambda", "1")[:2] == (0, "true")
    assert call(capsys, "in-derived", "ABab", "--lambda", "2")[:2] == (0, "false")
    assert call(capsys, "fox", "ABab", "--gen", "1")[:2] == (0, "-1*A +1*AB")
    assert call(capsys, "fox", "a", "--gen", "3", "--rank", "2")[0] == 2
    assert call(capsys, "in-derived", "ABab", "--lambda", "6")[0] == 3


def test_double_commands(capsys):
    cb = pres("cyclic-b.toml")
    assert call(capsys, "normalize", "A: a | Abar: b | Abar: a", "-p", cb)[:2] == (0, "A: ab | Abar: a")
    assert call(capsys, "deq", "A: b", "Abar: b", "-p", cb)[:2] == (0, "true")
    assert call(capsys, "retract", "A: a | Abar: b", "-p", cb)[:2] == (0, "ab")
    assert call(capsys, "kernel-gen", "a", "-p", cb)[:2] == (0, "A: a | Abar: A")
    assert call(capsys, "ck-check", "-p", pres("two-cover.toml"))[:2] == (0, "pass")
    status, out, _ = call(capsys, "ck-check", "-p", pres("cyclic-a.toml"), "--samples", "b")
    assert status == 0 and out.startswith("fail")
    assert call(capsys, "abelianize", "-p", pres("two-cover.toml"))[:2] == (0, "Z/2 x Z^2")
    assert call(capsys, "normalize", "ab", "-p", cb)[0] == 2
    assert call(capsys, "normalize", "A: a", "-p", "/nonexistent.toml")[0] == 2


def test_witness_command(capsys):
    status, data = call_json(capsys, "witness", "A: b | Abar: B", "-p", pres("cyclic-a.toml"))
    assert status == 0 and data["type"] == "solvable_quotient"
    status, data = call_json(capsys, "witness", "A: a | Abar: BA", "-p", pres("two-cover.toml"))
    assert status == 0 and data["type"] != "exhausted"
    status, data = call_json(
        capsys, "witness", "A: ab | Abar: a", "-p", pres("klein-cover.toml"),
        "--catalog", pres("catalog-small.toml"), "--lambda-max", "2",
    )
    assert status == 0 and data["budget"]["catalog"] == ["Z2", "S3"]
    assert call(capsys, "witness", "1", "-p", pres("two-cover.toml"))[0] == 2


def test_witness_exhausted_exit_code(capsys):
    # d = [kernel_gen(a), (A: b)] in the perfect-quotient double
    from freedouble.doubles import format_element
    from freedouble.witness import negative_element

    D = load_presentation(pres("a5.toml")).double()
    d = format_element(negative_element(D))
    status, data = call_json(capsys, "witness", d, "-p", pres("a5.toml"), "--catalog", pres("catalog-small.toml"))
    assert status == 3 and data["type"] == "exhausted"


def test_negative_demo(capsys):
    status, data = call_json(capsys, "negative-demo", "--order-bound", "6")
    assert status == 0
    assert data["witness"] == "exhausted" and data["homs_checked"] > 0 and data["d_killed_by_all"]
    status, data = call_json(capsys, "negative-demo", "--order-bound", "4", "--random-elements", "5", "--seed", "3")
    assert data["random_elements"]["count"] == 5
    status2, data2 = call_json(capsys, "negative-demo", "--order-bound", "4", "--random-elements", "5", "--seed", "3")
    assert data == data2


def test_env_budget_override(capsys, monkeypatch):
    monkeypatch.setenv("FREEDOUBLE_ORDER_BOUND", "2")
    status, data = call_json(capsys, "negative-demo")
    assert data["order_bound"] == 2 and set(data["groups"]) == {"1", "Z2"}


@pytest.mark.parametrize(
    "argv",
    [
        ["reduce", "aB"],
        ["member", "b", "-p", pres("two-cover.toml")],
        ["index", "-p", pres("two-cover.toml")],
        ["basis", "-p", pres("two-cover.toml")],
        ["in-derived", "ab", "--lambda", "1"],
        ["fox", "ab", "--gen", "2"],
        ["normalize", "A: a | Abar: a", "-p", pres("two-cover.toml")],
        ["deq", "A: a", "Abar: a", "-p", pres("two-cover.toml")],
        ["retract", "Abar: ab", "-p", pres("two-cover.toml")],
        ["kernel-gen", "ab", "-p", pres("two-cover.toml")],
        ["ck-check", "-p", pres("two-cover.toml")],
        ["abelianize", "-p", pres("two-cover.toml")],
    ],
)
def test_json_schema_all_subcommands(capsys, argv):
    status, data = call_json(capsys, *argv)
    assert status == 0 and data["command"] == argv[0]


def test_round_trip(capsys):
    two = pres("two-cover.toml")
    D = load_presentation(two).double()
    for text in ["A: ab | Abar: Ba | A: b", "Abar: aab", "A: aB | Abar: bA"]:
        _, printed, _ = call(capsys, "normalize", text, "-p", two)
        assert D.deq(D.parse_element(printed), D.parse_element(text))
    _, printed, _ = call(capsys, "reduce", "a^3 b^-2 B")
    assert call(capsys, "reduce", printed)[1] == printed


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freedouble.cli", "reduce", "abBA"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
