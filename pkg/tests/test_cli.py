import io
import json
import os
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from hyperion.cli import SCHEMA_FOR_VERB, load_schema, repl, run
from hyperion.hypercalc import normalize, parse_term
from hyperion.ordinal import depth_guard, parse_ordinal, set_depth_guard
from hyperion.series import parse_series
from hyperion.signseq import parse_signseq, to_dyadic


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue()


def test_spec_examples():
    assert call("hyperlog", "--gamma", "w*2", "--beta", "w^2")[:2] == (0, "l[w^2] - 2")
    assert call("bracket", "--left", "0", "--right", "1")[:2] == (0, "(+ -)")
    code, out, _ = call("audit", "--axiom", "FE", "--mu", "2", "--samples", "100", "--json")
    assert code == 0 and json.loads(out)["failures"] == []


@pytest.mark.parametrize("argv, expected", [
    (["ord", "w", "+", "1", "+", "w"], "w*2"),
    (["seq", "3/4"], "(+ - +)"),
    (["conway", "add", "1/2", "(+ -)"], "(+)"),
    (["conway", "mul", "3/4", "-1/2"], "(- +^2 -)"),
    (["conway", "neg", "(+ -)"], "(- +)"),
    (["series", "(l[0] + 1)*(l[0] - 1)"], "l[0]^2 - 1"),
    (["diff", "l[1]", "--order", "2"], "-l[0]^-2"),
    (["normalize", "L[w](L[1](x))"], "L[w](x) - 1"),
    (["cmp", "E[1](x)", "E[w](x)"], "Less"),
    (["to-series", "L[w+2](x)"], "l[w+2]"),
    (["atomic", "--gamma", "1", "--beta", "w^2"], "false"),
    (["atomic?", "--gamma", "w", "--beta", "w^2"], "true"),
])
def test_verbs(argv, expected):
    assert call(*argv)[:2] == (0, expected)


def test_exit_codes():
    assert call("ord", "w^")[0] == 2
    assert call("series", "l[0] +")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("ord", "1", "--bogus")[0] == 2
    assert call("hyperlog", "--gamma", "1", "--beta", "w^2")[0] == 1
    assert call("to-series", "E[1](x)")[0] == 1
    assert call("exp-check", "1/3")[0] == 1
    assert call("bracket", "--left", "1", "--right", "0")[0] == 1
    code, _, err = call("frobnicate")
    assert "usage:" in err


def test_exp_check():
    code, out, _ = call("exp-check", "--a", "1/2", "--depth", "8", "--json")
    d = json.loads(out)
    assert code == 0 and d["contains_exp"] is True and d["a"] == "1/2" and d["depth"] == 8
    code, out, _ = call("conway", "exp-check", "--a", "0", "--json")
    assert json.loads(out)["hi"] is None


def test_chains_and_audit_text():
    code, out, _ = call("chains", "--nu-max", "3")
    assert code == 0 and out.endswith("E-chain increasing: true; L-chain decreasing: true")
    code, out, _ = call("audit", "--axiom", "L0", "--samples", "20", "--seed", "3")
    assert code == 0 and "ok" in out


@pytest.mark.parametrize("argv", [
    ["ord", "w^2+3"], ["seq", "(+ - -)"], ["bracket", "--left", "1/2"], ["conway", "mul", "1/2", "3"],
    ["conway", "exp-check", "--a", "1"], ["exp-check", "-3/4"], ["series", "l[0] - 2"], ["diff", "l[0]*l[1]"],
    ["normalize", "E[w](x+1)"], ["cmp", "L[w](x)", "L[1](x)"], ["to-series", "L[w](x)"],
    ["atomic", "--gamma", "w", "--beta", "w^2"], ["hyperlog", "--gamma", "3", "--beta", "w"],
    ["audit", "--axiom", "M", "--mu", "2", "--samples", "10"], ["chains", "--nu-max", "2"],
])
def test_json_outputs_match_schemas(argv):
    code, out, _ = call(*argv, "--json")
    assert code == 0
    verb = argv[0] if argv[0] != "conway" or argv[1] != "exp-check" else "exp-check"
    jsonschema.validate(json.loads(out), load_schema(SCHEMA_FOR_VERB[verb]))


def test_printed_values_round_trip():
    assert parse_ordinal(call("ord", "w + w^2 + 3")[1]) == parse_ordinal("w^2+3")
    assert to_dyadic(parse_signseq(call("seq", "-5/8")[1])) == Fraction(-5, 8)
    assert parse_series(call("diff", "l[0]^3*l[2]")[1]) == parse_series(call("diff", "l[2]*l[0]^3")[1])
    t = parse_term("E[w](x + 5/2)")
    assert parse_term(call("normalize", "E[w](x + 5/2)")[1]) == normalize(t)


def test_repl_session():
    script = "diff 3*l[1] + 2\ncmp L[w](x) L[1](x)\nord w + 1 + w\nord w^\n:help\nseries l[0] - 1\n:quit\nord 5\n"
    out, err = io.StringIO(), io.StringIO()
    assert repl(io.StringIO(script), out, err) == 0
    lines = out.getvalue().splitlines()
    assert lines[:3] == ["3*l[0]^-1", "Less", "w*2"]
    assert "verbs:" in lines[3]
    assert lines[-1] == "l[0] - 1"
    assert "parse error" in err.getvalue()


def test_depth_guard_flag():
    old = depth_guard()
    try:
        assert call("--depth-guard", "2", "ord", "w^w^w^w")[0] == 1
    finally:
        set_depth_guard(old)


def test_console_script_and_env_guard():
    env = dict(os.environ, HYPERION_DEPTH_GUARD="2")
    proc = subprocess.run([sys.executable, "-m", "hyperion.cli", "ord", "w^w^w^w"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 1 and "guard 2" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "hyperion.cli", "ord", "w^w^w^w"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "w^(w^(w^w))"
