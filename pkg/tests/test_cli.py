import json

from secantzeta.cli import RunConfig, build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_sqrt(capsys):
    code, out, _ = run(capsys, "eval-sqrt", "--m", "1", "--r", "2")
    assert code == 0 and json.loads(out)["rational"] == "-1/3"


def test_eval_sqrt_square_is_usage_error(capsys):
    code, _, err = run(capsys, "eval-sqrt", "--m", "1", "--r", "4")
    assert code == 2 and "rational" in err


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--m", "1", "--kappa", "1", "--mu", "1")
    js = json.loads(out)
    assert code == 0 and js["rational"] == "5/12" and js["via_word_agrees"]


def test_cocycle(capsys):
    code, out, _ = run(capsys, "cocycle", "--m", "1", "--word", "A^1 B^-1 A^1")
    assert code == 0 and "tau" in json.loads(out)["phi"]


def test_polynomial_and_roots(capsys):
    code, out, _ = run(capsys, "polynomial", "--family", "R", "--k", "7", "--psi", "k:-35")
    assert code == 0 and json.loads(out)["degree"] == 6
    code, out, _ = run(capsys, "roots", "--family", "R", "--k", "7", "--psi", "k:-35")
    js = json.loads(out)
    assert code == 0 and js["classification_counts"]["nonreal_off_circle"] == 4


def test_roots_parity_zero(capsys):
    code, _, _ = run(capsys, "roots", "--family", "S", "--k", "3", "--chi", "k:5", "--psi", "k:5")
    assert code == 2


def test_constants(capsys):
    assert json.loads(run(capsys, "constants", "--what", "euler", "--n", "4")[1])["value"] == "5"
    assert json.loads(run(capsys, "constants", "--what", "genbernoulli", "--n", "3", "--chi", "k:-4")[1])["value"] == "3/2"
    assert run(capsys, "constants", "--what", "bernoulli", "--n", "-1")[0] == 2


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lerch_cotangent", "--precision", "128")
    assert code == 0 and json.loads(out)["passed"]
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2


def test_scan_summary_line(capsys):
    code, out, _ = run(capsys, "scan", "--family", "S-diagonal", "--kmax", "4", "--modmax", "5", "--workers", "1")
    lines = out.strip().splitlines()
    assert code == 0 and json.loads(lines[-1])["summary"]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "o.json"
    assert main(["eval-sqrt", "--m", "2", "--r", "3", "--out", str(path)]) == 0
    assert json.loads(path.read_text())["m"] == 2


def test_bad_flag(capsys):
    assert main(["eval-sqrt", "--m"]) == 2


def test_run_config_from_args_round_trip():
    ns = build_parser().parse_args(["roots", "--family", "R", "--k", "5", "--chi", "k:-4", "--psi", "k:5"])
    cfg = RunConfig.from_args(ns)
    assert RunConfig.from_json(cfg.to_json()) == cfg


RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
SCHEMAS = {
    "eval-sqrt": {
        "type": "object",
        "required": ["m", "r", "rational", "pretty", "witness_word"],
        "properties": {"m": {"type": "integer"}, "r": RATIONAL, "rational": RATIONAL,
                       "pretty": {"type": "string"}, "witness_word": {"type": "string"}},
    },
    "roots": {
        "type": "object",
        "required": ["degree", "roots", "classification_counts", "precision_bits", "tolerance"],
        "properties": {
            "roots": {"type": "array", "items": {
                "type": "object", "required": ["re", "im", "abs_dev", "class", "display"],
                "properties": {"re": {"type": "string"}, "im": {"type": "string"}, "abs_dev": {"type": "number"},
                               "class": {"enum": ["on_circle", "real_off_circle", "nonreal_off_circle"]}}}},
        },
    },
    "scan-line": {
        "type": "object",
        "required": ["family", "k", "chi", "psi", "degree", "self_inversive", "epsilon", "roots",
                     "classification_counts", "precision_bits", "tolerance"],
    },
    "constants": {"type": "object", "required": ["what", "n", "value"], "properties": {"value": RATIONAL}},
}


def test_outputs_match_schemas(capsys):
    import jsonschema
    cases = [
        ("eval-sqrt", ["eval-sqrt", "--m", "3", "--r", "5/2"]),
        ("roots", ["roots", "--family", "S", "--k", "5", "--chi", "k:-4", "--psi", "k:5"]),
        ("constants", ["constants", "--what", "genbernoulli", "--n", "6", "--chi", "k:5"]),
    ]
    for schema, argv in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0
        jsonschema.validate(json.loads(out), SCHEMAS[schema])
    code, out, _ = run(capsys, "scan", "--family", "R-chi-1", "--kmax", "5", "--modmax", "8", "--workers", "1")
    lines = [json.loads(x) for x in out.strip().splitlines()]
    for rec in lines[:-1]:
        jsonschema.validate(rec, SCHEMAS["scan-line"])


def test_verify_functional_equation_256(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "functional_equation", "--precision", "256")
    assert code == 0 and json.loads(out)["failures"] == 0
