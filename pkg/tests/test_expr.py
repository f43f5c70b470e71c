import pytest

from smashprod import cli
from smashprod import expr as ex


def ev(text):
    return ex.render(ex.run(text))


def test_parse_smash_node():
    node = ex.parse("X[2,1] # X[3]")
    assert isinstance(node, ex.BinOp) and node.op == "#"
    assert node.left == ex.Atom(1, "nsym", (2, 1))
    assert node.right == ex.Atom(10, "nsym", (3,))


def test_parse_pairing_node():
    node = ex.parse("pair(M[1].M[1], X[1,1])")
    assert isinstance(node, ex.Call) and node.name == "pair"
    assert node.args[0].op == "."


def test_left_associative_equal_precedence():
    node = ex.parse("X[1] # X[1] * X[2]")
    assert node.op == "*" and node.left.op == "#"


def test_permutation_atoms():
    assert ex.parse("P312") == ex.Atom(1, "perm", (3, 1, 2))
    assert ex.parse("P[3,1,2]") == ex.Atom(1, "perm", (3, 1, 2))


@pytest.mark.parametrize(
    "text,offset",
    [
        ("h[2,1) ", 6),
        ("X[1] # ", 8),
        ("X[1,]", 5),
        ("X[0]", 3),
        ("Q[1]", 1),
        ("X[1] $ X[1]", 6),
        ("P132 # P13", 8),
    ],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ex.ParseError) as err:
        ex.parse(text)
    assert err.value.offset == offset


def test_offsets_count_utf8_bytes():
    with pytest.raises(ex.ParseError) as err:
        ex.parse("X[1] é")
    assert err.value.offset == 6
    with pytest.raises(ex.ParseError) as err:
        ex.parse("é")
    assert err.value.offset == 1


@pytest.mark.parametrize(
    "text",
    ["X[1] # M[1]", "h[1] . h[1]", "M[1] # M[1]", "phi(h[1])", "X[1] + h[1]", "pair(X[1], X[1])", "coprodCirc(X[1])"],
)
def test_algebra_mismatch_is_a_type_error(text):
    with pytest.raises(ex.AlgebraError):
        ex.run(text)


def test_degree_error_reports_operator_location():
    with pytest.raises(ex.EvaluationError) as err:
        ex.run("X[1] + (X[2] o X[1])")
    assert err.value.offset == 14


def test_examples():
    assert ev("h[2,1] # h[3]") == "h[1,1,1,1] + h[2,1] + h[2,1,1] + h[2,1,1,1] + h[2,2,1] + h[3,2,1]"
    assert ev("X[1] # X[1]") == "X[1] + X[1,1]"
    assert ev("pair(M[1].M[1], X[1,1])") == "2"


def test_functions():
    assert ev("antipode(X[2])") == "X[1] + X[1,1] - X[2]"
    assert ev("psi(X[1,1])") == "X[1] + X[1,1]"
    assert ev("embed(X[1,2])") == "P123 + P213 + P312"
    assert ev("schur(h[2,1])") == "s[2,1] + s[3]"
    assert ev("phi(X[1,2])") == "h[2,1]"
    assert ev("coprod(X[2])") == "X[] @ X[2] + X[1] @ X[1] + X[2] @ X[]"
    assert ev("coprodSmash(M[1])") == "M[] @ M[1] + M[1] @ M[] + M[1] @ M[1]"
    assert ev("antipode(M[1], 2)") == "-M[1] + 2*M[1,1] + M[2]"
    assert ev("phihat(M[1], 2)") == "M[1] + M[1,1]"


def test_scalars_and_signs():
    assert ev("3*X[1] - X[1]") == "2*X[1]"
    assert ev("-X[1] * 2") == "-2*X[1]"
    assert ev("X[1] - X[1]") == "0"
    assert ev("2*3") == "6"


def test_tensor_products():
    assert ev("coprod(X[1] # X[1])") == ev("coprod(X[1]) # coprod(X[1])")
    assert ev("phi(coprod(X[1,1]))") == ev("coprod(h[1,1])")


def test_truncated_series_cannot_be_multiplied():
    with pytest.raises(ex.EvaluationError):
        ex.run("antipode(M[1], 2) . M[1]")
    with pytest.raises(ex.EvaluationError):
        ex.run("pair(antipode(M[1], 2), X[1,1,1])")


def test_json_rendering():
    data = ex.to_json(ex.run("X[1] # X[1]"))
    assert data == {"algebra": "nsym", "terms": [{"key": [1], "coeff": "1"}, {"key": [1, 1], "coeff": "1"}]}
    t = ex.to_json(ex.run("coprod(X[1])"))
    assert t["terms"][0] == {"key": [[], [1]], "coeff": "1"}


@pytest.mark.parametrize("algebra", ["nsym", "sym", "schur"])
def test_render_parse_round_trip_on_tables(algebra):
    for p in range(0, 4):
        for q in range(0, 6 - p):
            if p + q > 5:
                continue
            for op in ("smash", "conv", "internal"):
                if op == "internal" and p != q:
                    continue
                for entry in cli.table(op, algebra, p, q)["entries"]:
                    text = entry["text"]
                    assert ev(text) == text
                    assert ex.to_json(ex.run(text))["terms"] == entry["result"]["terms"]


def test_round_trip_of_permutations_and_tensors():
    for text in ["P1 # P21", "coprod(X[2,1]) # coprod(X[1])", "coprodCirc(M[2,1])", "-3*X[1] @ X[2]"]:
        rendered = ev(text)
        assert ev(rendered) == rendered
