import pytest

from nomlang.cli import main

EXPR = "letters a;\n#m <#n. #m #n >*\n"


@pytest.fixture
def expr_file(tmp_path):
    p = tmp_path / "expr.nre"
    p.write_text(EXPR)
    return str(p)


@pytest.fixture
def hds_file(tmp_path, expr_file):
    out = tmp_path / "expr.hds"
    assert main(["compile", expr_file, str(out)]) == 0
    return str(out)


def test_compile_writes_parseable_automaton(hds_file):
    from nomlang import hds_format
    from nomlang.hds import validate

    with open(hds_file) as f:
        h = hds_format.parse(f.read())
    assert validate(h) == []


def test_compile_reports_size(expr_file, capsys):
    assert main(["compile", expr_file]) == 0
    captured = capsys.readouterr()
    assert "states" in captured.err
    assert "trans" in captured.out  # the automaton itself goes to stdout


def test_accept_exit_codes(hds_file):
    assert main(["accept", hds_file, "#m <#n. #m #n >"]) == 0
    assert main(["accept", hds_file, "#m <#n. #n #n >"]) == 1


def test_accept_trace(hds_file, capsys):
    assert main(["accept", hds_file, "--trace", "#m"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("ACCEPT")
    assert "q0" in captured.out


def test_accept_rejects_malformed_word(hds_file, capsys):
    assert main(["accept", hds_file, "<#n. #n"]) == 2
    assert "error" in capsys.readouterr().err


def test_enumerate_expression(expr_file, capsys):
    assert main(["enumerate", expr_file, "--bound", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "#m" in lines
    assert "#m <#~0. #m #~0 >" in lines


def test_enumerate_automaton_matches_expression(expr_file, hds_file, capsys):
    assert main(["enumerate", expr_file, "--bound", "8"]) == 0
    from_expr = capsys.readouterr().out
    assert main(["enumerate", hds_file, "--bound", "8"]) == 0
    from_hds = capsys.readouterr().out
    assert from_expr == from_hds


def test_check_passes(expr_file, capsys):
    assert main(["check", expr_file, "--bound", "8"]) == 0
    assert capsys.readouterr().out.startswith("PASS")


def test_dot_output(hds_file, capsys):
    assert main(["dot", hds_file]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.nre"
    p.write_text("letters a;\n#n ++ a\n")
    assert main(["compile", str(p)]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exit_code(capsys):
    assert main(["compile", "/no/such/file.nre"]) == 2


def test_undeclared_letter_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.nre"
    p.write_text("#n a\n")  # letter a never declared
    assert main(["compile", str(p)]) == 2
