"""Command-line surface: outputs, exit codes, byte-stable golden files, and
the DOT/JSON agreement."""

import json
import re

import pytest

from fbblat import cli

from conftest import GOLDEN_DIR


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- rank / unrank ----------------------------------------------------------------

def test_rank_command(capsys):
    code, out, _ = run(capsys, "rank", "--n", "4", "2", "3")
    assert code == 0 and out == "4\n"


def test_unrank_command(capsys):
    code, out, _ = run(capsys, "unrank", "--n", "4", "6")
    assert code == 0 and out == "3 4\n"


def test_rank_domain_error_exits_2(capsys):
    code, _, err = run(capsys, "rank", "--n", "4", "3", "3")
    assert code == 2 and "error:" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "x", "--n", "4", "--q", "3"])
    assert exc.value.code == 2


# -- construction commands -----------------------------------------------------------

def test_cf_json_counts(capsys):
    code, out, _ = run(capsys, "cf", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["elements"]) == 13
    assert len(payload["covers"]) == 18


def test_fbb_rejects_uncovering_ranks(capsys):
    code, _, err = run(capsys, "fbb", "--n", "4", "--ranks", "1")
    assert code == 2
    assert "u3" in err and "u4" in err


def test_pair_tokens_match_plain_ranks(capsys):
    _, plain, _ = run(capsys, "fbb", "--n", "4", "--ranks", "1,3,4,5",
                      "--format", "dot")
    _, tokens, _ = run(capsys, "fbb", "--n", "4", "--ranks",
                       "1-2,1-4,2-3,2-4", "--format", "dot")
    assert plain == tokens


def test_graph_of_single_arc(capsys):
    code, out, _ = run(capsys, "graph-of", "--n", "2", "--ranks", "1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["arcs"] == [[1, 2, 1]]


def test_graph_of_full_ranks_is_complete(capsys):
    code, out, _ = run(capsys, "graph-of", "--n", "4", "--ranks",
                       "1,2,3,4,5,6", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["arcs"]) == 6


# -- golden regression ------------------------------------------------------------------

@pytest.mark.parametrize("argv,golden", [
    (("fbb", "--n", "4", "--ranks", "1,3,4,5", "--format", "dot"),
     "fbb_n4_r1345.dot"),
    (("fbb", "--n", "4", "--ranks", "1,3,4,5", "--format", "json"),
     "fbb_n4_r1345.json"),
    (("graph-of", "--n", "4", "--ranks", "1,3,4,5", "--format", "dot"),
     "graph_n4_r1345.dot"),
    (("graph-of", "--n", "4", "--ranks", "1,3,4,5", "--format", "json"),
     "graph_n4_r1345.json"),
])
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN_DIR / golden).read_text()


def test_golden_content_details():
    dot = (GOLDEN_DIR / "graph_n4_r1345.dot").read_text()
    for label in ("e1", "e3", "e4", "e5"):
        assert f'[label="{label}"]' in dot
    payload = json.loads((GOLDEN_DIR / "fbb_n4_r1345.json").read_text())
    names = {e["name"] for e in payload["elements"]}
    assert names == {"u1", "u2", "u3", "u4", "x1", "x2", "c1", "c3", "c4", "c5"}


def test_commands_are_deterministic(capsys):
    first = run(capsys, "cf", "--n", "5", "--format", "dot")
    second = run(capsys, "cf", "--n", "5", "--format", "dot")
    assert first == second


def test_output_file_option(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "cf", "--n", "4", "--format", "json",
                       "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["elements"]


def test_dot_and_json_agree(capsys):
    _, dot, _ = run(capsys, "fbb", "--n", "5", "--ranks", "1,4,7,9,10",
                    "--format", "dot")
    _, js, _ = run(capsys, "fbb", "--n", "5", "--ranks", "1,4,7,9,10",
                   "--format", "json")
    payload = json.loads(js)
    by_id = {e["id"]: e["name"] for e in payload["elements"]}
    json_nodes = set(by_id.values())
    json_edges = {(by_id[a], by_id[b]) for a, b in payload["covers"]}
    dot_nodes = set(re.findall(r'^  "(\w+)" \[', dot, flags=re.M))
    dot_edges = set(re.findall(r'^  "(\w+)" -> "(\w+)";$', dot, flags=re.M))
    assert dot_nodes == json_nodes
    assert dot_edges == json_edges


# -- count / table -----------------------------------------------------------------------

def test_count_commands(capsys):
    assert run(capsys, "count", "d", "--n", "4", "--q", "3")[1] == "16\n"
    assert run(capsys, "count", "f", "--n", "4", "--q", "6")[1] == "1\n"


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "d", "--max-n", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,q,value"
    assert "3,2,3" in lines and "3,3,1" in lines


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "f", "--max-n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)[4] == [3, 16, 15, 6, 1]


# -- diff-bfile ---------------------------------------------------------------------------

def test_diff_bfile_command(tmp_path, capsys):
    from fbblat.counting import count_d_oracle

    values = []
    for n in range(5):
        for q in range((n + 1) // 2, n * (n - 1) // 2 + 1):
            values.append(count_d_oracle(n, q))
    path = tmp_path / "b.txt"
    path.write_text("".join(f"{i} {v}\n" for i, v in enumerate(values, 1)))
    code, out, _ = run(capsys, "diff-bfile", "d", str(path))
    assert code == 0 and "no mismatches" in out

    values[3] += 1
    path.write_text("".join(f"{i} {v}\n" for i, v in enumerate(values, 1)))
    code, out, _ = run(capsys, "diff-bfile", "d", str(path))
    assert code == 1 and "mismatch at" in out


def test_diff_bfile_missing_file(capsys):
    code, _, err = run(capsys, "diff-bfile", "d", "/nonexistent/b.txt")
    assert code == 2 and "error:" in err


# -- verify -------------------------------------------------------------------------------

def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    assert "checks passed" in out
    assert "[FAIL]" not in out


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"]
    assert all(c["status"] == "pass" for c in payload["checks"])
    assert {"name", "status", "detail"} <= set(payload["checks"][0])


def test_verify_below_minimum_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "1")
    assert code == 2 and "max_n >= 2" in err


def test_verify_detects_injected_rank_fault(capsys, monkeypatch):
    from fbblat import labeling

    true_rank = labeling.rank

    def broken(n, i, j):
        value = true_rank(n, i, j)
        return 1 if (n, i, j) == (3, 2, 3) else value

    monkeypatch.setattr(labeling, "rank", broken)
    code, out, err = run(capsys, "verify", "--max-n", "3")
    assert code == 1
    assert "rank-round-trip n=3" in err
    assert "[FAIL] rank-round-trip n=3" in out
