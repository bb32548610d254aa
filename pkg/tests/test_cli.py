import json
import subprocess
import sys

import pytest

from treepeak.cli import run
from treepeak.profile import parse_profile
from treepeak.recognition import build_attachment_digraph, count_trees, random_sp_profile
from treepeak.profile import format_profile

P1 = "5 2\n1 2 3 4 5\n5 4 3 2 1\n"
P2 = "5 2\n1 2 3 4 5\n5 2 3 4 1\n"
CYCLE = "3 3\n1 2 3\n3 1 2\n2 3 1\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("p1", P1), ("p2", P2), ("cycle", CYCLE)):
        paths[name] = tmp_path / f"{name}.profile"
        paths[name].write_text(text)
    paths["dir"] = tmp_path
    return paths


def call(capsys, *argv):
    status = run([str(x) for x in argv])
    out, err = capsys.readouterr()
    return status, out, err


def test_count(files, capsys):
    assert call(capsys, "count", files["p2"])[:2] == (0, "2\n")
    assert call(capsys, "count", "--json", files["p2"])[:2] == (0, '{"count": 2}\n')
    assert call(capsys, "count", files["cycle"])[:2] == (1, "0\n")


def test_digraph_dump(files, capsys):
    status, out, _ = call(capsys, "digraph", files["p2"])
    assert status == 0
    assert out == "1 -> 2\n3 -> 2\n4 -> 2\n4 -> 3\n5 -> 2\nsink: 2\nforced: 1 2 3 5\nfree: 4\n"


def test_find_tree(files, capsys):
    assert call(capsys, "find-tree", "--objective", "path", files["p2"])[0] == 1
    status, out, _ = call(capsys, "find-tree", "--objective", "star", files["p2"])
    assert status == 0 and out == "1 2\n2 3\n2 4\n2 5\n"
    status, out, _ = call(capsys, "find-tree", "--objective", "min-pathwidth", "--json", files["p2"])
    obj = json.loads(out)
    assert status == 0 and obj["width"] == 1 and len(obj["tree_edges"]) == 4 and obj["bags"]
    status, out, _ = call(capsys, "find-tree", "--objective", "min-pathwidth", files["p2"])
    assert "# width: 1\n" in out
    assert call(capsys, "find-tree", "--objective", "min-leaves", files["cycle"])[0] == 1


def test_cc(files, capsys):
    status, out, _ = call(capsys, "cc", "--variant", "egalitarian", "--score", "borda", "--k", 2, files["p2"])
    assert status == 0 and out.splitlines()[0] == "score: 0"
    status, out, _ = call(capsys, "cc", "--k", 1, "--json", files["p2"])
    assert json.loads(out) == {"score": -2, "committee": [2], "algorithm": "few-internal-borda"}
    status, out, _ = call(capsys, "cc", "--k", 2, "--score", "vector:0,-1,-3,-3,-4", files["p1"])
    assert status == 0 and out.startswith("score: 0\ncommittee: 1 5\n")


def test_cc_with_tree(files, capsys):
    tree = files["dir"] / "right.tree"
    tree.write_text("1 2\n5 2\n2 3\n3 4\n")
    status, out, _ = call(capsys, "cc", "--k", 1, "--tree", tree, files["p2"])
    assert status == 0 and out.startswith("score: -2\n")
    path = files["dir"] / "path.tree"
    path.write_text("1 2\n2 3\n3 4\n4 5\n")
    status, _, err = call(capsys, "cc", "--k", 1, "--tree", path, files["p2"])
    assert status == 2 and err.startswith("error: not-single-peaked: ")


def test_errors(files, capsys):
    bad = files["dir"] / "bad.profile"
    bad.write_text("3 1\n1 1 2\n")
    status, _, err = call(capsys, "count", bad)
    assert status == 2 and err.startswith("error: not-a-permutation: ")
    status, _, err = call(capsys, "count", files["dir"] / "missing")
    assert status == 2 and err.startswith("error: malformed-input: ")
    status, _, err = call(capsys, "cc", "--k", 2, "--score", "approval:x", files["p2"])
    assert status == 2 and err.startswith("error: malformed-input: ")
    status, _, err = call(capsys, "cc", "--k", 2, "--score", "median", files["p2"])
    assert status == 2
    status, _, err = call(capsys, "frobnicate")
    assert status == 2 and err.startswith("error: usage: ")
    status, _, err = call(capsys, "find-tree", files["p2"])
    assert status == 2


def test_guard_exit_status(tmp_path, capsys):
    # every candidate bottom-ranked by someone: no tree, so brute force is the only route
    m = 30
    votes = [" ".join(str((j + s) % m + 1) for j in range(m)) for s in range(m)]
    f = tmp_path / "big.profile"
    f.write_text(f"{m} {m}\n" + "\n".join(votes) + "\n")
    status, _, err = call(capsys, "cc", "--k", 15, f)
    assert status == 3 and err.startswith("error: too-large: ")
    status, out, _ = call(capsys, "cc", "--k", 3, f)
    assert status == 0 and out.endswith("algorithm: brute-force\n")


def test_zero_bounds_fall_back_to_brute_force(files, capsys):
    status, out, _ = call(capsys, "cc", "--k", 1, "--leaf-bound", 0, "--internal-bound", 0, files["p2"])
    assert status == 0 and out == "score: -2\ncommittee: 2\nalgorithm: brute-force\n"


def test_recognize_verify_round_trip(tmp_path, capsys):
    for seed in range(10):
        p, _ = random_sp_profile(6, 3, seed)
        prof = tmp_path / "p.profile"
        prof.write_text(format_profile(p))
        status, out, _ = call(capsys, "recognize", prof)
        assert status == 0
        tree = tmp_path / "t.tree"
        tree.write_text(out)
        assert call(capsys, "verify", "--tree", tree, prof)[:2] == (0, "yes\n")


def test_count_matches_enumerate(tmp_path, capsys):
    for seed in range(15):
        p, _ = random_sp_profile(6, 2, seed)
        prof = tmp_path / "p.profile"
        prof.write_text(format_profile(p))
        _, out, _ = call(capsys, "count", prof)
        _, listing, _ = call(capsys, "enumerate", prof)
        assert int(out) == len(listing.splitlines()) == count_trees(build_attachment_digraph(p))
        _, limited, _ = call(capsys, "enumerate", "--limit", 1, prof)
        assert len(limited.splitlines()) == 1


def test_gen_and_determinism(tmp_path, capsys):
    tree = tmp_path / "g.tree"
    first = call(capsys, "gen", "--m", 6, "--n", 4, "--seed", 3, "--tree-out", tree)
    second = call(capsys, "gen", "--m", 6, "--n", 4, "--seed", 3)
    assert first[0] == 0 and first[1] == second[1]
    prof = tmp_path / "g.profile"
    prof.write_text(first[1])
    assert parse_profile(first[1]).n == 4
    assert call(capsys, "verify", "--tree", tree, prof)[0] == 0


def test_stdin_and_module_entry():
    done = subprocess.run(
        [sys.executable, "-m", "treepeak", "count"],
        input=P2, capture_output=True, text=True, check=False,
    )
    assert done.returncode == 0 and done.stdout == "2\n"
