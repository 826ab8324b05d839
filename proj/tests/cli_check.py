"""Black-box checks of the qweyl CLI: exit codes, JSON shape, determinism."""

import json
import os
import subprocess
import sys
import tempfile

BIN = None


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def run_json(*args):
    proc = run(*args, "--json")
    doc = json.loads(proc.stdout)
    assert doc.get("schema") == "qweyl/1", doc
    return proc, doc


SUPER4 = ("--catalog", "super-A11", "--param", "N=4")


def check_catalog():
    proc = run("catalog")
    assert proc.returncode == 0, proc.stderr
    names = proc.stdout.split()
    assert "super-A11" in names and "cartan" in names

    proc, doc = run_json("catalog")
    assert proc.returncode == 0
    assert doc["keys"] == names


def check_orbit_and_roots():
    proc, doc = run_json("orbit", *SUPER4)
    assert proc.returncode == 0
    assert doc["object_count"] == 6
    assert len(doc["objects"]) == 6
    assert len(doc["edges"]) == 6
    assert all(e["gen"] in (1, 2) for e in doc["edges"])
    assert doc["objects"][0]["matrix"] == [["1/2", "3/4"], ["1/2", "1/2"]]

    proc, doc = run_json("roots", *SUPER4)
    assert proc.returncode == 0
    assert [r["root"] for r in doc["positive_roots"]] == [[1, 0], [1, 1], [0, 1]]
    assert [r["bound"] for r in doc["positive_roots"]] == [2, 4, 2]
    assert doc["beta_top"] == [4, 4]
    assert doc["longest_word"] == [1, 2, 1]
    assert doc["dim_negative_part"] == "16"

    proc, doc = run_json("roots", "--catalog", "cartan-B2", "--param", "q=7")
    assert doc["dim_negative_part"] == "2401"

    # plain-text mode mentions the same root count
    proc = run("roots", *SUPER4)
    assert proc.returncode == 0 and "3 positive roots" in proc.stdout


def check_determinism():
    first = run("roots", *SUPER4, "--json")
    second = run("roots", *SUPER4, "--json")
    assert first.stdout == second.stdout and first.stdout

    a = run("verify", "--catalog", "cartan-A2", "--param", "q=5", "--seed", "99", "--json")
    b = run("verify", "--catalog", "cartan-A2", "--param", "q=5", "--seed", "99", "--json")
    assert a.returncode == 0 and a.stdout == b.stdout


def check_linkage_and_blocks():
    proc, doc = run_json("linkage", "--mu=3,3", *SUPER4)
    assert proc.returncode == 0
    assert doc["degree"] == 1 and doc["typical"] is False
    assert [e["lambda"] for e in doc["strongly_linked"]] == [[3, 3], [1, 1], [-1, -1]]
    chain = doc["strongly_linked"][1]["chain"]
    assert chain == [{"beta": [1, 1], "n": 2}]

    proc, doc = run_json("blocks", "--window=-4,-4;3,3", *SUPER4)
    assert proc.returncode == 0
    assert doc["weight_count"] == 64
    assert sum(c["size"] for c in doc["classes"]) == 64


def check_characters():
    proc, doc = run_json("character", "--kind", "verma", "--mu=0,0", *SUPER4)
    assert proc.returncode == 0
    assert doc["character"]["coefficient_sum"] == 16

    proc, doc = run_json("character", "--kind", "simple", "--mu=3,3", *SUPER4)
    assert doc["degree"] == 1 and doc["character"]["coefficient_sum"] == 8

    proc, doc = run_json("character", "--kind", "twisted", "--word=1,2,1", "--mu=-4,-4",
                         *SUPER4)
    verma = run_json("character", "--kind", "verma", "--mu=0,0", *SUPER4)[1]
    assert doc["character"]["terms"] == verma["character"]["terms"]

    proc, doc = run_json("character", "--kind", "kernel", "--word=1", "--simple", "2",
                         "--t", "2", "--mu=0,0", *SUPER4)
    assert doc["beta"] == [1, 1]
    assert doc["character"]["coefficient_sum"] == 8


def check_dot():
    proc, doc = run_json("dot-check", "--mu=0,2", "--beta=1,0", *SUPER4)
    assert proc.returncode == 0
    assert doc["m"] == 2 and doc["down"] == [0, 2]
    assert doc["delta_shift"] is None  # rewrite only applies to Cartan roots here

    proc, doc = run_json("dot-check", "--mu=0,0", "--beta=1,1", *SUPER4)
    assert proc.returncode == 0
    assert doc["m"] == 1 and doc["down"] == [0, 0] and doc["delta_shift"] is True

    proc = run("dot-check", "--mu=0,0", "--beta=1,0", *SUPER4)
    assert proc.returncode == 1
    assert proc.stderr.startswith("NoSuchM:")

    proc, doc = run_json("dot-check", "--mu=0,0", *SUPER4)
    assert proc.returncode == 0
    by_beta = {tuple(r["beta"]): r for r in doc["results"]}
    assert by_beta[(1, 1)]["ok"] is True
    assert by_beta[(1, 0)]["ok"] is False and by_beta[(1, 0)]["error"] == "NoSuchM"


def check_errors():
    proc = run("roots")
    assert proc.returncode == 2 and "usage error:" in proc.stderr

    proc = run("roots", "--catalog", "super-A11", "--param", "N=4", "--file", "x.json")
    assert proc.returncode == 2

    proc = run("roots", "--catalog", "super-A11", "--param", "N=2")
    assert proc.returncode == 2 and "N > 2" in proc.stderr

    proc = run("no-such-subcommand")
    assert proc.returncode == 2

    proc = run("--help")
    assert proc.returncode == 0 and "Weyl groupoid" in proc.stdout

    proc = run("character", "--kind", "simple", "--mu=0,0", *SUPER4, "--json")
    assert proc.returncode == 1
    assert proc.stderr.startswith("WrongAtypicality:")
    doc = json.loads(proc.stdout)
    assert doc["error"]["name"] == "WrongAtypicality"


def check_matrix_files():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "m.json")
        with open(path, "w") as f:
            json.dump({"theta": 2, "entries": [["1/2", "3/4"], ["1/2", "1/2"]]}, f)
        proc, doc = run_json("roots", "--file", path)
        assert proc.returncode == 0 and doc["beta_top"] == [4, 4]

        proc = run("roots", "--file", os.path.join(tmp, "missing.json"))
        assert proc.returncode == 2


def main():
    global BIN
    BIN = sys.argv[1]
    check_catalog()
    check_orbit_and_roots()
    check_determinism()
    check_linkage_and_blocks()
    check_characters()
    check_dot()
    check_errors()
    check_matrix_files()
    print("cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
