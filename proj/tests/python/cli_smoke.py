"""End-to-end checks of the rtnn executable: JSON on stdout, exit codes."""

import json
import os
import subprocess
import sys
import tempfile


def run(cli, *args, env=None):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout


def main(cli):
    code, out = run(cli, "cells", "--n", "3")
    assert code == 0, code
    cells = json.loads(out)
    assert len(cells["cells"]) == 19
    assert cells["top_dimensional"] == 1

    code, out = run(cli, "eval", "--n", "2", "--w", "1,2", "--wp", "2,1", "--params", "1")
    assert code == 0
    rep = json.loads(out)["borel_rep"]
    assert rep[0][0] == rep[1][0] != "0"

    assert run(cli, "eval", "--n", "2", "--w", "1,2", "--wp", "2,1", "--params", "0")[0] == 4
    assert run(cli, "eval", "--n", "2", "--w", "1,2", "--wp", "2,1", "--params", "1,1")[0] == 3

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "m.json")
        with open(path, "w") as f:
            json.dump([["1", "0"], ["1", "1"]], f)
        code, out = run(cli, "classify", path)
        assert code == 0
        res = json.loads(out)
        assert (res["w"], res["wp"], res["coords"], res["nonneg"]) == ("1,2", "2,1", ["1"], True)

        with open(path, "w") as f:
            json.dump([["1", "0"], ["0", "3"]], f)
        assert run(cli, "classify", path)[0] == 6
        with open(path, "w") as f:
            f.write("[[1, 0], [0")
        assert run(cli, "classify", path)[0] == 5

        report = os.path.join(tmp, "audit.json")
        assert run(cli, "audit", "--n", "3", "--samples", "5", "--seed", "7", "--output", report)[0] == 0
        with open(report) as f:
            assert json.load(f)["clean"] is True

    a = run(cli, "audit", "--n", "3", "--samples", "50", "--seed", "7")
    b = run(cli, "audit", "--n", "3", "--samples", "50", "--seed", "7")
    assert a[0] == 0 and a == b
    assert run(cli, "audit", "--n", "7")[0] == 2
    env = dict(os.environ, RTNN_MAX_RANK="3")
    assert run(cli, "cells", "--n", "4", env=env)[0] == 2
    print("cli smoke ok")


if __name__ == "__main__":
    main(sys.argv[1])
