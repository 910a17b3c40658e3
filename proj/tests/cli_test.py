"""End-to-end checks of the primcycle command line: outputs and exit codes.

usage: cli_test.py <primcycle binary> <scratch dir>
"""

import json
import os
import pathlib
import subprocess
import sys

CLI = sys.argv[1]
SCRATCH = pathlib.Path(sys.argv[2])
SCRATCH.mkdir(parents=True, exist_ok=True)
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("PRIMCYCLE_CONFIG", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


# classify
r = run("classify", "--degree", "23", "--fixed", "0", "--format", "json")
cases = json.loads(r.stdout)["cases"]
expect(r.returncode == 0, "classify 23 0 exits 0")
expect([c["tag"] for c in cases] == ["1a", "1c", "A_n", "S_n"], "classify 23 0 lists 1a, 1c M23")
expect(cases[1]["group"] == "M_23", "classify 23 0 names M_23")

r = run("classify", "--degree", "10", "--fixed", "2", "--format", "json")
cases = json.loads(r.stdout)["cases"]
expect(cases[0]["tag"] == "3" and cases[0]["q"] == 9, "classify 10 2 gives case 3 with q = 9")

r = run("classify", "--degree", "9", "--fixed", "5", "--format", "json")
expect([c["group"] for c in json.loads(r.stdout)["cases"]] == ["A_9", "S_9"],
       "classify 9 5 gives only A_9 and S_9")

r = run("classify", "--degree", "9", "--fixed", "5")
expect("A_9" in r.stdout and "S_9" in r.stdout, "classify text mode")
expect(run("classify", "--degree", "9", "--fixed", "8").returncode == 2, "k > n - 2 exits 2")
expect(run("classify", "--degree", "9").returncode == 2, "missing --fixed exits 2")
expect(run("frobnicate").returncode == 2, "unknown subcommand exits 2")
expect(run("--format", "xml", "classify", "-n", "5", "-k", "0").returncode == 2, "bad format exits 2")

# construct
def construct(name, *args):
    path = SCRATCH / f"{name}.json"
    r = run("construct", *args, "--out", str(path))
    return r, (json.loads(path.read_text()) if r.returncode == 0 else None)

r, spec = construct("pgl32", "--family", "projective", "--d", "3", "--q", "2")
expect(r.returncode == 0 and spec["degree"] == 7, "construct projective d=3 q=2 has degree 7")
expect(spec["witness_cycle"].count(" ") == 6, "projective witness is a 7-cycle")
r, spec = construct("m12", "--family", "sporadic", "--name", "M12")
expect(r.returncode == 0 and spec["degree"] == 12, "construct sporadic M12 has degree 12")
r, spec = construct("wr", "--family", "wreath", "--m", "2", "--blocks", "3")
expect(r.returncode == 0 and spec["degree"] == 6, "construct wreath 2 3 has degree 6")
r, _ = construct("m1112", "--family", "sporadic", "--name", "M11@12")
r, _ = construct("wr22", "--family", "wreath", "--m", "2", "--blocks", "2")
r = run("construct", "--family", "projective", "--d", "2", "--q", "6")
expect(r.returncode == 2, "invalid field size exits 2")
r = run("construct", "--family", "sporadic", "--name", "M13")
expect(r.returncode == 2, "unknown sporadic name exits 2")
r = run("construct", "--family", "wreath", "--m", "40", "--blocks", "40", "--degree-cap", "100")
expect(r.returncode == 2, "degree cap exits 2")

# analyze
r = run("analyze", str(SCRATCH / "m1112.json"), "--format", "json")
a = json.loads(r.stdout)
expect(a["order"] == 7920 and a["transitivity"] == 3 and a["primitive"], "analyze M11@12 invariants")
expect(a["cycle"]["k"] == 1 and a["cycle"]["exhaustive"], "analyze M11@12 finds a certified k = 1")
ident = a["identification"]
expect(ident["verdict"] == "matched" and ident["matches"][0]["tag"] == "2c", "analyze M11@12 matches 2c")
r_text = run("analyze", str(SCRATCH / "m1112.json"))
expect("verdict: matched" in r_text.stdout, "analyze text and json verdicts agree")

r = run("analyze", str(SCRATCH / "wr22.json"), "--format", "json")
ident = json.loads(r.stdout)["identification"]
expect(ident["verdict"] == "inapplicable" and ident["reason"] == "imprimitive",
       "analyze S2 wr S2 is inapplicable")

(SCRATCH / "c13.json").write_text(json.dumps(
    {"degree": 13, "point_base": 1, "generators": ["(1 2 3 4 5 6 7 8 9 10 11 12 13)"]}))
ident = json.loads(run("analyze", str(SCRATCH / "c13.json"), "--format", "json").stdout)["identification"]
expect(ident["verdict"] == "matched" and ident["matches"][0]["tag"] == "1a"
       and ident["matches"][0]["param"] == 1, "analyze prime cycle matches the bottom of 1a")

(SCRATCH / "bad.json").write_text('{"degree": 5,\n "generators": ["(1 2 9)"]}')
r = run("analyze", str(SCRATCH / "bad.json"))
expect(r.returncode == 2 and "line 2, column 23" in r.stderr, "analyze reports line and column")
expect(run("analyze", str(SCRATCH / "missing.json")).returncode == 2, "missing file exits 2")

# verify
r = run("verify", "--suite", "mathieu", "--format", "json")
lines = r.stdout.splitlines()
expect(r.returncode == 0 and len(lines) == 13, "verify mathieu passes with 13 reports")
expect(all(json.loads(l)["verdict"] == "pass" for l in lines), "every mathieu report passes")
expect(run("verify", "--suite", "bogus").returncode == 2, "unknown suite exits 2")
r = run("verify", "--suite", "converse", "--max-degree", "6")
expect(r.returncode == 0, "verify converse up to 6 passes")
r = run("verify", "--suite", "forward", "--forward-max-degree", "40", "--time-budget", "0.000001",
        "--format", "json")
expect(r.returncode == 3 and '"inconclusive"' in r.stdout, "exhausted budget exits 3")

# config file: file values apply, flags override them
cfg = SCRATCH / "cfg.json"
cfg.write_text(json.dumps({"format": "json", "seed": 9}))
r = run("classify", "-n", "7", "-k", "0", env={"PRIMCYCLE_CONFIG": str(cfg)})
expect(r.stdout.startswith("{"), "config from the environment selects json")
r = run("classify", "-n", "7", "-k", "0", "--format", "text", env={"PRIMCYCLE_CONFIG": str(cfg)})
expect(r.stdout.startswith("degree 7"), "explicit flag overrides the config file")
cfg.write_text(json.dumps({"colour": "red"}))
expect(run("--config", str(cfg), "classify", "-n", "7", "-k", "0").returncode == 2,
       "unknown config key exits 2")

if failures:
    print(f"{len(failures)} failures", file=sys.stderr)
    sys.exit(1)
