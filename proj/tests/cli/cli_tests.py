"""End-to-end checks of the diffelim command line.

usage: cli_tests.py CLI SYSTEMS_DIR SCHEMA
"""

import json
import os
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator

CLI, SYSTEMS, SCHEMA = sys.argv[1:4]
validator = Draft202012Validator(json.load(open(SCHEMA)))
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)


def check(name, ok, detail=""):
    print(("ok   " if ok else "FAIL ") + name + ("" if ok else ": " + detail))
    if not ok:
        failures.append(name)


def system(name):
    return os.path.join(SYSTEMS, name)


def report(name, args, code=0):
    """Runs with --json, checks the exit code and the schema, returns the report."""
    r = run(*args, "--json")
    check(name + " exit code", r.returncode == code, f"got {r.returncode}: {r.stderr.strip()}")
    try:
        doc = json.loads(r.stdout)
    except json.JSONDecodeError as e:
        check(name + " json", False, str(e))
        return {}
    errors = [e.message for e in validator.iter_errors(doc)]
    check(name + " schema", not errors, "; ".join(errors[:3]))
    return doc


doc = report("bound lotka-volterra", ["bound", system("lotka_volterra.sys"), "--seed", "1"])
check("bound lotka-volterra B", doc.get("bound", {}).get("B") == "1", str(doc.get("bound")))

doc = report("bound pendulum",
             ["bound", system("pendulum.sys"), "--augment-derivatives", "--seed", "1"])
check("bound pendulum B", doc.get("bound", {}).get("B") == "5", str(doc.get("bound")))

doc = report("bound control x1,x3", ["bound", system("control.sys"), "--keep", "x1,x3", "--seed", "1"])
check("bound control x1,x3 B", doc.get("bound", {}).get("B") == "3", str(doc.get("bound")))

doc = report("bound t1", ["bound", system("van_der_pol.sys"), "--theorem", "t1", "--seed", "1"])
check("bound t1 theorem", doc.get("bound", {}).get("theorem") == "T1", str(doc.get("bound")))

doc = report("eliminate van der pol", ["eliminate", system("van_der_pol.sys"), "--seed", "1"])
elim = doc.get("elimination", {})
check("eliminate van der pol depth", elim.get("verdict") == "RELATION_FOUND" and elim.get("depth") == 1,
      str(elim))

doc = report("eliminate lotka-volterra", ["eliminate", system("lotka_volterra.sys"), "--seed", "1"])
rels = doc.get("elimination", {}).get("relations", [])
check("eliminate lotka-volterra omits beta", rels and all("beta" not in r for r in rels), str(rels))

doc = report("eliminate trivial", ["eliminate", system("trivial.sys"), "--seed", "1"])
elim = doc.get("elimination", {})
check("eliminate trivial", elim.get("depth") == 0 and elim.get("relations") == ["y"], str(elim))

r = run("eliminate", system("van_der_pol.sys"), "--seed", "1")
check("human eliminate output", r.returncode == 0 and "RELATION_FOUND at depth 1" in r.stdout, r.stdout)

r = run("check-elim", system("pendulum.sys"), "--randomized", "-p", "0.99", "--seed", "5",
        "--augment-derivatives")
check("check-elim pendulum", r.returncode == 0 and "impossible (p >= 0.99)" in r.stdout, r.stdout + r.stderr)

r = run("check-elim", system("control.sys"), "--randomized", "-p", "0.99", "--seed", "5")
check("check-elim control x2,x3", r.returncode == 0 and "possible, depth 1" in r.stdout, r.stdout + r.stderr)

doc = report("check-elim json", ["check-elim", system("control.sys"), "--randomized", "-p", "99/100",
                                 "--seed", "5"])
check("check-elim records seed", doc.get("seed") == "5" and doc.get("randomized", {}).get("seed") is not None,
      str(doc.get("seed")))

# Seeded replay is byte-identical.
args = ["check-elim", system("control.sys"), "--keep", "x1,x3", "--randomized", "-p", "0.99", "--seed", "77",
        "--json"]
a, b = run(*args), run(*args)
check("seeded replay byte-identical", a.returncode == 0 and a.stdout == b.stdout, a.stderr)

# Without --seed the drawn seed is recorded and replays the same report.
doc = report("entropy seed", ["bound", system("van_der_pol.sys")])
check("entropy seed source", doc.get("seed_source") == "entropy", str(doc.get("seed_source")))
seed = doc.get("seed", "0")
replay = report("entropy seed replay", ["bound", system("van_der_pol.sys"), "--seed", seed])
check("entropy seed replays", replay.get("bound") == doc.get("bound"), "")

doc = report("witness d=2", ["witness", "-d", "2"])
check("witness d=2 polynomial", doc.get("witness", {}).get("P") == "-2*x^2 - 8*x*y + y^2 - 10*x + 16*y - 17",
      str(doc.get("witness", {}).get("P")))
check("witness d=2 certificate", doc.get("certificate", {}).get("holds") is True, "")

doc = report("witness d=1 search", ["witness", "-d", "1", "--search-depth", "3"])
search = doc.get("inconsistency_search", {})
check("witness d=1 search depth", search.get("depth") is not None and search["depth"] >= 2, str(search))

# Inconclusive outcomes exit with 2.
report("depth cap inconclusive", ["eliminate", system("control.sys"), "--keep", "x1,x3", "--max-depth", "0",
                                  "--seed", "1"], code=2)
report("pair limit inconclusive", ["eliminate", system("pendulum.sys"), "--max-pairs", "1", "--seed", "1"],
       code=2)

# Usage and parse errors exit with 1.
check("unknown option", run("bound", system("trivial.sys"), "--bogus").returncode == 1)
check("missing file", run("bound", "/nonexistent.sys").returncode == 1)
check("bad probability", run("check-elim", system("trivial.sys"), "--randomized", "-p", "1.5").returncode == 1)
with tempfile.NamedTemporaryFile("w", suffix=".sys", delete=False) as f:
    f.write("vars x\nx + q\n")
r = run("bound", f.name)
check("parse error exit code", r.returncode == 1, str(r.returncode))
check("parse error names the line", "2" in r.stderr, r.stderr)
os.unlink(f.name)
with tempfile.NamedTemporaryFile("w", suffix=".sys", delete=False) as f:
    f.write("vars x; keep x\nx\n")
check("duplicate declaration", run("bound", f.name).returncode == 1)
os.unlink(f.name)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
