"""End-to-end checks of the semidecay command line."""
import csv
from fractions import Fraction
import io
import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what)


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def registry():
    reg = Registry()
    for p in SCHEMAS.glob("*.schema.json"):
        reg = reg.with_resource(p.name, Resource.from_contents(json.loads(p.read_text())))
    return reg


REG = registry()


def validate(doc, name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    try:
        jsonschema.Draft202012Validator(schema, registry=REG).validate(doc)
    except jsonschema.ValidationError as e:
        check(False, f"{name} schema: {e.message}")


def rat(r):
    return (int(r["num"]), int(r["den"]))


def exponents(*args):
    out = run("exponents", *args, "--format", "json")
    check(out.returncode == 0, f"exponents {args} exit {out.returncode}: {out.stderr}")
    doc = json.loads(out.stdout)
    validate(doc, "exponents")
    return doc


# the worked examples
d = exponents("--group", "su1n", "--n", "3")
check(rat(d["mechanisms"]["baseline"]["p"]) == (54, 1), "SU(1,3) baseline 54")
check(rat(d["mechanisms"]["shell_improvement"]["p"]) == (6, 1), "SU(1,3) improved 6")
d = exponents("--group", "sl3", "--field", "H")
check(rat(d["mechanisms"]["baseline"]["p"]) == (144, 1), "SL(3,H) baseline 144")
check(rat(d["best"]["p"]) == (4, 1), "SL(3,H) improved 4")
d = exponents("--group", "sl2", "--rep", "adjoint", "--field", "R")
check(rat(d["mechanisms"]["baseline"]["p"]) == (3, 1), "SL(2,R) adjoint baseline 3")
check(rat(d["mechanisms"]["shell_improvement"]["p"]) == (2, 1), "SL(2,R) adjoint improved 2")
d = exponents("--group", "spnm", "--n", "2", "--m", "3")
check(rat(d["best"]["p"]) == (6, 1), "Sp(2,3) Howe 6")

# exit codes
check(run("exponents", "--group", "g2").returncode == 2, "unknown group exits 2")
check(run("exponents", "--group", "sunm", "--n", "3", "--m", "2").returncode == 2, "SU(3,2) exits 2")
check(run("exponents", "--group", "sl3", "--rep", "adjoint").returncode == 2, "SL(3) adjoint exits 2")
check(run("hc", "--group", "sl3", "--field", "H", "--t", "1").returncode == 2, "quaternionic numerics exit 2")
check(run("bogus").returncode == 2, "unknown subcommand exits 2")
check(run().returncode == 2, "missing subcommand exits 2")
check(run("--help").returncode == 0, "help exits 0")

# table: csv round trip against the json rows, empty range
tj = run("table", "--n-range", "2:5", "--m-range", "2:5", "--format", "json")
check(tj.returncode == 0, "table json")
tdoc = json.loads(tj.stdout)
validate(tdoc, "table")
tc = run("table", "--n-range", "2:5", "--m-range", "2:5", "--format", "csv")
rows = list(csv.DictReader(io.StringIO(tc.stdout)))
check(len(rows) == len(tdoc["rows"]) > 0, "csv and json row counts")
for r, j in zip(rows, tdoc["rows"]):
    check(r["group"] == j["group"], f"csv group {r['group']}")
    num, _, den = r["p"].partition("/")
    check((int(num), int(den or 1)) == rat(j["p"]), f"csv p {r['group']}")
closed = {"su1n": lambda n, m: (2 * n, 1), "so1n": lambda n, m: (2 * (n - 1), 1),
          "sp1n": lambda n, m: (2 + 4 * n, 3), "sp2n": lambda n, m: (2 * n, 1),
          "spnm": lambda n, m: (4 * n + 4 * m - 2, 3)}
for j in tdoc["rows"]:
    fam, n, m = j["family"], j["n"], j["m_param"]
    if fam == "sl":
        want = Fraction(4 if j["field"] == "C" else 2)
    else:
        want = Fraction(*closed[fam](n, m))
    check(Fraction(*rat(j["p"])) == want, f"table closed form {j['group']}")
empty = run("table", "--n-range", "5:2", "--format", "csv")
check(empty.returncode == 0, "empty table exits 0")
check(len(list(csv.DictReader(io.StringIO(empty.stdout)))) == 0, "empty table has no rows")
check(empty.stdout.startswith("group,"), "empty table keeps its header")

# numerics
h = run("hc", "--group", "sl2", "--t", "0.5,1", "--samples", "5000", "--format", "json")
check(h.returncode == 0, "hc")
hdoc = json.loads(h.stdout)
validate(hdoc, "hc")
check(all(p["seed"] == 7 for p in hdoc["points"]), "hc reports the seed")
check(h.stdout == run("hc", "--group", "sl2", "--t", "0.5,1", "--samples", "5000", "--format", "json").stdout,
      "hc is deterministic")
b = run("hc", "--group", "sl2", "--t", "1,2,3,4,5,6,7,8", "--samples", "20000", "--bound-check", "--format", "json")
check(b.returncode == 0, "bound check passes")
validate(json.loads(b.stdout), "hc")
k = run("kazhdan", "--group", "sl2", "--rep", "adjoint", "--t", "2", "--samples", "5000", "--format", "json")
check(k.returncode == 0, "kazhdan")
validate(json.loads(k.stdout), "kazhdan")
check(run("kazhdan", "--group", "sl2", "--rep", "adjoint", "--t", "0").returncode == 2, "trivial element exits 2")
o = run("orbit-pack", "--example", "sl3-standard", "--c0-grid", "2^-4:2^-7", "--samples", "1000", "--format", "json")
check(o.returncode == 0, "orbit-pack")
odoc = json.loads(o.stdout)
validate(odoc, "orbit-pack")
check([p["count"] for p in odoc["points"]] == sorted(p["count"] for p in odoc["points"]), "counts grow as c0 shrinks")

# verify, its suites, and fault injection
v = run("verify", "--format", "json")
check(v.returncode == 0, "verify passes")
vdoc = json.loads(v.stdout)
validate(vdoc, "verify")
only = json.loads(run("verify", "--only", "lattice", "--format", "json").stdout)
check({r["suite"] for r in only["results"]} == {"lattice"}, "--only lattice")
check(run("verify", "--only", "nonsense").returncode == 2, "unknown suite exits 2")

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    cat = json.loads(run("catalog", "--format", "json").stdout)
    (tmp / "clean.json").write_text(json.dumps(cat))
    check(run("verify", "--catalog", str(tmp / "clean.json")).returncode == 0, "re-read catalog verifies")
    cat["groups"][0]["roots"][0]["multiplicity"] += 1
    (tmp / "bad.json").write_text(json.dumps(cat))
    bad = run("verify", "--catalog", str(tmp / "bad.json"))
    check(bad.returncode == 1, f"corrupted catalog exits 1 (got {bad.returncode})")
    check("delta_B cross-check" in bad.stderr, "failure names the delta_B cross-check")
    (tmp / "broken.json").write_text("{not json")
    check(run("verify", "--catalog", str(tmp / "broken.json")).returncode == 2, "unreadable catalog exits 2")

    # output directory and config file
    env = dict(os.environ, SEMIDECAY_OUT_DIR=str(tmp))
    r = run("exponents", "--group", "sl3", "--format", "json", "--out", "sl3.json", env=env)
    check(r.returncode == 0 and (tmp / "sl3.json").exists(), "relative --out lands in SEMIDECAY_OUT_DIR")
    check(rat(json.loads((tmp / "sl3.json").read_text())["best"]["p"]) == (4, 1), "written report")
    cfg = tmp / "run.ini"
    cfg.write_text("[exponents]\ngroup=su1n\nn=5\nformat=json\n")
    r = run("--config", str(cfg), "exponents")
    check(r.returncode == 0, f"config run: {r.stderr}")
    if r.returncode == 0:
        check(rat(json.loads(r.stdout)["mechanisms"]["baseline"]["p"]) == (90, 1), "config overrides defaults")
    r = run("--config", str(cfg), "exponents", "--n", "2")
    if r.returncode == 0:
        check(rat(json.loads(r.stdout)["mechanisms"]["baseline"]["p"]) == (36, 1), "flags beat the config file")

print("cli:", "ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
