"""Runs every CLI subcommand, validates the JSON reports against the shipped
schema and checks the exit-code contract."""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

import jsonschema

CLI, SCHEMA, CORPUS = (pathlib.Path(a) for a in sys.argv[1:4])
validator = jsonschema.Draft202012Validator(json.loads(SCHEMA.read_text()))
failures = []


def run(*args, code=0, json_out=True):
    argv = [str(CLI), *map(str, args)] + (["--json"] if json_out else [])
    proc = subprocess.run(argv, capture_output=True, text=True)
    label = " ".join(map(str, args))
    if proc.returncode != code:
        failures.append(f"{label}: exit {proc.returncode}, wanted {code}\n{proc.stderr}")
        return None
    if not json_out or code == 2:
        return proc.stdout
    report = json.loads(proc.stdout)
    errors = sorted(validator.iter_errors(report), key=str)
    if errors:
        failures.append(f"{label}: schema: {errors[0].message}")
    return report


def expect(cond, what):
    if not cond:
        failures.append(what)


work = pathlib.Path(tempfile.mkdtemp())
c = CORPUS


def write(name, text):
    p = work / name
    p.write_text(text)
    return p


grid = write("grid8.json", json.dumps([[i, j, 1] for i in range(3) for j in range(3)][:8]))
rrpts = write("rr.json", json.dumps([[0, 0, 1], [1, 0, 1], [-1, 0, 1], [2, 0, 1]]))
through = write("through.json", json.dumps([{"point": [0, 0, 1], "multiplicity": 2}, [1, 0, 0], ["1/2", "3", 1]]))
conic = write("conic.curve", "curve: x^2 + y^2 - z^2\n")
line = write("line.curve", "# affine input\ncurve: x - 2*y + 1\n")
phi = write("phi.curve", "curve: x^2 - y*z\n")
psi = write("psi.curve", "curve: y^2 - x*z + z^2\n")
f = write("f.curve", "curve: (x + y)*(x^2 - y*z) + (z - 3*x)*(y^2 - x*z + z^2)\n")
rrq = write("rrq.curve", "curve: x*(x-z)*(x+z)*(x-2*z) + y*(x^3 + z^3 + x*y*z + y^2*z)\n")
reducible = write("reducible.curve", "curve: x^2 + y^2\n")

r = run("analyze", c / "fermat-cubic.curve")
expect(r and (r["degree"], r["smooth"], r["genus"], r["class"], r["flexes"]) == (3, True, 1, 6, 9), "analyze fermat")
r = run("plucker", "--n", 4, "--d", 0, "--k", 0)
expect(r and {k: r[k] for k in ("nu", "rho", "delta", "p")} == {"nu": 12, "rho": 24, "delta": 28, "p": 3}, "plucker")
expect(run("space", "bound", "--n", 6, json_out=False) == "bound: 4\n", "space bound text")

r = run("intersect", conic, line)
expect(r and r["total"] == 2 and r["expected"] == 2, "intersect")
run("resultant", conic, phi, "--var", "y")
run("discriminant", c / "nodal-cubic.curve", "--var", "y")
run("class", c / "nodal-quartic.curve")
run("hessian", c / "fermat-cubic.curve")
r = run("flexes", c / "nodal-cubic.curve")
expect(r and r["total"] == 3, "flexes nodal cubic")
run("dual", c / "cuspidal-cubic.curve")
r = run("cubic-flexes", c / "fermat-cubic.curve")
expect(r and r["each_flex_on_four_lines"] and len(r["lines"]) == 12, "cubic-flexes")
r = run("cremona", c / "nodal-cubic.curve", "--triangle", "0:0:1;1:0:0;0:1:0")
expect(r and r["law_holds"], "cremona law")
run("cremona", c / "nodal-cubic.curve", "--triangle", "1:0:0;2:0:0;0:1:0", code=1)
r = run("resolve", c / "cuspidal-cubic.curve")
expect(r and all(s["law_holds"] for s in r["steps"]), "resolve")
r = run("linsys", "--degree", 3, "--through", through)
expect(r and r["virtual_dim"] == 9 - 5 and r["effective_dim"] == 4, "linsys")
r = run("noether", f, phi, psi)
expect(r and r["expansion_matches"], "noether")
r = run("ninth-point", grid)
expect(r and r["point"] == ["2", "2", "1"], "ninth-point")
r = run("genus", c / "two-nodal-quintic.curve")
expect(r and r["genus"] == 4, "genus")
run("genus", reducible, code=1)
r = run("adjoints", c / "nodal-quartic.curve", "--degree", 1)
expect(r and r["effective_dim"] == 1 and r["series"]["order"] == 2, "adjoints")
r = run("canonical", c / "smooth-quartic.curve")
expect(r and (r["series"]["order"], r["series"]["dimension"]) == (4, 2), "canonical")
run("canonical", c / "nodal-cubic.curve", code=1)
r = run("rr", rrq, "--points", rrpts)
expect(r and r["conditions"] == 2, "rr collinear group")
r = run("series-formulas", "--m", 4, "--p", 3, "--i", 3)
expect(r and r["difference"] == 3, "series-formulas")
r = run("projection-test", c / "smooth-quartic.curve")
expect(r and r["verdict"] == "not_projection", "projection-test")
r = run("space", "ci", "--mu", 2, "--nu", 2)
expect(r and (r["n"], r["r"], r["p"], r["d"]) == (4, 8, 1, 2), "space ci")
r = run("space", "link", "--mu", 2, "--nu", 2, "--n1", 3, "--p1", 0)
expect(r and (r["i"], r["n2"], r["p2"]) == (2, 1, 0), "space link")
run("space", "link", "--mu", 2, "--nu", 2, "--n1", 3, "--p1", 5, code=1)
r = run("space", "project", c / "pair-23-quadric.surf", c / "pair-23-cubic.surf", "--center", "0:0:0:1")
expect(r and r["degree"] == 5 and r["genus"] == 4, "space project")
r = run("space", "postulation", "--n", 3, "--p", 0, "--m", 2)
expect(r and r["conditions"] == 7, "space postulation")
r = run("space", "moduli", "--n", 4, "--p", 1)
expect(r and r["moduli"] == 16, "space moduli")
run("space", "moduli", "--n", 4, "--p", 9, code=1)

# usage errors
run("frobnicate", code=2)
run("analyze", work / "missing.curve", code=2)
run("plucker", "--n", 4, code=2)
run("--precision", 3, "space", "bound", "--n", 4, code=2)
run("corpus-verify", "--corpus", "", code=2)

# determinism under a fixed seed
a = run("--seed", 99, "resolve", c / "nodal-quartic.curve", json_out=False)
b = run("--seed", 99, "resolve", c / "nodal-quartic.curve", json_out=False)
expect(a is not None and a == b, "resolve is deterministic")

# injected wrong genus
bad = work / "bad-corpus"
shutil.copytree(CORPUS, bad)
manifest = json.loads((bad / "manifest.json").read_text())
manifest = {"curves": [e for e in manifest["curves"] if e["file"] == "fermat-cubic.curve"]}
manifest["curves"][0]["expect"]["genus"] = 2
(bad / "manifest.json").write_text(json.dumps(manifest))
r = run("corpus-verify", "--corpus", bad, code=1)
expect(r and any(not ch["passed"] and ch["check"] == "genus" and ch["item"] == "fermat-cubic.curve"
                 for ch in r["checks"]), "injected wrong genus is named")

shutil.rmtree(work)
for msg in failures:
    print("FAIL:", msg)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
