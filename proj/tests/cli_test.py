"""End-to-end checks of the flagcw command line tool: outputs, exit codes and JSON schema."""
import json
import subprocess
import sys

BIN = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, info=""):
    print(("pass: " if cond else "FAIL: ") + name + (f" ({info})" if not cond and info else ""))
    if not cond:
        failures.append(name)


def check_schema(out):
    doc = json.loads(out)
    ok = list(doc) == ["command", "input", "result", "checks"]
    ok = ok and isinstance(doc["command"], str) and isinstance(doc["input"], dict) and isinstance(doc["result"], dict)
    ok = ok and all(set(c) >= {"name", "status"} and c["status"] in ("pass", "fail") for c in doc["checks"])
    return ok, doc


code, out, _ = run("poincare", "--shape", "1,1,1", "--theory", "torsion")
expect("torsion of Fl(3)", code == 0 and out.splitlines()[0] == "2*t^2", out)
code, out, _ = run("poincare", "--shape", "1,1", "--theory", "chow")
expect("Chow of P^1", code == 0 and out.splitlines()[0] == "1 + t", out)
code, out, _ = run("poincare", "--shape", "1,1,1,1", "--theory", "ch2", "--format", "json")
ok, doc = check_schema(out)
expect("ch2 of Fl(4)", code == 0 and ok and doc["result"]["poincare"] == "1 + 3*t + 5*t^2 + 6*t^3 + 5*t^4 + 3*t^5 + t^6")
code, out, _ = run("poincare", "--shape", "1,1,1,1,1", "--theory", "w", "--twist", "2,3")
expect("twisted W of Fl(5) vanishes", code == 0 and out.splitlines()[0] == "0", out)

code, out, _ = run("count", "--preset", "cubic-lines", "--format", "json")
ok, doc = check_schema(out)
expect("cubic lines json", code == 0 and ok and doc["result"]["complex"] == "27" and doc["result"]["real"] == "3", out)
expect("cubic lines gw", doc["result"]["gw"] == {"plus": "15", "minus": "12"})
code, out, _ = run("count", "--preset", "quintic-4planes", "--format", "json")
ok, doc = check_schema(out)
expect("quintic four-planes", code == 0 and ok and doc["result"]["complex"] == "64127725294951805931404297113125")
code, out, _ = run("--format", "json", "count", "--preset", "flag-3-5")
ok, doc = check_schema(out)
expect("flag count", code == 0 and ok and doc["result"]["complex"] == "1731448582963698760147916022054375"
       and doc["result"]["real"] == "24681637575" and doc["result"]["real_diagnostic"] == "112967182575", out)

code, out, _ = run("euler", "--expr", "sym^3(D1)", "--roots", "2", "--format", "json")
ok, doc = check_schema(out)
expect("euler of sym^3", code == 0 and ok and doc["result"]["euler"] == "3*a^2" and doc["result"]["rank"] == 4, out)
code, out, _ = run("euler", "--expr", "D1 * D2")
expect("euler of a tensor product", code == 0 and "euler: a^2 - b^2" in out, out)

code, out, _ = run("wring", "--shape", "2,2", "--format", "json")
ok, doc = check_schema(out)
expect("W ring of (2,2)", code == 0 and ok and sum(p["rank"] for p in doc["result"]["pieces"]) == 4, out)
code, out, _ = run("annihilator", "--shape", "2,2", "--block", "1", "--format", "json")
ok, doc = check_schema(out)
expect("annihilator of e1 on (2,2)", code == 0 and ok and doc["result"]["generator"] == "e2"
       and all(c["status"] == "pass" for c in doc["checks"]), out)
for suite in ("piqp", "annihilator", "sq2", "poincare"):
    code, out, _ = run("verify", "--suite", suite, "--format", "json")
    ok, doc = check_schema(out)
    expect(f"verify {suite}", code == 0 and ok and doc["result"]["passed"] == doc["result"]["total"] > 0)

# validation errors exit with 1 and name the offending token
code, _, err = run("poincare", "--shape", "1,x", "--theory", "chow")
expect("bad shape", code == 1 and "'x'" in err, err)
code, _, err = run("euler", "--expr", "sym^5(D1+Q2)")
expect("bad expression", code == 1 and "Q2" in err, err)
code, _, err = run("poincare", "--shape", "1,1", "--theory", "chow", "--twist", "3")
expect("twist outside the shape", code == 1, err)
code, _, err = run("annihilator", "--shape", "1,2", "--block", "1")
expect("odd block", code == 1, err)
code, _, err = run("euler", "--expr", "D1", "--roots", "3")
expect("bad root rank", code == 1, err)
code, _, err = run("count", "--preset", "nope")
expect("unknown preset", code == 1, err)
code, _, _ = run()
expect("missing subcommand", code == 1)

# deterministic output
a = run("wring", "--shape", "1,2,2", "--format", "json")
b = run("wring", "--shape", "1,2,2", "--format", "json")
expect("byte-identical repeated output", a == b)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
