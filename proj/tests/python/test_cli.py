"""End-to-end checks of the command line tool: exit codes and report schema."""

import json
import os
import subprocess

CLI = os.environ["PIHARMONIC_CLI"]

CATALOG_ORDER = [
    "ra1", "ra2", "ra3", "ra4",
    "thm-(1)", "thm-(2)", "thm-(3)", "thm-(4)", "thm-(5)", "thm-(H1)", "thm-(2H)",
    "gid1", "guillera32", "wei",
    "aux-(2b4)", "aux-(3b3)", "aux-(4c3)", "aux-(5d3)", "aux-(6e3)",
    "aux-(th6.4)", "aux-(th6.33)",
]

REPORT_KEYS = {
    "id", "anchor", "digits_requested", "digits_matched", "lhs", "rhs",
    "terms", "method", "pass", "ms",
}


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


p = run("verify", "--id", "ra2", "--id", "thm-(2H)", "--digits", "30", "--json")
assert p.returncode == 0, p.stderr
doc = json.loads(p.stdout)
assert set(doc) == {"version", "context", "reports", "pass", "total_ms"}, doc.keys()
assert doc["pass"] is True
assert doc["context"]["digits"] == 30 and doc["context"]["bits"] > 90
assert [r["id"] for r in doc["reports"]] == ["ra2", "thm-(2H)"]
for r in doc["reports"]:
    assert set(r) == REPORT_KEYS, r.keys()
    assert r["pass"] is True and r["digits_matched"] >= 30

p = run("verify", "--all", "--digits", "25", "--jobs", "4", "--json")
assert p.returncode == 0, p.stderr
doc = json.loads(p.stdout)
assert [r["id"] for r in doc["reports"]] == CATALOG_ORDER
assert doc["pass"] is True

p = run("verify", "--id", "ra2", "--digits", "9999")
assert p.returncode == 2 and "capped" in p.stderr
p = run("verify", "--id", "ra2", "--digits", "4")
assert p.returncode == 2
p = run("verify", "--id", "no-such-id")
assert p.returncode == 2 and "unknown" in p.stderr
p = run("verify")
assert p.returncode == 2

p = run("list")
assert p.returncode == 0 and "ra4" in p.stdout and "th6.11" in p.stdout

p = run("param", "--id", "2b2", "--b", "1/3", "--digits", "25", "--json")
assert p.returncode == 0, p.stderr
doc = json.loads(p.stdout)
assert doc["reports"][0]["id"] == "2b2(b=1/3)"
p = run("param", "--id", "2b2", "--value", "1/3", "--digits", "25")
assert p.returncode == 0
p = run("param", "--id", "2b2", "--c", "1/3")
assert p.returncode == 2 and "parametrized by b" in p.stderr
p = run("param", "--id", "th1", "--c", "7/8")
assert p.returncode == 2

p = run("deriv", "--id", "6e1", "--at", "2/3", "--digits", "25")
assert p.returncode == 0, p.stderr
p = run("deriv", "--id", "1c2", "--at", "1/2", "--json")
assert p.returncode == 0, p.stderr
doc = json.loads(p.stdout)
assert [r["id"] for r in doc["reports"]] == ["d/dc 1c2(c=1/2)", "numeric d/dc 1c2(c=1/2)"]
assert doc["reports"][1]["method"] == "central-difference"
assert doc["reports"][1]["digits_matched"] >= 15

p = run("transform", "--kind", "chu", "--digits", "25")
assert p.returncode == 0, p.stderr
p = run("transform", "--kind", "dougall", "--digits", "25", "--json")
assert p.returncode == 0
doc = json.loads(p.stdout)
assert doc["reports"][0]["pass"] is True
p = run("transform", "--kind", "nope")
assert p.returncode == 2

p = run("wz", "check", "--nmax", "12", "--kmax", "12")
assert p.returncode == 0 and "PASS" in p.stdout
assert "F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k)" in p.stdout
p = run("wz", "check", "--nmax", "8", "--kmax", "8", "--negative-control")
assert p.returncode == 1 and "FAIL" in p.stdout
p = run("wz", "sum-g", "--k", "2", "--digits", "30", "--json")
assert p.returncode == 0
doc = json.loads(p.stdout)
assert doc["reports"][0]["id"] == "wz-row-sum(k=2)"
p = run("wz", "sum-h", "--digits", "30")
assert p.returncode == 0
p = run("wz", "ddk")
assert p.returncode == 0 and "PASS" in p.stdout
p = run("wz", "zero", "--digits", "30")
assert p.returncode == 0 and p.stdout.count("PASS") == 2

print("cli ok")
