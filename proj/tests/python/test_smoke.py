"""Smoke test for the python bindings; plain asserts, no test framework."""

import piharmonic as ph


def expect_error(fn):
    try:
        fn()
    except ph.Error:
        return True
    return False


ids = ph.record_ids()
assert len(ids) == 21, ids
assert "ra2" in ids and "thm-(2H)" in ids and "aux-(th6.33)" in ids

r = ph.verify("ra2", digits=40)
assert r["pass"] and r["digits_matched"] >= 40 and r["method"] == "direct", r

r = ph.verify("thm-(5)", digits=25)
assert r["pass"] and r["method"] == "accelerated", r

fams = ph.family_ids()
assert len(fams) == 9, fams

r = ph.verify_family("1c2", "1/3", digits=30)
assert r["pass"] and r["id"] == "1c2(c=1/3)", r

r = ph.verify_family("1c2", "1/2", digits=30, derivative=True)
assert r["pass"] and r["id"].startswith("d/dc"), r

combos = ph.combinations(digits=30)
assert len(combos) == 3 and all(c["pass"] for c in combos), combos

w = ph.wz_pair_check(nmax=15, kmax=15)
assert w["pass"] and w["checked"] == 16 * 16, w

s = ph.wz_row_sum(k=1, digits=30)
assert s.startswith("2.546479089"), s

assert "log(2)" in ph.rhs_string("thm-(1)")
assert expect_error(lambda: ph.verify("no-such-id"))
assert expect_error(lambda: ph.verify("ra2", digits=3))
assert expect_error(lambda: ph.verify_family("th1", "7/8"))

print("smoke ok")
