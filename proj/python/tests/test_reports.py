import pytest

import deltaring as dr


def units(r):
    mul, one = r.mul_table, r.one
    return {a for a in range(r.order) if any(mul[a][b] == one and mul[b][a] == one for b in range(r.order))}


def delta(r):
    u = units(r)
    return {a for a in range(r.order) if all(r.add(a, v) in u for v in u)}


def jacobson(r):
    u = units(r)
    one = r.one
    return {
        a
        for a in range(r.order)
        if all(r.sub(one, r.mul(r.mul(x, a), y)) in u for x in range(r.order) for y in range(r.order))
    }


def nilpotents(r):
    out = set()
    for a in range(r.order):
        p = a
        for _ in range(r.order):
            if p == r.zero:
                break
            p = r.mul(p, a)
        if p == r.zero:
            out.add(a)
    return out


@pytest.mark.parametrize("expr", ["Z4", "Z12", "T(2,Z2)", "M(2,Z2)", "GR(Z2,C2)", "Prod(Z2,Z3)", "GF(4)"])
def test_info_sets_match_brute_force(expr):
    r = dr.build(expr)
    rep = dr.info(expr)
    assert rep["ring"] == r.label and rep["order"] == r.order
    sets = rep["sets"]
    assert set(sets["U"]["elements"]) == units(r)
    assert set(sets["J"]["elements"]) == jacobson(r)
    assert set(sets["Delta"]["elements"]) == delta(r)
    assert set(sets["Nil"]["elements"]) == nilpotents(r)
    assert any(n.startswith("QN(R) =") for n in rep["notes"])
    for s in sets.values():
        assert s["size"] == len(s["elements"]) == len(s["display"])
        assert s["display"] == [r.name(a) for a in s["elements"]]


def test_check_witness_recomputes():
    r = dr.build("M(2,Z2)")
    rep = dr.check("uj", r)
    assert rep["kind"] == "check" and rep["verdict"] is False
    w = {e["role"]: e["element"] for e in rep["witness"]}
    u = w["unit"]
    assert u in units(r)
    assert r.sub(u, r.one) not in jacobson(r)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 18, 27, 36])
def test_two_delta_u_on_zm(m):
    # For Z_m this holds exactly when m = 2^a 3^b.
    r = dr.build(f"Z{m}")
    d = delta(r)
    expected = all(r.sub(r.mul(u, u), r.one) in d for u in units(r))
    assert dr.check("2-delta-u", f"Z{m}")["verdict"] is expected
    k = m
    while k % 2 == 0:
        k //= 2
    while k % 3 == 0:
        k //= 3
    assert expected == (k == 1)


def test_classes_and_search():
    cls = dr.classes()
    for name in ("uj", "delta-u", "2-delta-u", "2-uj"):
        assert name in cls
    rings = dr.search(include=["delta-u"], exclude=["uj"], max_order=16)
    for label in rings:
        r = dr.build(label)
        u, j, d = units(r), jacobson(r), delta(r)
        assert all(r.sub(x, r.one) in d for x in u)
        assert not all(r.sub(x, r.one) in j for x in u)


def test_verify_single_check():
    rep = dr.verify("T3.8", max_order=64)
    assert rep["kind"] == "verify" and rep["all_passed"]
    (out,) = rep["checks"]
    assert out["check_id"] == "T3.8" and out["verdict"] == "pass"
    assert out["scope_size"] >= 1
    assert out["runtime_ms"] is None
