import io
import json
import subprocess
import sys

import pytest

from btcodes.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def body(text):
    return [l for l in text.splitlines() if not l.startswith("#")]


def test_tower_table_rows():
    code, out, _ = call("tower", "table", "--family", "wild", "--q", "3", "--imax", "5", "--delta", "1/4")
    assert code == 0
    lines = body(out)
    assert lines[0].split("\t")[:7] == ["i", "m_i", "n_i", "k_lower", "d_lower", "r_lo", "r_hi"]
    assert len(lines) == 6
    assert lines[1].split("\t")[:5] == ["1", "3", "18", "7/2", "9/2"]
    assert out.startswith("# tool: btcodes")


def test_tame_needs_p():
    code, _, err = call("tower", "table", "--family", "tame", "--q", "13", "--delta", "1/4")
    assert code == 64 and "--p" in err


def test_bounds_curve_csv():
    code, out, _ = call("bounds", "curve", "--q", "49", "--kind", "tvz,gv", "--step", "0.001")
    assert code == 0
    lines = body(out)
    assert lines[0] == "delta,bound_kind,value"
    assert lines[1].startswith("0/1,")
    assert len(lines) == 1 + 2 * 981
    tvz = [l for l in lines[1:] if ",TVZ," in l]
    assert tvz[0].endswith(",5/6")


def test_bounds_crossing_json():
    code, out, _ = call("bounds", "crossing", "--q", "49")
    doc = json.loads(out)
    assert code == 0 and doc["meta"]["version"]
    assert doc["tvz_ell"] == "5/6" and len(doc["crossings"]) == 1
    code, out, _ = call("bounds", "crossing", "--q", "16")
    assert json.loads(out)["crossings"] == []


def test_byte_identical():
    args = ("search", "primes", "--mod", "220", "--res", "1,9,11,19", "--count", "10")
    a, b = call(*args), call(*args)
    assert a == b and a[0] == 0
    rows = body(a[1])
    assert rows[1].split("\t")[:3] == ["229", "9", "1"]


def test_search_cert():
    code, out, _ = call("search", "cert", "--field", "5^2:2,4,1", "--kind", "square", "--mmax", "15")
    doc = json.loads(out)
    assert code == 0 and doc["replay"] is True
    assert doc["certificate"]["m"] == 9 and doc["certificate"]["ell"] == "1/8"
    code, out, _ = call("search", "cert", "--field", "11", "--kind", "square", "--mmax", "11")
    assert json.loads(out)["certificate"] is None


def test_domain_and_usage_errors():
    assert call("search", "cert", "--field", "12", "--kind", "square", "--mmax", "9")[0] == 2
    assert call("tower", "ell", "--g0", "1", "--t", "1", "--r", "1")[0] == 2
    assert call("bounds", "crossing", "--q", "27")[0] == 2
    assert call("nope")[0] == 64
    assert call("tower", "table", "--family", "wild", "--q", "3", "--delta", "x")[0] == 64
    assert call("tower", "table", "--family", "wild", "--q", "3", "--delta", "1/4", "--bogus")[0] == 64


def test_code_build_and_verify(tmp_path):
    code, out, _ = call("code", "build", "--field", "5^2:2,4,1", "--n", "2",
                        "--roots", "2,a,a+3,2a,2a+1,2a+2,3a+1,4a+1,4a+3", "--betas", "split", "--r", "5")
    assert code == 0
    doc = json.loads(out)
    p = doc["params"]
    assert p["n_c"] == 8 and p["genus"] == 4 and p["kummer_agreement"] is True
    assert p["goppa_k"] and p["goppa_d"] and p["block_transitive"]["transitive_per_block"]
    f = tmp_path / "code.json"
    f.write_text(out)
    code, out, _ = call("code", "verify", str(f))
    v = json.loads(out)
    assert code == 0 and v["ok"] and v["checks"]["regenerates"]
    # tamper: flip one generator entry
    doc["code"]["generator"][0][0] = (doc["code"]["generator"][0][0] + 1) % 25
    f.write_text(json.dumps(doc))
    code, out, _ = call("code", "verify", str(f))
    assert code == 1 and not json.loads(out)["ok"]


def test_code_build_genus_zero():
    code, out, _ = call("code", "build", "--field", "7", "--n", "1", "--betas", "0,1,2,3,4,5", "--r", "2")
    p = json.loads(out)["params"]
    assert code == 0 and p["k"] == 3 and p["d"] == 4


@pytest.mark.parametrize("name", ["f25-residues", "f64-cubes", "prime-field-values", "wild-table",
                                  "tame-table", "thresholds", "printed-ells", "gs-genus"])
def test_repro_matching(name):
    code, out, _ = call("repro", name)
    assert code == 0, out
    assert "MISMATCH" not in out


def test_repro_flags_and_mismatches():
    _, out, _ = call("repro", "printed-ells")
    assert "formula=1/8 printed=1/4" in out and "formula=11/48 printed=9/48" in out
    _, out, _ = call("repro", "gs-genus")
    assert "standard=45 printed=15" in out
    code, out, _ = call("repro", "legendre-reductions")
    assert code == 1 and "first failure p=47" in out
    code, out, _ = call("repro", "progression-primes")
    assert code == 1 and "fails at p=239" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "btcodes", "repro", "f25-residues"], capture_output=True, text=True)
    assert res.returncode == 0 and "{1, 3, 1 + a, 4 + 3*a}" in res.stdout
