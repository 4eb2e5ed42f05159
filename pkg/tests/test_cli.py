"""Command line surface, exercised in process through main(argv)."""

import io
import itertools

import pytest

from hypercover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def put(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def gen_to_file(capsys, tmp_path, name, *argv):
    code, out, err = run(capsys, "generate", *argv)
    assert code == 0, err
    return put(tmp_path, name, out)


def graph_text(n, edges):
    lines = [f"{n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def test_pipeline_extremal(capsys, tmp_path):
    f = gen_to_file(capsys, tmp_path, "x.txt", "--family", "extremal", "--k", "3")
    code, out, _ = run(capsys, "compute", "--in", f, "--m", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "nu=1 tau=2"
    assert lines[1] == "nu*=tau*=2"
    assert "sandwich" in lines[2] and lines[2].endswith("ok")


def test_pipeline_biplane(capsys, tmp_path):
    f = gen_to_file(capsys, tmp_path, "bp.txt", "--family", "biplane")
    code, out, _ = run(capsys, "compute", "--in", f, "--m", "2")
    assert code == 0
    assert out.splitlines()[0] == "nu=1 tau=6"
    assert out.splitlines()[1] == "nu*=tau*=11/2"


def test_emit_and_verify_roundtrip(capsys, tmp_path):
    f = gen_to_file(capsys, tmp_path, "x.txt", "--family", "extremal", "--k", "4")
    cert = str(tmp_path / "cover.txt")
    code, _, _ = run(
        capsys, "compute", "--in", f, "--m", "3", "--emit-certificate", cert
    )
    assert code == 0
    code, out, _ = run(capsys, "verify", "--in", f, "--cert", cert)
    assert code == 0
    assert out.startswith("cover ok:")


def test_tampered_cover_fails_with_witness(capsys, tmp_path):
    f = gen_to_file(capsys, tmp_path, "x.txt", "--family", "extremal", "--k", "3")
    cert = str(tmp_path / "cover.txt")
    run(capsys, "compute", "--in", f, "--m", "2", "--emit-certificate", cert)
    capsys.readouterr()
    text = open(cert).read()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    kept = text.replace(lines[-1] + "\n", "")
    tampered = put(tmp_path, "tampered.txt", kept)
    code, out, _ = run(capsys, "verify", "--in", f, "--cert", tampered)
    assert code == 2
    assert out.startswith("uncovered edge: ")


def test_junk_certificate_is_a_usage_error(capsys, tmp_path):
    f = gen_to_file(capsys, tmp_path, "x.txt", "--family", "extremal", "--k", "3")
    junk = put(tmp_path, "junk.txt", "not a certificate\n")
    code, _, err = run(capsys, "verify", "--in", f, "--cert", junk)
    assert code == 1
    assert err.strip()


def test_construct_nu1(capsys, tmp_path):
    f = gen_to_file(capsys, tmp_path, "x.txt", "--family", "extremal", "--k", "3")
    code, out, _ = run(capsys, "construct", "--in", f, "--theorem", "nu1")
    assert code == 0
    assert "bound ok: size 2 <= 2" in out


def test_construct_g152_on_biplane(capsys, tmp_path):
    f = gen_to_file(capsys, tmp_path, "bp.txt", "--family", "biplane")
    code, out, _ = run(capsys, "construct", "--in", f, "--theorem", "g152")
    assert code == 0
    assert "<= 7" in out


def test_construct_precondition_exit_2(capsys, tmp_path):
    f = put(tmp_path, "pair.txt", "8 4 2\n0 1 2 3\n4 5 6 7\n")
    code, _, err = run(capsys, "construct", "--in", f, "--theorem", "nu1")
    assert code == 2
    assert err.strip()


def test_fractional_kkm2_and_certificate(capsys, tmp_path):
    f = put(tmp_path, "star.txt", "5 3 3\n0 1 2\n0 1 3\n0 2 4\n")
    cert = str(tmp_path / "frac.txt")
    code, out, _ = run(
        capsys, "fractional", "--in", f, "--theorem", "kkm2",
        "--emit-certificate", cert,
    )
    assert code == 0
    assert out.splitlines()[-1] == "total 1"
    code, out, _ = run(capsys, "verify", "--in", f, "--cert", cert)
    assert code == 0
    assert out.startswith("fractional cover ok")


def test_fractional_hstar_wiring(capsys, tmp_path):
    f = put(tmp_path, "h.txt", "9 4 3\n0 1 2 3\n4 5 6 7\n0 1 4 8\n")
    code, out, _ = run(capsys, "fractional", "--in", f, "--theorem", "hstar", "--m", "2")
    assert code == 0
    # k = 2m holds here, so the even-split subroutine gets picked
    assert out.splitlines()[-1] == "total 7"
    # no single-matching subroutine is wired for m = 3 at k = 4
    code, _, err = run(capsys, "fractional", "--in", f, "--theorem", "hstar", "--m", "3")
    assert code == 2
    assert err.strip()


def test_generate_random_is_seeded(capsys):
    args = ("generate", "--family", "random", "--n", "7", "--k", "3", "--seed", "5")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2 and out1.splitlines()[0].startswith("7 3 ")


def test_scan_cli_and_jobs(capsys):
    code, seq, _ = run(capsys, "scan", "--k", "3", "--m", "2", "--n", "4")
    assert code == 0
    assert seq.startswith("# scan k=3 m=2 n=4 mode=exhaustive")
    code, par, _ = run(
        capsys, "scan", "--k", "3", "--m", "2", "--n", "4", "--jobs", "3"
    )
    assert code == 0 and par == seq
    code, samp, _ = run(
        capsys, "scan", "--k", "3", "--m", "2", "--n", "6",
        "--samples", "10", "--seed", "3",
    )
    assert code == 0 and "mode=sampled" in samp.splitlines()[0]


def test_scan_guard_refusal(capsys):
    code, _, err = run(capsys, "scan", "--k", "3", "--m", "2", "--n", "8")
    assert code == 1
    assert "scan_sampled" in err


def test_tuza_cli(capsys, tmp_path):
    k4 = put(tmp_path, "k4.txt", graph_text(4, list(itertools.combinations(range(4), 2))))
    code, out, _ = run(capsys, "tuza", "--graph", k4)
    assert code == 0
    assert "triangles=4" in out and "nu=1 tau=2" in out and "ok" in out
    k6 = put(tmp_path, "k6.txt", graph_text(6, list(itertools.combinations(range(6), 2))))
    code, out, _ = run(capsys, "tuza", "--graph", k6)
    assert code == 2
    assert "precondition unmet" in out


def test_usage_errors_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1 and err.strip()
    f = gen_to_file(capsys, tmp_path, "x.txt", "--family", "extremal", "--k", "3")
    code, _, err = run(capsys, "compute", "--in", f)
    assert code == 1 and err.strip()
    code, _, err = run(capsys, "compute", "--in", f, "--m", "0")
    assert code == 1
    code, _, err = run(capsys, "compute", "--in", str(tmp_path / "absent.txt"), "--m", "2")
    assert code == 1


def test_stdin_dash(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("4 3 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"))
    code, out, _ = run(capsys, "compute", "--m", "2")
    assert code == 0
    assert out.splitlines()[0] == "nu=1 tau=2"
