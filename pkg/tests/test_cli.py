"""Command-line behaviour: formats, exit codes, caching, stream separation."""

import pytest

from gapperms import cli


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_compute_single_term(capsys):
    rc, out, err = run(capsys, "compute", "--r", "1", "--s", "1", "--mode", "signed",
                       "--n", "1", "--engine", "oracle")
    assert rc == 0
    assert out == "1 1\n"
    assert err == ""


def test_compute_riordan(capsys):
    rc, out, _ = run(capsys, "compute", "--r", "1", "--s", "1", "--mode", "abs",
                     "--n", "5", "--engine", "riordan")
    assert rc == 0
    assert out == "1 1\n2 0\n3 0\n4 2\n5 14\n"


def test_compute_inapplicable_engine(capsys):
    rc, out, err = run(capsys, "compute", "--r", "2", "--s", "1", "--mode", "signed",
                       "--n", "5", "--engine", "navarrete")
    assert rc != 0
    assert out == ""
    assert "navarrete" in err and "r=1" in err


def test_compute_oracle_cap(capsys):
    rc, _, err = run(capsys, "compute", "--r", "1", "--s", "1", "--mode", "signed",
                     "--n", "12", "--engine", "oracle")
    assert rc != 0
    assert "cap" in err


def test_auto_matches_concrete_engines(capsys):
    for r, s, mode, concrete in [
        ("1", "1", "signed", "navarrete"),
        ("1", "1", "abs", "riordan"),
        ("1", "2", "abs", "r1fast"),
        ("2", "2", "signed", "matsuo"),
        ("3", "2", "signed", "ie"),
    ]:
        rc1, out1, _ = run(capsys, "compute", "--r", r, "--s", s, "--mode", mode,
                           "--n", "8", "--engine", "auto")
        rc2, out2, _ = run(capsys, "compute", "--r", r, "--s", s, "--mode", mode,
                           "--n", "8", "--engine", concrete)
        assert rc1 == rc2 == 0
        assert out1 == out2


def test_bfile_round_trip(tmp_path, capsys):
    path = tmp_path / "terms.txt"
    rc, out, _ = run(capsys, "compute", "--r", "2", "--s", "2", "--mode", "signed",
                     "--n", "10", "--engine", "ie", "--bfile", str(path))
    assert rc == 0
    assert out == ""
    table = cli.read_bfile(str(path))
    assert table.offset == 1
    assert len(table.values) == 10
    assert cli._bfile_text(table.values, table.offset) == path.read_text()


def test_bfile_offset_flag(capsys):
    rc, out, _ = run(capsys, "compute", "--r", "1", "--s", "1", "--mode", "signed",
                     "--n", "3", "--engine", "navarrete", "--offset", "0")
    assert rc == 0
    assert out == "0 1\n1 1\n2 3\n"


def test_bfile_parse_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 two\n")
    with pytest.raises(ValueError) as exc:
        cli.read_bfile(str(bad))
    assert ":2:" in str(exc.value)
    gap = tmp_path / "gap.txt"
    gap.write_text("1 1\n3 5\n")
    with pytest.raises(ValueError) as exc:
        cli.read_bfile(str(gap))
    assert ":2:" in str(exc.value)


def test_cache_hits_are_byte_identical(tmp_path, capsys):
    cache = tmp_path / "cache"
    args = ["compute", "--r", "1", "--s", "2", "--mode", "abs", "--n", "12",
            "--engine", "r1fast", "--cache-dir", str(cache)]
    rc, out1, _ = run(capsys, *args)
    assert rc == 0
    cached_files = list(cache.iterdir())
    assert len(cached_files) == 1
    assert cached_files[0].name == "r1_s2_absolute_r1fast.bfile"
    stamp = cached_files[0].read_text()
    # shorter request served from the same cache, byte-identical prefix
    rc, out2, _ = run(capsys, "compute", "--r", "1", "--s", "2", "--mode", "abs",
                      "--n", "7", "--engine", "r1fast", "--cache-dir", str(cache))
    assert rc == 0
    assert out2 == "".join(out1.splitlines(keepends=True)[:7])
    assert cached_files[0].read_text() == stamp
    # env variable names the same default directory
    rc, out3, _ = run(capsys, "compute", "--r", "1", "--s", "2", "--mode", "abs",
                      "--n", "12", "--engine", "r1fast", "--cache-dir", str(cache))
    assert out3 == out1


def test_cache_env_variable(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path / "envcache"))
    rc, out, _ = run(capsys, "compute", "--r", "1", "--s", "1", "--mode", "signed",
                     "--n", "6", "--engine", "navarrete")
    assert rc == 0
    assert (tmp_path / "envcache" / "r1_s1_signed_navarrete.bfile").read_text() == out


def test_crosscheck_agreement(capsys):
    rc, out, err = run(capsys, "crosscheck", "--r", "2", "--s", "2", "--mode", "signed",
                       "--n", "8", "--engines", "oracle,ie,matsuo")
    assert rc == 0
    assert "agree" in out
    assert err == ""
    rc, out, _ = run(capsys, "crosscheck", "--r", "1", "--s", "1", "--mode", "abs",
                     "--n", "8", "--engines", "oracle,ie,riordan,robbins,r1fast")
    assert rc == 0


def test_crosscheck_rejects_inapplicable(capsys):
    rc, out, err = run(capsys, "crosscheck", "--r", "1", "--s", "1", "--mode", "signed",
                       "--n", "8", "--engines", "oracle,riordan")
    assert rc != 0
    assert "riordan" in err


def test_crosscheck_reports_first_mismatch(capsys, monkeypatch):
    real = cli._run_engine

    def broken(engine, spec, n_max):
        values = real(engine, spec, n_max)
        if engine == "ie":
            values[4] += 1
        return values

    monkeypatch.setattr(cli, "_run_engine", broken)
    rc, out, err = run(capsys, "crosscheck", "--r", "1", "--s", "1", "--mode", "signed",
                       "--n", "8", "--engines", "navarrete,ie")
    assert rc == 1
    assert "n=5" in err
    assert "navarrete=" in err and "ie=" in err


def test_tilings_dump(capsys):
    rc, out, _ = run(capsys, "tilings", "--r", "3", "--n", "5")
    assert rc == 0
    assert out == "1 * x1^5\n2 * x1^3 x2^1\n1 * x1^1 x2^2\n"


def test_fit_verify_extend_flow(tmp_path, capsys):
    bfile = tmp_path / "a11.txt"
    opfile = tmp_path / "a11.op"
    rc, _, _ = run(capsys, "compute", "--r", "1", "--s", "1", "--mode", "signed",
                   "--n", "20", "--engine", "navarrete", "--bfile", str(bfile))
    assert rc == 0
    rc, _, _ = run(capsys, "fit", "--bfile", str(bfile), "--order", "2",
                   "--degree", "1", "--opfile", str(opfile))
    assert rc == 0
    assert opfile.read_text() == "2 1 1\n1\n1 -1\n2 -1\n"
    rc, out, _ = run(capsys, "verify", "--opfile", str(opfile), "--bfile", str(bfile))
    assert rc == 0 and out == "ok\n"
    rc, out, _ = run(capsys, "extend", "--opfile", str(opfile), "--bfile", str(bfile),
                     "--n", "22")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 22
    assert lines[0] == "1 1"


def test_fit_refusal_names_bound(tmp_path, capsys):
    bfile = tmp_path / "short.txt"
    bfile.write_text("".join(f"{i} {i}\n" for i in range(1, 6)))
    rc, out, err = run(capsys, "fit", "--bfile", str(bfile), "--order", "2",
                       "--degree", "1")
    assert rc == 2
    assert "9" in err


def test_verify_failure_exit_code(tmp_path, capsys):
    bfile = tmp_path / "b.txt"
    bfile.write_text("1 1\n2 2\n3 4\n4 9\n")
    opfile = tmp_path / "op.txt"
    opfile.write_text("1 0 1\n1\n-2\n")  # t(n) = 2 t(n-1)
    rc, out, _ = run(capsys, "verify", "--opfile", str(opfile), "--bfile", str(bfile))
    assert rc == 1
    assert out == "fail 4\n"


def test_tilings_out_file(tmp_path, capsys):
    out = tmp_path / "f35.txt"
    rc, stdout, _ = run(capsys, "tilings", "--r", "3", "--n", "5", "--out", str(out))
    assert rc == 0
    assert stdout == ""
    assert out.read_text() == "1 * x1^5\n2 * x1^3 x2^1\n1 * x1^1 x2^2\n"


def test_extend_out_file(tmp_path, capsys):
    seeds = tmp_path / "seeds.txt"
    seeds.write_text("1 1\n2 0\n3 0\n4 2\n")
    opfile = tmp_path / "op.txt"
    opfile.write_text("4 1 1\n1\n-1 -1\n-2 1\n-5 1\n3 -1\n")
    out = tmp_path / "ext.txt"
    rc, stdout, _ = run(capsys, "extend", "--opfile", str(opfile), "--bfile",
                        str(seeds), "--n", "6", "--out", str(out))
    assert rc == 0
    assert stdout == ""
    assert out.read_text() == "1 1\n2 0\n3 0\n4 2\n5 14\n6 90\n"


def test_extend_inexact_reports_error(tmp_path, capsys):
    seeds = tmp_path / "seeds.txt"
    seeds.write_text("1 3\n")
    opfile = tmp_path / "op.txt"
    opfile.write_text("1 0 1\n2\n-1\n")  # 2 t(n) = t(n-1)
    rc, stdout, err = run(capsys, "extend", "--opfile", str(opfile), "--bfile",
                          str(seeds), "--n", "3")
    assert rc == 1
    assert stdout == ""
    assert "not an integer" in err


def test_bench_runs(capsys):
    rc, out, err = run(capsys, "bench", "--r", "1", "--s", "1", "--mode", "abs",
                       "--n", "12", "--engines", "riordan,robbins")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("riordan ") and lines[1].startswith("robbins ")
