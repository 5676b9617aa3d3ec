"""End-to-end command line checks."""

from dyncut.cli import main


def write_cycle_metis(path, n):
    lines = [f"{n} {n}"]
    for v in range(1, n + 1):
        left = (v - 2) % n + 1
        right = v % n + 1
        lines.append(f"{left} {right}")
    path.write_text("\n".join(lines) + "\n")


def test_init_stats_and_dump(tmp_path, capsys):
    g = tmp_path / "c6.metis"
    write_cycle_metis(g, 6)
    assert main(["init-stats", "--graph", str(g)]) == 0
    out = capsys.readouterr().out
    assert "lambda=2" in out and "cactus_vertices=6" in out
    assert main(["dump-cactus", "--graph", str(g)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# lambda=2")
    assert "cycle:" in out


def write_complete_metis(path, n):
    lines = [f"{n} {n * (n - 1) // 2}"]
    for v in range(1, n + 1):
        lines.append(" ".join(str(x) for x in range(1, n + 1) if x != v))
    path.write_text("\n".join(lines) + "\n")


def test_gen_and_run_roundtrip(tmp_path, capsys):
    g = tmp_path / "k6.metis"
    write_complete_metis(g, 6)
    stream = tmp_path / "s.txt"
    initial = tmp_path / "init.txt"
    rc = main([
        "gen-random", "--graph", str(g),
        "--alpha-ins", "0.25", "--alpha-del", "0.25",
        "--out-stream", str(stream), "--out-initial", str(initial),
    ])
    assert rc == 0
    capsys.readouterr()
    out_csv = tmp_path / "report.csv"
    rc = main([
        "run", "--stream", str(stream), "--graph", str(initial),
        "--format", "dimacs-edgelist", "--mode", "both",
        "--output", str(out_csv),
    ])
    assert rc == 0
    text = out_csv.read_text()
    assert text.startswith("update_idx,batch_idx,op,u,v,w,lambda,micros")
    assert "# lambda_mismatches=0" in text


def test_gen_worstcase_cli(tmp_path, capsys):
    g = tmp_path / "c12.metis"
    write_cycle_metis(g, 12)
    stream = tmp_path / "w.txt"
    rc = main([
        "gen-worstcase", "--graph", str(g),
        "--n-ins", "8", "--n-del", "4", "--out-stream", str(stream),
    ])
    assert rc == 0
    assert stream.read_text().startswith("n 12")


def test_cli_reports_errors(tmp_path, capsys):
    bad = tmp_path / "bad.metis"
    bad.write_text("oops\n")
    assert main(["init-stats", "--graph", str(bad)]) == 1
    assert "error:" in capsys.readouterr().err
