import csv
import io
import json
import math
import subprocess
import sys

SQRT3 = math.sqrt(3.0)
T_MAX = math.pi / 3.0


def _run(*args):
    return subprocess.run(
        [sys.executable, "-m", "brocard", *args],
        capture_output=True,
        text=True,
        timeout=120,
    )


def _rows_from_csv(text):
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return header, [dict(zip(header, row)) for row in reader]


def _rows_from_jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_verify_healthy_exit_zero():
    p = _run("verify", "--samples", "25", "--seed", "0")
    assert p.returncode == 0, p.stderr
    rows = _rows_from_jsonl(p.stdout)
    assert len(rows) >= 55
    for r in rows:
        assert r["passed"] is True
        assert r["max_residual"] <= r["tolerance"]


def test_verify_csv_roundtrips_to_exact_floats():
    from brocard.checks import run_checks

    p = _run("verify", "--filter", "geom.", "--format", "csv",
             "--samples", "30", "--seed", "7")
    assert p.returncode == 0
    header, rows = _rows_from_csv(p.stdout)
    assert header[:2] == ["check_id", "claim"]
    wanted = run_checks(samples=30, seed=7, filter_prefix="geom.")
    assert len(rows) == len(wanted)
    for row, rep in zip(rows, wanted):
        assert row["check_id"] == rep.check_id
        # repr output re-parses to the identical double
        assert float(row["max_residual"]) == rep.max_residual
        assert float(row["tolerance"]) == rep.tolerance
        assert row["passed"] == "true"
        assert int(row["samples_used"]) == rep.samples_used


def test_verify_unknown_filter_exit_two():
    p = _run("verify", "--filter", "nosuchgroup.")
    assert p.returncode == 2
    assert p.stdout == ""


def test_verify_mutation_exit_one():
    p = _run("verify", "--mutate", "flip-step-sign", "--samples", "15")
    assert p.returncode == 1
    rows = _rows_from_jsonl(p.stdout)
    failed = {r["check_id"] for r in rows if not r["passed"]}
    assert any(i.startswith("thm1.") for i in failed)
    assert any(i.startswith("prop14.") for i in failed)
    assert "FAIL" in p.stderr


def test_verify_flags_before_subcommand():
    a = _run("--samples", "20", "--seed", "4", "verify", "--filter", "geom.")
    b = _run("verify", "--samples", "20", "--seed", "4", "--filter", "geom.")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout


def test_orbit_forward_contract():
    p = _run("orbit", "--R0", "1", "--u0", "3", "--steps", "6",
             "--format", "csv")
    assert p.returncode == 0
    header, rows = _rows_from_csv(p.stdout)
    assert header[0] == "generation"
    assert [int(r["generation"]) for r in rows] == list(range(7))
    assert float(rows[-1]["u_excess"]) < 1e-12
    # world-frame Brocard circles shrink toward the limit point
    radii = [float(r["K_radius"]) for r in rows]
    for a, b in zip(radii, radii[1:]):
        assert b < a


def test_orbit_backward_contract():
    p = _run("orbit", "--R0", "1", "--u0", "2", "--steps", "8",
             "--direction", "back", "--format", "json")
    assert p.returncode == 0
    rows = _rows_from_jsonl(p.stdout)
    assert len(rows) == 9
    assert rows[-1]["u"] > 100.0


def test_orbit_bad_start_exit_two():
    assert _run("orbit", "--R0", "1", "--u0", "1.5").returncode == 2
    assert _run("orbit", "--R0", "-1", "--u0", "2").returncode == 2
    assert _run("orbit", "--R0", "1", "--u0", "2", "--steps", "-3").returncode == 2


def test_family_table():
    p = _run("family", "--d", "1", "--h", "2", "--samples", "8",
             "--format", "json")
    assert p.returncode == 0
    rows = _rows_from_jsonl(p.stdout)
    assert len(rows) == 8
    for r in rows:
        assert r["closure_residual_max"] < 1e-9
        assert r["brocard_angle_deviation"] < 1e-9
    # with samples divisible by 4 one row is the apex-up isosceles member
    quarter = rows[2]
    assert abs(quarter["t"] - 0.5 * math.pi) < 1e-15
    assert abs(quarter["Ax"]) < 1e-12
    assert abs(quarter["Ay"] - 1.25) < 1e-12


def test_continuous_table():
    p = _run("continuous", "--t-min", "0.1", "--t-max", repr(T_MAX),
             "--samples", "60", "--format", "json")
    assert p.returncode == 0
    rows = _rows_from_jsonl(p.stdout)
    assert len(rows) >= 60
    ts = [r["t"] for r in rows]
    assert ts == sorted(ts)
    bs = [r["b"] for r in rows]
    assert max(bs) == 0.25  # the spliced extremal member is exact
    # envelope contact exists up to acos(3/5) and not after
    for r in rows:
        if r["t"] <= math.acos(0.6):
            assert r["envelope_residual"] < 1e-10
        else:
            assert math.isnan(r["xi1_x"])
            assert math.isnan(r["envelope_residual"])


def test_continuous_degrees():
    p = _run("continuous", "--t-min", "10", "--t-max", "55",
             "--samples", "10", "--degrees", "--format", "json")
    assert p.returncode == 0
    rows = _rows_from_jsonl(p.stdout)
    assert abs(rows[0]["t"] - math.radians(10.0)) < 1e-12


def test_continuous_bad_range_exit_two():
    assert _run("continuous", "--t-min", "0.5", "--t-max", "0.2").returncode == 2
    assert _run("continuous", "--t-min", "0", "--t-max", "0.5").returncode == 2
    assert _run("continuous", "--t-min", "0.1", "--t-max", "2.0").returncode == 2


def test_figure_deterministic_bytes():
    a = _run("figure", "fig4")
    b = _run("figure", "fig4")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.startswith("<svg")
    assert a.stdout.rstrip().endswith("</svg>")


def test_figure_families_and_params():
    for name in ("fig2", "fig5", "fig6", "fig7"):
        p = _run("figure", name)
        assert p.returncode == 0, (name, p.stderr)
        assert "<svg" in p.stdout
    # fig6 and fig7 describe the continuous family, no porism to pick
    assert _run("figure", "fig6", "--d", "1", "--h", "2").returncode == 2
    # member figures accept a porism
    assert _run("figure", "fig2", "--d", "1.2", "--h", "2.4").returncode == 0
    # half-given parameters are rejected
    assert _run("figure", "fig2", "--d", "1.2").returncode == 2


def test_figure_rejects_table_formats():
    assert _run("figure", "fig2", "--format", "csv").returncode == 2
    assert _run("verify", "--format", "svg", "--samples", "5").returncode == 2


def test_out_writes_crlf_csv(tmp_path):
    target = tmp_path / "orbit.csv"
    p = _run("orbit", "--R0", "1.25", "--u0", "1.75", "--steps", "3",
             "--format", "csv", "--out", str(target))
    assert p.returncode == 0
    assert p.stdout == ""
    raw = target.read_bytes()
    assert raw.count(b"\r\n") == 5  # header + four generations
    header, rows = _rows_from_csv(raw.decode())
    assert len(rows) == 4
    from brocard.porism import PorismParams
    from brocard.recurrence import step_forward

    want = step_forward(PorismParams(1.25, 1.75)).R
    assert float(rows[1]["R"]) == want
