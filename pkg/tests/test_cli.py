"""Command-line behaviour: exit codes, config precedence, the report schema,
history bookkeeping, and deterministic replay."""

import json

import pytest

from tricheck.cli import main, read_config_file, update_history, UsageError
from tricheck.harness import PropertyRegistry
from tricheck.strategies import int_range, tuple_of


@pytest.fixture()
def passing_registry():
    reg = PropertyRegistry()
    reg.register("add.commutes", tuple_of(int_range(0, 30), int_range(0, 30)),
                 lambda a, b: a + b == b + a, tags=("algebra",))
    reg.register("square.nonneg", int_range(-20, 20), lambda x: x * x >= 0)
    return reg


@pytest.fixture()
def mixed_registry():
    reg = PropertyRegistry()
    reg.register("ok.add", int_range(0, 30), lambda x: x + 0 == x)
    reg.register("bad.threshold", int_range(0, 1000), lambda x: x < 500)
    reg.register("stuck.filtered", int_range(0, 9).filter("none", lambda x: False),
                 lambda x: True)
    return reg


# --------------------------------------------------------------------------
# exit codes

def test_all_green_exits_zero(passing_registry, capsys):
    code = main(["run", "--backend", "exhaustive"], registry=passing_registry)
    assert code == 0
    out = capsys.readouterr().out
    assert "add.commutes: proved (exhaustive, 961 cases)" in out
    assert "totals: passed=0 proved=2 falsified=0 unknown=0 waived=0" in out


def test_falsification_exits_one(mixed_registry, capsys):
    code = main(["run", "--backend", "exhaustive", "--filter", "bad.*"],
                registry=mixed_registry)
    assert code == 1
    out = capsys.readouterr().out
    assert "bad.threshold: falsified shrunk=500" in out


def test_unknown_is_green_unless_strict(mixed_registry):
    base = ["run", "--backend", "fuzz", "--filter", "stuck.*"]
    assert main(base, registry=mixed_registry) == 0
    assert main(base + ["--strict"], registry=mixed_registry) == 2


def test_usage_errors_exit_three(tmp_path, passing_registry, capsys):
    bad = tmp_path / "cfg.json"
    bad.write_text('{"casez": 5}')
    code = main(["run", "--config", str(bad)], registry=passing_registry)
    assert code == 3
    assert "unknown key: casez" in capsys.readouterr().err

    assert main(["run", "--backend", "warpdrive"], registry=passing_registry) == 3
    assert main(["replay", "--property", "no.such"], registry=passing_registry) == 3


def test_backend_disagreement_exits_three(monkeypatch, passing_registry, capsys):
    from tricheck.results import Counterexample, Verdict
    from tricheck.runner import InconsistentBackends

    def explode(registry, config, waivers=()):
        raise InconsistentBackends(
            "add.commutes", Verdict.proved("exhaustive", 1),
            Verdict.falsified(Counterexample(original=1, shrunk=1)))

    monkeypatch.setattr("tricheck.cli.run_suite", explode)
    code = main(["run"], registry=passing_registry)
    assert code == 3
    assert "backends disagree" in capsys.readouterr().err


# --------------------------------------------------------------------------
# config file handling

def test_flag_beats_config_file(tmp_path, passing_registry):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"cases": 99, "seed": 5}))
    report_path = tmp_path / "report.json"
    code = main(["run", "--config", str(cfg), "--cases", "10",
                 "--report", str(report_path)], registry=passing_registry)
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["config"]["cases"] == 10   # flag wins
    assert report["config"]["seed"] == 5     # file fills the gap


def test_config_file_types_are_checked(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"cases": "many"}))
    with pytest.raises(UsageError, match="must be int"):
        read_config_file(str(cfg))
    cfg.write_text(json.dumps({"seed": True}))
    with pytest.raises(UsageError, match="must be an integer"):
        read_config_file(str(cfg))
    cfg.write_text(json.dumps({"strict": 1}))
    with pytest.raises(UsageError, match="must be bool"):
        read_config_file(str(cfg))
    cfg.write_text("[1, 2]")
    with pytest.raises(UsageError, match="must be a JSON object"):
        read_config_file(str(cfg))


def test_report_history_strict_can_come_from_the_file(tmp_path, mixed_registry):
    report_path = tmp_path / "r.json"
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "backend": "fuzz", "filter": "stuck.*", "strict": True,
        "report": str(report_path),
    }))
    code = main(["run", "--config", str(cfg)], registry=mixed_registry)
    assert code == 2  # strict from the file
    assert report_path.is_file()


# --------------------------------------------------------------------------
# the report document

def test_report_schema_is_fixed(tmp_path, mixed_registry):
    report_path = tmp_path / "report.json"
    main(["run", "--backend", "exhaustive", "--report", str(report_path)],
         registry=mixed_registry)
    doc = json.loads(report_path.read_text())

    assert list(doc) == ["version", "run_id", "timestamp", "config", "results",
                         "totals", "stale_waivers", "unused_waivers"]
    assert doc["version"] == 1
    assert list(doc["config"]) == ["backend", "seed", "cases", "budget",
                                   "timeout_ms", "repetition_cap", "filter",
                                   "code_fingerprint"]
    names = [r["name"] for r in doc["results"]]
    assert names == sorted(names)

    by_name = {r["name"]: r for r in doc["results"]}
    bad = by_name["bad.threshold"]
    assert bad["verdict"] == "falsified"
    assert bad["counterexample"] == {
        "original": "500", "shrunk": "500", "seed": None, "case_index": 500,
    }
    ok = by_name["ok.add"]
    assert ok["verdict"] == "proved"
    assert "counterexample" not in ok
    assert ok["waived"] is False
    assert ok["vacuity_warning"] is False
    stuck = by_name["stuck.filtered"]
    assert stuck["verdict"] == "proved"  # the empty refinement enumerates fully
    assert stuck["cases"] == 0
    assert stuck["vacuity_warning"] is True

    assert doc["totals"] == {"passed": 0, "proved": 2, "falsified": 1,
                             "unknown": 0, "waived": 0}


def test_counterexample_values_are_reprs(tmp_path):
    reg = PropertyRegistry()
    reg.register("pair.small", tuple_of(int_range(0, 5), int_range(0, 5)),
                 lambda a, b: a + b < 10)
    report_path = tmp_path / "report.json"
    main(["run", "--backend", "exhaustive", "--report", str(report_path)],
         registry=reg)
    doc = json.loads(report_path.read_text())
    cex = doc["results"][0]["counterexample"]
    assert cex["original"] == "(4, 6)" or cex["original"] == "(5, 5)"
    # repr strings survive JSON round-trips without losing the Python shape
    assert eval(cex["shrunk"]) == (5, 5)


def test_reports_differ_only_in_identity_fields(tmp_path, passing_registry):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["run", "--backend", "exhaustive", "--seed", "3"]
    main(argv + ["--report", str(p1)], registry=passing_registry)
    main(argv + ["--report", str(p2)], registry=passing_registry)
    a = json.loads(p1.read_text())
    b = json.loads(p2.read_text())
    for doc in (a, b):
        doc["run_id"] = doc["timestamp"] = None
        for r in doc["results"]:
            r["duration_ms"] = None
    assert a == b


# --------------------------------------------------------------------------
# waivers through the CLI

def test_waived_falsification_exits_zero(tmp_path, mixed_registry, capsys):
    waivers = tmp_path / "waivers.json"
    waivers.write_text(json.dumps([
        {"glob": "bad.*", "reason": "tracked regression", "expires": "2999-01-01"},
    ]))
    code = main(["run", "--backend", "exhaustive", "--waivers", str(waivers),
                 "--strict"], registry=mixed_registry)
    assert code == 0
    out = capsys.readouterr().out
    assert "[waived: tracked regression]" in out
    assert "waived=1" in out


def test_stale_and_unused_waivers_are_reported(tmp_path, mixed_registry, capsys):
    waivers = tmp_path / "waivers.json"
    waivers.write_text(json.dumps([
        {"glob": "bad.*", "reason": "expired long ago", "expires": "2001-01-01"},
        {"glob": "ok.*", "reason": "matches only passes", "expires": "2999-01-01"},
    ]))
    report_path = tmp_path / "r.json"
    code = main(["run", "--backend", "exhaustive", "--waivers", str(waivers),
                 "--report", str(report_path)], registry=mixed_registry)
    assert code == 1  # the stale waiver no longer suppresses bad.threshold
    out = capsys.readouterr().out
    assert "stale waivers: bad.*" in out
    assert "unused waivers: ok.*" in out
    doc = json.loads(report_path.read_text())
    assert doc["stale_waivers"] == ["bad.*"]
    assert doc["unused_waivers"] == ["ok.*"]


def test_waiver_file_must_be_a_list(tmp_path, passing_registry, capsys):
    waivers = tmp_path / "waivers.json"
    waivers.write_text(json.dumps({"glob": "*"}))
    code = main(["run", "--waivers", str(waivers)], registry=passing_registry)
    assert code == 3
    assert "must be a JSON list" in capsys.readouterr().err


# --------------------------------------------------------------------------
# history and flakiness

def flipping_registry():
    state = {"runs": 0}

    def predicate(x):
        return state["runs"] < 1  # true on the first run, false afterwards

    reg = PropertyRegistry()
    reg.register("flip.flop", int_range(0, 10), predicate)
    return reg, state


def test_flaky_property_is_flagged_across_runs(tmp_path, capsys):
    reg, state = flipping_registry()
    hist = tmp_path / "history.jsonl"
    argv = ["run", "--backend", "exhaustive", "--history", str(hist)]

    assert main(argv, registry=reg) == 0
    state["runs"] += 1
    assert main(argv, registry=reg) == 1
    out = capsys.readouterr().out
    assert "flaky: flip.flop" in out

    lines = [json.loads(l) for l in hist.read_text().splitlines()]
    assert len(lines) == 2
    assert {l["verdict"] for l in lines} == {"proved", "falsified"}
    assert len({l["run_id"] for l in lines}) == 2
    for l in lines:
        assert list(l) == ["run_id", "timestamp", "code_fingerprint",
                           "config_hash", "property", "backend", "verdict",
                           "duration_ms"]


def test_config_change_unflags_flakiness(tmp_path, capsys):
    reg, state = flipping_registry()
    hist = tmp_path / "history.jsonl"
    assert main(["run", "--backend", "exhaustive", "--seed", "1",
                 "--history", str(hist)], registry=reg) == 0
    state["runs"] += 1
    main(["run", "--backend", "exhaustive", "--seed", "2",
          "--history", str(hist)], registry=reg)
    out = capsys.readouterr().out
    assert "flaky" not in out  # different config hash: runs are not comparable


def test_identical_rerun_is_not_flaky(tmp_path, passing_registry, capsys):
    hist = tmp_path / "history.jsonl"
    argv = ["run", "--backend", "exhaustive", "--history", str(hist)]
    main(argv, registry=passing_registry)
    main(argv, registry=passing_registry)
    assert "flaky" not in capsys.readouterr().out


def test_corrupt_history_lines_are_skipped_with_a_warning(tmp_path, capsys,
                                                          passing_registry):
    hist = tmp_path / "history.jsonl"
    hist.write_text('not json at all\n{"run_id": "x"}\n')
    argv = ["run", "--backend", "exhaustive", "--history", str(hist)]
    assert main(argv, registry=passing_registry) == 0
    err = capsys.readouterr().err
    assert "history.jsonl:1: skipping corrupt history line" in err
    assert "history.jsonl:2: skipping corrupt history line" in err


def test_history_subcommand_prints_and_filters(tmp_path, passing_registry, capsys):
    hist = tmp_path / "history.jsonl"
    main(["run", "--backend", "exhaustive", "--history", str(hist)],
         registry=passing_registry)
    capsys.readouterr()

    assert main(["history", "--history", str(hist)]) == 0
    out = capsys.readouterr().out
    assert "add.commutes" in out and "square.nonneg" in out

    assert main(["history", "--history", str(hist), "--property", "add.*"]) == 0
    out = capsys.readouterr().out
    assert "add.commutes" in out and "square.nonneg" not in out

    assert main(["history", "--history", str(hist), "--property", "zzz*"]) == 0
    assert "(no matching history records)" in capsys.readouterr().out


def test_missing_history_file_is_a_usage_error(capsys):
    assert main(["history", "--history", "/nonexistent/h.jsonl"]) == 3
    assert "cannot read history" in capsys.readouterr().err


# --------------------------------------------------------------------------
# replay

def test_replay_is_byte_identical(mixed_registry, capsys):
    argv = ["replay", "--property", "bad.threshold", "--backend", "fuzz",
            "--seed", "42"]
    assert main(argv, registry=mixed_registry) == 1
    first = capsys.readouterr().out
    assert main(argv, registry=mixed_registry) == 1
    second = capsys.readouterr().out
    assert first == second
    assert first.splitlines()[-1] == "shrunk=500"


def test_replay_of_a_passing_property_exits_zero(passing_registry, capsys):
    argv = ["replay", "--property", "square.nonneg", "--backend", "exhaustive"]
    assert main(argv, registry=passing_registry) == 0
    assert "proved (exhaustive, 41 cases)" in capsys.readouterr().out


# --------------------------------------------------------------------------
# list and module loading

def test_list_is_sorted_and_shows_tags(passing_registry, capsys):
    assert main(["list"], registry=passing_registry) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["add.commutes  [algebra]", "square.nonneg"]


def test_registry_loads_from_a_module_file(tmp_path, capsys):
    mod = tmp_path / "harnesses.py"
    mod.write_text(
        "from tricheck import PropertyRegistry, int_range\n"
        "REGISTRY = PropertyRegistry()\n"
        "REGISTRY.register('local.inc', int_range(0, 9), lambda x: x + 1 > x)\n"
    )
    assert main(["list", str(mod)]) == 0
    assert capsys.readouterr().out.strip() == "local.inc"
    assert main(["run", str(mod), "--backend", "exhaustive"]) == 0
    assert "local.inc: proved (exhaustive, 10 cases)" in capsys.readouterr().out


def test_module_without_registry_is_a_usage_error(tmp_path, capsys):
    mod = tmp_path / "empty.py"
    mod.write_text("x = 1\n")
    assert main(["run", str(mod)]) == 3
    assert "must define REGISTRY" in capsys.readouterr().err
    assert main(["run", str(tmp_path / "missing.py")]) == 3


def test_update_history_appends_without_clobbering(tmp_path, passing_registry):
    hist = tmp_path / "h.jsonl"
    argv = ["run", "--backend", "exhaustive", "--history", str(hist)]
    main(argv, registry=passing_registry)
    n1 = len(hist.read_text().splitlines())
    main(argv, registry=passing_registry)
    n2 = len(hist.read_text().splitlines())
    assert (n1, n2) == (2, 4)
