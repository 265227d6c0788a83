import logging

from src.state import RunLogHandler, RunManifest, RunStore


def test_manifest_round_trip(tmp_path):
    store = RunStore(str(tmp_path / "ledger" / "runs.db"))
    manifest = RunManifest(command=["quasiarc", "facets", "polygon:6"], surface="polygon:6",
                           counts={"facets": 14}, verdicts={"mutation": {"ok": True}}).stop()
    run_id = store.save_manifest(manifest)
    row = store.get_run(run_id)
    assert row["command"] == ["quasiarc", "facets", "polygon:6"]
    assert row["counts"] == {"facets": 14}
    assert row["verdicts"] == {"mutation": {"ok": True}}
    assert row["surface"] == "polygon:6"
    assert store.get_run(run_id + 1) is None
    store.close()


def test_recent_runs_newest_first(tmp_path):
    store = RunStore(str(tmp_path / "runs.db"))
    for surface in ("mobius:2", "mobius:3", "polygon:5"):
        store.save_manifest(RunManifest(command=["quasiarc"], surface=surface))
    assert [r["surface"] for r in store.recent_runs()] == ["polygon:5", "mobius:3", "mobius:2"]
    assert [r["surface"] for r in store.recent_runs(surface="mobius:3")] == ["mobius:3"]
    assert len(store.recent_runs(limit=1)) == 1
    store.close()


def test_manifest_json_is_deterministic_apart_from_wall_time():
    a = RunManifest(command=["quasiarc", "enum", "mobius:2"], counts={"arcs": 6})
    b = RunManifest(command=["quasiarc", "enum", "mobius:2"], counts={"arcs": 6})
    assert a.to_dict() == b.to_dict()
    assert "_started" not in a.to_json()


def test_log_handler_tags_events(tmp_path):
    store = RunStore(str(tmp_path / "runs.db"))
    log = logging.getLogger("quasiarc.test")
    handler = RunLogHandler(store)
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    try:
        log.info("[SHELL] mutation check fails at k=2, j=1")
        log.warning("untagged")
    finally:
        log.removeHandler(handler)
    assert [r["event"] for r in store.get_logs()] == ["", "SHELL"]
    assert store.get_logs(level="warning")[0]["message"] == "untagged"
    store.close()


def test_closed_store_reconnects(tmp_path):
    store = RunStore(str(tmp_path / "runs.db"))
    store.close()
    assert store.save_manifest(RunManifest(command=["quasiarc"])) == 1
    store.close()
