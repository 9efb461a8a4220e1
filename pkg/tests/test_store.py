from __future__ import annotations

import os
import signal
import subprocess
import sys
import threading
import time
from dataclasses import replace

import pytest

from dashforge.metrics import SeriesKind, generate_series
from dashforge.model import parse_model
from dashforge.store import (
    DuplicateModelError,
    FileStore,
    MemoryStore,
    ModelNotFoundError,
    RevisionConflictError,
)


@pytest.fixture(params=["file", "memory"])
def store(request, tmp_path):
    if request.param == "file":
        return FileStore(tmp_path / "data")
    return MemoryStore()


class TestCrud:
    def test_create_get_list_delete(self, store, sample_model):
        store.put_model(sample_model, expected_revision=None)
        assert store.get_model("Dashboard_Sample") == sample_model
        assert [m.id for m in store.list_models()] == ["Dashboard_Sample"]
        store.delete_model("Dashboard_Sample")
        assert store.list_models() == []
        with pytest.raises(ModelNotFoundError):
            store.get_model("Dashboard_Sample")

    def test_duplicate_create_rejected(self, store, sample_model):
        store.put_model(sample_model, expected_revision=None)
        with pytest.raises(DuplicateModelError):
            store.put_model(sample_model, expected_revision=None)

    def test_delete_missing(self, store):
        with pytest.raises(ModelNotFoundError):
            store.delete_model("ghost")

    def test_series_round_trip(self, store):
        series = generate_series(5, SeriesKind.TIME_SERIES, 10, 0, 100, series_id="cpu")
        store.put_series(series)
        assert store.get_series("cpu") == series
        with pytest.raises(ModelNotFoundError):
            store.get_series("mem")


class TestCompareAndSet:
    def test_cas_bumps_revision(self, store, sample_model):
        store.put_model(sample_model, expected_revision=None)
        stored = store.put_model(sample_model, expected_revision=0)
        assert stored.revision == 1
        assert store.get_model(sample_model.id).revision == 1

    def test_stale_revision_conflicts(self, store, sample_model):
        store.put_model(sample_model, expected_revision=None)
        store.put_model(sample_model, expected_revision=0)
        with pytest.raises(RevisionConflictError) as exc:
            store.put_model(sample_model, expected_revision=0)
        assert exc.value.expected == 0
        assert exc.value.actual == 1
        assert store.get_model(sample_model.id).revision == 1  # unchanged

    def test_update_of_missing_model(self, store, sample_model):
        with pytest.raises(ModelNotFoundError):
            store.put_model(sample_model, expected_revision=0)

    def test_two_writers_one_wins(self, store, sample_model):
        store.put_model(sample_model, expected_revision=None)
        outcomes = []

        def writer(name):
            try:
                store.put_model(replace(sample_model, name=name), expected_revision=0)
                outcomes.append(("ok", name))
            except RevisionConflictError:
                outcomes.append(("conflict", name))

        threads = [threading.Thread(target=writer, args=(f"W{i}",)) for i in range(2)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert sorted(kind for kind, _ in outcomes) == ["conflict", "ok"]
        assert store.get_model(sample_model.id).revision == 1


class TestFileStoreDiscipline:
    def test_documents_are_canonical_files(self, tmp_path, sample_model):
        store = FileStore(tmp_path)
        store.put_model(sample_model, expected_revision=None)
        path = tmp_path / "dashboards" / "Dashboard_Sample.json"
        assert path.exists()
        assert parse_model(path.read_text()) == sample_model

    def test_awkward_ids_are_quoted(self, tmp_path, sample_model):
        store = FileStore(tmp_path)
        awkward = replace(sample_model, id="a/b c")
        store.put_model(awkward, expected_revision=None)
        assert store.get_model("a/b c").id == "a/b c"
        # No nested path was created.
        assert not (tmp_path / "dashboards" / "a").exists()

    def test_corrupt_document_is_quarantined(self, tmp_path, sample_model, sample_text):
        store = FileStore(tmp_path)
        store.put_model(sample_model, expected_revision=None)
        bad = tmp_path / "dashboards" / "broken.json"
        bad.write_text("{this is not json")
        listed = store.list_models()
        assert [m.id for m in listed] == ["Dashboard_Sample"]
        assert not bad.exists()
        assert (tmp_path / "dashboards" / "broken.json.quarantined").exists()

    def test_no_temp_files_leak(self, tmp_path, sample_model):
        store = FileStore(tmp_path)
        for i in range(20):
            store.put_model(sample_model, expected_revision=None if i == 0 else i - 1)
        leftovers = [p for p in (tmp_path / "dashboards").iterdir()
                     if not p.name.endswith(".json")]
        assert leftovers == []


KILL_WRITER = r"""
import sys
from dashforge.store import FileStore
from dashforge.model import parse_model

store = FileStore(sys.argv[1])
model = parse_model(open(sys.argv[2], encoding="utf-8").read())
store.put_model(model, expected_revision=None)
revision = model.revision
print("ready", flush=True)
while True:
    store.put_model(model, expected_revision=revision)
    revision += 1
"""


class TestKillDuringWrite:
    def test_killed_writer_never_corrupts_documents(self, tmp_path):
        sample = os.path.join(os.path.dirname(__file__), "data", "sample_dashboard.json")
        data_dir = tmp_path / "data"
        proc = subprocess.Popen(
            [sys.executable, "-c", KILL_WRITER, str(data_dir), sample],
            stdout=subprocess.PIPE, text=True,
        )
        try:
            assert proc.stdout.readline().strip() == "ready"
            time.sleep(0.35)  # let it spin through many write/rename cycles
        finally:
            proc.send_signal(signal.SIGKILL)
            proc.wait()
        docs = list((data_dir / "dashboards").glob("*.json"))
        assert docs, "writer never wrote a document"
        for doc in docs:
            model = parse_model(doc.read_text(encoding="utf-8"))
            assert model.id == "Dashboard_Sample"
            assert model.revision >= 0
