"""Pluggable document store for dashboard models and metric series.

The default store is file-backed: one JSON document per model under
``<dataDir>/dashboards/`` and per series under ``<dataDir>/metrics/``.
Writers follow a write-temp-then-rename discipline so a killed process
never leaves a half-written document readable, and saves are serialized
through per-store locking with revision compare-and-set.
"""

from __future__ import annotations

import logging
import os
import tempfile
import threading
from dataclasses import replace
from pathlib import Path
from urllib.parse import quote, unquote

from .metrics import MetricSeries, SeriesError, check_series, parse_series, serialize_series
from .model import DashboardModel, ParseError, parse_model, serialize_model

log = logging.getLogger(__name__)


class StoreError(Exception):
    pass


class ModelNotFoundError(StoreError):
    def __init__(self, model_id: str):
        super().__init__(f"no dashboard with id {model_id!r}")
        self.model_id = model_id


class DuplicateModelError(StoreError):
    def __init__(self, model_id: str):
        super().__init__(f"dashboard {model_id!r} already exists")
        self.model_id = model_id


class RevisionConflictError(StoreError):
    def __init__(self, model_id: str, expected: int, actual: int):
        super().__init__(
            f"dashboard {model_id!r}: expected revision {expected}, stored is {actual}"
        )
        self.model_id = model_id
        self.expected = expected
        self.actual = actual


class DocumentStore:
    """Interface all stores implement; see :class:`FileStore`."""

    def list_models(self) -> list[DashboardModel]:
        raise NotImplementedError

    def get_model(self, model_id: str) -> DashboardModel:
        raise NotImplementedError

    def put_model(
        self, model: DashboardModel, expected_revision: int | None
    ) -> DashboardModel:
        """Create (``expected_revision=None``) or compare-and-set update.

        On update the stored revision must equal ``expected_revision``;
        the document is then stored with revision ``expected_revision + 1``
        and returned.
        """
        raise NotImplementedError

    def delete_model(self, model_id: str) -> None:
        raise NotImplementedError

    def get_series(self, series_id: str) -> MetricSeries:
        raise NotImplementedError

    def put_series(self, series: MetricSeries) -> None:
        raise NotImplementedError


class MemoryStore(DocumentStore):
    """Dict-backed store; handy for tests and ephemeral serving."""

    def __init__(self):
        self._models: dict[str, DashboardModel] = {}
        self._series: dict[str, MetricSeries] = {}
        self._lock = threading.RLock()

    def list_models(self) -> list[DashboardModel]:
        with self._lock:
            return [self._models[k] for k in sorted(self._models)]

    def get_model(self, model_id: str) -> DashboardModel:
        with self._lock:
            if model_id not in self._models:
                raise ModelNotFoundError(model_id)
            return self._models[model_id]

    def put_model(self, model, expected_revision):
        with self._lock:
            current = self._models.get(model.id)
            if expected_revision is None:
                if current is not None:
                    raise DuplicateModelError(model.id)
                self._models[model.id] = model
                return model
            if current is None:
                raise ModelNotFoundError(model.id)
            if current.revision != expected_revision:
                raise RevisionConflictError(model.id, expected_revision, current.revision)
            stored = replace(model, revision=expected_revision + 1)
            self._models[model.id] = stored
            return stored

    def delete_model(self, model_id: str) -> None:
        with self._lock:
            if model_id not in self._models:
                raise ModelNotFoundError(model_id)
            del self._models[model_id]

    def get_series(self, series_id: str) -> MetricSeries:
        with self._lock:
            if series_id not in self._series:
                raise ModelNotFoundError(series_id)
            return self._series[series_id]

    def put_series(self, series: MetricSeries) -> None:
        check_series(series)
        with self._lock:
            self._series[series.id] = series


class FileStore(DocumentStore):
    """One JSON file per document; atomic writes; CAS under a store lock.

    Corrupt documents found while listing are quarantined (renamed with a
    ``.quarantined`` suffix) and logged; the store keeps working.
    """

    def __init__(self, data_dir: str | os.PathLike):
        self.root = Path(data_dir)
        self.dashboards = self.root / "dashboards"
        self.metrics = self.root / "metrics"
        self.dashboards.mkdir(parents=True, exist_ok=True)
        self.metrics.mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()

    # -- models ------------------------------------------------------------

    def list_models(self) -> list[DashboardModel]:
        out = []
        for path in sorted(self.dashboards.glob("*.json")):
            model = self._load(path)
            if model is not None:
                out.append(model)
        return out

    def get_model(self, model_id: str) -> DashboardModel:
        path = self._model_path(model_id)
        if not path.exists():
            raise ModelNotFoundError(model_id)
        model = self._load(path)
        if model is None:
            raise ModelNotFoundError(model_id)
        return model

    def put_model(self, model, expected_revision):
        with self._lock:
            path = self._model_path(model.id)
            if expected_revision is None:
                if path.exists():
                    raise DuplicateModelError(model.id)
                stored = model
            else:
                current = self.get_model(model.id)
                if current.revision != expected_revision:
                    raise RevisionConflictError(
                        model.id, expected_revision, current.revision
                    )
                stored = replace(model, revision=expected_revision + 1)
            _atomic_write(path, serialize_model(stored))
            return stored

    def delete_model(self, model_id: str) -> None:
        with self._lock:
            path = self._model_path(model_id)
            if not path.exists():
                raise ModelNotFoundError(model_id)
            path.unlink()

    # -- series ------------------------------------------------------------

    def get_series(self, series_id: str) -> MetricSeries:
        path = self._series_path(series_id)
        if not path.exists():
            raise ModelNotFoundError(series_id)
        try:
            return parse_series(path.read_text(encoding="utf-8"))
        except SeriesError as exc:
            log.warning("quarantining corrupt series %s: %s", path, exc)
            self._quarantine(path)
            raise ModelNotFoundError(series_id) from exc

    def put_series(self, series: MetricSeries) -> None:
        check_series(series)
        with self._lock:
            _atomic_write(self._series_path(series.id), serialize_series(series))

    def list_series_ids(self) -> list[str]:
        return sorted(
            unquote(path.stem) for path in self.metrics.glob("*.json")
        )

    # -- internals ----------------------------------------------------------

    def _model_path(self, model_id: str) -> Path:
        return self.dashboards / f"{quote(model_id, safe='')}.json"

    def _series_path(self, series_id: str) -> Path:
        return self.metrics / f"{quote(series_id, safe='')}.json"

    def _load(self, path: Path) -> DashboardModel | None:
        try:
            return parse_model(path.read_text(encoding="utf-8"))
        except (ParseError, OSError) as exc:
            log.warning("quarantining corrupt document %s: %s", path, exc)
            self._quarantine(path)
            return None

    def _quarantine(self, path: Path) -> None:
        try:
            path.rename(path.with_suffix(path.suffix + ".quarantined"))
        except OSError:  # already moved by a concurrent reader
            pass


def _atomic_write(path: Path, text: str) -> None:
    # Write to a sibling temp file, fsync, then rename over the target:
    # readers only ever observe complete documents.
    fd, tmp_name = tempfile.mkstemp(
        prefix=path.name + ".tmp", dir=str(path.parent)
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
