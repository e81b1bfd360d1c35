"""File-backed form store: one canonical `.athos.json` file per form.

Writes go through a temp file plus atomic rename, serialized per id, so a
reader never observes a torn document and concurrent writers resolve to
last-writer-wins.
"""

from __future__ import annotations

import os
import re
import secrets
import tempfile
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from .document import FormDocument, parse_form, serialize_form
from .model import AthosError

FORM_ID_RE = re.compile(r"^[0-9a-f]{12}$")
_SUFFIX = ".athos.json"


class NotFound(AthosError):
    def __init__(self, form_id: str):
        super().__init__(f'no form with id "{form_id}"')
        self.form_id = form_id


@dataclass(frozen=True)
class StoredForm:
    id: str
    doc: FormDocument
    updated_at: datetime


class FormStore:
    """Stores canonical document bytes under `<data_dir>/<id>.athos.json`."""

    def __init__(self, data_dir: Path | str):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, form_id: str) -> threading.Lock:
        with self._locks_guard:
            lock = self._locks.get(form_id)
            if lock is None:
                lock = self._locks[form_id] = threading.Lock()
            return lock

    def _path(self, form_id: str) -> Path:
        if not FORM_ID_RE.match(form_id):
            raise NotFound(form_id)
        return self.data_dir / f"{form_id}{_SUFFIX}"

    def new_id(self) -> str:
        while True:
            form_id = secrets.token_hex(6)
            if not (self.data_dir / f"{form_id}{_SUFFIX}").exists():
                return form_id

    def put(self, form_id: str, doc: FormDocument) -> None:
        """Atomically replace the stored document with canonical bytes."""
        path = self._path(form_id)
        data = serialize_form(doc)
        with self._lock_for(form_id):
            fd, tmp = tempfile.mkstemp(dir=self.data_dir, prefix=f".{form_id}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "wb") as f:
                    f.write(data)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise

    def get_bytes(self, form_id: str) -> bytes:
        path = self._path(form_id)
        try:
            return path.read_bytes()
        except FileNotFoundError:
            raise NotFound(form_id) from None

    def get(self, form_id: str) -> StoredForm:
        path = self._path(form_id)
        data = self.get_bytes(form_id)
        mtime = path.stat().st_mtime
        return StoredForm(
            id=form_id,
            doc=parse_form(data),
            updated_at=datetime.fromtimestamp(mtime, tz=timezone.utc),
        )

    def exists(self, form_id: str) -> bool:
        try:
            return self._path(form_id).exists()
        except NotFound:
            return False

    def list(self) -> list[StoredForm]:
        """All stored forms, sorted by id."""
        out = []
        for path in sorted(self.data_dir.glob(f"*{_SUFFIX}")):
            form_id = path.name[: -len(_SUFFIX)]
            if not FORM_ID_RE.match(form_id):
                continue
            try:
                out.append(self.get(form_id))
            except (NotFound, AthosError):
                continue  # deleted concurrently or foreign file
        return out

    def delete(self, form_id: str) -> None:
        path = self._path(form_id)
        with self._lock_for(form_id):
            try:
                path.unlink()
            except FileNotFoundError:
                raise NotFound(form_id) from None


def resolve_data_dir(flag_value: Optional[str]) -> Path:
    """Flag wins over ATHOS_DATA_DIR, which wins over ./athos-data."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get("ATHOS_DATA_DIR")
    return Path(env) if env else Path("./athos-data")
