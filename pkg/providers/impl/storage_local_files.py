from __future__ import annotations

import logging
from pathlib import Path

from providers.storage import StorageProvider

logger = logging.getLogger(__name__)


class LocalFilesStorageProvider(StorageProvider):
    """
    Census cache rooted at a directory (CURVES_CENSUS_DIR).

    Writes land in a sibling .tmp file first and are renamed into place, so
    a reader never sees a half-written census.
    """

    def __init__(self, root_dir: str) -> None:
        self.root_dir = Path(root_dir).resolve()

    def _path(self, key: str) -> Path:
        parts = [p for p in key.split("/") if p not in ("", ".", "..")]
        if not parts:
            raise ValueError(f"invalid storage key: {key!r}")
        return self.root_dir.joinpath(*parts)

    def put_object(self, key: str, data: bytes) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_bytes(data)
        tmp.replace(path)
        logger.debug("stored %s (%s bytes)", path, len(data))

    def get_object(self, key: str) -> bytes:
        path = self._path(key)
        if not path.is_file():
            raise KeyError(key)
        return path.read_bytes()

    def delete_object(self, key: str) -> None:
        self._path(key).unlink(missing_ok=True)
