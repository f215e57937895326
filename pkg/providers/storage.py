from __future__ import annotations

from typing import Protocol, runtime_checkable


@runtime_checkable
class StorageProvider(Protocol):
    """
    Key/bytes store behind the census cache.

    Keys are slash-separated (e.g. "census/k5.jsonl"). get_object raises
    KeyError for a missing key; delete_object on a missing key is a no-op.
    """

    def put_object(self, key: str, data: bytes) -> None: ...

    def get_object(self, key: str) -> bytes: ...

    def delete_object(self, key: str) -> None: ...
