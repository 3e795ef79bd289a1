import os
import logging
import threading
import importlib
from types import ModuleType
from typing import Any, Callable, Dict, Hashable, Optional, Tuple, TypeVar

logger = logging.getLogger(__name__)

V = TypeVar("V")


class Singleton(type):
    def __init__(
        cls, name: str, bases: Tuple[type], namespace: Dict[str, Any],
    ) -> None:
        cls.instance = None
        super().__init__(name, bases, namespace)

    def __call__(cls, *args, **kwargs) -> Any:
        if cls.instance is None:
            cls.instance = super().__call__(*args, **kwargs)
        return cls.instance


def import_module(name: str) -> Optional[ModuleType]:
    """
    try importlib.import_module, nothing to do when module not be found.
    """
    if os.path.exists(os.path.join(os.getcwd(), name + ".py")) or os.path.exists(
        os.path.join(os.getcwd(), name, "__init__.py")
    ):
        return importlib.import_module(name)
    return None  # nothing to do when module not be found


class Cache(dict):
    """
    A read-mostly memo table that can be shared between threads.

    Lookups never take the lock. Values are computed outside the lock and
    inserted with `setdefault` under it, so the first writer wins and every
    reader sees a single value per key.
    """

    def __init__(self, name: str, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.name = name
        self.sync_lock = threading.Lock()

    def __enter__(self):
        self.sync_lock.acquire()
        return self

    def __exit__(self, exc_type, value, traceback):
        self.sync_lock.release()

    def fetch(self, key: Hashable, factory: Callable[[], V]) -> V:
        try:
            return self[key]
        except KeyError:
            pass
        value = factory()
        with self:
            value = self.setdefault(key, value)
        logger.debug(f"{self.name}: cached {key!r} ({len(self)} entries)")
        return value

    def clear(self) -> None:
        with self:
            super().clear()

    def __repr__(self) -> str:
        return f"Cache({self.name!r}, entries={len(self)})"
