"""Simple plugin registry for named formal group law constructors."""
from __future__ import annotations

import importlib
from typing import Any, Callable, Dict, Iterable, List


FglFactory = Callable[..., Any]

_registry: Dict[str, FglFactory] = {}


def register_fgl_type(name: str, factory: FglFactory) -> None:
    """Register *factory* under *name*.

    A factory is called as ``factory(degree, ring=None, **params)`` and returns
    a formal group law.
    """
    if not callable(factory):
        raise TypeError("Registered factory must be callable")
    _registry[name] = factory


def get_fgl_type(name: str) -> FglFactory:
    """Return the factory registered under *name*."""
    try:
        return _registry[name]
    except KeyError:
        raise KeyError(f"unknown formal group law {name!r}; known: {', '.join(available_fgl_types())}") from None


def available_fgl_types() -> List[str]:
    return sorted(_registry)


def load_plugins(module_names: Iterable[str]) -> None:
    """Import modules to register their formal group laws."""
    for module in module_names:
        importlib.import_module(module)
