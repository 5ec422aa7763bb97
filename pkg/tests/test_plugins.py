import pytest

import fgl  # noqa: F401  ensure built-in registration
import universal  # noqa: F401
from core.plugins import available_fgl_types, get_fgl_type, load_plugins, register_fgl_type
from fgl import additive_fgl


def test_builtin_laws_are_registered():
    known = available_fgl_types()
    for name in ("additive", "multiplicative", "scaled", "universal"):
        assert name in known


def test_factory_builds_a_law():
    law = get_fgl_type("scaled")(4, None, a="2")
    assert law.series.scalar(1, 1) == 2
    assert get_fgl_type("universal")(3).ring.names == ("m1", "m2")


def test_register_custom_law():
    register_fgl_type("plain_additive", lambda degree, ring=None: additive_fgl(degree, ring))
    assert "plain_additive" in available_fgl_types()
    assert get_fgl_type("plain_additive")(3).truncation == 3


def test_unknown_law_lists_known_names():
    with pytest.raises(KeyError, match="additive"):
        get_fgl_type("nonexistent")


def test_factories_must_be_callable():
    with pytest.raises(TypeError):
        register_fgl_type("broken", 42)


def test_load_plugins_imports_modules():
    load_plugins(["fgl.builtins"])
    assert "multiplicative" in available_fgl_types()
