import os
import subprocess
import sys

import pytest

from gysinkit import _backend, _elim_py, exactla
from gysinkit.fixtures import FIXTURES, fixture
from gysinkit.gysin import assemble


def test_pure_python_selected_by_env():
    env = dict(os.environ, GYSINKIT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import gysinkit; print(gysinkit.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout
    assert out.strip() == "python"


def test_backend_name():
    assert _backend.BACKEND in ("cython", "python")


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixtures_agree_across_backends(monkeypatch, name):
    compiled = assemble(fixture(name))
    monkeypatch.setattr(exactla, "rref_int", _elim_py.rref_int)
    pure = assemble(fixture(name))
    assert pure.template == compiled.template
    assert pure.solve == compiled.solve
