import pytest

from lipgain import LipContext, kernels


@pytest.fixture(scope="session")
def ctx():
    return LipContext(256.0)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request, monkeypatch):
    """Route every image operation through one kernel backend."""
    mod = kernels.available_backends()[request.param]
    for name in ("add", "sub", "smul", "prod", "moments"):
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param


def rel_close(a, b, rel):
    return abs(a - b) <= rel * max(abs(a), abs(b))
