import pytest

from hamplex import dfi

_plain_reduce = dfi.reduce


def _checked_reduce(p, basis):
    out = _plain_reduce(p, basis)
    # quotients must rebuild the input exactly
    assert out.reconstruct(basis) == p
    return out


@pytest.fixture(autouse=True)
def reductions_are_reconstructed(monkeypatch):
    monkeypatch.setattr(dfi, "reduce", _checked_reduce)
