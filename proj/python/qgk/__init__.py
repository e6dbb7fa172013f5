import json
import os
import pathlib

_data = pathlib.Path(__file__).parent / "data"
if _data.is_dir():
    os.environ.setdefault("QGK_DATA_DIR", str(_data))

from . import _core  # noqa: E402
from ._core import QgkError, cuspidal_possible  # noqa: E402


def _wrap(fn):
    def call(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    return call


kappas = _wrap(_core.kappas)
subsystem = _wrap(_core.subsystem)
gkdim = _wrap(_core.gkdim)
afunction = _wrap(_core.afunction)
table2_row = _wrap(_core.table2_row)
jantzen = _wrap(_core.jantzen)
cross_check = _wrap(_core.cross_check)
growth = _wrap(_core.growth)
realize = _wrap(_core.realize)

__all__ = [
    "QgkError",
    "afunction",
    "cross_check",
    "cuspidal_possible",
    "gkdim",
    "growth",
    "jantzen",
    "kappas",
    "realize",
    "subsystem",
    "table2_row",
]
