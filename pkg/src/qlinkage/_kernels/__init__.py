"""Hot loops for character expansion.

The compiled module is used when it was built; otherwise the NumPy version
is loaded.  ``BACKEND`` names the active one.
"""

try:
    from ._ckernels import geometric_spread

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._pykernels import geometric_spread

    BACKEND = "numpy"

from . import _pykernels as python_backend

__all__ = ["geometric_spread", "BACKEND", "python_backend"]
