"""JIT toggle.

Kernels are compiled with numba when it is importable and the environment
variable ``ZYKOV_DISABLE_JIT`` is unset or ``0``.  Otherwise ``njit`` is an
identity decorator and the same source runs under the interpreter.
"""

import os

_disabled = os.environ.get("ZYKOV_DISABLE_JIT", "0").strip().lower() not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError
    import numba as _numba
except ImportError:
    _numba = None

JIT_ENABLED = _numba is not None


def njit(*args, **kwargs):
    if JIT_ENABLED:
        return _numba.njit(*args, cache=True, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


def python_impl(func):
    """The undecorated Python function behind a kernel."""
    return getattr(func, "py_func", func)
