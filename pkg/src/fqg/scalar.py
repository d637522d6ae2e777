"""Scalar arithmetic: exact Gaussian rationals with an optional float backend.

The exact backend represents a complex scalar by a pair of
:class:`fractions.Fraction` values.  Every built-in construction has rational
structure constants, so every identity check is decided by exact equality.

The float backend keeps a pair of doubles and compares componentwise against
a global tolerance (default ``1e-9``).  It exists for imported numerical data
and for the one cross-check that genuinely needs roots of unity.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache, wraps

_F0 = Fraction(0)
_F1 = Fraction(1)

EXACT = "exact"
FLOAT = "float"
DEFAULT_TOLERANCE = 1e-9


class QQi:
    """Gaussian rational ``re + im*i`` with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def _raw(re, im):
        s = object.__new__(QQi)
        s.re = re
        s.im = im
        return s

    def __add__(self, other):
        return QQi._raw(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return QQi._raw(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return QQi._raw(-self.re, -self.im)

    def __mul__(self, other):
        a, b = self.re, self.im
        c, d = other.re, other.im
        if b == 0:
            if d == 0:
                return QQi._raw(a * c, _F0)
            return QQi._raw(a * c, a * d)
        if d == 0:
            return QQi._raw(a * c, b * c)
        return QQi._raw(a * c - b * d, a * d + b * c)

    def inv(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return QQi._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * other.inv()

    def conj(self):
        return QQi._raw(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def magnitude(self):
        return math.hypot(float(self.re), float(self.im))

    def sort_key(self):
        return (self.re, self.im)

    def __eq__(self, other):
        if type(other) is QQi:
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return "QQi(%s)" % self.re
        return "QQi(%s, %s)" % (self.re, self.im)


class CFloat:
    """Floating complex scalar; equality is componentwise up to the tolerance."""

    __slots__ = ("re", "im")
    __hash__ = None

    def __init__(self, re=0.0, im=0.0):
        self.re = float(re)
        self.im = float(im)

    @staticmethod
    def _raw(re, im):
        s = object.__new__(CFloat)
        s.re = re
        s.im = im
        return s

    def __add__(self, other):
        return CFloat._raw(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return CFloat._raw(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return CFloat._raw(-self.re, -self.im)

    def __mul__(self, other):
        a, b = self.re, self.im
        c, d = other.re, other.im
        return CFloat._raw(a * c - b * d, a * d + b * c)

    def inv(self):
        n = self.re * self.re + self.im * self.im
        if n == 0.0:
            raise ZeroDivisionError("inverse of zero scalar")
        return CFloat._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * other.inv()

    def conj(self):
        return CFloat._raw(self.re, -self.im)

    def is_zero(self):
        tol = _state.tol
        return abs(self.re) <= tol and abs(self.im) <= tol

    def is_real(self):
        return abs(self.im) <= _state.tol

    def magnitude(self):
        return math.hypot(self.re, self.im)

    def sort_key(self):
        return (self.re, self.im)

    def __eq__(self, other):
        if type(other) is CFloat:
            tol = _state.tol
            return abs(self.re - other.re) <= tol and abs(self.im - other.im) <= tol
        return NotImplemented

    def __repr__(self):
        return "CFloat(%r, %r)" % (self.re, self.im)


class _State(threading.local):
    """Per-thread backend selection, so a float-backend computation in one
    worker cannot change comparison semantics under another."""

    def __init__(self):
        self.name = EXACT
        self.tol = DEFAULT_TOLERANCE


_state = _State()


def set_backend(name: str, tol: float | None = None) -> None:
    if name not in (EXACT, FLOAT):
        raise ValueError("unknown backend %r" % name)
    _state.name = name
    if tol is not None:
        _state.tol = float(tol)


def backend_name() -> str:
    return _state.name


def tolerance() -> float:
    return _state.tol


@contextmanager
def use_backend(name: str, tol: float = DEFAULT_TOLERANCE):
    old_name, old_tol = _state.name, _state.tol
    set_backend(name, tol)
    try:
        yield
    finally:
        _state.name, _state.tol = old_name, old_tol


def scalar(re=0, im=0):
    """Build a scalar of the active backend from rational or float data."""
    if _state.name == EXACT:
        return QQi(re, im)
    return CFloat(float(re), float(im))


def zero():
    return scalar(0)


def one():
    return scalar(1)


def zero_like(s):
    return QQi._raw(_F0, _F0) if type(s) is QQi else CFloat._raw(0.0, 0.0)


def format_scalar(s) -> tuple[str, str]:
    """Serialize a scalar as a pair of number strings ("p/q" when exact)."""
    if type(s) is QQi:
        return (str(s.re), str(s.im))
    return (repr(s.re), repr(s.im))


def _number_from_string(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        return Fraction(float(text))


def parse_scalar(re_text: str, im_text: str = "0"):
    """Parse a scalar pair ("p/q" or decimal strings) in the active backend."""
    re_f = _number_from_string(str(re_text))
    im_f = _number_from_string(str(im_text))
    if _state.name == EXACT:
        return QQi(re_f, im_f)
    return CFloat(float(re_f), float(im_f))


def backend_cached(fn):
    """Memoize a constructor whose output embeds scalars of the active
    backend; the cache key carries the backend so exact and float results
    never shadow each other."""
    cached = lru_cache(maxsize=None)(lambda _backend, *args: fn(*args))

    @wraps(fn)
    def wrapper(*args):
        return cached(_state.name, *args)

    wrapper.cache_clear = cached.cache_clear
    return wrapper
