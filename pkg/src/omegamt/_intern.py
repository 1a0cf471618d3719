"""Hash-consing support.

Every node class derived from :class:`Interned` is built through
``cls._make(*fields)``, which returns the unique live instance with those
fields.  Structural equality therefore coincides with identity, and the
default identity ``__eq__``/``__hash__`` from ``object`` is kept.
"""

import threading
import weakref

_lock = threading.Lock()


class Interned:
    __slots__ = ("__weakref__",)
    _table = None

    def __init_subclass__(cls, **kw):
        super().__init_subclass__(**kw)
        cls._table = weakref.WeakValueDictionary()

    @classmethod
    def _make(cls, *fields):
        # type() of each field is part of the key so that 1 and True differ
        key = tuple((type(f), f) for f in fields)
        node = cls._table.get(key)
        if node is not None:
            return node
        with _lock:
            node = cls._table.get(key)
            if node is None:
                node = object.__new__(cls)
                node._init(*fields)
                cls._table[key] = node
        return node

    def _init(self, *fields):
        raise NotImplementedError

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (_rebuild, (type(self), self._fields()))

    def _fields(self):
        raise NotImplementedError


def _rebuild(cls, fields):
    return cls._make(*fields)
