"""Ultimately periodic words ``u v^omega``."""

from dataclasses import dataclass

from .algebra import ANCHOR
from .errors import UsageError


def format_letter(a):
    if a is ANCHOR:
        return "#"
    if isinstance(a, (frozenset, set)):
        return "{" + " ".join(sorted(a)) + "}"
    return str(a)


@dataclass(frozen=True)
class UPWord:
    u: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if not self.v:
            raise UsageError("the periodic part of a UP word must be nonempty")

    def __getitem__(self, i):
        n = len(self.u)
        return self.u[i] if i < n else self.v[(i - n) % len(self.v)]

    def prefix(self, k):
        return tuple(self[i] for i in range(k))

    def suffix(self, i):
        n = len(self.u)
        if i < n:
            return UPWord(self.u[i:], self.v)
        j = (i - n) % len(self.v)
        return UPWord((), self.v[j:] + self.v[:j])

    def canonical(self):
        """Shortest representation of the same infinite word."""
        v = self.v
        for p in range(1, len(v) + 1):
            if len(v) % p == 0 and v[:p] * (len(v) // p) == v:
                v = v[:p]
                break
        u = self.u
        while u and u[-1] == v[-1]:
            u = u[:-1]
            v = v[-1:] + v[:-1]
        return UPWord(u, v)

    def __str__(self):
        return (",".join(map(format_letter, self.u)) + ";"
                + ",".join(map(format_letter, self.v)))
