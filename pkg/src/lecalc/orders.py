"""Monomial orders on exponent tuples.

Orders are exposed as key functions: ``order.key(m)`` returns a tuple and
monomials compare by comparing keys, largest key = leading.  Three kinds:

* ``grevlex``   -- global degree reverse lexicographic.
* ``local``     -- negative degree reverse lexicographic; lower total degree
                   is *larger*, so the leading term of a unit is its constant
                   term.  Not a well-order (used for standard bases).
* ``elimination(drop)`` -- block order, the ``drop`` block compared grevlex
                   first, the remaining block grevlex second.  Global, and
                   any polynomial whose leading monomial avoids the drop
                   block avoids it entirely.

All three are multiplicative: m1 < m2 implies m1*m < m2*m.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _neg_grevlex_key(m):
    return (-sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str
    drop: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in ("grevlex", "local", "elimination"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "elimination" and not self.drop:
            raise ValueError("elimination order needs a nonempty drop block")

    @property
    def is_global(self) -> bool:
        return self.kind != "local"

    def key(self, m: tuple[int, ...]):
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "local":
            return _neg_grevlex_key(m)
        dropset = self.drop
        head = tuple(m[i] for i in dropset)
        tail = tuple(e for i, e in enumerate(m) if i not in dropset)
        return (_grevlex_key(head), _grevlex_key(tail))

    def greater(self, m1, m2) -> bool:
        return self.key(m1) > self.key(m2)


GREVLEX = MonomialOrder("grevlex")
LOCAL = MonomialOrder("local")


def elimination(drop_indices) -> MonomialOrder:
    return MonomialOrder("elimination", tuple(sorted(drop_indices)))
