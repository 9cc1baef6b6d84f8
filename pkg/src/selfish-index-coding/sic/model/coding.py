from dataclasses import dataclass
from enum import Enum


class DecodeMode(Enum):
    INSTANT = 'instant'
    GENERAL = 'general'


@dataclass(frozen=True)
class CodingVector:
    support: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, 'support', frozenset(self.support))
        if len(self.support) == 0:
            raise ValueError('A coding vector needs at least one non-zero coefficient')

    @property
    def bits(self) -> int:
        vec = 0
        for chunk in self.support:
            vec |= 1 << chunk

        return vec

    @property
    def sparse(self) -> bool:
        return len(self.support) <= 2

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))

    def __str__(self) -> str:
        return '+'.join(f'd{c}' for c in self.key)


@dataclass(frozen=True)
class CodingMatrix:
    rows: tuple[CodingVector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(self.rows))

    @classmethod
    def from_supports(cls, supports) -> 'CodingMatrix':
        return cls(tuple(CodingVector(frozenset(s)) for s in supports))

    @property
    def eta(self) -> int:
        return len(self.rows)

    @property
    def sparse(self) -> bool:
        return all(row.sparse for row in self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def to_list(self) -> list[list[int]]:
        return [list(row.key) for row in self.rows]
