"""Immutable membership sets over nonnegative integers.

The sumset tables hold one of these per summand count. ``DenseSupport`` packs
the set into a Python int used as a bit-vector; ``SparseSupport`` keeps a
sorted int64 numpy array and answers membership by binary search. Operations
between the two kinds convert the right operand to the kind of the left one.
"""
from abc import ABC, abstractmethod
from typing import Iterable, Iterator

import numpy as np

from app.errors import check_int64


class SupportSet(ABC):
    kind: str = ""

    @abstractmethod
    def __contains__(self, n: int) -> bool: ...

    @abstractmethod
    def __len__(self) -> int: ...

    @abstractmethod
    def to_array(self) -> np.ndarray:
        """Sorted int64 array of the members."""

    @property
    @abstractmethod
    def max_value(self) -> int:
        """Largest member, or -1 for the empty set."""

    @property
    @abstractmethod
    def nbytes(self) -> int: ...

    @abstractmethod
    def shifted(self, offset: int) -> "SupportSet":
        """The set {n + offset : n in self}."""

    @abstractmethod
    def union(self, other: "SupportSet") -> "SupportSet": ...

    @abstractmethod
    def issubset(self, other: "SupportSet") -> bool: ...

    @abstractmethod
    def isdisjoint_shifted(self, other: "SupportSet", offset: int) -> bool:
        """True when self and {n + offset : n in other} share no member."""

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_array().tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SupportSet):
            return NotImplemented
        return len(self) == len(other) and self.issubset(other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        preview = self.to_array()[:8].tolist()
        more = ", ..." if len(self) > 8 else ""
        return f"{type(self).__name__}(size={len(self)}, head={preview}{more})"


class DenseSupport(SupportSet):
    kind = "dense"
    __slots__ = ("mask",)

    def __init__(self, mask: int):
        if mask < 0:
            raise ValueError("bit mask must be nonnegative")
        self.mask = mask

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DenseSupport":
        arr = np.fromiter(values, dtype=np.int64)
        if arr.size == 0:
            return cls(0)
        if arr.min() < 0:
            raise ValueError("supports hold nonnegative integers only")
        bits = np.zeros(int(arr.max()) + 1, dtype=np.uint8)
        bits[arr] = 1
        packed = np.packbits(bits, bitorder="little")
        return cls(int.from_bytes(packed.tobytes(), "little"))

    def __contains__(self, n: int) -> bool:
        return n >= 0 and bool((self.mask >> n) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def to_array(self) -> np.ndarray:
        if not self.mask:
            return np.empty(0, dtype=np.int64)
        raw = self.mask.to_bytes(self.nbytes, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return np.flatnonzero(bits).astype(np.int64)

    @property
    def max_value(self) -> int:
        return self.mask.bit_length() - 1

    @property
    def nbytes(self) -> int:
        return (self.mask.bit_length() + 7) // 8

    def shifted(self, offset: int) -> "DenseSupport":
        if offset < 0:
            raise ValueError("shift offset must be nonnegative")
        check_int64(self.max_value + offset, "shifted support bound")
        return DenseSupport(self.mask << offset)

    def union(self, other: SupportSet) -> "DenseSupport":
        return DenseSupport(self.mask | as_dense(other).mask)

    def issubset(self, other: SupportSet) -> bool:
        other_mask = as_dense(other).mask
        return self.mask | other_mask == other_mask

    def isdisjoint_shifted(self, other: SupportSet, offset: int) -> bool:
        check_int64(other.max_value + offset, "shifted support bound")
        # members of self below offset cannot meet other + offset
        return not ((self.mask >> offset) & as_dense(other).mask)


class SparseSupport(SupportSet):
    kind = "sparse"
    __slots__ = ("values",)

    def __init__(self, values: np.ndarray):
        values = np.asarray(values, dtype=np.int64)
        values.setflags(write=False)
        self.values = values

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "SparseSupport":
        arr = np.unique(np.fromiter(values, dtype=np.int64))
        if arr.size and arr[0] < 0:
            raise ValueError("supports hold nonnegative integers only")
        return cls(arr)

    def __contains__(self, n: int) -> bool:
        i = int(np.searchsorted(self.values, n))
        return i < self.values.size and int(self.values[i]) == n

    def __len__(self) -> int:
        return int(self.values.size)

    def to_array(self) -> np.ndarray:
        return self.values

    @property
    def max_value(self) -> int:
        return int(self.values[-1]) if self.values.size else -1

    @property
    def nbytes(self) -> int:
        return int(self.values.nbytes)

    def shifted(self, offset: int) -> "SparseSupport":
        if offset < 0:
            raise ValueError("shift offset must be nonnegative")
        check_int64(self.max_value + offset, "shifted support bound")
        return SparseSupport(self.values + np.int64(offset))

    def union(self, other: SupportSet) -> "SparseSupport":
        return SparseSupport(np.union1d(self.values, other.to_array()))

    def issubset(self, other: SupportSet) -> bool:
        return bool(np.isin(self.values, other.to_array(), assume_unique=True).all())

    def isdisjoint_shifted(self, other: SupportSet, offset: int) -> bool:
        check_int64(other.max_value + offset, "shifted support bound")
        moved = other.to_array() + np.int64(offset)
        return not np.isin(moved, self.values, assume_unique=True).any()


def as_dense(support: SupportSet) -> DenseSupport:
    if isinstance(support, DenseSupport):
        return support
    return DenseSupport.from_values(support.to_array())


def as_sparse(support: SupportSet) -> SparseSupport:
    if isinstance(support, SparseSupport):
        return support
    return SparseSupport(support.to_array())


def use_dense(range_bound: int, dense_limit_bits: int) -> bool:
    """Dense backend when [0, range_bound] fits in dense_limit_bits bits."""
    return range_bound + 1 <= dense_limit_bits


def make_support(values: Iterable[int], *, dense: bool) -> SupportSet:
    if dense:
        return DenseSupport.from_values(values)
    return SparseSupport.from_values(values)


def convert(support: SupportSet, *, dense: bool) -> SupportSet:
    return as_dense(support) if dense else as_sparse(support)
