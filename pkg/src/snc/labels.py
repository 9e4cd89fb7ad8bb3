"""Fixed-width binary codes for edge labels.

Codes are assigned deterministically: labels are sorted, and the k-th
label gets the width-long binary expansion of k. The width floor is 2
even for tiny alphabets; with a single code bit the two ends of a label
chain become structurally symmetric and decoding an encoded triple could
not tell subject from object.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import CodebookError
from .model import check_token

Bits = tuple[int, ...]


def code_width(alphabet_size: int) -> int:
    """Bits per label: ceil(log2(n)) raised to a floor of 2."""
    if alphabet_size < 1:
        raise CodebookError("alphabet must contain at least one label")
    return max(2, (alphabet_size - 1).bit_length())


@dataclass(frozen=True)
class Codebook:
    """Bijection between a label alphabet and fixed-width bitstrings."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise CodebookError("alphabet must contain at least one label")
        for label in self.labels:
            check_token(label)
        if any(a >= b for a, b in zip(self.labels, self.labels[1:])):
            raise CodebookError("labels must be strictly sorted and unique")

    @property
    def width(self) -> int:
        return code_width(len(self.labels))

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self.labels)

    @cached_property
    def _bits_by_label(self) -> dict[str, Bits]:
        width = self.width
        return {label: _rank_bits(rank, width) for rank, label in enumerate(self.labels)}

    @cached_property
    def _label_by_bits(self) -> dict[Bits, str]:
        return {bits: label for label, bits in self._bits_by_label.items()}

    def encode(self, label: str) -> Bits:
        try:
            return self._bits_by_label[label]
        except KeyError:
            raise CodebookError(f"label {label!r} is not in the alphabet") from None

    def decode(self, bits: Bits) -> str:
        bits = tuple(bits)
        if len(bits) != self.width:
            raise CodebookError(f"code has length {len(bits)}, codebook width is {self.width}")
        try:
            return self._label_by_bits[bits]
        except KeyError:
            raise CodebookError(f"code {bits!r} is not assigned to any label") from None

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self.alphabet


def _rank_bits(rank: int, width: int) -> Bits:
    return tuple((rank >> shift) & 1 for shift in range(width - 1, -1, -1))


def build_codebook(alphabet: Iterable[str]) -> Codebook:
    """Build the canonical codebook over an alphabet (any iteration order)."""
    return Codebook(tuple(sorted(set(alphabet))))
