"""Small helpers for vertex sets stored as Python int bitmasks."""

from typing import Iterable, Iterator, List


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; -1 for an empty mask."""
    return (mask & -mask).bit_length() - 1


def bits_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def mask_of(ids: Iterable[int], n: int) -> int:
    """Build a bitmask over n positions from vertex ids."""
    ids = list(ids)
    if len(ids) < 64:
        mask = 0
        for i in ids:
            mask |= 1 << i
        return mask
    # one pass over a byte buffer keeps large neighbourhoods linear
    buf = bytearray((n >> 3) + 1)
    for i in ids:
        buf[i >> 3] |= 1 << (i & 7)
    return int.from_bytes(buf, 'little')


def full_mask(n: int) -> int:
    return (1 << n) - 1
