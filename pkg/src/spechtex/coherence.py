"""Brute-force oracle: the coherence relations as a linear system over F_p.

A candidate extension multi-sequence for a partition with rows
``part_1 >= ... >= part_n`` assigns a value y(r,s)_i in F_p to every slot
(r, s, i) with 1 <= r < s <= n and 1 <= i <= part_s.  The space of
coherent multi-sequences is exactly the nullspace of the system built
here, whose row families are:

* (E)    pair relations within one slot row-pair,
* (T1), (T2), (T3a), (T3b)   triple relations tying y(r,s), y(s,t), y(r,t),
* (C)    commuting relations between disjoint row-pairs.

The standard multi-sequence y(r,s)_i = C(part_r + i, i) always lies in
the nullspace; it is zero exactly for James partitions.  The dimension
of the first extension group is the nullspace dimension, minus one when
the standard multi-sequence is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple

import numpy as np

from .padic import binom_mod_p, digit_p, validate_prime
from .partitions import Partition, is_james_partition, james_index, row_len, row_val


class SlotIndex(NamedTuple):
    """One slot y(r,s)_i of a multi-sequence: rows r < s, 1 <= i <= part_s."""

    r: int
    s: int
    i: int


def canonical_slot_order(lam: Partition) -> list[SlotIndex]:
    """Slots in ascending (r, s) lexicographic order, then ascending i."""
    return [
        SlotIndex(r, s, i)
        for r in range(1, lam.n + 1)
        for s in range(r + 1, lam.n + 1)
        for i in range(1, lam.part(s) + 1)
    ]


def slot_count(lam: Partition) -> int:
    """Total number of slots V = sum over pairs r < s of part_s."""
    return sum(
        lam.part(s) for r in range(1, lam.n + 1) for s in range(r + 1, lam.n + 1)
    )


@dataclass(frozen=True)
class MultiSequence:
    """Dense vector of F_p slot values in canonical slot order."""

    lam: Partition
    p: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != slot_count(self.lam):
            raise ValueError(
                f"expected {slot_count(self.lam)} slot values, got {len(self.values)}"
            )

    def is_zero(self) -> bool:
        return not any(self.values)

    def nonzero_slots(self) -> list[tuple[SlotIndex, int]]:
        slots = canonical_slot_order(self.lam)
        return [(slots[k], v) for k, v in enumerate(self.values) if v]


def multisequence_from_slots(
    lam: Partition, p: int, entries: Mapping[SlotIndex | tuple[int, int, int], int]
) -> MultiSequence:
    """Build a MultiSequence from a sparse {(r, s, i): value} mapping."""
    validate_prime(p)
    positions = {slot: k for k, slot in enumerate(canonical_slot_order(lam))}
    values = [0] * len(positions)
    for slot, value in entries.items():
        key = SlotIndex(*slot)
        if key not in positions:
            raise ValueError(f"slot {key} does not exist for {lam}")
        values[positions[key]] = value % p
    return MultiSequence(lam, p, tuple(values))


def standard_multisequence(lam: Partition, p: int) -> MultiSequence:
    """Slot (r, s, i) holds C(part_r + i, i) mod p; zero iff lam is James."""
    validate_prime(p)
    values = tuple(
        binom_mod_p(lam.part(slot.r) + slot.i, slot.i, p)
        for slot in canonical_slot_order(lam)
    )
    return MultiSequence(lam, p, values)


def canonical_multisequence(lam: Partition, p: int) -> MultiSequence:
    """The nonzero coherent multi-sequence carried by every James partition.

    Obtained from the integer standard multi-sequence by dividing out the
    James index power p**JI before reducing mod p.  In closed form the
    slot (r, s, i) is ((part_r)_{v_r} + 1) / t when v_r - l_s equals the
    James index and i = t * p**l_s, and 0 otherwise.
    """
    validate_prime(p)
    if lam.n < 2:
        raise ValueError("canonical_multisequence requires at least two rows")
    ji = james_index(lam, p)  # also rejects non-James input
    values = []
    for slot in canonical_slot_order(lam):
        vr = row_val(lam, slot.r, p)
        ls = row_len(lam, slot.s, p)
        step = p**ls
        if vr - ls == ji and slot.i % step == 0:
            t = slot.i // step
            num = digit_p(lam.part(slot.r), vr, p) + 1
            values.append(num * pow(t % p, p - 2, p) % p)
        else:
            values.append(0)
    return MultiSequence(lam, p, tuple(values))


RowTag = tuple


@dataclass(frozen=True)
class RelationSystem:
    """Dense F_p matrix whose nullspace is the coherent multi-sequence space.

    Zero rows (relations that instantiate to 0 = 0) are dropped; row_tags
    keep the (family, indices) provenance of every kept row.
    """

    lam: Partition
    p: int
    num_slots: int
    rows: tuple[tuple[int, ...], ...]
    row_tags: tuple[RowTag, ...]


def _iter_relation_rows(lam: Partition, p: int) -> Iterator[tuple[RowTag, dict[int, int]]]:
    """Yield (tag, {slot position: coefficient}) rows, zero entries omitted.

    Family order is (E), (T1), (T2), (T3a), (T3b), (C), each instantiated
    in ascending lexicographic index order, so the emitted row order is
    deterministic.
    """
    n = lam.n
    part = lam.part
    positions = {slot: k for k, slot in enumerate(canonical_slot_order(lam))}
    pairs = [(r, s) for r in range(1, n + 1) for s in range(r + 1, n + 1)]
    triples = [
        (r, s, t)
        for r in range(1, n + 1)
        for s in range(r + 1, n + 1)
        for t in range(s + 1, n + 1)
    ]

    def row_entry(row: dict[int, int], slot: tuple[int, int, int], coef: int) -> None:
        coef %= p
        if not coef:
            return
        pos = positions[SlotIndex(*slot)]
        total = (row.get(pos, 0) + coef) % p
        if total:
            row[pos] = total
        else:
            row.pop(pos, None)

    # (E): C(a+i+j, j) y(r,s)_i - C(i+j, i) y(r,s)_{i+j} = 0 over ordered (i, j).
    for r, s in pairs:
        a, b = part(r), part(s)
        for i in range(1, b):
            for j in range(1, b - i + 1):
                row: dict[int, int] = {}
                row_entry(row, (r, s, i), binom_mod_p(a + i + j, j, p))
                row_entry(row, (r, s, i + j), -binom_mod_p(i + j, i, p))
                yield ("E", r, s, i, j), row

    for r, s, t in triples:
        a, b, c = part(r), part(s), part(t)

        # (T1): C(a+i+k, k) x_i - C(a+i+k, i) z_k = 0.
        for i in range(1, b + 1):
            for k in range(1, c + 1):
                row = {}
                row_entry(row, (r, s, i), binom_mod_p(a + i + k, k, p))
                row_entry(row, (r, t, k), -binom_mod_p(a + i + k, i, p))
                yield ("T1", r, s, t, i, k), row

        # (T2): C(a+k, k) y_j - C(b+j, j) z_k = 0 for j + k <= c.
        for j in range(1, c + 1):
            for k in range(1, c - j + 1):
                row = {}
                row_entry(row, (s, t, j), binom_mod_p(a + k, k, p))
                row_entry(row, (r, t, k), -binom_mod_p(b + j, j, p))
                yield ("T2", r, s, t, j, k), row

        # (T3a): C(a+i, i) y_j = sum_{h<i} C(b+j-i, j-h) C(a+i, h) x_{i-h}
        #        + C(b+j-i, j-i) z_i, for 1 <= i <= j <= c.
        for j in range(1, c + 1):
            for i in range(1, j + 1):
                row = {}
                row_entry(row, (s, t, j), binom_mod_p(a + i, i, p))
                for h in range(i):
                    coef = binom_mod_p(b + j - i, j - h, p) * binom_mod_p(a + i, h, p)
                    row_entry(row, (r, s, i - h), -coef)
                row_entry(row, (r, t, i), -binom_mod_p(b + j - i, j - i, p))
                yield ("T3a", r, s, t, i, j), row

        # (T3b): C(a+i, i) y_j = sum_{h<=j} C(b+j-i, j-h) C(a+i, h) x_{i-h},
        #        for 1 <= j <= c, j < i <= b + j; x_m vanishes outside [1, b].
        for j in range(1, c + 1):
            for i in range(j + 1, b + j + 1):
                row = {}
                row_entry(row, (s, t, j), binom_mod_p(a + i, i, p))
                for h in range(j + 1):
                    m = i - h
                    if not 1 <= m <= b:
                        continue
                    coef = binom_mod_p(b + j - i, j - h, p) * binom_mod_p(a + i, h, p)
                    row_entry(row, (r, s, m), -coef)
                yield ("T3b", r, s, t, j, i), row

    # (C): C(part_s + i, i) y(q,r)_j - C(part_q + j, j) y(s,t)_i = 0 for
    # disjoint pairs; both orders are emitted, the redundancy is harmless.
    for q, r in pairs:
        for s, t in pairs:
            if len({q, r, s, t}) != 4:
                continue
            for i in range(1, part(t) + 1):
                for j in range(1, part(r) + 1):
                    row = {}
                    row_entry(row, (q, r, j), binom_mod_p(part(s) + i, i, p))
                    row_entry(row, (s, t, i), -binom_mod_p(part(q) + j, j, p))
                    yield ("C", q, r, s, t, i, j), row


def build_relation_system(lam: Partition, p: int) -> RelationSystem:
    """Instantiate every relation family and drop the zero rows."""
    validate_prime(p)
    vdim = slot_count(lam)
    rows: list[tuple[int, ...]] = []
    tags: list[RowTag] = []
    for tag, sparse in _iter_relation_rows(lam, p):
        if not sparse:
            continue
        dense = [0] * vdim
        for pos, coef in sparse.items():
            dense[pos] = coef
        rows.append(tuple(dense))
        tags.append(tag)
    return RelationSystem(lam, p, vdim, tuple(rows), tuple(tags))


def nullspace(system: RelationSystem) -> list[MultiSequence]:
    """Basis of the solution space via deterministic row reduction.

    Pivoting is first-nonzero-column with smallest row index; basis
    vectors correspond to free columns in ascending order, so identical
    inputs always produce identical bases.
    """
    p = system.p
    vdim = system.num_slots
    if vdim == 0:
        return []
    if system.rows:
        mat = np.array(system.rows, dtype=np.int64) % p
    else:
        mat = np.zeros((0, vdim), dtype=np.int64)
    nrows = mat.shape[0]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(vdim):
        if rank == nrows:
            break
        hits = np.nonzero(mat[rank:, col])[0]
        if hits.size == 0:
            continue
        lead = rank + int(hits[0])
        if lead != rank:
            mat[[rank, lead]] = mat[[lead, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        mat[rank] = mat[rank] * inv % p
        colvals = mat[:, col].copy()
        colvals[rank] = 0
        nz = np.nonzero(colvals)[0]
        if nz.size:
            mat[nz] = (mat[nz] - np.outer(colvals[nz], mat[rank])) % p
        pivot_cols.append(col)
        rank += 1
    pivot_set = set(pivot_cols)
    basis = []
    for free in (c for c in range(vdim) if c not in pivot_set):
        vec = [0] * vdim
        vec[free] = 1
        for ridx, pcol in enumerate(pivot_cols):
            vec[pcol] = (-int(mat[ridx, free])) % p
        basis.append(MultiSequence(system.lam, p, tuple(vec)))
    return basis


def dim_E(lam: Partition, p: int) -> int:
    """Dimension of the space of coherent multi-sequences."""
    return len(nullspace(build_relation_system(lam, p)))


def ext1_dim_oracle(lam: Partition, p: int) -> int:
    """dim of the first extension group: dim_E, minus 1 when non-James."""
    dim = dim_E(lam, p)
    if is_james_partition(lam, p):
        return dim
    return dim - 1


def is_coherent(ms: MultiSequence, lam: Partition, p: int) -> bool:
    """True iff the multi-sequence satisfies every relation row."""
    validate_prime(p)
    if len(ms.values) != slot_count(lam):
        raise ValueError(
            f"multi-sequence has {len(ms.values)} values, expected {slot_count(lam)}"
        )
    values = ms.values
    for _tag, sparse in _iter_relation_rows(lam, p):
        if sum(coef * values[pos] for pos, coef in sparse.items()) % p:
            return False
    return True


def format_relation_system(system: RelationSystem) -> str:
    """Debug dump: one kept row per line, `tag: c*y(r,s)_i + ... = 0`."""
    slots = canonical_slot_order(system.lam)
    lines = []
    for tag, row in zip(system.row_tags, system.rows):
        family, *indices = tag
        label = f"{family}({','.join(str(k) for k in indices)})"
        terms = [
            f"{coef}*y({slots[pos].r},{slots[pos].s})_{slots[pos].i}"
            for pos, coef in enumerate(row)
            if coef
        ]
        lines.append(f"{label}: {' + '.join(terms)} = 0")
    return "\n".join(lines)
