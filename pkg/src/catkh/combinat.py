"""Indexing combinatorics: weight functions, box partitions, backdrops.

Conventions, fixed once for the whole package:

* A weight function ("kappa") for (l, k) is a weakly increasing tuple of
  length l with values in [0, k]; kappa(h) counts the black strands left
  of the h-th red strand.
* A box partition has k parts, smallest first, zeros included, each
  part <= l - k.
* A backdrop on a partition assigns each row j a label in
  [j + lambda_j, l]; rows sharing a label additionally carry a tie rank
  (their left-to-right order at the top, 0-based within the label group).
* Bottom placement of a partition: the black strand of row j sits
  immediately right of red number j + lambda_j.
"""

from itertools import permutations
from math import comb, factorial
from typing import NamedTuple


def enumerate_kappas(l, k):
    """All weakly increasing functions [1,l] -> [0,k]; count C(l+k, k)."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == l:
            out.append(tuple(prefix))
            return
        for v in range(lo, k + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], 0)
    assert len(out) == comb(l + k, k)
    return out


def kappa_shift_up(kappa, value, k):
    """Increase kappa at the last place where it equals `value`.

    Returns the shifted tuple, or None when no such place exists or the
    result would leave [0, k].
    """
    if value + 1 > k:
        return None
    pos = None
    for h, v in enumerate(kappa):
        if v == value:
            pos = h
    if pos is None:
        return None
    out = list(kappa)
    out[pos] = value + 1
    return tuple(out)


def kappa_shift_down(kappa, value):
    """Decrease kappa at the first place where it equals `value`."""
    if value - 1 < 0:
        return None
    pos = next((h for h, v in enumerate(kappa) if v == value), None)
    if pos is None:
        return None
    out = list(kappa)
    out[pos] = value - 1
    return tuple(out)


def kappa_shift(kappa, value, direction, k):
    """Spec surface: direction "+" shifts up at the last place with the
    given value, "-" shifts down at the first.  Raises on undefined shifts."""
    res = kappa_shift_up(kappa, value, k) if direction == "+" else \
        kappa_shift_down(kappa, value)
    if res is None:
        raise ValueError("undefined shift %s at value %d on %s" %
                         (direction, value, kappa))
    return res


def grading_offset(kappa):
    """Sum of the values; offset(kappa shifted up) = offset(kappa) + 1."""
    return sum(kappa)


def box_partitions(l, k):
    """Partitions with k parts, smallest first, inside a k x (l-k) box."""
    assert k >= 0
    if k > l:
        return []
    out = []

    def rec(prefix, lo):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for v in range(lo, l - k + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], 0)
    assert len(out) == comb(l, k)
    return out


class Backdrop(NamedTuple):
    """A labeled box partition: labels[j] >= j+1+partition[j] (0-based j);
    tie[j] is row j's rank among the rows sharing its label."""

    partition: tuple
    labels: tuple
    tie: tuple

    def rows_with_label(self, h):
        rows = [j for j, lab in enumerate(self.labels) if lab == h]
        rows.sort(key=lambda j: self.tie[j])
        return rows


def is_valid_backdrop(b, l, k):
    lam = b.partition
    if len(lam) != k or len(b.labels) != k or len(b.tie) != k:
        return False
    for j in range(k):
        if not (j + 1 + lam[j] <= b.labels[j] <= l):
            return False
    for h in set(b.labels):
        ranks = sorted(b.tie[j] for j in range(k) if b.labels[j] == h)
        if ranks != list(range(len(ranks))):
            return False
    return True


def backdrops_on(partition, l):
    """All backdrops on one partition, including tie-order variants."""
    k = len(partition)
    out = []

    def rec(j, labels):
        if j == k:
            groups = {}
            for jj, lab in enumerate(labels):
                groups.setdefault(lab, []).append(jj)
            tie_choices = [list(permutations(range(len(rows))))
                           for rows in groups.values()]

            def assign(gi, acc):
                if gi == len(tie_choices):
                    tie = [0] * k
                    for (lab, rows), perm in zip(groups.items(), acc):
                        for pos, row in zip(perm, rows):
                            tie[row] = pos
                    out.append(Backdrop(tuple(partition), tuple(labels), tuple(tie)))
                    return
                for perm in tie_choices[gi]:
                    assign(gi + 1, acc + [perm])

            assign(0, [])
            return
        for lab in range(j + 1 + partition[j], l + 1):
            rec(j + 1, labels + [lab])

    rec(0, [])
    return out


def enumerate_backdrops(l, k):
    """Map partition -> list of backdrops (tie variants included)."""
    return {lam: backdrops_on(lam, l) for lam in box_partitions(l, k)}


def kappa_of_backdrop(b, l):
    """Top weight function: kappa(p) = number of rows with label < p."""
    return tuple(sum(1 for lab in b.labels if lab < p) for p in range(1, l + 1))


def kappa_bottom(partition, l):
    """Weight function of the bottom placement (black j right of red j+lambda_j)."""
    k = len(partition)
    slots = [j + 1 + partition[j] for j in range(k)]
    return tuple(sum(1 for s in slots if s < h) for h in range(1, l + 1))


def partition_of_kappa(kappa, l, k):
    """Inverse of kappa_bottom on its image; None for non-admissible kappa.

    The image consists exactly of the kappa with kappa(1) = 0, steps at
    most 1, and final step k - kappa(l) at most 1 per missing... more
    precisely the bottom slots are recovered as the positions where the
    extended function (kappa, k) jumps.
    """
    ext = tuple(kappa) + (k,)
    if any(ext[h + 1] - ext[h] not in (0, 1) for h in range(l)) or \
            (l > 0 and kappa[0] != 0):
        return None
    slots = [h + 1 for h in range(l) if ext[h + 1] - ext[h] == 1]
    if len(slots) != k:
        return None
    lam = tuple(s - (j + 1) for j, s in enumerate(slots))
    if any(p < 0 or p > l - k for p in lam) or list(lam) != sorted(lam):
        return None
    return lam


def sign_sequence(partition, l, k):
    """Boundary word of the partition: '+' exactly at positions j+lambda_j."""
    plus = {j + 1 + partition[j] for j in range(k)}
    assert len(plus) == k
    return "".join("+" if p in plus else "-" for p in range(1, l + 1))


def partition_of_sign_sequence(seq, l, k):
    assert len(seq) == l and seq.count("+") == k
    slots = [p + 1 for p, c in enumerate(seq) if c == "+"]
    return tuple(s - (j + 1) for j, s in enumerate(slots))


def backdrop_count(l, k):
    """Total dimension oracle: sum over partitions of (#backdrops)^2."""
    return sum(len(bs) ** 2 for bs in enumerate_backdrops(l, k).values())


def minimal_backdrop(partition, l):
    """Labels all minimal-legal (label_j = j+1+lambda_j); no ties arise."""
    k = len(partition)
    labels = tuple(j + 1 + partition[j] for j in range(k))
    assert len(set(labels)) == k
    return Backdrop(tuple(partition), labels, (0,) * k)


def nilhecke_dim(l, k):
    """(k!)^2 * C(l, k), the corner-subalgebra dimension."""
    return factorial(k) ** 2 * comb(l, k)
