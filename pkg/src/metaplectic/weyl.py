"""Symmetric-group bookkeeping: words, permutations, Bruhat order, inversions.

Permutations are tuples of 1-based images in one-line notation.  A word
(i1, ..., il) evaluates to the composite s_{i1} o ... o s_{il} acting on
variable indices, so s_i swaps x_i and x_{i+1}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import comb
from typing import FrozenSet, List, Optional, Sequence, Tuple

Permutation = Tuple[int, ...]
Word = Tuple[int, ...]
Root = Tuple[int, int]


def identity(r: int) -> Permutation:
    return tuple(range(1, r + 2))


def favourite_long_word(r: int) -> Word:
    if r < 1:
        raise ValueError("rank must be at least 1")
    word: List[int] = []
    for top in range(1, r + 1):
        word.extend(range(top, 0, -1))
    return tuple(word)


def beginning_section(r: int, l: int) -> Word:
    total = comb(r + 1, 2)
    if not 0 <= l <= total:
        raise ValueError(f"length {l} out of range 0..{total}")
    return favourite_long_word(r)[:l]


def section_k(r: int, l: int) -> Optional[int]:
    """k in w = w0^{(r-1)} s_r ... s_{r-k}, or None when the section sits inside w0^{(r-1)}."""
    beginning_section(r, l)
    k = l - comb(r, 2) - 1
    return k if k >= 0 else None


def evaluate_word(word: Sequence[int], r: int) -> Permutation:
    img = list(identity(r))
    for s in word:
        if not 1 <= s <= r:
            raise ValueError(f"letter {s} out of range for rank {r}")
        img[s - 1], img[s] = img[s], img[s - 1]
    return tuple(img)


def compose(u: Permutation, w: Permutation) -> Permutation:
    """u o w."""
    return tuple(u[a - 1] for a in w)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for a, img in enumerate(w, start=1):
        inv[img - 1] = a
    return tuple(inv)


def inversion_set_phi(w: Permutation) -> FrozenSet[Root]:
    """Positive roots e_i - e_j (as (i, j)) sent to negative roots by w."""
    m = len(w)
    return frozenset((i + 1, j + 1) for i in range(m) for j in range(i + 1, m) if w[i] > w[j])


def length(w: Permutation) -> int:
    m = len(w)
    return sum(1 for i in range(m) for j in range(i + 1, m) if w[i] > w[j])


def sign(w: Permutation) -> int:
    return -1 if length(w) % 2 else 1


def left_descents(w: Permutation) -> List[int]:
    pos = inverse(w)
    return [i for i in range(1, len(w)) if pos[i - 1] > pos[i]]


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> Word:
    """Greedy reduced word: strip the smallest left descent repeatedly."""
    letters: List[int] = []
    cur = list(w)
    while True:
        pos = inverse(tuple(cur))
        d = next((i for i in range(1, len(cur)) if pos[i - 1] > pos[i]), None)
        if d is None:
            return tuple(letters)
        letters.append(d)
        # s_d o cur: swap the values d and d+1
        cur = [d + 1 if x == d else d if x == d + 1 else x for x in cur]


def all_permutations(r: int) -> List[Permutation]:
    return [tuple(p) for p in permutations(range(1, r + 2))]


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    if len(u) != len(w):
        raise ValueError("permutations of different sizes")
    m = len(u)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            cu = sum(1 for a in range(i) if u[a] >= j)
            cw = sum(1 for a in range(i) if w[a] >= j)
            if cu > cw:
                return False
    return True


def lower_interval(w: Permutation) -> List[Permutation]:
    r = len(w) - 1
    return sorted(u for u in all_permutations(r) if bruhat_leq(u, w))


def long_element(r: int) -> Permutation:
    return tuple(range(r + 1, 0, -1))


def render_word(word: Sequence[int]) -> str:
    return ",".join(str(s) for s in word)


def render_permutation(w: Permutation) -> str:
    return "".join(str(x) for x in w) if len(w) < 10 else " ".join(map(str, w))
