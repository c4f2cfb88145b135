# encoding: utf-8
"""Free homotopy classes of loops on a sphere with `k` marked points

The fundamental group of the sphere minus `k` points (based at a point off
all cut arcs) is free on the puncture loops `a_1, ..., a_{k-1}`; the last
loop is implicit, ``a_k = (a_1 ... a_{k-1})^-1``. Free homotopy classes of
loops correspond to conjugacy classes, i.e. to cyclically reduced words up
to cyclic rotation.

Letters are nonzero integers: `i` stands for `a_i` and `-i` for its
inverse.

"""

from __future__ import division, print_function

__all__ = ['HomotopyWord', 'free_reduce', 'cyclic_reduce', 'is_admissible']


def free_reduce(letters):
    """Cancel adjacent inverse pairs

    >>> free_reduce([1, 2, -2, -1, 3])
    [3]
    """
    out = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return out


def cyclic_reduce(letters):
    """Freely reduce and cancel inverse pairs at the two ends

    >>> cyclic_reduce([-1, 2, 3, 1])
    [2, 3]
    """
    out = free_reduce(letters)
    start, stop = 0, len(out)
    while stop - start > 1 and out[start] == -out[stop - 1]:
        start += 1
        stop -= 1
    return out[start:stop]


def _substitute_last(letters, k):
    out = []
    for letter in letters:
        if abs(letter) > k or letter == 0:
            raise ValueError('{!r} is not a letter for k = {}'
                             .format(letter, k))
        if letter == k:
            out.extend(-i for i in range(k - 1, 0, -1))
        elif letter == -k:
            out.extend(range(1, k))
        else:
            out.append(letter)
    return out


class HomotopyWord(object):
    """Cyclically reduced word in `a_1, ..., a_{k-1}` representing a free
    homotopy class on the `k`-marked sphere

    .. automethod:: __init__

    """

    def __init__(self, letters, k):
        """
        :param letters: Sequence of letters in `+-1, ..., +-k`; occurrences
            of `a_k` are replaced by ``(a_1 ... a_{k-1})^-1``
        :param k: Number of marked points

        """
        if k < 1:
            raise ValueError('{!r} is not a valid number of marked points'
                             .format(k))
        self.k = int(k)
        self.letters = tuple(cyclic_reduce(_substitute_last(letters, k)))

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return 'HomotopyWord({}, k={})'.format(list(self.letters), self.k)

    def __str__(self):
        if not self.letters:
            return '1'
        return ' '.join('a{}'.format(l) if l > 0 else 'a{}^-1'.format(-l)
                        for l in self.letters)

    def canonical(self):
        """Lexicographically smallest cyclic rotation"""
        n = len(self.letters)
        if n == 0:
            return ()
        return min(self.letters[i:] + self.letters[:i] for i in range(n))

    def __eq__(self, other):
        return isinstance(other, HomotopyWord) and self.k == other.k \
            and self.canonical() == other.canonical()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.k, self.canonical()))

    def inverse(self):
        return HomotopyWord([-l for l in reversed(self.letters)], self.k)

    @property
    def is_trivial(self):
        return not self.letters

    def to_list(self):
        return list(self.letters)


def _is_rotation_of_power(letters, period):
    n, m = len(letters), len(period)
    if n == 0 or n % m:
        return False
    target = tuple(period) * (n // m)
    return any(letters[i:] + letters[:i] == target for i in range(m))


def is_admissible(w):
    """Whether the class of `w` may realise the marked homotopy systole

    False iff the word is trivial or a power of a single puncture loop,
    including the implicit `a_k`.

    :param w: :class:`HomotopyWord`

    """
    letters = w.letters
    if not letters:
        return False
    if len(set(letters)) == 1:
        return False
    k = w.k
    if k >= 2:
        around_last = tuple(range(1, k))
        if _is_rotation_of_power(letters, around_last) \
                or _is_rotation_of_power(
                    letters, tuple(-i for i in reversed(around_last))):
            return False
    return True
