'''Integer partitions and the helpers the realizability search needs.

A :class:`Partition` is stored in canonical form: a tuple of weakly
decreasing positive integers. Because every function in :mod:`hurwitz`
requires (and returns) canonical partitions, equality of partitions is plain
tuple equality.

'''
import math
from collections import Counter

from hurwitz import exc


# Helper functions ############################################################

def _is_int(obj):
    '''Return True if obj is an int but not a bool.'''
    return isinstance(obj, int) and not isinstance(obj, bool)


def _ensure_positive_int(obj, name):
    '''Raise InvalidInputError if obj is not an integer >= 1.'''
    if not _is_int(obj) or obj < 1:
        msg = '{} must be a positive integer, got {!r}'
        raise exc.InvalidInputError(msg.format(name, obj))


def _ensure_non_negative_int(obj, name):
    '''Raise InvalidInputError if obj is not an integer >= 0.'''
    if not _is_int(obj) or obj < 0:
        msg = '{} must be a non-negative integer, got {!r}'
        raise exc.InvalidInputError(msg.format(name, obj))


def _descending_parts(remaining, largest):
    '''Yield tuples of weakly decreasing parts <= largest summing to remaining.

    Larger first parts come first, which makes the overall order
    reverse-lexicographic.

    '''
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, largest), 0, -1):
        for rest in _descending_parts(remaining - first, first):
            yield (first,) + rest


# Partition ###################################################################

class Partition(tuple):
    '''A partition of a positive integer in canonical form.

    Args:
        parts: An iterable of positive integers in weakly decreasing order.

        target: The optional integer the parts have to sum to. If omitted,
            the target is the sum of the parts.

    Raises:
        InvalidPartitionError: If a part is no positive integer, if the parts
            are not weakly decreasing, if there are no parts at all or if the
            parts don't sum to ``target``.

    :class:`Partition` subclasses :class:`tuple`, so ``Partition([2, 1]) ==
    (2, 1)`` holds and partitions can be used as dict keys.

    '''
    __slots__ = ()

    def __new__(cls, parts, target=None):
        parts = tuple(parts)
        if not parts:
            raise exc.InvalidPartitionError('A partition needs at least one '
                                            'part.')
        for part in parts:
            if not _is_int(part) or part < 1:
                msg = 'Parts must be positive integers: {!r}'
                raise exc.InvalidPartitionError(msg.format(parts))
        if any(a < b for a, b in zip(parts, parts[1:])):
            msg = 'Parts must be weakly decreasing: {!r}'
            raise exc.InvalidPartitionError(msg.format(parts))
        if target is not None and sum(parts) != target:
            msg = 'Parts {!r} do not sum to {}'
            raise exc.InvalidPartitionError(msg.format(parts, target))
        return super().__new__(cls, parts)

    @property
    def target(self):
        '''The integer this partition partitions.'''
        return sum(self)

    def __repr__(self):
        return 'Partition({!r})'.format(tuple(self))

    def __str__(self):
        return '({})'.format(','.join(str(part) for part in self))


def canonical_partition(parts):
    '''Return the canonical :class:`Partition` of arbitrary positive parts.

    Args:
        parts: An iterable of positive integers in any order.

    Returns:
        A :class:`Partition` containing ``parts`` sorted in decreasing order.

    '''
    return Partition(sorted(parts, reverse=True))


def simple_partition(d):
    '''Return ``(2, 1, ..., 1)``, the branching partition of a simple cover.'''
    if not _is_int(d) or d < 2:
        msg = 'simple partitions need a degree >= 2, got {!r}'
        raise exc.InvalidInputError(msg.format(d))
    return Partition((2,) + (1,) * (d - 2))


# Operations ##################################################################

def iter_partitions(d):
    '''Yield all partitions of ``d`` in reverse-lexicographic order.

    Args:
        d: A positive integer.

    Raises:
        InvalidInputError: If ``d`` is no positive integer.

    '''
    _ensure_positive_int(d, 'd')
    for parts in _descending_parts(d, d):
        yield Partition(parts)


def enumerate_partitions(d):
    '''Return the list of all partitions of ``d``.

    Args:
        d: A positive integer.

    Returns:
        Every partition of ``d`` exactly once, in canonical form and in
        reverse-lexicographic order (``(3), (2,1), (1,1,1)`` for ``d = 3``).

    Raises:
        InvalidInputError: If ``d`` is no positive integer.

    '''
    return list(iter_partitions(d))


def partition_length(p):
    '''Return the number of parts of ``p``.'''
    return len(p)


def is_branching_partition(p):
    '''Return True if some part of ``p`` is at least two.

    A fiber whose partition is all ones carries no ramification, so its base
    point is no branch point.

    '''
    return p[0] >= 2


def class_size(p):
    '''Return the size of the conjugacy class of cycle type ``p``.

    This is ``d! / prod(k**a_k * a_k!)`` where ``a_k`` counts the parts of
    ``p`` equal to ``k``.

    '''
    denominator = 1
    for k, a_k in Counter(p).items():
        denominator *= k ** a_k * math.factorial(a_k)
    return math.factorial(sum(p)) // denominator


def iter_partition_multisets(d, n, m):
    '''Yield all multisets of ``n`` branching partitions of ``d`` of length m.

    Args:
        d: The degree, a positive integer.

        n: The number of partitions per multiset.

        m: The required total length (sum of partition lengths).

    Yields:
        Tuples of ``n`` :class:`Partition` objects. Each tuple is ordered like
        :func:`enumerate_partitions` orders partitions (so ``(3)`` comes
        before ``(2,1)``), and no multiset is yielded twice.

    Raises:
        InvalidInputError: If one of the arguments is out of range.

    '''
    _ensure_positive_int(d, 'd')
    _ensure_non_negative_int(n, 'n')
    _ensure_non_negative_int(m, 'm')

    candidates = [p for p in iter_partitions(d) if is_branching_partition(p)]
    longest = d - 1

    def extend(start, slots, length_left):
        if slots == 0:
            if length_left == 0:
                yield ()
            return
        for index in range(start, len(candidates)):
            p = candidates[index]
            rest = length_left - len(p)
            # every remaining slot takes between 1 and d-1 parts
            if rest < slots - 1 or rest > (slots - 1) * longest:
                continue
            for tail in extend(index, slots - 1, rest):
                yield (p,) + tail

    return extend(0, n, m)
