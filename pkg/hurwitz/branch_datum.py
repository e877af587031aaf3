'''Branch data and the arithmetic of the Riemann-Hurwitz formula.

A branch datum describes a would-be branched cover ``M -> S^2``: the genus of
the closed orientable surface ``M``, the degree ``d`` of the cover and one
partition of ``d`` per branch point. Everything in here is exact integer
arithmetic.

'''
import collections.abc
import functools

from hurwitz import exc
from hurwitz.partitions import (
    Partition,
    is_branching_partition,
    partition_length,
    simple_partition,
)


def euler_characteristic(genus):
    '''Return the Euler characteristic ``2 - 2g`` of a closed surface.'''
    return 2 - 2 * genus


# PiMultiple ##################################################################

@functools.total_ordering
class PiMultiple:
    '''An exact integer multiple of pi.

    Args:
        coeff: The integer coefficient ``c`` of the value ``c * pi``.

    Complexities are always integer multiples of pi, so they are stored as
    the coefficient and compared exactly. :class:`PiMultiple` objects are
    immutable, hashable and ordered.

    '''
    __slots__ = ('_coeff',)

    def __init__(self, coeff):
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            msg = 'coeff must be an integer, got {!r}'
            raise exc.InvalidInputError(msg.format(coeff))
        self._coeff = coeff

    @property
    def coeff(self):
        '''The integer coefficient of pi.'''
        return self._coeff

    def __eq__(self, other):
        if not isinstance(other, PiMultiple):
            return NotImplemented
        return self._coeff == other._coeff

    def __lt__(self, other):
        if not isinstance(other, PiMultiple):
            return NotImplemented
        return self._coeff < other._coeff

    def __hash__(self):
        return hash((PiMultiple, self._coeff))

    def __add__(self, other):
        if not isinstance(other, PiMultiple):
            return NotImplemented
        return PiMultiple(self._coeff + other._coeff)

    def __repr__(self):
        return 'PiMultiple({})'.format(self._coeff)

    def __str__(self):
        return '{}π'.format(self._coeff)


# BranchDatum #################################################################

class BranchDatum:
    '''A branch datum ``(M, n, d, Pi)`` with ``M`` encoded by its genus.

    Args:
        genus: The genus of the closed orientable surface ``M``.

        degree: The degree ``d`` of the cover, at least one.

        partitions: An iterable of ``n`` partitions of ``degree``. Plain
            sequences are converted into :class:`hurwitz.partitions.Partition`
            objects and have to be in canonical (weakly decreasing) form.

        validate: Whether to reject partitions with all parts equal to one.
            Such partitions don't describe a branch point, so they are
            refused unless ``validate=False`` is given explicitly (which is
            only useful to probe degenerate input).

    Raises:
        InvalidDatumError: If any of the structural invariants is violated.

    The number of branch points ``n`` may be anything from zero upwards;
    complexity computations additionally require ``n >= 3``.

    '''
    __slots__ = ('_genus', '_degree', '_partitions')

    def __init__(self, genus, degree, partitions, *, validate=True):
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
            msg = 'genus must be a non-negative integer, got {!r}'
            raise exc.InvalidDatumError(msg.format(genus))
        if (not isinstance(degree, int) or isinstance(degree, bool) or
                degree < 1):
            msg = 'degree must be a positive integer, got {!r}'
            raise exc.InvalidDatumError(msg.format(degree))

        converted = []
        for p in partitions:
            try:
                p = Partition(p, target=degree)
            except exc.InvalidPartitionError as e:
                raise exc.InvalidDatumError(str(e)) from e
            if validate and not is_branching_partition(p):
                msg = 'Partition {} does not branch (all parts are 1)'
                raise exc.InvalidDatumError(msg.format(p))
            converted.append(p)

        self._genus = genus
        self._degree = degree
        self._partitions = tuple(converted)

    @classmethod
    def from_mapping(cls, obj):
        '''Create a :class:`BranchDatum` from its JSON object form.

        Args:
            obj: A mapping of the form ``{"genus": G, "degree": D,
                "partitions": [[...], ...]}``.

        Raises:
            InvalidDatumError: If ``obj`` is not of the documented form or
                describes an invalid datum.

        '''
        if not isinstance(obj, collections.abc.Mapping):
            raise exc.InvalidDatumError('A branch datum must be a mapping.')
        missing = {'genus', 'degree', 'partitions'} - set(obj)
        if missing:
            msg = 'Branch datum lacks key(s): {}'
            raise exc.InvalidDatumError(msg.format(sorted(missing)))
        partitions = obj['partitions']
        if (not isinstance(partitions, list) or
                not all(isinstance(p, list) for p in partitions)):
            msg = 'partitions must be a list of lists of integers.'
            raise exc.InvalidDatumError(msg)
        return cls(obj['genus'], obj['degree'], partitions)

    @property
    def genus(self):
        '''The genus of the source surface.'''
        return self._genus

    @property
    def degree(self):
        '''The degree of the cover.'''
        return self._degree

    @property
    def partitions(self):
        '''The tuple of partitions, one per branch point.'''
        return self._partitions

    @property
    def n(self):
        '''The number of branch points.'''
        return len(self._partitions)

    def canonical(self):
        '''Return an equal datum with partitions sorted decreasingly.

        Compatibility and realizability don't depend on the order of the
        partitions, so this is the representative used in reports.

        '''
        ordered = sorted(self._partitions, reverse=True)
        return BranchDatum(self._genus, self._degree, ordered, validate=False)

    def __eq__(self, other):
        if not isinstance(other, BranchDatum):
            return NotImplemented
        return ((self._genus, self._degree, self._partitions) ==
                (other._genus, other._degree, other._partitions))

    def __hash__(self):
        return hash((self._genus, self._degree, self._partitions))

    def __repr__(self):
        return 'BranchDatum(genus={}, degree={}, partitions={})'.format(
            self._genus, self._degree,
            [tuple(p) for p in self._partitions])

    def __str__(self):
        return 'g={} d={} [{}]'.format(
            self._genus, self._degree,
            ' '.join(str(p) for p in self._partitions))


# Operations ##################################################################

def total_length(datum):
    '''Return ``m``, the sum of the lengths of the datum's partitions.'''
    return sum(partition_length(p) for p in datum.partitions)


def ramification_of(datum):
    '''Return the total ramification ``sum(d - m_i)`` a cover would have.'''
    return sum(datum.degree - len(p) for p in datum.partitions)


def is_compatible(datum):
    '''Return True if the datum satisfies the Riemann-Hurwitz formula.

    That is ``chi(M) - m == d * (chi(S^2) - n)`` with ``chi(M) = 2 - 2g``,
    ``chi(S^2) = 2`` and ``m`` the total length of the datum.

    '''
    return (euler_characteristic(datum.genus) - total_length(datum) ==
            datum.degree * (2 - datum.n))


def is_simple_datum(datum):
    '''Return True if every partition has at least ``d - 1`` parts.

    For branching partitions of ``d >= 2`` this means every partition is
    ``(2, 1, ..., 1)``.

    '''
    return all(len(p) >= datum.degree - 1 for p in datum.partitions)


def implied_genus(degree, partitions):
    '''Return the genus a cover with the given ramification profile must have.

    Args:
        degree: The degree ``d`` of the cover.

        partitions: An iterable of partitions of ``degree``.

    Returns:
        The genus ``g`` solving ``2 - 2g = 2d - sum(d - m_i)``.

    Raises:
        InvalidInputError: If a partition does not sum to ``degree``.

        NoValidGenusError: If the solution is fractional or negative.

    '''
    ramification = 0
    for p in partitions:
        if sum(p) != degree:
            msg = 'Partition {!r} does not sum to {}'
            raise exc.InvalidInputError(msg.format(tuple(p), degree))
        ramification += degree - len(p)

    twice_genus = 2 - 2 * degree + ramification
    if twice_genus < 0 or twice_genus % 2:
        msg = 'Partitions imply genus {}/2, which is no valid genus.'
        raise exc.NoValidGenusError(msg.format(twice_genus))
    return twice_genus // 2


def simple_datum(genus, degree):
    '''Return the simple datum of the given genus and degree.

    By the Riemann-Hurwitz formula a simple cover of degree ``d`` by a surface
    of genus ``g`` has ``n = 2(d + g - 1)`` branch points, each with partition
    ``(2, 1, ..., 1)``.

    '''
    n = 2 * (degree + genus - 1)
    return BranchDatum(genus, degree, [simple_partition(degree)] * n)


def hyperelliptic_datum(genus):
    '''Return the datum of the double cover branched over ``2g + 2`` points.'''
    return simple_datum(genus, 2)
