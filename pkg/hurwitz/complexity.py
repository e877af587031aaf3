'''Exact complexities of branched covers and of closed surfaces.

The complexity of a branched cover ``M -> S^2`` of degree ``d`` with ``n >= 3``
branch points is ``d`` times the hyperbolic area of the sphere minus the
branch points, that is ``2 pi d (n - 2)``. The (simple) complexity of a
surface of genus ``g >= 1`` is the minimum over all (simple) branched covers
of the surface. All values are :class:`hurwitz.branch_datum.PiMultiple`
objects, so nothing is ever rounded.

For a compatible datum of total length ``m`` the Riemann-Hurwitz formula
gives ``m + 2g - 2 = d (n - 2)``. Searching ``k = d (n - 2)`` in increasing
order therefore finds the minimal total length ``m_min`` and the complexity
``2 pi (m_min + 2g - 2)`` at the same time.

'''
import itertools
import logging

from hurwitz import exc
from hurwitz.branch_datum import (
    BranchDatum,
    PiMultiple,
    hyperelliptic_datum,
    is_compatible,
    simple_datum,
    total_length,
)
from hurwitz.partitions import iter_partition_multisets
from hurwitz.realizability import (
    DEFAULT_BUDGET,
    PermutationTuple,
    Status,
    find_monodromy,
)

logger = logging.getLogger(__name__)

DEFAULT_D_CAP = 6
'''Default largest degree tried by :func:`simple_complexity_search`.'''


# Helper functions ############################################################

def _ensure_genus(g):
    '''Raise unless g is an integer >= 1.'''
    if not isinstance(g, int) or isinstance(g, bool):
        msg = 'genus must be an integer, got {!r}'
        raise exc.InvalidInputError(msg.format(g))
    if g < 1:
        msg = 'Complexities are only computed for genus >= 1, got {}'
        raise exc.OutOfTheoremRangeError(msg.format(g))


def _ensure_hyperbolic(n):
    '''Raise NonHyperbolicError if n < 3.'''
    if n < 3:
        msg = 'The sphere minus {} points is not hyperbolic (need n >= 3).'
        raise exc.NonHyperbolicError(msg.format(n))


# Reports #####################################################################

class TraceEntry:
    '''What a complexity search did for one value of ``k = d (n - 2)``.

    Args:
        k: The value of ``d (n - 2)`` examined.

        data_count: The number of branch data probed for this ``k``.

        realizable_found: Whether one of them turned out realizable.

        unknown_count: The number of probes that ran out of budget.

    '''
    __slots__ = ('k', 'data_count', 'realizable_found', 'unknown_count')

    def __init__(self, k, data_count=0, realizable_found=False,
                 unknown_count=0):
        self.k = k
        self.data_count = data_count
        self.realizable_found = realizable_found
        self.unknown_count = unknown_count

    def record(self, result):
        '''Account for one :class:`RealizabilityResult`.'''
        self.data_count += 1
        if result.status is Status.REALIZABLE:
            self.realizable_found = True
        elif result.status is Status.UNKNOWN:
            self.unknown_count += 1

    def __repr__(self):
        return 'TraceEntry(k={}, data_count={}, realizable_found={})'.format(
            self.k, self.data_count, self.realizable_found)


class ComplexityReport:
    '''The result of a complexity computation.

    Attributes:
        value: The complexity as a :class:`PiMultiple`.

        achieved_by: The :class:`BranchDatum` of a cover with that complexity.

        witness: A :class:`PermutationTuple` realizing ``achieved_by``.

        search_trace: A list of :class:`TraceEntry` objects.

        genus: The genus of the surface.

        kind: ``'simple'`` or ``'general'``.

        minimal: False if some probe below the reported value ran out of
            budget. The value is then only an upper bound.

    '''

    def __init__(self, *, value, achieved_by, witness, search_trace, genus,
                 kind, minimal=True):
        self.value = value
        self.achieved_by = achieved_by
        self.witness = witness
        self.search_trace = search_trace
        self.genus = genus
        self.kind = kind
        self.minimal = minimal

    @property
    def d_min(self):
        '''The degree of the achieving cover.'''
        return self.achieved_by.degree

    @property
    def m_min(self):
        '''The total length of the achieving datum.'''
        return total_length(self.achieved_by)

    def __repr__(self):
        return 'ComplexityReport(genus={}, kind={}, value={!r})'.format(
            self.genus, self.kind, self.value)


# Formulas ####################################################################

def hyperbolic_area_coeff(n):
    '''Return the hyperbolic area ``2 pi (n - 2)`` of S^2 minus n points.

    Raises:
        NonHyperbolicError: If ``n < 3``.

    '''
    _ensure_hyperbolic(n)
    return PiMultiple(2 * (n - 2))


def cover_complexity(d, n):
    '''Return the complexity ``2 pi d (n - 2)`` of a ``(d, n)`` cover.

    This is only a formula: for ``d = 1`` there is no such cover.

    Raises:
        InvalidInputError: If ``d`` is no positive integer.

        NonHyperbolicError: If ``n < 3``.

    '''
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        msg = 'd must be a positive integer, got {!r}'
        raise exc.InvalidInputError(msg.format(d))
    _ensure_hyperbolic(n)
    return PiMultiple(2 * d * (n - 2))


def datum_complexity(datum):
    '''Return the complexity of a cover with branch datum ``datum``.'''
    return cover_complexity(datum.degree, datum.n)


def total_length_for(g, d, n):
    '''Return the total length ``2 - 2g + d (n - 2)`` forced by compatibility.
    '''
    return 2 - 2 * g + d * (n - 2)


def complexity_from_total_length(m, g):
    '''Return ``2 pi (m + 2g - 2)``, the complexity of a cover of total
    length ``m`` by a surface of genus ``g``.'''
    return PiMultiple(2 * (m + 2 * g - 2))


def simple_cover_complexity(d, g):
    '''Return ``f(d) = 4 pi d (d + g - 2)``.

    This is the complexity of a simple cover of degree ``d`` by a surface of
    genus ``g``, which has ``n = 2(d + g - 1)`` branch points. ``f`` is
    strictly increasing in ``d`` for ``d >= 1``.

    '''
    return PiMultiple(4 * d * (d + g - 2))


def simple_complexity_formula(g):
    '''Return the simple complexity ``8 pi g`` of a surface of genus ``g``.

    Raises:
        OutOfTheoremRangeError: If ``g < 1``.

    '''
    _ensure_genus(g)
    return PiMultiple(8 * g)


# Searches ####################################################################

def hyperelliptic_witness(g):
    '''Return the double cover of S^2 branched over ``2g + 2`` points.

    Returns:
        A pair ``(datum, witness)``: the datum has degree two and ``2g + 2``
        partitions ``(2)``; every permutation of the witness is the
        transposition of the two sheets.

    '''
    _ensure_genus(g)
    datum = hyperelliptic_datum(g)
    witness = PermutationTuple(2, [(1, 0)] * datum.n)
    return datum, witness


def simple_complexity_search(g, *, d_cap=DEFAULT_D_CAP,
                             budget=DEFAULT_BUDGET, workers=1):
    '''Compute the simple complexity of a genus ``g`` surface by search.

    The simple data of degree ``2, 3, ..., d_cap`` are probed in turn; as
    ``f(d)`` increases with ``d``, the first realizable one is minimal.
    Degree one is skipped since a cover of degree one has no branch points.

    Args:
        g: The genus, at least one.

        d_cap: The largest degree to try, at least two.

        budget: The node budget of every single probe.

        workers: The number of worker processes per probe.

    Returns:
        A :class:`ComplexityReport` of kind ``'simple'``.

    Raises:
        OutOfTheoremRangeError: If ``g < 1``.

        SearchExhaustedError: If no degree up to ``d_cap`` was realizable.

    '''
    _ensure_genus(g)
    if not isinstance(d_cap, int) or isinstance(d_cap, bool) or d_cap < 2:
        msg = 'd_cap must be an integer >= 2, got {!r}'
        raise exc.InvalidInputError(msg.format(d_cap))

    trace = []
    unknown_below = False
    for d in range(2, d_cap + 1):
        datum = simple_datum(g, d)
        value = simple_cover_complexity(d, g)
        entry = TraceEntry(value.coeff // 2)
        trace.append(entry)

        result = find_monodromy(datum, budget=budget, workers=workers)
        entry.record(result)
        logger.info('genus %d, simple degree %d: %s', g, d,
                    result.status.value)

        if result.is_realizable:
            return ComplexityReport(value=value, achieved_by=datum,
                                    witness=result.witness,
                                    search_trace=trace, genus=g,
                                    kind='simple',
                                    minimal=not unknown_below)
        unknown_below = unknown_below or result.is_unknown

    msg = 'No simple cover of degree <= {} found for genus {}'
    raise exc.SearchExhaustedError(msg.format(d_cap, g))


def iter_data_for_k(g, k):
    '''Yield all compatible branch data of genus ``g`` with ``d (n-2) = k``.

    Data with ``d = 1`` are left out (no cover of degree one branches), as
    are pairs ``(d, n)`` where the forced total length ``m`` would be smaller
    than ``n``. Degrees are visited in increasing order, partitions in
    canonical order.

    '''
    for d in range(2, k + 1):
        if k % d:
            continue
        n = k // d + 2
        m = total_length_for(g, d, n)
        if m < n:
            continue
        for partitions in iter_partition_multisets(d, n, m):
            yield BranchDatum(g, d, partitions)


def m_min_search(g, *, budget=DEFAULT_BUDGET, workers=1):
    '''Find the minimal total length of a branch datum realizable in genus g.

    ``k = d (n - 2)`` is increased from one; for each ``k`` all compatible
    data are probed with :func:`hurwitz.realizability.find_monodromy` until
    one is realizable. The hyperelliptic datum realizes ``k = 4g``, so the
    search never goes beyond that.

    Args:
        g: The genus, at least one.

        budget: The node budget of every single probe.

        workers: The number of worker processes per probe.

    Returns:
        A :class:`ComplexityReport` of kind ``'general'`` with value
        ``2 pi (m_min + 2g - 2)``. If a probe for a smaller ``k`` ran out of
        budget, the report's :attr:`minimal` flag is False.

    Raises:
        OutOfTheoremRangeError: If ``g < 1``.

    '''
    _ensure_genus(g)
    trace = []
    unknown_below = False

    for k in itertools.count(1):
        if k > 4 * g:
            break
        entry = TraceEntry(k)
        trace.append(entry)
        for datum in iter_data_for_k(g, k):
            assert is_compatible(datum)
            result = find_monodromy(datum, budget=budget, workers=workers)
            entry.record(result)
            if result.is_realizable:
                m = total_length(datum)
                logger.info('genus %d: realizable at k=%d by %s (m=%d)',
                            g, k, datum, m)
                if unknown_below:
                    logger.warning('genus %d: some data below k=%d are '
                                   'undecided, %s is an upper bound only',
                                   g, k, datum)
                return ComplexityReport(
                    value=complexity_from_total_length(m, g),
                    achieved_by=datum, witness=result.witness,
                    search_trace=trace, genus=g, kind='general',
                    minimal=not unknown_below)
        logger.info('genus %d: k=%d refuted (%d data, %d undecided)',
                    g, k, entry.data_count, entry.unknown_count)
        unknown_below = unknown_below or entry.unknown_count > 0

    # only reachable if even the hyperelliptic probe ran out of budget
    datum, witness = hyperelliptic_witness(g)
    logger.warning('genus %d: falling back to the hyperelliptic cover', g)
    return ComplexityReport(value=datum_complexity(datum), achieved_by=datum,
                            witness=witness, search_trace=trace, genus=g,
                            kind='general', minimal=False)


def surface_complexity(g, *, budget=DEFAULT_BUDGET, workers=1):
    '''Return the complexity of a closed orientable surface of genus ``g``.

    Complexities of covers are integer multiples of pi, so the infimum over
    all covers is attained and equals ``2 pi (m_min + 2g - 2)``. This is a
    thin wrapper around :func:`m_min_search`.

    '''
    return m_min_search(g, budget=budget, workers=workers)
