'''Realizability of branch data by branched covers of the sphere.

A branch datum ``(g, d, (Pi_1, ..., Pi_n))`` is realizable iff there are
permutations ``s_1, ..., s_n`` of ``d`` points such that

- the cycle type of ``s_i`` is ``Pi_i``,
- the product ``s_1 s_2 ... s_n`` is the identity and
- the group generated by the ``s_i`` is transitive,

and the datum is compatible (Riemann-Hurwitz fixes the genus once the cycle
types are known). This is the classical monodromy description of branched
covers; the permutations describe how the ``d`` sheets are shuffled when
walking around each branch point. The product is read left to right:
``s_1`` is applied first.

:func:`find_monodromy` decides realizability by a backtracking search,
:func:`brute_force_realizable` by plain enumeration (for cross-checks at
small degree).

'''
import collections.abc
import enum
import functools
import itertools
import logging
import multiprocessing

from hurwitz import exc
from hurwitz.branch_datum import euler_characteristic, is_compatible
from hurwitz.partitions import canonical_partition, class_size
from hurwitz.permutation import (
    class_elements,
    class_representative,
    perm_check,
    perm_compose,
    perm_conjugate,
    perm_cycle_type,
    perm_id,
    perm_invert,
    perms_are_transitive,
    perms_orbits,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8
'''Default node budget of :func:`find_monodromy`.'''

BRUTE_FORCE_MAX_DEGREE = 5
'''Default degree cap of :func:`brute_force_realizable`.'''

# how many nodes a worker explores between two looks at the cancel signal
_CANCEL_POLL_INTERVAL = 4096


# Permutations ################################################################

class Permutation(tuple):
    '''A permutation of ``{0, ..., d-1}`` given by its images.

    Args:
        images: An iterable of integers; ``images[i]`` is the image of ``i``.

    Raises:
        InvalidPermutationError: If ``images`` is no bijection.

    '''
    __slots__ = ()

    def __new__(cls, images):
        images = tuple(images)
        if not perm_check(images):
            msg = 'Not a permutation: {!r}'
            raise exc.InvalidPermutationError(msg.format(images))
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, d):
        '''Return the identity permutation on ``d`` points.'''
        return cls(perm_id(d))

    @property
    def degree(self):
        '''The number of points acted on.'''
        return len(self)

    def compose(self, other):
        '''Return ``self`` followed by ``other``.'''
        return Permutation(perm_compose(self, other))

    def inverse(self):
        '''Return the inverse permutation.'''
        return Permutation(perm_invert(self))

    def conjugate(self, h):
        '''Return the relabelling of ``self`` by ``h`` (``h^-1 self h``).'''
        return Permutation(perm_conjugate(self, h))

    def __repr__(self):
        return 'Permutation({!r})'.format(list(self))


class PermutationTuple:
    '''A tuple of permutations acting on the same ``d`` points.

    Args:
        degree: The number of points ``d``.

        perms: An iterable of permutations (or image sequences) of ``degree``
            points.

    Raises:
        InvalidPermutationError: If a member is no permutation of ``degree``
            points.

    '''
    __slots__ = ('_degree', '_perms')

    def __init__(self, degree, perms):
        converted = []
        for p in perms:
            p = p if isinstance(p, Permutation) else Permutation(p)
            if p.degree != degree:
                msg = 'Permutation {!r} does not act on {} points'
                raise exc.InvalidPermutationError(msg.format(p, degree))
            converted.append(p)
        self._degree = degree
        self._perms = tuple(converted)

    @classmethod
    def from_mapping(cls, obj):
        '''Create a :class:`PermutationTuple` from ``{"degree", "perms"}``.

        Raises:
            InvalidPermutationError: If ``obj`` is not of the documented form.

        '''
        if (not isinstance(obj, collections.abc.Mapping) or
                'degree' not in obj or 'perms' not in obj):
            msg = 'A witness must be a mapping with keys degree and perms.'
            raise exc.InvalidPermutationError(msg)
        degree = obj['degree']
        if not isinstance(degree, int) or isinstance(degree, bool):
            msg = 'degree must be an integer, got {!r}'
            raise exc.InvalidPermutationError(msg.format(degree))
        if not isinstance(obj['perms'], list):
            raise exc.InvalidPermutationError('perms must be a list.')
        return cls(degree, obj['perms'])

    @property
    def degree(self):
        '''The number of points acted on.'''
        return self._degree

    @property
    def perms(self):
        '''The permutations as a tuple.'''
        return self._perms

    def product(self):
        '''Return the left-to-right product of all permutations.'''
        return Permutation(functools.reduce(perm_compose, self._perms,
                                            perm_id(self._degree)))

    def conjugate(self, h):
        '''Return the tuple relabelled by the permutation ``h``.'''
        return PermutationTuple(self._degree,
                                [p.conjugate(h) for p in self._perms])

    def __len__(self):
        return len(self._perms)

    def __iter__(self):
        return iter(self._perms)

    def __eq__(self, other):
        if not isinstance(other, PermutationTuple):
            return NotImplemented
        return (self._degree, self._perms) == (other._degree, other._perms)

    def __hash__(self):
        return hash((self._degree, self._perms))

    def __repr__(self):
        return 'PermutationTuple({}, {!r})'.format(
            self._degree, [list(p) for p in self._perms])


# Results #####################################################################

class Status(enum.Enum):
    '''Outcome of a realizability query.'''
    REALIZABLE = 'realizable'
    NOT_REALIZABLE = 'not_realizable'
    UNKNOWN = 'unknown'


class RealizabilityResult:
    '''The answer to a realizability query.

    Args:
        status: A :class:`Status`.

        witness: The :class:`PermutationTuple` proving realizability. Must be
            given iff ``status`` is :attr:`Status.REALIZABLE`.

        nodes_explored: The number of permutations assigned by the search.

        datum: The queried :class:`hurwitz.branch_datum.BranchDatum`.

    :attr:`Status.NOT_REALIZABLE` is only ever reported after an exhaustive
    search, :attr:`Status.UNKNOWN` when the node budget ran out first.

    '''
    __slots__ = ('status', 'witness', 'nodes_explored', 'datum')

    def __init__(self, status, *, witness=None, nodes_explored=0, datum=None):
        if (status is Status.REALIZABLE) != (witness is not None):
            raise ValueError('A witness is required iff status is '
                             'REALIZABLE.')
        self.status = status
        self.witness = witness
        self.nodes_explored = nodes_explored
        self.datum = datum

    @property
    def is_realizable(self):
        return self.status is Status.REALIZABLE

    @property
    def is_unknown(self):
        return self.status is Status.UNKNOWN

    def __repr__(self):
        return 'RealizabilityResult({}, nodes_explored={})'.format(
            self.status.value, self.nodes_explored)


# Operations ##################################################################

def cycle_type(p):
    '''Return the cycle type of ``p`` as a canonical partition.

    Fixed points are included as parts equal to one, so the result is a
    partition of the degree of ``p``.

    '''
    return canonical_partition(perm_cycle_type(p))


def total_ramification(t):
    '''Return ``sum(k - 1)`` over all cycles of all permutations of ``t``.

    Every cycle of length ``k`` corresponds to a point of the cover with
    ramification index ``k``.

    '''
    return sum(t.degree - len(perm_cycle_type(p)) for p in t.perms)


def is_transitive(t):
    '''Return True if the permutations of ``t`` generate a transitive group.

    Transitivity of the monodromy is equivalent to the cover being connected.

    '''
    return perms_are_transitive(t.perms, t.degree)


def verify_witness(t, datum):
    '''Check ``t`` against ``datum``.

    Args:
        t: A :class:`PermutationTuple`.

        datum: A :class:`hurwitz.branch_datum.BranchDatum`.

    Returns:
        True iff the cycle types of ``t`` are the datum's partitions (in
        order), the product of ``t`` is the identity and ``t`` is transitive.

    Raises:
        DegreeMismatchError: If ``t`` and ``datum`` have different degrees.

    '''
    if t.degree != datum.degree:
        msg = 'Witness acts on {} points, datum has degree {}'
        raise exc.DegreeMismatchError(msg.format(t.degree, datum.degree))
    if len(t) != datum.n:
        return False
    if any(cycle_type(p) != q for p, q in zip(t.perms, datum.partitions)):
        return False
    if t.product() != perm_id(t.degree):
        return False
    return is_transitive(t)


# Search ######################################################################

class _BudgetExhausted(Exception):
    pass


class _Cancelled(Exception):
    pass


class _SearchPlan:
    '''How the search visits the positions of a datum.

    The position with the largest conjugacy class is fixed to the class
    representative (realizability is invariant under simultaneous
    conjugation). The position with the next largest class is computed from
    the others: since the product of the whole tuple is the identity, so is
    every cyclic rotation of it, and the forced permutation is the inverse of
    the product of the positions following it cyclically. All other positions
    are enumerated.

    '''

    def __init__(self, datum):
        n = datum.n
        self.degree = datum.degree
        sizes = [class_size(p) for p in datum.partitions]
        fixed = max(range(n), key=lambda i: (sizes[i], -i))
        if n >= 2:
            forced = max((i for i in range(n) if i != fixed),
                         key=lambda i: (sizes[i], -i))
            self.order = [(forced + 1 + i) % n for i in range(n - 1)]
            self.forced = forced
            self.forced_type = list(datum.partitions[forced])
        else:
            self.order = [fixed]
            self.forced = None
            self.forced_type = None

        self.levels = []
        for position in self.order:
            parts = tuple(datum.partitions[position])
            if position == fixed:
                self.levels.append((class_representative(parts),))
            else:
                self.levels.append(class_elements(parts))

    def split_level(self):
        '''Return the index of the first level with several candidates.'''
        for index, level in enumerate(self.levels):
            if len(level) > 1:
                return index
        return None

    def to_datum_order(self, chosen, n):
        '''Sort permutations from search order back into datum order.'''
        perms = [None] * n
        positions = self.order + ([] if self.forced is None else
                                  [self.forced])
        for position, p in zip(positions, chosen):
            perms[position] = p
        return perms


def _search(plan, budget, restrict=None, cancel=None):
    '''Depth-first search along ``plan``.

    Args:
        plan: A :class:`_SearchPlan`.

        budget: The maximum number of permutations to assign.

        restrict: An optional pair ``(level, candidates)`` replacing the
            candidates of one level (used to split work among workers).

        cancel: An optional event; the search stops when it is set.

    Returns:
        A pair ``(chosen, nodes)`` where ``chosen`` lists the permutations in
        search order, or is None if the search was exhaustive and failed.

    Raises:
        _BudgetExhausted: If more than ``budget`` nodes would be needed. The
            number of nodes explored is stored in the exception's args.

        _Cancelled: If ``cancel`` got set.

    '''
    levels = list(plan.levels)
    if restrict is not None:
        levels[restrict[0]] = restrict[1]
    depth_count = len(levels)
    d = plan.degree
    identity = perm_id(d)
    forced_type = plan.forced_type
    chosen = [None] * depth_count
    nodes = 0

    def descend(depth, product):
        nonlocal nodes
        if depth == depth_count:
            if forced_type is None:
                if product != identity:
                    return None
                perms = list(chosen)
            else:
                nodes += 1
                if nodes > budget:
                    raise _BudgetExhausted(nodes - 1)
                last = perm_invert(product)
                if perm_cycle_type(last) != forced_type:
                    return None
                perms = chosen + [last]
            return perms if perms_are_transitive(perms, d) else None

        for candidate in levels[depth]:
            nodes += 1
            if nodes > budget:
                raise _BudgetExhausted(nodes - 1)
            if (cancel is not None and
                    nodes % _CANCEL_POLL_INTERVAL == 0 and cancel.is_set()):
                raise _Cancelled(nodes)
            chosen[depth] = candidate
            found = descend(depth + 1, perm_compose(product, candidate))
            if found is not None:
                return found
        return None

    return descend(0, identity), nodes


class _Overtaken:
    '''Cancellation signal of one candidate in a parallel search.

    Set once some task found a witness under a candidate that comes earlier
    in search order than ``index``.

    '''

    def __init__(self, best, index):
        self.best = best
        self.index = index

    def is_set(self):
        return self.best.value < self.index


def _search_task(plan, budget, level, indexed, best, lock):
    '''Search the subtrees below some candidates of one level.

    Runs in a worker process. Candidates are visited in the given order; the
    task stops after a witness, after running out of ``budget`` or as soon as
    a witness is known under an earlier candidate.

    Args:
        indexed: Pairs ``(index, candidate)`` of the split level.

        best: A shared value, the smallest candidate index with a witness.

        lock: A shared lock guarding ``best``.

    Returns:
        A list of ``(index, status, chosen, subtree_nodes)``. A status of
        UNKNOWN means the budget ran out under that candidate.

    '''
    outcomes = []
    spent = 0
    for index, candidate in indexed:
        if best.value < index:
            break
        cancel = _Overtaken(best, index)
        try:
            chosen, nodes = _search(plan, budget - spent,
                                    (level, (candidate,)), cancel)
        except _BudgetExhausted:
            outcomes.append((index, Status.UNKNOWN, None, None))
            break
        except _Cancelled:
            break
        # the levels above the split level have one candidate each
        subtree = nodes - level
        if chosen is not None:
            with lock:
                if index < best.value:
                    best.value = index
            outcomes.append((index, Status.REALIZABLE, chosen, subtree))
            break
        outcomes.append((index, Status.NOT_REALIZABLE, None, subtree))
        spent += subtree
    return outcomes


def _parallel_search(plan, budget, workers):
    '''Fan the first branching level of ``plan`` out to worker processes.

    The subtrees found by the workers are replayed in search order, so the
    status, the witness and the node count are those of a single-process
    search with the same budget.

    Returns:
        A triple ``(status, chosen, nodes)``.

    '''
    level = plan.split_level()
    candidates = plan.levels[level]
    tasks = min(workers, len(candidates))
    indexed = list(enumerate(candidates))
    logger.debug('Splitting %d candidates of level %d among %d tasks',
                 len(candidates), level, tasks)

    with multiprocessing.Manager() as manager:
        best = manager.Value('i', len(candidates))
        lock = manager.Lock()
        with multiprocessing.Pool(tasks) as pool:
            pending = [
                pool.apply_async(
                    _search_task,
                    (plan, budget, level, indexed[i::tasks], best, lock))
                for i in range(tasks)
            ]
            by_index = {}
            for p in pending:
                for index, status, chosen, subtree in p.get():
                    by_index[index] = (status, chosen, subtree)

    nodes = level
    for index in range(len(candidates)):
        status, chosen, subtree = by_index.get(
            index, (Status.UNKNOWN, None, None))
        if status is Status.UNKNOWN:
            return Status.UNKNOWN, None, budget
        nodes += subtree
        if nodes > budget:
            return Status.UNKNOWN, None, budget
        if status is Status.REALIZABLE:
            return status, chosen, nodes
    return Status.NOT_REALIZABLE, None, nodes


def find_monodromy(datum, *, budget=DEFAULT_BUDGET, workers=1):
    '''Decide whether ``datum`` is realizable by a branched cover of S^2.

    Args:
        datum: A :class:`hurwitz.branch_datum.BranchDatum`.

        budget: The maximum number of permutations the search may assign.

        workers: The number of worker processes. The result does not
            depend on it: the witness is always the first one in search
            order.

    Returns:
        A :class:`RealizabilityResult`. Incompatible data and data of degree
        one with branch points are answered without any search.

    '''
    n = datum.n
    d = datum.degree

    if d == 1 and n >= 1:
        logger.debug('%s: no cover of degree one has branch points', datum)
        return RealizabilityResult(Status.NOT_REALIZABLE, datum=datum)
    if not is_compatible(datum):
        logger.debug('%s: incompatible', datum)
        return RealizabilityResult(Status.NOT_REALIZABLE, datum=datum)
    if n == 0:
        # compatible and unbranched means the identity S^2 -> S^2
        witness = PermutationTuple(d, [])
        return RealizabilityResult(Status.REALIZABLE, witness=witness,
                                   datum=datum)

    plan = _SearchPlan(datum)
    if workers > 1 and plan.split_level() is not None:
        status, chosen, nodes = _parallel_search(plan, budget, workers)
    else:
        try:
            chosen, nodes = _search(plan, budget)
        except _BudgetExhausted as e:
            status, chosen, nodes = Status.UNKNOWN, None, e.args[0]
        else:
            status = (Status.NOT_REALIZABLE if chosen is None else
                      Status.REALIZABLE)

    if status is Status.UNKNOWN:
        logger.warning('%s: budget of %d nodes exhausted', datum, budget)
        return RealizabilityResult(status, nodes_explored=nodes, datum=datum)
    if status is Status.NOT_REALIZABLE:
        logger.debug('%s: not realizable (%d nodes)', datum, nodes)
        return RealizabilityResult(status, nodes_explored=nodes, datum=datum)

    witness = PermutationTuple(d, plan.to_datum_order(chosen, n))
    logger.debug('%s: realizable (%d nodes)', datum, nodes)
    return RealizabilityResult(status, witness=witness, nodes_explored=nodes,
                               datum=datum)


# Oracle ######################################################################

def _all_of_type(p):
    '''Return all permutations of cycle type ``p``, found by enumerating S_d.
    '''
    target = list(p)
    return [q for q in itertools.permutations(range(sum(p)))
            if perm_cycle_type(q) == target]


def brute_force_realizable(datum, *, max_degree=BRUTE_FORCE_MAX_DEGREE):
    '''Decide realizability of ``datum`` by plain enumeration.

    Every tuple of permutations with the cycle types of the first ``n - 1``
    partitions is tried; the last permutation is the inverse of their
    product and has to have the last cycle type. A transitive solution only
    realizes the datum if its genus (computed from the solution's
    ramification) is the datum's genus.

    This shares no search code with :func:`find_monodromy` and is meant as
    an independent cross-check.

    Args:
        datum: A :class:`hurwitz.branch_datum.BranchDatum`.

        max_degree: The largest degree accepted.

    Returns:
        A :class:`RealizabilityResult`, never with :attr:`Status.UNKNOWN`.

    Raises:
        OracleScopeError: If the degree of ``datum`` exceeds ``max_degree``.

    '''
    d = datum.degree
    n = datum.n
    if d > max_degree:
        msg = 'Brute force is limited to degree {}, got {}'
        raise exc.OracleScopeError(msg.format(max_degree, d))
    if d == 1 and n >= 1:
        return RealizabilityResult(Status.NOT_REALIZABLE, datum=datum)

    identity = perm_id(d)
    if n == 0:
        choices = [()]
        last_type = None
    else:
        choices = itertools.product(
            *[_all_of_type(p) for p in datum.partitions[:-1]])
        last_type = list(datum.partitions[-1])

    tried = 0
    for head in choices:
        tried += 1
        product = functools.reduce(perm_compose, head, identity)
        if last_type is None:
            if product != identity:
                continue
            perms = list(head)
        else:
            last = perm_invert(product)
            if perm_cycle_type(last) != last_type:
                continue
            perms = list(head) + [last]
        if len(perms_orbits(perms, d)) != 1:
            continue

        witness = PermutationTuple(d, perms)
        genus_chi = 2 * d - total_ramification(witness)
        if genus_chi != euler_characteristic(datum.genus):
            # every solution has the same cycle types, hence the same genus
            break
        return RealizabilityResult(Status.REALIZABLE, witness=witness,
                                   nodes_explored=tried, datum=datum)

    return RealizabilityResult(Status.NOT_REALIZABLE, nodes_explored=tried,
                               datum=datum)
