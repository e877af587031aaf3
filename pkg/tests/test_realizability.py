'''tests for the realizability module'''

import itertools
import random

import pytest

from hurwitz import exc
from hurwitz.branch_datum import (
    BranchDatum,
    euler_characteristic,
    implied_genus,
    is_compatible,
    simple_datum,
)
from hurwitz.partitions import enumerate_partitions, is_branching_partition
from hurwitz.realizability import (
    Permutation,
    PermutationTuple,
    RealizabilityResult,
    Status,
    brute_force_realizable,
    cycle_type,
    find_monodromy,
    is_transitive,
    total_ramification,
    verify_witness,
)

THREE_CYCLE = (1, 2, 0)


@pytest.fixture
def torus_datum():
    return BranchDatum(1, 3, [(3,), (3,), (3,)])


@pytest.fixture
def exceptional_datum():
    return BranchDatum(0, 4, [(3, 1), (2, 2), (2, 2)])


@pytest.fixture
def hyperelliptic_torus():
    return BranchDatum(1, 2, [(2,)] * 4)


def compatible_data(max_degree, n):
    '''Yield all compatible branch data with n partitions of degree <= max.
    '''
    for d in range(2, max_degree + 1):
        branching = [p for p in enumerate_partitions(d)
                     if is_branching_partition(p)]
        for partitions in itertools.combinations_with_replacement(
                branching, n):
            try:
                genus = implied_genus(d, partitions)
            except exc.NoValidGenusError:
                continue
            yield BranchDatum(genus, d, partitions)


def random_relabelling(rng, d):
    h = list(range(d))
    rng.shuffle(h)
    return Permutation(h)


class TestPermutationTypes:
    '''Class collecting tests of Permutation and PermutationTuple.'''

    def test_invalid_permutation(self):
        '''Test invalid image lists fail.'''
        with pytest.raises(exc.InvalidPermutationError):
            Permutation([0, 0, 1])

    def test_permutation_algebra(self):
        '''Test composition and inversion.'''
        p = Permutation(THREE_CYCLE)
        assert p.compose(p).compose(p) == Permutation.identity(3)
        assert p.inverse() == (2, 0, 1)
        assert p.degree == 3

    def test_tuple_degree_mismatch(self):
        '''Test permutations of the wrong degree fail.'''
        with pytest.raises(exc.InvalidPermutationError):
            PermutationTuple(3, [(1, 0)])

    def test_product(self):
        '''Test the left-to-right product.'''
        t = PermutationTuple(3, [THREE_CYCLE] * 3)
        assert t.product() == (0, 1, 2)

    def test_from_mapping(self):
        '''Test loading a witness from JSON-like data.'''
        t = PermutationTuple.from_mapping({'degree': 2,
                                           'perms': [[1, 0], [1, 0]]})
        assert t == PermutationTuple(2, [(1, 0), (1, 0)])
        with pytest.raises(exc.InvalidPermutationError):
            PermutationTuple.from_mapping({'degree': 2})

    def test_result_requires_witness(self):
        '''Test realizable results need a witness.'''
        with pytest.raises(ValueError):
            RealizabilityResult(Status.REALIZABLE)


@pytest.mark.parametrize('images, parts', [
    ((0, 1, 2), (1, 1, 1)),
    ((1, 2, 0), (3,)),
    ((1, 0, 3, 2), (2, 2)),
])
def test_cycle_type(images, parts):
    '''Test cycle types as canonical partitions.'''
    assert cycle_type(Permutation(images)) == parts


def test_total_ramification():
    '''Test the total ramification of some tuples.'''
    assert total_ramification(PermutationTuple(3, [THREE_CYCLE] * 3)) == 6
    assert total_ramification(PermutationTuple(3, [(0, 1, 2)] * 2)) == 0
    assert total_ramification(PermutationTuple(2, [(1, 0)] * 4)) == 4


def test_is_transitive():
    '''Test transitivity of permutation tuples.'''
    assert is_transitive(PermutationTuple(3, [THREE_CYCLE] * 3))
    assert not is_transitive(PermutationTuple(2, [(0, 1), (0, 1)]))
    assert is_transitive(PermutationTuple(4, [(1, 0, 3, 2), (2, 3, 0, 1)]))


class TestVerifyWitness:
    '''Class collecting tests of verify_witness.'''

    def test_valid(self, torus_datum):
        '''Test a valid witness.'''
        assert verify_witness(PermutationTuple(3, [THREE_CYCLE] * 3),
                              torus_datum)

    def test_product_not_identity(self, torus_datum):
        '''Test a product other than the identity.'''
        t = PermutationTuple(3, [THREE_CYCLE, THREE_CYCLE, (2, 0, 1)])
        assert not verify_witness(t, torus_datum)

    def test_wrong_cycle_types(self):
        '''Test wrong cycle types.'''
        datum = BranchDatum(0, 2, [(2,), (2,)])
        assert not verify_witness(PermutationTuple(2, [(0, 1), (0, 1)]),
                                  datum)

    def test_not_transitive(self):
        '''Test an intransitive tuple.'''
        datum = BranchDatum(0, 4, [(2, 1, 1), (2, 1, 1)], validate=False)
        t = PermutationTuple(4, [(1, 0, 2, 3), (1, 0, 2, 3)])
        assert not verify_witness(t, datum)

    def test_wrong_length(self, torus_datum):
        '''Test a tuple of the wrong length.'''
        t = PermutationTuple(3, [THREE_CYCLE] * 2)
        assert not verify_witness(t, torus_datum)

    def test_degree_mismatch(self, torus_datum):
        '''Test a witness of the wrong degree fails.'''
        with pytest.raises(exc.DegreeMismatchError):
            verify_witness(PermutationTuple(2, [(1, 0)] * 3), torus_datum)


class TestFindMonodromy:
    '''Class collecting tests of the backtracking search.'''

    def test_torus(self, torus_datum):
        '''Test the three 3-cycles of the torus.'''
        result = find_monodromy(torus_datum)
        assert result.status is Status.REALIZABLE
        assert verify_witness(result.witness, torus_datum)
        assert result.witness.perms == (THREE_CYCLE,) * 3
        assert result.datum == torus_datum

    def test_exceptional(self, exceptional_datum):
        '''Test a compatible datum without cover.'''
        result = find_monodromy(exceptional_datum)
        assert result.status is Status.NOT_REALIZABLE
        assert result.witness is None
        assert result.nodes_explored > 0

    def test_hyperelliptic(self, hyperelliptic_torus):
        '''Test the hyperelliptic torus.'''
        result = find_monodromy(hyperelliptic_torus)
        assert result.is_realizable
        assert result.witness.perms == ((1, 0),) * 4

    def test_incompatible_short_circuits(self):
        '''Test incompatible data are not searched.'''
        result = find_monodromy(BranchDatum(1, 3, [(3,), (3,)]))
        assert result.status is Status.NOT_REALIZABLE
        assert result.nodes_explored == 0

    @pytest.mark.parametrize('n', [1, 3, 5])
    def test_degree_one(self, n):
        '''Test degree one data are not searched.'''
        datum = BranchDatum(0, 1, [(1,)] * n, validate=False)
        result = find_monodromy(datum)
        assert result.status is Status.NOT_REALIZABLE
        assert result.nodes_explored == 0

    def test_no_branch_points(self):
        '''Test the unbranched identity cover.'''
        result = find_monodromy(BranchDatum(0, 1, []))
        assert result.is_realizable
        assert len(result.witness) == 0

    def test_two_branch_points(self):
        '''Test a datum with two branch points.'''
        result = find_monodromy(BranchDatum(0, 3, [(3,), (3,)]))
        assert result.is_realizable
        assert verify_witness(result.witness, result.datum)

    def test_budget_exhaustion_is_unknown(self, torus_datum):
        '''Test an exhausted budget gives unknown.'''
        result = find_monodromy(torus_datum, budget=1)
        assert result.status is Status.UNKNOWN
        assert result.witness is None
        assert result.nodes_explored == 1

    def test_exceptional_never_unknown_with_budget(self, exceptional_datum):
        '''Test the exact budget an exhaustive search needs.'''
        exhaustive = find_monodromy(exceptional_datum)
        small = find_monodromy(exceptional_datum,
                               budget=exhaustive.nodes_explored)
        assert small.status is Status.NOT_REALIZABLE
        tiny = find_monodromy(exceptional_datum,
                              budget=exhaustive.nodes_explored - 1)
        assert tiny.status is Status.UNKNOWN

    def test_deterministic(self):
        '''Test repeated searches agree.'''
        datum = BranchDatum(2, 5, [(5,), (5,), (5,)])
        first = find_monodromy(datum)
        second = find_monodromy(datum)
        assert first.witness == second.witness
        assert first.nodes_explored == second.nodes_explored

    def test_workers_agree_on_status(self, exceptional_datum):
        '''Test one and two workers give the same status.'''
        for datum in [BranchDatum(2, 5, [(5,), (5,), (5,)]),
                      exceptional_datum]:
            single = find_monodromy(datum)
            parallel = find_monodromy(datum, workers=2)
            assert parallel.status is single.status
            if parallel.is_realizable:
                assert verify_witness(parallel.witness, datum)

    @pytest.mark.parametrize('slack', [0, -1])
    def test_workers_agree_at_budget_limit(self, exceptional_datum, slack):
        '''Test a budget just deciding the datum decides it in parallel.'''
        single = find_monodromy(exceptional_datum)
        budget = single.nodes_explored + slack
        again = find_monodromy(exceptional_datum, budget=budget)
        for workers in [2, 3]:
            parallel = find_monodromy(exceptional_datum, budget=budget,
                                      workers=workers)
            assert parallel.status is again.status
            assert parallel.nodes_explored == again.nodes_explored

    @pytest.mark.parametrize('workers', [2, 4])
    def test_workers_find_first_witness(self, workers):
        '''Test parallel searches return the single-process witness.'''
        datum = BranchDatum(1, 4, [(4,), (4,), (2, 2)])
        single = find_monodromy(datum)
        parallel = find_monodromy(datum, workers=workers)
        assert parallel.status is Status.REALIZABLE
        assert parallel.witness == single.witness
        assert parallel.nodes_explored == single.nodes_explored
        tight = find_monodromy(datum, budget=single.nodes_explored - 1,
                               workers=workers)
        assert tight.status is Status.UNKNOWN

    def test_simple_cover_ramification(self):
        '''Test simple covers have one branch point per transposition.'''
        for genus, degree in [(0, 3), (1, 3), (1, 4), (2, 3)]:
            datum = simple_datum(genus, degree)
            result = find_monodromy(datum)
            assert result.is_realizable
            assert total_ramification(result.witness) == datum.n


class TestBruteForce:
    '''Class collecting tests of the brute force oracle.'''

    def test_torus(self, torus_datum):
        '''Test the torus datum.'''
        result = brute_force_realizable(torus_datum)
        assert result.is_realizable
        assert verify_witness(result.witness, torus_datum)

    def test_exceptional(self, exceptional_datum):
        '''Test a compatible datum without cover.'''
        assert (brute_force_realizable(exceptional_datum).status is
                Status.NOT_REALIZABLE)

    def test_genus_two_cyclic(self):
        '''Test three 5-cycles.'''
        datum = BranchDatum(2, 5, [(5,), (5,), (5,)])
        result = brute_force_realizable(datum)
        assert result.is_realizable
        assert verify_witness(result.witness, datum)

    def test_wrong_genus(self):
        '''Test solutions of another genus are rejected.'''
        datum = BranchDatum(5, 3, [(3,), (3,), (3,)])
        assert (brute_force_realizable(datum).status is
                Status.NOT_REALIZABLE)

    def test_degree_cap(self):
        '''Test degrees above the cap fail.'''
        with pytest.raises(exc.OracleScopeError):
            brute_force_realizable(BranchDatum(1, 6, [(6,)] * 3))

    def test_degree_one(self):
        '''Test degree one data.'''
        datum = BranchDatum(0, 1, [(1,)] * 3, validate=False)
        assert (brute_force_realizable(datum).status is
                Status.NOT_REALIZABLE)


class TestProperties:
    '''Class collecting cross-checks between search, oracle and formulas.'''

    def test_oracle_equivalence_n3(self):
        '''Test search and oracle agree for three branch points.'''
        for datum in compatible_data(4, 3):
            searched = find_monodromy(datum)
            oracle = brute_force_realizable(datum)
            assert searched.status is oracle.status, datum
            assert searched.status is not Status.UNKNOWN

    def test_oracle_equivalence_n4(self):
        '''Test search and oracle agree for four branch points.'''
        for datum in compatible_data(3, 4):
            assert (find_monodromy(datum).status is
                    brute_force_realizable(datum).status), datum

    def test_realizable_implies_compatible(self):
        '''Test realizable data are compatible.'''
        for d in range(2, 5):
            branching = [p for p in enumerate_partitions(d)
                         if is_branching_partition(p)]
            for n in range(1, 5):
                for partitions in itertools.combinations_with_replacement(
                        branching, n):
                    for genus in range(3):
                        datum = BranchDatum(genus, d, partitions)
                        if find_monodromy(datum).is_realizable:
                            assert is_compatible(datum)

    def test_genus_consistency(self):
        '''Test witnesses have the datum's genus.'''
        for datum in compatible_data(4, 3):
            result = find_monodromy(datum)
            if not result.is_realizable:
                continue
            types = [cycle_type(p) for p in result.witness]
            assert implied_genus(datum.degree, types) == datum.genus
            assert (euler_characteristic(datum.genus) ==
                    2 * datum.degree - total_ramification(result.witness))

    def test_reordering_invariance(self, exceptional_datum):
        '''Test reordering partitions keeps the status.'''
        data = [exceptional_datum, BranchDatum(0, 4, [(3, 1), (3, 1), (2, 2)]),
                BranchDatum(0, 4, [(4,), (3, 1), (2, 1, 1)]),
                BranchDatum(1, 4, [(4,), (2, 2), (3, 1), (2, 1, 1)])]
        for datum in data:
            expected = find_monodromy(datum).status
            for order in itertools.permutations(datum.partitions):
                shuffled = BranchDatum(datum.genus, datum.degree, order)
                assert find_monodromy(shuffled).status is expected

    def test_conjugation_invariance(self):
        '''Test relabelled witnesses stay witnesses.'''
        rng = random.Random(2014)
        data = [BranchDatum(1, 3, [(3,)] * 3),
                BranchDatum(2, 5, [(5,)] * 3),
                BranchDatum(1, 2, [(2,)] * 4)]
        for datum in data:
            witness = find_monodromy(datum).witness
            for _ in range(100):
                h = random_relabelling(rng, datum.degree)
                assert verify_witness(witness.conjugate(h), datum)
