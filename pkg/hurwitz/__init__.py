'''hurwitz: branched covers of the sphere, realizability and complexity.'''

__version__ = '0.1.dev0'

# pollute package namespace with the most commonly used names
from hurwitz import exc
from hurwitz import partitions
from hurwitz import branch_datum
from hurwitz import realizability
from hurwitz import complexity
from hurwitz.branch_datum import BranchDatum, PiMultiple
from hurwitz.partitions import Partition
from hurwitz.realizability import (
    Permutation,
    PermutationTuple,
    RealizabilityResult,
    find_monodromy,
)
from hurwitz.complexity import surface_complexity, simple_complexity_search
