'''The hurwitz exception hierarchy.

Every exception raised on purpose by :mod:`hurwitz` derives from
:class:`HurwitzError`. Most classes additionally derive from the matching
builtin exception, so ``except ValueError`` keeps working for callers that
don't care about the details.

'''


class HurwitzError(Exception):
    '''The base class for all hurwitz exceptions.'''
    pass


class InvalidInputError(HurwitzError, ValueError):
    '''Raised when an argument or a parsed document is malformed.'''
    pass


class InvalidPartitionError(InvalidInputError):
    '''Raised when parts don't form a canonical partition of their target.'''
    pass


class InvalidDatumError(InvalidInputError):
    '''Raised when a branch datum violates its structural invariants.

    This covers negative genera, degrees below one, partitions of the wrong
    integer, non-branching partitions (all parts equal to one) and malformed
    JSON mappings.

    '''
    pass


class InvalidPermutationError(InvalidInputError):
    '''Raised when an image array is no bijection of ``{0, ..., d-1}``.'''
    pass


class DegreeMismatchError(InvalidInputError):
    '''Raised when a witness and a branch datum have different degrees.'''
    pass


class NoValidGenusError(HurwitzError, ValueError):
    '''Raised when partitions imply a fractional or negative genus.

    Such partitions can't arise from any branched cover of the sphere.

    '''
    pass


class NonHyperbolicError(HurwitzError, ValueError):
    '''Raised when fewer than three branch points are given.

    The sphere minus ``n`` points is hyperbolic iff ``n >= 3``, and complexity
    is only defined in the hyperbolic case.

    '''
    pass


class OutOfTheoremRangeError(HurwitzError, ValueError):
    '''Raised when a genus below one is passed to a complexity operation.'''
    pass


class OracleScopeError(HurwitzError, ValueError):
    '''Raised when the brute force oracle is asked for a too large degree.'''
    pass


class SearchExhaustedError(HurwitzError):
    '''Raised when a capped search ends without any realizable datum.'''
    pass
