'''Field classes used to declare report schemas.

A field tells a :class:`hurwitz.schema.Schema` where a value comes from and,
optionally, how to convert it into JSON-ready builtins.

'''
from hurwitz import abc


class Field(abc.FieldABC):
    '''Base class for fields.

    Args:
        get: A callable taking the reported object and returning the value.
            Without it, the value is the attribute named like the field.

    Subclasses converting their value define ``pack(val)``. Fields without
    ``get`` and ``pack`` compile to plain attribute access.

    '''
    def __init__(self, *, get=None):
        if get is not None:
            if not callable(get):
                msg = 'get must be callable, got {!r}'
                raise ValueError(msg.format(get))
            self.get = get


class Boolean(Field):
    pass


class Integer(Field):
    pass


class String(Field):
    pass


class PartitionList(Field):
    '''A sequence of partitions, dumped as lists of parts.'''

    @staticmethod
    def pack(val):
        if val is None:
            return None
        return [list(p) for p in val]


class PermutationList(Field):
    '''A sequence of permutations, dumped as 0-based image lists.'''

    @staticmethod
    def pack(val):
        if val is None:
            return None
        return [list(p) for p in val]


class PiCoefficient(Field):
    '''A :class:`hurwitz.branch_datum.PiMultiple`, dumped as
    ``{"pi_coeff": c}``.'''

    @staticmethod
    def pack(val):
        if val is None:
            return None
        return {'pi_coeff': val.coeff}


class StatusName(Field):
    '''A :class:`hurwitz.realizability.Status`, dumped as its name
    (``"realizable"``, ``"not_realizable"`` or ``"unknown"``).'''

    @staticmethod
    def pack(val):
        return val.value


class Nested(Field):
    '''An object dumped by another schema.

    Args:
        schema: A schema class, instantiated with ``kwargs``, or a ready
            schema object.

        get: See :class:`Field`.

        kwargs: Constructor arguments for ``schema`` (``only``, ``many``,
            ...). Only allowed if ``schema`` is a class.

    Raises:
        TypeError: If ``schema`` is neither a schema class nor a schema
            object.

        ValueError: If ``kwargs`` come with a schema object.

    Example: ::

        search_trace = Nested(schema=TraceEntrySchema, many=True)

    A value of None is dumped as None.

    '''
    def __init__(self, *, schema, get=None, **kwargs):
        super().__init__(get=get)

        if isinstance(schema, type) and issubclass(schema, abc.SchemaABC):
            schema = schema(**kwargs)
        elif not isinstance(schema, abc.SchemaABC):
            msg = 'schema must be a Schema class or object, got {!r}'
            raise TypeError(msg.format(schema))
        elif kwargs:
            msg = 'Options {} need a Schema class, not a Schema object.'
            raise ValueError(msg.format(sorted(kwargs)))
        self.schema_inst = schema

    def pack(self, val):
        if val is None:
            return None
        return self.schema_inst.dump(val)
