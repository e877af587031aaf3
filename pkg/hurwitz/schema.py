'''Declarative report schemas.

A schema turns a result object (a branch datum, a realizability result, a
complexity report, ...) into JSON-serializable builtins. Reports declare
their fields as class attributes::

    class TraceEntrySchema(Schema):
        k = fields.Integer()
        realizable_found = fields.Boolean()

    TraceEntrySchema(many=True).dump(report.search_trace)
    # [{'k': 1, 'realizable_found': False}, ...]

'''
import collections.abc
from collections import OrderedDict

from hurwitz import abc


# Helper functions ############################################################

def _into_list_if_str(obj):
    '''Wrap a single field name into a list, leave anything else alone.

    So ``only='partitions'`` means ``only=['partitions']``.

    '''
    if isinstance(obj, str):
        return [obj]
    return obj


def _ensure_iterable(obj):
    if not isinstance(obj, collections.abc.Iterable):
        msg = 'Expected an iterable of field names, got {!r}'
        raise TypeError(msg.format(obj))


def _ensure_subset(names, known):
    '''Raise ValueError unless every name in ``names`` is in ``known``.'''
    unknown = sorted(str(name) for name in set(names).difference(known))
    if unknown:
        raise ValueError('Unknown field name(s): {}'.format(
            ', '.join(unknown)))


def _select_fields(fields, names):
    '''Return the fields named in ``names``, in declaration order.'''
    _ensure_iterable(names)
    names = set(names)
    _ensure_subset(names, fields)
    return OrderedDict((name, field) for name, field in fields.items()
                       if name in names)


def _compile_dump(fields):
    '''Return a function ``f(obj)`` building the dict of ``fields`` for obj.

    The function body is a single dict display, generated from the fields:
    plain attribute access where possible, calls of the fields' ``get`` and
    ``pack`` callables otherwise.

    '''
    namespace = {}
    items = []
    for index, (name, field) in enumerate(fields.items()):
        if hasattr(field, 'get'):
            namespace['get_{}'.format(index)] = field.get
            expr = 'get_{}(obj)'.format(index)
        else:
            # name ends up in generated source
            if not name.isidentifier():
                msg = 'Not a valid attribute name: {!r}'
                raise ValueError(msg.format(name))
            expr = 'obj.{}'.format(name)

        if hasattr(field, 'pack'):
            namespace['pack_{}'.format(index)] = field.pack
            expr = 'pack_{}({})'.format(index, expr)

        items.append('{!r}: {}'.format(name, expr))

    source = 'def dump_one(obj):\n    return {{{}}}\n'.format(
        ',\n            '.join(items))
    exec(source, namespace)
    return namespace['dump_one']


# Schema Metaclass ############################################################

class SchemaMeta(type):
    '''Metaclass of :class:`Schema`.

    Gathers the fields of a new schema class into the ordered class attribute
    :attr:`__fields__`. Fields inherited from schema bases come first (bases
    listed first win); fields declared in the class body follow, replacing
    inherited fields of the same name in place. Declared fields are removed
    from the class namespace.

    '''
    def __new__(metacls, name, bases, namespace):
        collected = OrderedDict()
        for base in bases:
            for field_name, field in getattr(base, '__fields__', {}).items():
                collected.setdefault(field_name, field)

        declared = [k for k, v in namespace.items()
                    if isinstance(v, abc.FieldABC)]
        for field_name in declared:
            collected[field_name] = namespace.pop(field_name)

        namespace['__fields__'] = collected
        return super().__new__(metacls, name, bases, namespace)


# Schema ######################################################################

class Schema(abc.SchemaABC, metaclass=SchemaMeta):
    '''Base class for report schemas.

    Args:
        only: Names of the only fields to keep (a single string is fine for
            a single name). Without it every field is kept.

        many: Whether :meth:`dump` expects a collection of objects unless
            told otherwise.

    Raises:
        ValueError: On unknown field names.

    '''
    def __init__(self, *, only=None, many=False):
        fields = OrderedDict(type(self).__fields__)
        if only:
            fields = _select_fields(fields, _into_list_if_str(only))

        self._fields = fields
        self._dump_function = _compile_dump(fields)
        self.many = many

    def dump(self, obj, *, many=None):
        '''Return a JSON-serializable representation of ``obj``.

        Args:
            obj: The object to serialize, or a collection of objects.

            many: Whether ``obj`` is a collection. Defaults to the schema's
                :attr:`many` attribute.

        Returns:
            A dict with one entry per field, in field order, or a list of
            such dicts.

        '''
        dump_one = self._dump_function
        if self.many if many is None else many:
            return [dump_one(item) for item in obj]
        return dump_one(obj)
