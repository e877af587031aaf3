'''Marker base classes for report fields and report schemas.

.. note::

   :mod:`hurwitz.abc` exists so that :mod:`hurwitz.fields` can recognize
   schemas (for nesting reports) and :mod:`hurwitz.schema` can recognize
   fields without importing each other.

'''


class FieldABC:
    '''Marks a class as a report field.

    :class:`hurwitz.schema.SchemaMeta` collects class attributes that are
    instances of :class:`FieldABC`. Subclass :class:`hurwitz.fields.Field`
    rather than this class.

    '''
    pass


class SchemaABC:
    '''Marks a class as a report schema.

    :class:`hurwitz.fields.Nested` accepts instances and subclasses of
    :class:`SchemaABC`. Subclass :class:`hurwitz.schema.Schema` rather than
    this class.

    '''
    pass
