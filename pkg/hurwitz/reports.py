'''Schemas of every JSON document hurwitz emits.

All documents use 0-based points and partitions in canonical (weakly
decreasing) form. Complexities appear as ``{"pi_coeff": c}``.

'''
import operator

from hurwitz import exc, fields
from hurwitz.branch_datum import (
    implied_genus,
    is_compatible,
    is_simple_datum,
    total_length,
)
from hurwitz.complexity import simple_complexity_formula
from hurwitz.realizability import verify_witness
from hurwitz.schema import Schema


def _implied_genus_or_none(datum):
    try:
        return implied_genus(datum.degree, datum.partitions)
    except exc.NoValidGenusError:
        return None


class DatumSchema(Schema):
    '''``{"genus": G, "degree": D, "partitions": [[...], ...]}``'''
    genus = fields.Integer()
    degree = fields.Integer()
    partitions = fields.PartitionList()


class WitnessSchema(Schema):
    '''``{"degree": D, "perms": [[images...], ...]}``'''
    degree = fields.Integer()
    perms = fields.PermutationList()


class RealizabilityResultSchema(Schema):
    '''Status, witness (or null), explored nodes and the queried datum.'''
    status = fields.StatusName()
    witness = fields.Nested(schema=WitnessSchema)
    nodes_explored = fields.Integer()
    datum = fields.Nested(schema=DatumSchema)


class CheckReportSchema(Schema):
    '''The arithmetic facts about a datum, dumped from the datum itself.'''
    datum = fields.Nested(schema=DatumSchema, get=lambda datum: datum)
    compatible = fields.Boolean(get=is_compatible)
    simple = fields.Boolean(get=is_simple_datum)
    total_length = fields.Integer(get=total_length)
    implied_genus = fields.Integer(get=_implied_genus_or_none)


class TraceEntrySchema(Schema):
    k = fields.Integer()
    data_count = fields.Integer()
    realizable_found = fields.Boolean()
    unknown_count = fields.Integer()


class ComplexityReportSchema(Schema):
    '''A :class:`hurwitz.complexity.ComplexityReport`.'''
    genus = fields.Integer()
    kind = fields.String()
    value = fields.PiCoefficient()
    minimal = fields.Boolean()
    m_min = fields.Integer()
    d_min = fields.Integer()
    achieved_by = fields.Nested(schema=DatumSchema)
    witness = fields.Nested(schema=WitnessSchema)
    search_trace = fields.Nested(schema=TraceEntrySchema, many=True)


class SimpleComplexityReportSchema(ComplexityReportSchema):
    '''A simple complexity report next to the closed formula ``8 pi g``.'''
    formula = fields.PiCoefficient(
        get=lambda report: simple_complexity_formula(report.genus))
    formula_matches = fields.Boolean(
        get=lambda report:
            report.value == simple_complexity_formula(report.genus))


class HyperellipticSchema(Schema):
    '''A ``(datum, witness)`` pair and whether the witness checks out.'''
    datum = fields.Nested(schema=DatumSchema, get=operator.itemgetter(0))
    witness = fields.Nested(schema=WitnessSchema, get=operator.itemgetter(1))
    verified = fields.Boolean(get=lambda pair: verify_witness(pair[1],
                                                              pair[0]))
