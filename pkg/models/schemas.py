from marshmallow import EXCLUDE, Schema, ValidationError, fields, post_load, pre_dump, validate

from models.certificates import Certificate, Direction, StepPair
from models.complex import Face
from models.run_config import RunConfig


class StepField(fields.Field):
    """A step serialized as ``[[free...], [coface...]]``."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return [list(value.free), list(value.coface)]

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise ValidationError("A step must be a pair [free, coface]")
        try:
            return [Face.of(int(v) for v in value[0]), Face.of(int(v) for v in value[1])]
        except (TypeError, ValueError) as e:
            raise ValidationError(f"Invalid step {value}: {e}")


class CertificateSchema(Schema):
    """
    Schema for certificate files.

    Attributes:
        kind (fields.Str): 'collapse' or 'anticollapse'.
        ground (fields.List): ground set the moves act on.
        start_hash (fields.Str): digest of the starting complex.
        end_hash (fields.Str): digest of the final complex.
        seed (fields.Int): seed of the producing run, if any.
        steps (fields.List): ordered [free, coface] pairs.
    """

    class Meta:
        unknown = EXCLUDE
        ordered = True

    kind = fields.Str(required=True, validate=validate.OneOf([d.value for d in Direction]))
    ground = fields.List(fields.Int(validate=validate.Range(min=1)), required=True)
    start_hash = fields.Str(required=True, validate=validate.Length(equal=64))
    end_hash = fields.Str(required=True, validate=validate.Length(equal=64))
    seed = fields.Int(allow_none=True, load_default=None)
    steps = fields.List(StepField(), required=True)

    @pre_dump
    def unpack(self, certificate, **kwargs):
        if isinstance(certificate, Certificate):
            return {
                'kind': certificate.kind.value,
                'ground': list(certificate.ground),
                'start_hash': certificate.start_hash,
                'end_hash': certificate.end_hash,
                'seed': certificate.seed,
                'steps': list(certificate.steps),
            }
        return certificate

    @post_load
    def make_certificate(self, data, **kwargs):
        kind = Direction(data['kind'])
        steps = tuple(StepPair(free, coface, kind) for free, coface in data['steps'])
        return Certificate(
            kind=kind,
            ground=tuple(data['ground']),
            steps=steps,
            start_hash=data['start_hash'],
            end_hash=data['end_hash'],
            seed=data.get('seed'),
        )


class RunConfigSchema(Schema):
    """
    Schema for validating a CLI invocation before it reaches the services.

    All fields except ``subcommand`` are optional; unknown argparse attributes are ignored.
    """

    class Meta:
        unknown = EXCLUDE

    subcommand = fields.Str(required=True)
    seed = fields.Raw(allow_none=True, load_default=None)
    restarts = fields.Int(allow_none=True, load_default=None, validate=validate.Range(min=0))
    budget = fields.Int(allow_none=True, load_default=None, validate=validate.Range(min=1))
    trials = fields.Int(allow_none=True, load_default=None, validate=validate.Range(min=1))
    workers = fields.Int(allow_none=True, load_default=None, validate=validate.Range(min=1))
    n = fields.Int(allow_none=True, load_default=None, validate=validate.Range(min=1))
    d = fields.Int(allow_none=True, load_default=None, validate=validate.Range(min=0))
    facet_file = fields.Str(allow_none=True, load_default=None)
    cert_file = fields.Str(allow_none=True, load_default=None)
    out = fields.Str(allow_none=True, load_default=None)
    allow_trivial = fields.Bool(load_default=False)
    oracle = fields.Bool(load_default=False)
    quick = fields.Bool(load_default=False)

    @post_load
    def make_config(self, data, **kwargs):
        return RunConfig(**data)
