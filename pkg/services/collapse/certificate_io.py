import json
import os

from marshmallow import ValidationError

from models.certificates import Certificate
from models.schemas import CertificateSchema
from utils.exceptions import ComplexInputError

certificate_schema = CertificateSchema()


def certificate_to_json(certificate: Certificate) -> str:
    return json.dumps(certificate_schema.dump(certificate), indent=1)


def certificate_from_json(text: str, source: str = '<text>') -> Certificate:
    """
    Parse a certificate document.

    Raises:
        ComplexInputError: if the text is not JSON or fails schema validation.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexInputError(f"{source}: not a JSON certificate ({e})")
    try:
        return certificate_schema.load(payload)
    except ValidationError as e:
        raise ComplexInputError(f"{source}: invalid certificate {e.messages}")


def read_certificate(path: str) -> Certificate:
    if not os.path.isfile(path):
        raise ComplexInputError(f"Certificate file not found: {path}")
    with open(path, encoding='utf-8') as handle:
        return certificate_from_json(handle.read(), source=path)


def write_certificate(certificate: Certificate, path: str) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(certificate_to_json(certificate) + '\n')
    return path
