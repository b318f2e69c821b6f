"""Schema validator for the JSON documents read and written by rvclab."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from jsonschema import Draft7Validator

from src.exceptions import DocumentError

logger = logging.getLogger(__name__)

DEFINITION_PREFIX = "#/definitions/"


class DocumentSchemaValidator:
    """
    Validator for graph, coloring, report and result documents
    against the definitions of the rvclab schema file.

    One Draft 7 validator is compiled per definition on first use; it
    points at ``#/definitions/<name>`` inside the full schema so nested
    references resolve through jsonschema itself.
    """

    def __init__(self, schema_path: Union[str, Path]):
        """
        Initialize the validator with a schema file.

        Args:
            schema_path: Path to rvclab.schema.json

        Raises:
            FileNotFoundError: the schema file does not exist
            SchemaError: the file is not a valid Draft 7 schema
        """
        self.schema_path = Path(schema_path)
        if not self.schema_path.exists():
            raise FileNotFoundError(f"Schema file not found: {self.schema_path}")

        logger.debug(f"Loading document schema from: {self.schema_path}")
        self.schema: Dict[str, Any] = json.loads(self.schema_path.read_text(encoding="utf-8"))
        Draft7Validator.check_schema(self.schema)
        self._validators: Dict[str, Draft7Validator] = {}

        logger.debug(f"Loaded schema '{self.schema.get('title', 'Unknown')}' with {len(self.definitions)} definitions")

    @property
    def definitions(self) -> Dict[str, Any]:
        return self.schema.get("definitions", {})

    def _validator_for(self, name: str) -> Draft7Validator:
        if name not in self.definitions:
            raise KeyError(f"Definition not found: {name}")
        if name not in self._validators:
            root = {**self.schema, "$ref": f"{DEFINITION_PREFIX}{name}"}
            self._validators[name] = Draft7Validator(root)
        return self._validators[name]

    @staticmethod
    def _describe(validator: Draft7Validator, data: Any) -> Optional[str]:
        errors = sorted(validator.iter_errors(data), key=lambda e: [str(p) for p in e.absolute_path])
        if not errors:
            return None
        return "; ".join(
            f"{'.'.join(str(p) for p in e.absolute_path)}: {e.message}" if e.absolute_path else e.message
            for e in errors
        )

    def validate_document(self, data: Any, name: str) -> tuple[bool, Optional[str]]:
        """
        Validate a document against a named definition.

        Args:
            data: Parsed JSON document
            name: Definition name

        Returns:
            Tuple of (is_valid, error_message)
        """
        message = self._describe(self._validator_for(name), data)
        if message:
            logger.error(f"{name} document failed validation: {message}")
            return False, message
        logger.debug(f"{name} document is valid")
        return True, None

    def require_valid(self, data: Any, name: str) -> None:
        """
        Raise unless a document matches its definition.

        Raises:
            DocumentError: with the joined validation messages
        """
        is_valid, error = self.validate_document(data, name)
        if not is_valid:
            raise DocumentError(f"{name} document is invalid: {error}")


# Singleton instance
_validator_instance: Optional[DocumentSchemaValidator] = None


def get_schema_validator(schema_path: Optional[Union[str, Path]] = None) -> DocumentSchemaValidator:
    """
    Shared validator, created on first call.

    Args:
        schema_path: Path to the schema file (defaults to schemas/rvclab.schema.json)
    """
    global _validator_instance

    if _validator_instance is None:
        if schema_path is None:
            schema_path = Path(__file__).parent.parent / "schemas" / "rvclab.schema.json"
        _validator_instance = DocumentSchemaValidator(schema_path)

    return _validator_instance
