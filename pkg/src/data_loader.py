import json
import logging
from typing import Any, Dict, Optional

from pydantic import ValidationError

from src.models import DihedralRep, RunConfig

logger = logging.getLogger(__name__)

def read_json_document(file_path: str) -> Dict[str, Any]:
    try:
        with open(file_path) as f:
            text = f.read()
    except FileNotFoundError:
        raise FileNotFoundError(f"Config file not found: {file_path}")
    if not text.strip():
        raise ValueError(f"Config file is empty: {file_path}")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Config file is not valid JSON: {file_path}: {e}")
    if not isinstance(document, dict):
        raise ValueError(f"Config file must hold a JSON object: {file_path}")
    return document

def build_run_config(document: Dict[str, Any], overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Validate a config document after applying flag overrides; rep fields may sit under "rep" or at top level."""
    document = dict(document)
    rep = dict(document.pop("rep", {}))
    for key in ("p", "r", "s", "weights"):
        if key in document:
            rep[key] = document.pop(key)
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key in ("p", "r", "s", "weights"):
            rep[key] = value
        else:
            document[key] = value
    if rep.get("p") is None:
        raise ValueError("a representation needs p (from --config or --p)")
    try:
        return RunConfig(rep=rep, **document)
    except ValidationError as e:
        raise ValueError(_first_error(e))

def _first_error(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    message = details[0]["msg"]
    return message.removeprefix("Value error, ")

def load_run_config(file_path: str, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    config = build_run_config(read_json_document(file_path), overrides)
    logger.debug(f"Loaded run config from {file_path}: {config.rep.label()}")
    return config

def load_rep(file_path: str) -> DihedralRep:
    document = read_json_document(file_path)
    try:
        return DihedralRep(**document.get("rep", document))
    except ValidationError as e:
        raise ValueError(_first_error(e))
