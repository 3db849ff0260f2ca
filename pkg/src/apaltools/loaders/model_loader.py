"""Reading and writing models in the JSON model format.

A model document looks like::

    {"worlds": ["w", "v"], "agents": ["a"],
     "relations": {"a": [["w", "v"]]}, "valuation": {"p": ["w"]}}
"""
from pathlib import Path
from typing import Any, Union

import srsly

from apaltools.errors import ModelValidationError
from apaltools.models.kripke import KripkeModel


def _string_list(value: Any, what: str) -> list:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ModelValidationError(f"malformed document: {what} must be a list of strings")
    return value


def model_from_dict(data: Any) -> KripkeModel:
    """Build a validated model from an already decoded JSON document."""
    if not isinstance(data, dict):
        raise ModelValidationError("malformed document: expected a JSON object")
    if "worlds" not in data:
        raise ModelValidationError("malformed document: missing 'worlds'")

    worlds = _string_list(data["worlds"], "'worlds'")
    relations = data.get("relations", {})
    if not isinstance(relations, dict):
        raise ModelValidationError("malformed document: 'relations' must be an object")
    agents = _string_list(data.get("agents", list(relations)), "'agents'")
    blocks = {}
    for agent, agent_blocks in relations.items():
        if not isinstance(agent_blocks, list):
            raise ModelValidationError(f"malformed document: blocks of agent {agent!r} must be a list")
        blocks[agent] = [_string_list(b, f"blocks of agent {agent!r}") for b in agent_blocks]
    valuation = data.get("valuation", {})
    if not isinstance(valuation, dict):
        raise ModelValidationError("malformed document: 'valuation' must be an object")
    valuation = {p: _string_list(ws, f"valuation of {p!r}") for p, ws in valuation.items()}

    return KripkeModel(worlds=worlds, agents=agents, relations=blocks, valuation=valuation)


def model_to_dict(m: KripkeModel) -> dict:
    return {
        "worlds": list(m.worlds),
        "agents": list(m.agents),
        "relations": {
            a: [m.sorted_worlds(block) for block in blocks] for a, blocks in m.relations.items()
        },
        "valuation": {p: m.sorted_worlds(ws) for p, ws in m.valuation.items()},
    }


def load_model(document: str) -> KripkeModel:
    """Load a model from a JSON document.

    Args:
        document (str): The JSON text.

    Raises:
        ModelValidationError: If the document is malformed or violates the
            model invariants (empty world list, overlapping or non-covering
            blocks, valuation over unknown worlds).

    Returns:
        KripkeModel: The validated model.
    """
    try:
        data = srsly.json_loads(document)
    except ValueError as e:
        raise ModelValidationError(f"malformed document: {e}") from None
    return model_from_dict(data)


def load_model_file(path: Union[str, Path]) -> KripkeModel:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"model file not found: {path}")
    return load_model(path.read_text(encoding="utf-8"))


def dump_model(m: KripkeModel, indent: int = 0) -> str:
    return srsly.json_dumps(model_to_dict(m), indent=indent)


def write_model_file(m: KripkeModel, path: Union[str, Path]) -> None:
    srsly.write_json(path, model_to_dict(m))
