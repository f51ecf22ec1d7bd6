"""On-disk JSON formats for designs and exported codes.

Design files carry the fields v, k, t, lambda, directed, blocks (in that
order, UTF-8); k is null for variable block sizes and points are 0-based.
Code files carry type ("cw" or "indel"), length, weight or alphabet, and the
word list: 0/1 strings for constant-weight words (leftmost character is
point 0), integer arrays for deletion-code words.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .codes import ConstantWeightCode, IndelCode
from .core import DesignParams, DirectedPackingDesign, PackingDesign, StructuralError


@dataclass(frozen=True)
class DesignDocument:
    """A design plus the problem parameters stored alongside it."""

    design: Union[PackingDesign, DirectedPackingDesign]
    k: int | None
    t: int
    lam: int

    @property
    def directed(self) -> bool:
        return isinstance(self.design, DirectedPackingDesign)

    @property
    def params(self) -> DesignParams:
        if self.k is None:
            raise ValueError("variable-size design document carries no block size k")
        return DesignParams(self.design.v, self.k, self.t, self.lam)


def _require_int(data: dict, key: str) -> int:
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise StructuralError(f"malformed design file: {key!r} must be an integer")
    return value


def design_to_dict(doc: DesignDocument) -> dict:
    return {
        "v": doc.design.v,
        "k": doc.k,
        "t": doc.t,
        "lambda": doc.lam,
        "directed": doc.directed,
        "blocks": [list(block) for block in doc.design.blocks],
    }


def design_from_dict(data: object) -> DesignDocument:
    if not isinstance(data, dict):
        raise StructuralError("malformed design file: expected a JSON object")
    missing = [key for key in ("v", "k", "t", "lambda", "directed", "blocks") if key not in data]
    if missing:
        raise StructuralError(f"malformed design file: missing keys {missing}")
    v = _require_int(data, "v")
    t = _require_int(data, "t")
    lam = _require_int(data, "lambda")
    k = data["k"] if data["k"] is None else _require_int(data, "k")
    directed = data["directed"]
    if not isinstance(directed, bool):
        raise StructuralError("malformed design file: 'directed' must be a boolean")
    raw_blocks = data["blocks"]
    if not isinstance(raw_blocks, list) or any(not isinstance(b, list) for b in raw_blocks):
        raise StructuralError("malformed design file: 'blocks' must be a list of lists")
    blocks = []
    for block in raw_blocks:
        for x in block:
            if not isinstance(x, int) or isinstance(x, bool):
                raise StructuralError(f"malformed design file: point {x!r} is not an integer")
        blocks.append(tuple(block))
    design: Union[PackingDesign, DirectedPackingDesign]
    if directed:
        design = DirectedPackingDesign(v, tuple(blocks))
    else:
        design = PackingDesign(v, tuple(blocks))
    if k is not None:
        for block in design.blocks:
            if len(block) > k:
                raise StructuralError(
                    f"malformed design file: block {block} larger than k={k}"
                )
    return DesignDocument(design, k, t, lam)


def dumps_design(doc: DesignDocument) -> str:
    return json.dumps(design_to_dict(doc), indent=2) + "\n"


def loads_design(text: str) -> DesignDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"malformed design file: {exc}") from exc
    return design_from_dict(data)


def save_design(
    path: str | Path,
    design: Union[PackingDesign, DirectedPackingDesign],
    *,
    k: int | None,
    t: int = 2,
    lam: int = 1,
) -> DesignDocument:
    doc = DesignDocument(design, k, t, lam)
    Path(path).write_text(dumps_design(doc), encoding="utf-8")
    return doc


def load_design(path: str | Path) -> DesignDocument:
    return loads_design(Path(path).read_text(encoding="utf-8"))


def code_to_dict(code: Union[ConstantWeightCode, IndelCode]) -> dict:
    if isinstance(code, ConstantWeightCode):
        return {
            "type": "cw",
            "length": code.length,
            "weight": code.weight,
            "words": ["".join(str(bit) for bit in w) for w in code.words],
        }
    return {
        "type": "indel",
        "length": code.word_length,
        "alphabet": code.alphabet_size,
        "words": [list(w) for w in code.words],
    }


def code_from_dict(data: object) -> Union[ConstantWeightCode, IndelCode]:
    if not isinstance(data, dict) or "type" not in data:
        raise StructuralError("malformed code file: expected an object with a 'type'")
    kind = data["type"]
    if kind == "cw":
        words = tuple(
            tuple(int(ch) for ch in word) for word in data["words"]
        )
        return ConstantWeightCode(data["length"], data["weight"], words)
    if kind == "indel":
        words = tuple(tuple(w) for w in data["words"])
        repeats = any(len(set(w)) != len(w) for w in words)
        # stored codes are pair-based: capability is word length minus two
        return IndelCode(
            data["alphabet"], data["length"], words, data["length"] - 2,
            allow_repeats=repeats,
        )
    raise StructuralError(f"malformed code file: unknown type {kind!r}")


def save_code(path: str | Path, code: Union[ConstantWeightCode, IndelCode]) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code), indent=2) + "\n", encoding="utf-8")


def load_code(path: str | Path) -> Union[ConstantWeightCode, IndelCode]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StructuralError(f"malformed code file: {exc}") from exc
    return code_from_dict(data)
